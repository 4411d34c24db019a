#pragma once

// Unramified 2-adic oracle on big integers: Z[x]/(M) modulo 2^Q, division by
// Gaussian elimination on the multiplication matrix with odd pivots, and T
// summed term by term with a fresh division for every factor of (x - 3).

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct PadicRing {
  int m;
  unsigned long modulus;  // bit i = coefficient of x^i, degree m
  int Q;

  using Vec = std::vector<mpz_class>;

  mpz_class N() const { return mpz_class(1) << Q; }

  Vec reduce(Vec v) const {
    for (auto& c : v) mpz_fdiv_r_2exp(c.get_mpz_t(), c.get_mpz_t(), Q);
    return v;
  }

  Vec from_int(long a) const {
    Vec v(m, 0);
    v[0] = a;
    return reduce(v);
  }

  Vec add(const Vec& a, const Vec& b, long sb = 1) const {
    Vec r(m);
    for (int i = 0; i < m; ++i) r[i] = a[i] + sb * b[i];
    return reduce(r);
  }

  Vec scale(const Vec& a, const mpz_class& k) const {
    Vec r(m);
    for (int i = 0; i < m; ++i) r[i] = a[i] * k;
    return reduce(r);
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec t(2 * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t[i + j] += a[i] * b[j];
    // x^m = -(M(x) - x^m)
    for (int k = 2 * m - 1; k >= m; --k) {
      if (t[k] == 0) continue;
      for (int i = 0; i < m; ++i)
        if (modulus >> i & 1UL) t[k - m + i] -= t[k];
      t[k] = 0;
    }
    t.resize(m);
    return reduce(t);
  }

  // y with z * y = a, by elimination on the matrix of multiplication by z.
  Vec div(const Vec& a, const Vec& z) const {
    std::vector<Vec> M(m, Vec(m + 1));
    Vec e(m, 0);
    for (int j = 0; j < m; ++j) {
      e.assign(m, 0);
      e[j] = 1;
      Vec col = mul(z, e);
      for (int i = 0; i < m; ++i) M[i][j] = col[i];
    }
    for (int i = 0; i < m; ++i) M[i][m] = a[i];
    const mpz_class mod = N();
    for (int c = 0; c < m; ++c) {
      int p = c;
      while (p < m && mpz_odd_p(M[p][c].get_mpz_t()) == 0) ++p;
      if (p == m) throw std::domain_error("oracle: divisor is not a unit");
      std::swap(M[p], M[c]);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), M[c][c].get_mpz_t(), mod.get_mpz_t());
      for (auto& x : M[c]) x = (x * inv) % mod;
      for (int r = 0; r < m; ++r) {
        if (r == c || M[r][c] == 0) continue;
        const mpz_class f = M[r][c];
        for (int k = 0; k <= m; ++k) M[r][k] = (M[r][k] - f * M[c][k]) % mod;
      }
    }
    Vec y(m);
    for (int i = 0; i < m; ++i) y[i] = M[i][m];
    return reduce(y);
  }

  static mpz_class catalan(unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
    return b / (k + 1);
  }

  // T(x), series cut at k = Q.
  Vec T(const Vec& x) const {
    const Vec z = add(x, from_int(3), -1);
    Vec sum(m, 0);
    Vec term = from_int(1);
    for (int k = 1; k <= Q; ++k) {
      term = div(div(scale(term, 2), z), z);
      sum = add(sum, scale(term, catalan(k - 1)));
    }
    Vec r = add(add(mul(x, x), scale(x, 4), -1), from_int(2));
    const Vec corr = mul(mul(add(x, from_int(1), -1), z), sum);
    return add(r, corr, -1);
  }
};

}  // namespace oracle
