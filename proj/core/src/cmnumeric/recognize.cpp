#include "rcflab/cmnumeric/recognize.hpp"

#include <algorithm>
#include <cmath>

#include "rcflab/errors.hpp"

namespace rcf::cm {

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a/b for b > 0.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

// Integral LLL in the Gram-Schmidt-free form: d[i] are the Gram determinants
// and lam[k][j] = d[j+1] mu[k][j], so everything stays in Z.
IntMatrix lll_reduce(IntMatrix b) {
  const std::size_t n = b.size();
  if (n < 2) return b;
  std::vector<BigInt> d(n + 1);
  std::vector<std::vector<BigInt>> lam(n, std::vector<BigInt>(n));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw DomainError("LLL: zero basis vector");

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l + 1]) return;
    const BigInt q = round_div(lam[k][l], d[l + 1]);
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    lam[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        BigInt u = dot(b[k], b[j]);
        for (std::size_t i = 0; i < j; ++i) {
          u = d[i + 1] * u - lam[k][i] * lam[j][i];
          mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
        }
        if (j < k)
          lam[k][j] = u;
        else if (u == 0)
          throw DomainError("LLL: basis vectors are linearly dependent");
        else
          d[k + 1] = u;
      }
    }
    red(k, k - 1);
    if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const BigInt l = lam[k][k - 1];
      BigInt B = d[k - 1] * d[k + 1] + l * l;
      mpz_divexact(B.get_mpz_t(), B.get_mpz_t(), d[k].get_mpz_t());
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const BigInt t = lam[i][k];
        BigInt a = d[k + 1] * lam[i][k - 1] - l * t;
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d[k].get_mpz_t());
        lam[i][k] = a;
        BigInt c = B * t + l * lam[i][k];
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d[k + 1].get_mpz_t());
        lam[i][k - 1] = c;
      }
      d[k] = B;
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
  return b;
}

Complex eval_poly(const ZPoly& p, const Complex& x) {
  const long prec = x.prec();
  Complex acc(prec);
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + Complex(Real(p.coeff(k), prec));
  return acc;
}

long recognition_precision(int max_degree, const BigInt& height_bound) {
  const double lh = std::max(1.0, std::log2(height_bound.get_d() + 1.0));
  return std::max<long>(128, static_cast<long>(std::ceil(4.0 * max_degree * lh)));
}

namespace {

Real relative_value(const ZPoly& p, const Complex& x) {
  const long prec = x.prec();
  const Real ax = max(x.abs(), Real(1L, prec));
  Real h(prec), pw(1L, prec);
  for (int k = 0; k <= p.degree(); ++k) {
    h += abs(Real(p.coeff(k), prec)) * pw;
    pw *= ax;
  }
  return eval_poly(p, x).abs() / h;
}

ZPoly normalize(const ZPoly& p) {
  ZPoly q = primitive_part(p);
  if (q.lc() < 0) q = q * BigInt(-1);
  return q;
}

}  // namespace

std::optional<ZPoly> recognize_min_poly(const std::function<Complex(long)>& value,
                                        int max_degree, const BigInt& height_bound, long prec) {
  if (max_degree < 1) throw DomainError("max_degree must be at least 1");
  if (prec < 32) throw DomainError("recognition precision too small");
  const Complex x = value(prec + 32);
  const Complex x2 = value(2 * prec + 32);
  const Real scale = Real::pow2(prec, prec + 32);
  const Real accept = Real::pow2(-(3 * prec) / 2, 64);

  for (int D = 1; D <= max_degree; ++D) {
    IntMatrix basis;
    Complex pw(1L, prec + 32);
    for (int i = 0; i <= D; ++i) {
      std::vector<BigInt> row(static_cast<std::size_t>(D) + 3, BigInt(0));
      row[static_cast<std::size_t>(i)] = 1;
      row[static_cast<std::size_t>(D) + 1] = (pw.re() * scale).round();
      row[static_cast<std::size_t>(D) + 2] = (pw.im() * scale).round();
      basis.push_back(std::move(row));
      pw = pw * x;
    }
    const IntMatrix red = lll_reduce(std::move(basis));
    for (const auto& row : red) {
      std::vector<BigInt> c(row.begin(), row.begin() + D + 1);
      ZPoly cand(std::move(c));
      if (cand.degree() < 1) continue;
      bool small = true;
      for (int k = 0; k <= cand.degree(); ++k)
        if (abs(cand.coeff(k)) > height_bound) small = false;
      if (!small) continue;
      if (relative_value(cand, x2) < accept) return normalize(cand);
    }
  }
  return std::nullopt;
}

std::optional<ZPoly> recognize_min_poly(const Complex& x, int max_degree,
                                        const BigInt& height_bound, long prec) {
  if (x.prec() < 2 * prec)
    throw DomainError("recognize_min_poly: x must carry at least twice the lattice precision");
  return recognize_min_poly([&](long bits) {
    return Complex(x.re().with_prec(bits), x.im().with_prec(bits));
  }, max_degree, height_bound, prec);
}

}  // namespace rcf::cm
