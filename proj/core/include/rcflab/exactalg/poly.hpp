#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rcflab/errors.hpp"
#include "rcflab/exactalg/numbers.hpp"

namespace rcf {

template <class R>
class UniPoly;

// Ring helpers used by the generic algorithms. Overloaded per coefficient ring.
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }
inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline bool is_zero(Gf2 x) { return !x.v; }

inline BigInt divexact(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) throw DomainError("division by zero");
  BigInt q;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InternalError("inexact integer division");
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline BigRational divexact(const BigRational& a, const BigRational& b) {
  if (sgn(b) == 0) throw DomainError("division by zero");
  return BigRational(a / b);
}
inline QuadExt divexact(const QuadExt& a, const QuadExt& b) { return a / b; }
inline Gf2 divexact(Gf2 a, Gf2 b) {
  if (!b.v) throw DomainError("division by zero");
  return a;
}

template <class R>
UniPoly<R> divexact(const UniPoly<R>& a, const UniPoly<R>& b);

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
template <class R>
class UniPoly {
 public:
  using coeff_type = R;

  UniPoly() = default;
  UniPoly(long c) {
    if (c != 0) c_.emplace_back(R(c));
  }
  explicit UniPoly(R c) {
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static UniPoly monomial(R c, int k) {
    if (is_zero(c)) return UniPoly();
    std::vector<R> v(static_cast<std::size_t>(k) + 1, R(0));
    v.back() = std::move(c);
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  R coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return R(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const R& operator[](std::size_t k) const { return c_[k]; }
  const R& lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<R>& coeffs() const { return c_; }

  void set(int k, R v) {
    if (k >= static_cast<int>(c_.size())) {
      if (is_zero(v)) return;
      c_.resize(static_cast<std::size_t>(k) + 1, R(0));
    }
    c_[static_cast<std::size_t>(k)] = std::move(v);
    trim();
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator*=(const R& s) {
    if (is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const R& s) { return a *= s; }
  friend UniPoly operator*(const R& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.zero() || b.zero()) return UniPoly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    // The operand with fewer nonzero terms drives the outer loop.
    const UniPoly& s = a.nnz() <= b.nnz() ? a : b;
    const UniPoly& l = &s == &a ? b : a;
    for (std::size_t i = 0; i < s.c_.size(); ++i) {
      if (is_zero(s.c_[i])) continue;
      for (std::size_t j = 0; j < l.c_.size(); ++j) {
        if (is_zero(l.c_[j])) continue;
        out[i + j] += s.c_[i] * l.c_[j];
      }
    }
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::size_t nnz() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const R& x) { return !is_zero(x); }));
  }

  // Multiply by x^k.
  UniPoly shifted(int k) const {
    if (zero() || k == 0) return *this;
    std::vector<R> v(static_cast<std::size_t>(k), R(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
  }

  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  // Horner evaluation in a ring S that receives coefficients through conv.
  template <class S, class Conv>
  S eval_in(const S& x, Conv conv) const {
    S acc = conv(R(0));
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * x + conv(c_[i]);
    }
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<R> v(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * R(static_cast<long>(i));
    return UniPoly(std::move(v));
  }

  template <class S, class F>
  UniPoly<S> map(F f) const {
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return UniPoly<S>(std::move(v));
  }

  // p(-x)
  UniPoly negated_var() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

 private:
  std::vector<R> c_;
};

template <class R>
bool is_zero(const UniPoly<R>& p) {
  return p.zero();
}

template <class R>
using BiPoly = UniPoly<UniPoly<R>>;

using ZPoly = UniPoly<BigInt>;
using QPoly = UniPoly<BigRational>;
using KPoly = UniPoly<QuadExt>;
using F2Poly = UniPoly<Gf2>;
using ZBiPoly = BiPoly<BigInt>;
using KBiPoly = BiPoly<QuadExt>;

template <class R>
UniPoly<R> pow(const UniPoly<R>& p, unsigned e) {
  UniPoly<R> result(1L), base = p;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

template <class R>
R ring_pow(const R& x, unsigned e) {
  R result(1L), base = x;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

// Exact division over an integral domain; throws InternalError on a nonzero remainder.
template <class R>
UniPoly<R> divexact(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  if (a.zero()) return UniPoly<R>();
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");
  std::vector<R> r = a.coeffs();
  const int db = b.degree();
  const R& lb = b.lc();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  if (db == 0) {
    for (std::size_t i = 0; i < r.size(); ++i) q[i] = divexact(r[i], lb);
    return UniPoly<R>(std::move(q));
  }
  for (int k = a.degree() - db; k >= 0; --k) {
    R& top = r[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    R qk = divexact(top, lb);
    for (int j = 0; j <= db; ++j) {
      const R& bj = b[static_cast<std::size_t>(j)];
      if (is_zero(bj)) continue;
      r[static_cast<std::size_t>(k + j)] -= qk * bj;
    }
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  for (int j = 0; j < db; ++j)
    if (!is_zero(r[static_cast<std::size_t>(j)])) throw InternalError("inexact polynomial division");
  return UniPoly<R>(std::move(q));
}

// Division with remainder over a field.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<R>(), a};
  std::vector<R> r = a.coeffs();
  const int db = b.degree();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    R& top = r[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    R qk = divexact(top, b.lc());
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= qk * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(r))};
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
UniPoly<R> prem(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.zero()) throw DomainError("pseudo-remainder by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  int e = a.degree() - db + 1;
  const R& lb = b.lc();
  std::vector<R> r = a.coeffs();
  int dr = a.degree();
  while (dr >= db) {
    R top = r[static_cast<std::size_t>(dr)];
    const int shift = dr - db;
    for (int i = 0; i < dr; ++i) {
      if (!is_zero(r[static_cast<std::size_t>(i)])) r[static_cast<std::size_t>(i)] *= lb;
    }
    for (int j = 0; j < db; ++j) {
      const R& bj = b[static_cast<std::size_t>(j)];
      if (is_zero(bj)) continue;
      r[static_cast<std::size_t>(shift + j)] -= top * bj;
    }
    r[static_cast<std::size_t>(dr)] = R(0);
    --e;
    while (dr >= 0 && is_zero(r[static_cast<std::size_t>(dr)])) --dr;
  }
  r.resize(static_cast<std::size_t>(dr + 1));
  UniPoly<R> out(std::move(r));
  if (e > 0) out *= ring_pow(lb, static_cast<unsigned>(e));
  return out;
}

// Content and primitive part for integer polynomials.
BigInt content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

// Reductions and embeddings between coefficient rings.
F2Poly reduce_mod2(const ZPoly& p);
QPoly to_q(const ZPoly& p);
KPoly to_k(const ZPoly& p);
KPoly to_k(const QPoly& p);
KBiPoly to_k(const ZBiPoly& p);

// Constant polynomial embedding R -> R[y].
template <class R>
UniPoly<UniPoly<R>> lift_coeffs(const UniPoly<R>& p) {
  return p.template map<UniPoly<R>>([](const R& c) { return UniPoly<R>(c); });
}

// Swap the roles of the outer and inner variables of a bivariate polynomial.
template <class R>
BiPoly<R> swap_vars(const BiPoly<R>& p) {
  int inner = -1;
  for (const auto& row : p.coeffs()) inner = std::max(inner, row.degree());
  std::vector<std::vector<R>> cols(static_cast<std::size_t>(inner + 1),
                                   std::vector<R>(p.size(), R(0)));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j) cols[j][i] = p[i][j];
  std::vector<UniPoly<R>> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.emplace_back(std::move(c));
  return BiPoly<R>(std::move(out));
}

// Evaluate the inner variable at a value, giving a polynomial in the outer variable.
template <class R>
UniPoly<R> eval_inner(const BiPoly<R>& p, const R& y) {
  return p.template map<R>([&](const UniPoly<R>& row) { return row.eval(y); });
}

// p(x, x) for a bivariate polynomial.
template <class R>
UniPoly<R> diagonal(const BiPoly<R>& p) {
  UniPoly<R> out;
  for (std::size_t i = 0; i < p.size(); ++i) out += p[i].shifted(static_cast<int>(i));
  return out;
}

std::string to_string(const ZPoly& p, const std::string& var = "x");

}  // namespace rcf
