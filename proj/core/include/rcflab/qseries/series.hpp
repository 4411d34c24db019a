#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcflab/errors.hpp"
#include "rcflab/exactalg/numbers.hpp"
#include "rcflab/exactalg/poly.hpp"
#include "rcflab/qseries/cyclo8.hpp"

namespace rcf {

namespace series_detail {

long to_long(const BigInt& z);
// Smallest integer >= x.
long ceil_long(const BigRational& x);
// x must be an integer; InternalError otherwise.
long exact_long(const BigRational& x);
long lcm(long a, long b);
inline long den_long(const BigRational& x) { return to_long(x.get_den()); }

}  // namespace series_detail

// Truncated Puiseux series
//   sum_i c_i q^(offset + i/D)
// known modulo q^order. A missing order means the series is a finite sum and
// exact. Leading and trailing stored coefficients are nonzero and D is
// minimal for the stored support.
template <class C>
class Puiseux {
 public:
  using Order = std::optional<BigRational>;

  Puiseux() = default;
  explicit Puiseux(C c, Order order = std::nullopt) : c_{std::move(c)}, order_(std::move(order)) {
    normalize();
  }

  static Puiseux monomial(C c, const BigRational& e, Order order = std::nullopt) {
    Puiseux s;
    s.offset_ = e;
    s.c_.push_back(std::move(c));
    s.order_ = std::move(order);
    s.normalize();
    return s;
  }
  static Puiseux from_coeffs(const BigRational& offset, long D, std::vector<C> c,
                             Order order = std::nullopt) {
    if (D <= 0) throw DomainError("exponent denominator must be positive");
    Puiseux s;
    s.offset_ = offset;
    s.den_ = D;
    s.c_ = std::move(c);
    s.order_ = std::move(order);
    s.normalize();
    return s;
  }
  // O(q^order).
  static Puiseux big_o(const BigRational& order) {
    Puiseux s;
    s.order_ = order;
    return s;
  }

  const BigRational& offset() const { return offset_; }
  long den() const { return den_; }
  const std::vector<C>& coeffs() const { return c_; }
  const Order& order() const { return order_; }
  bool exact() const { return !order_.has_value(); }
  // No known nonzero coefficient.
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  BigRational exponent(std::size_t i) const {
    return offset_ + rat(static_cast<long>(i), den_);
  }
  // Exponent of the leading term, or the order for O(q^N).
  BigRational valuation() const {
    if (!c_.empty()) return offset_;
    if (order_) return *order_;
    throw DomainError("valuation of the zero series");
  }
  const C& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of a zero series");
    return c_.front();
  }

  C coeff(const BigRational& e) const {
    if (order_ && e >= *order_) throw DomainError("coefficient beyond truncation order");
    if (c_.empty() || e < offset_) return C(0);
    BigRational k = (e - offset_) * den_;
    if (k.get_den() != 1) return C(0);
    long i = series_detail::to_long(k.get_num());
    return i < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(i)] : C(0);
  }

  // Nonzero terms as (exponent, coefficient).
  std::vector<std::pair<BigRational, C>> terms() const {
    std::vector<std::pair<BigRational, C>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero_c(c_[i])) out.emplace_back(exponent(i), c_[i]);
    return out;
  }

  Puiseux truncated(const BigRational& order) const {
    Puiseux r = *this;
    if (!r.order_ || order < *r.order_) r.order_ = order;
    r.normalize();
    return r;
  }

  Puiseux operator-() const {
    Puiseux r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Puiseux operator+(const Puiseux& a, const Puiseux& b) { return add(a, b, false); }
  friend Puiseux operator-(const Puiseux& a, const Puiseux& b) { return add(a, b, true); }
  Puiseux& operator+=(const Puiseux& o) { return *this = add(*this, o, false); }
  Puiseux& operator-=(const Puiseux& o) { return *this = add(*this, o, true); }
  Puiseux& operator*=(const Puiseux& o) { return *this = mul(*this, o); }
  friend Puiseux operator*(const Puiseux& a, const Puiseux& b) { return mul(a, b); }
  friend Puiseux operator*(const C& k, const Puiseux& a) { return a.scaled(k); }
  friend Puiseux operator*(const Puiseux& a, const C& k) { return a.scaled(k); }

  Puiseux scaled(const C& k) const {
    if (is_zero_c(k)) return order_ ? big_o(*order_) : Puiseux();
    Puiseux r = *this;
    for (auto& x : r.c_) x = x * k;
    return r;
  }

  // Multiply by q^e.
  Puiseux shifted(const BigRational& e) const {
    Puiseux r = *this;
    if (!r.c_.empty()) r.offset_ += e;
    if (r.order_) *r.order_ += e;
    r.normalize();
    return r;
  }

  // Multiplicative inverse. An exact series with more than one term needs an
  // explicit order for its (infinite) inverse.
  Puiseux inverse(Order want = std::nullopt) const {
    if (c_.empty()) throw DomainError("inverse of a series with zero leading coefficient");
    const BigRational v = offset_;
    Order ord;
    if (order_) ord = *order_ - 2 * v;
    if (want && (!ord || *want < *ord)) ord = want;
    if (!ord) {
      if (c_.size() == 1) return monomial(C(1) / c_[0], -v);
      throw DomainError("inverse of an exact series needs a truncation order");
    }
    long n = series_detail::ceil_long((*ord + v) * den_);
    std::vector<C> b;
    if (n > 0) {
      b.reserve(static_cast<std::size_t>(n));
      C inv0 = C(1) / c_[0];
      b.push_back(inv0);
      for (long k = 1; k < n; ++k) {
        C acc(0);
        long lim = std::min<long>(k, static_cast<long>(c_.size()) - 1);
        for (long i = 1; i <= lim; ++i) {
          const C& ci = c_[static_cast<std::size_t>(i)];
          if (is_zero_c(ci)) continue;
          acc += ci * b[static_cast<std::size_t>(k - i)];
        }
        b.push_back(-(acc * inv0));
      }
    }
    return from_coeffs(-v, den_, std::move(b), ord);
  }

  Puiseux pow(long n, Order want = std::nullopt) const {
    if (n < 0) return inverse(want).pow(-n);
    Puiseux result(C(1));
    Puiseux base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  // q -> q^k for rational k > 0 (tau -> k tau).
  Puiseux rescale(const BigRational& k) const {
    if (sgn(k) <= 0) throw DomainError("rescale factor must be positive");
    long a = series_detail::to_long(k.get_num());
    long b = series_detail::to_long(k.get_den());
    Puiseux r;
    r.order_ = order_;
    if (r.order_) *r.order_ *= k;
    if (c_.empty()) return r;
    r.offset_ = offset_ * k;
    r.den_ = den_ * b;
    r.c_.assign((c_.size() - 1) * static_cast<std::size_t>(a) + 1, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(a)] = c_[i];
    r.normalize();
    return r;
  }

  // q -> -q; only defined when every known term has an integral exponent.
  Puiseux negate_q() const {
    Puiseux r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (is_zero_c(r.c_[i])) continue;
      BigRational e = exponent(i);
      if (e.get_den() != 1) throw DomainError("q -> -q on a non-integral exponent");
      if (mpz_odd_p(e.get_num().get_mpz_t())) r.c_[i] = -r.c_[i];
    }
    return r;
  }

  // Multiply by (1 + k q^e), e > 0, in linear time.
  Puiseux mul_binomial(const C& k, const BigRational& e) const {
    if (sgn(e) <= 0) throw DomainError("binomial exponent must be positive");
    if (c_.empty()) return *this;
    Puiseux r = relattice(series_detail::lcm(den_, series_detail::den_long(e)));
    long s = series_detail::exact_long(e * r.den_);
    std::size_t n = r.c_.size() + static_cast<std::size_t>(s);
    if (r.order_) n = std::min<std::size_t>(n, r.slots(*r.order_));
    r.c_.resize(std::max(n, r.c_.size()), C(0));
    for (std::size_t i = n; i-- > static_cast<std::size_t>(s);) {
      const C& src = r.c_[i - static_cast<std::size_t>(s)];
      if (!is_zero_c(src)) r.c_[i] += k * src;
    }
    r.normalize();
    return r;
  }

  // Divide by (1 + k q^e), e > 0. The series must carry a truncation order.
  Puiseux div_binomial(const C& k, const BigRational& e) const {
    if (sgn(e) <= 0) throw DomainError("binomial exponent must be positive");
    if (!order_) throw DomainError("division of an exact series needs a truncation order");
    if (c_.empty()) return *this;
    Puiseux r = relattice(series_detail::lcm(den_, series_detail::den_long(e)));
    long s = series_detail::exact_long(e * r.den_);
    std::size_t n = r.slots(*r.order_);
    r.c_.resize(std::max(n, r.c_.size()), C(0));
    for (std::size_t i = static_cast<std::size_t>(s); i < n; ++i) {
      const C& src = r.c_[i - static_cast<std::size_t>(s)];
      if (!is_zero_c(src)) r.c_[i] -= k * src;
    }
    r.normalize();
    return r;
  }

  template <class S, class F>
  Puiseux<S> map(F f) const {
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Puiseux<S>::from_coeffs(offset_, den_, std::move(out), order_);
  }

  friend bool operator==(const Puiseux& a, const Puiseux& b) {
    return a.order_ == b.order_ && a.c_ == b.c_ &&
           (a.c_.empty() || (a.offset_ == b.offset_ && a.den_ == b.den_));
  }
  friend bool operator!=(const Puiseux& a, const Puiseux& b) { return !(a == b); }

 private:
  static bool is_zero_c(const C& x) { return rcf::is_zero(x); }

  // Number of lattice slots strictly below exponent `bound`.
  std::size_t slots(const BigRational& bound) const {
    long n = series_detail::ceil_long((bound - offset_) * den_);
    return n > 0 ? static_cast<std::size_t>(n) : 0;
  }

  // Same series on the finer lattice 1/D (D a multiple of den_).
  Puiseux relattice(long D) const {
    Puiseux r = *this;
    if (D == den_) return r;
    long st = D / den_;
    r.den_ = D;
    r.c_.assign(c_.empty() ? 0 : (c_.size() - 1) * static_cast<std::size_t>(st) + 1, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(st)] = c_[i];
    return r;
  }

  static Order min_order(const Order& a, const Order& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
  }

  static Puiseux add(const Puiseux& a, const Puiseux& b, bool sub) {
    Order ord = min_order(a.order_, b.order_);
    if (b.c_.empty()) {
      Puiseux r = a;
      r.order_ = ord;
      r.normalize();
      return r;
    }
    if (a.c_.empty()) {
      Puiseux r = sub ? -b : b;
      r.order_ = ord;
      r.normalize();
      return r;
    }
    BigRational off = std::min(a.offset_, b.offset_);
    BigRational da = a.offset_ - off, db = b.offset_ - off;
    long D = series_detail::lcm(series_detail::lcm(a.den_, b.den_),
                                series_detail::lcm(series_detail::den_long(da),
                                                   series_detail::den_long(db)));
    long sa = D / a.den_, sb = D / b.den_;
    long ba = series_detail::exact_long(da * D), bb = series_detail::exact_long(db * D);
    std::size_t n = std::max((a.c_.size() - 1) * static_cast<std::size_t>(sa) + ba,
                             (b.c_.size() - 1) * static_cast<std::size_t>(sb) + bb) +
                    1;
    if (ord) {
      long lim = series_detail::ceil_long((*ord - off) * D);
      n = std::min<std::size_t>(n, lim > 0 ? static_cast<std::size_t>(lim) : 0);
    }
    Puiseux r;
    r.offset_ = off;
    r.den_ = D;
    r.order_ = ord;
    r.c_.assign(n, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      std::size_t idx = static_cast<std::size_t>(ba) + i * static_cast<std::size_t>(sa);
      if (idx >= n) break;
      r.c_[idx] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      std::size_t idx = static_cast<std::size_t>(bb) + i * static_cast<std::size_t>(sb);
      if (idx >= n) break;
      if (sub)
        r.c_[idx] -= b.c_[i];
      else
        r.c_[idx] += b.c_[i];
    }
    r.normalize();
    return r;
  }

  static Puiseux mul(const Puiseux& a, const Puiseux& b) {
    if ((a.c_.empty() && a.exact()) || (b.c_.empty() && b.exact())) return Puiseux();
    Order ord;
    if (a.order_) ord = min_order(ord, *a.order_ + b.valuation());
    if (b.order_) ord = min_order(ord, *b.order_ + a.valuation());
    if (a.c_.empty() || b.c_.empty()) return big_o(*ord);
    long D = series_detail::lcm(a.den_, b.den_);
    std::size_t sa = static_cast<std::size_t>(D / a.den_), sb = static_cast<std::size_t>(D / b.den_);
    Puiseux r;
    r.offset_ = a.offset_ + b.offset_;
    r.den_ = D;
    r.order_ = ord;
    std::size_t n = (a.c_.size() - 1) * sa + (b.c_.size() - 1) * sb + 1;
    if (ord) n = std::min(n, r.slots(*ord));
    r.c_.assign(n, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      std::size_t base = i * sa;
      if (base >= n) break;
      const C& ai = a.c_[i];
      if (is_zero_c(ai)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        std::size_t idx = base + j * sb;
        if (idx >= n) break;
        const C& bj = b.c_[j];
        if (is_zero_c(bj)) continue;
        r.c_[idx] += ai * bj;
      }
    }
    r.normalize();
    return r;
  }

  void normalize() {
    if (order_ && !c_.empty()) {
      std::size_t n = slots(*order_);
      if (c_.size() > n) c_.resize(n);
    }
    while (!c_.empty() && is_zero_c(c_.back())) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && is_zero_c(c_[lead])) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      offset_ = 0;
      den_ = 1;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      offset_ += rat(static_cast<long>(lead), den_);
    }
    long g = den_;
    for (std::size_t i = 1; i < c_.size() && g > 1; ++i)
      if (!is_zero_c(c_[i])) g = std::gcd(g, static_cast<long>(i));
    if (g > 1) {
      std::vector<C> out;
      out.reserve(c_.size() / static_cast<std::size_t>(g) + 1);
      for (std::size_t i = 0; i < c_.size(); i += static_cast<std::size_t>(g)) out.push_back(std::move(c_[i]));
      c_ = std::move(out);
      den_ /= g;
    }
  }

  BigRational offset_{0};
  long den_ = 1;
  std::vector<C> c_;
  Order order_;
};

using QSeries = Puiseux<BigRational>;
using CSeries = Puiseux<Cyclo8>;

inline CSeries to_cyclo(const QSeries& s) {
  return s.map<Cyclo8>([](const BigRational& x) { return Cyclo8(x); });
}

// Rational series when every coefficient lies in Q; DomainError otherwise.
QSeries to_rational(const CSeries& s);

// Evaluate a polynomial with integer coefficients at a series.
template <class C>
Puiseux<C> compose(const ZPoly& p, const Puiseux<C>& x) {
  Puiseux<C> r;
  for (int k = p.degree(); k >= 0; --k) {
    r = r * x;
    if (sgn(p.coeff(k)) != 0) r = r + Puiseux<C>(C(BigRational(p.coeff(k))));
  }
  return r;
}

// Series from (exponent, coefficient) pairs; repeated exponents accumulate.
template <class C>
Puiseux<C> from_terms(const std::vector<std::pair<BigRational, C>>& terms,
                      std::optional<BigRational> order = std::nullopt) {
  if (terms.empty()) return order ? Puiseux<C>::big_o(*order) : Puiseux<C>();
  BigRational lo = terms.front().first;
  long D = 1;
  for (const auto& [e, c] : terms) {
    if (e < lo) lo = e;
    D = series_detail::lcm(D, series_detail::den_long(e));
  }
  std::size_t n = 0;
  std::vector<std::size_t> idx;
  idx.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    idx.push_back(static_cast<std::size_t>(series_detail::exact_long((e - lo) * D)));
    n = std::max(n, idx.back() + 1);
  }
  std::vector<C> v(n, C(0));
  for (std::size_t k = 0; k < terms.size(); ++k) v[idx[k]] += terms[k].second;
  return Puiseux<C>::from_coeffs(lo, D, std::move(v), std::move(order));
}

std::string to_string(const QSeries& s, std::size_t max_terms = 12);
std::string to_string(const CSeries& s, std::size_t max_terms = 12);

}  // namespace rcf
