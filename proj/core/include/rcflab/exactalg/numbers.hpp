#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace rcf {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational parse_rational(const std::string& s);
// n/d in canonical form; the two-argument mpq_class constructor does not
// canonicalize.
inline BigRational rat(long n, long d) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}
std::string to_string(const BigInt& z);
std::string to_string(const BigRational& q);

// a + b*sqrt(2) with rational a, b.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long a) : a_(a) {}
  QuadExt(const BigInt& a) : a_(a) {}
  QuadExt(BigRational a) : a_(std::move(a)) {}
  QuadExt(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt2() { return QuadExt(0, 1); }

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadExt conj() const { return QuadExt(a_, -b_); }
  BigRational norm() const { return a_ * a_ - 2 * b_ * b_; }
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  QuadExt operator-() const { return QuadExt(-a_, -b_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  std::string str() const;

 private:
  BigRational a_{0};
  BigRational b_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

// sigma = -1 + sqrt2, delta = 1 + sqrt2 = 1/sigma.
inline QuadExt sigma_const() { return QuadExt(-1, 1); }
inline QuadExt delta_const() { return QuadExt(1, 1); }

// Element of GF(2).
struct Gf2 {
  bool v = false;
  Gf2() = default;
  Gf2(long x) : v((x & 1) != 0) {}
  friend Gf2 operator+(Gf2 a, Gf2 b) { Gf2 r; r.v = a.v != b.v; return r; }
  friend Gf2 operator-(Gf2 a, Gf2 b) { return a + b; }
  friend Gf2 operator*(Gf2 a, Gf2 b) { Gf2 r; r.v = a.v && b.v; return r; }
  Gf2 operator-() const { return *this; }
  Gf2& operator+=(Gf2 o) { v = v != o.v; return *this; }
  Gf2& operator-=(Gf2 o) { return *this += o; }
  Gf2& operator*=(Gf2 o) { v = v && o.v; return *this; }
  friend bool operator==(Gf2 a, Gf2 b) { return a.v == b.v; }
  friend bool operator!=(Gf2 a, Gf2 b) { return a.v != b.v; }
};

inline Gf2 reduce_mod2(const BigInt& z) { return Gf2(mpz_odd_p(z.get_mpz_t()) ? 1 : 0); }

}  // namespace rcf
