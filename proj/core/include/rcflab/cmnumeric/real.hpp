#pragma once

#include <mpfr.h>

#include <string>

#include "rcflab/exactalg/numbers.hpp"

namespace rcf::cm {

// RAII wrapper over an MPFR value. Binary operations round to the larger of
// the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(long v, mpfr_prec_t prec);
  Real(double v, mpfr_prec_t prec);
  Real(const BigInt& v, mpfr_prec_t prec);
  Real(const BigRational& v, mpfr_prec_t prec);
  Real(const std::string& decimal, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t prec);
  // 2^e
  static Real pow2(long e, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real with_prec(mpfr_prec_t prec) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b);
  friend Real operator*(long b, Real a) { return std::move(a) * b; }
  friend Real operator/(Real a, long b);
  friend Real operator+(Real a, long b);
  friend Real operator-(Real a, long b);
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2 |x|, -inf for zero.
  double log2_abs() const;
  BigInt round() const;
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real max(const Real& a, const Real& b);

class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) {}
  Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

  // exp(2 pi i x)
  static Complex e(const Real& x);
  static Complex e(const BigRational& x, mpfr_prec_t prec);
  static Complex i(mpfr_prec_t prec) { return Complex(Real(prec), Real(1L, prec)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator+(Complex a, long b);
  friend Complex operator-(Complex a, long b);
  friend Complex operator-(long b, const Complex& a);
  friend Complex operator*(Complex a, long b);
  friend Complex operator*(long b, Complex a) { return std::move(a) * b; }
  friend Complex operator/(long b, const Complex& a);
  Complex operator-() const { return Complex(-re_, -im_); }

  Complex conj() const { return Complex(re_, -im_); }
  Real norm() const { return re_ * re_ + im_ * im_; }
  Real abs() const;
  Complex inverse() const;
  Complex pow(long n) const;
  std::string str(int digits = 20) const;

 private:
  Real re_, im_;
};

inline Real abs(const Complex& z) { return z.abs(); }
// Principal branch.
Complex sqrt(const Complex& z);
Complex exp(const Complex& z);

}  // namespace rcf::cm
