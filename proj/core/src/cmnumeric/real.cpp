#include "rcflab/cmnumeric/real.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "rcflab/errors.hpp"

namespace rcf::cm {

namespace {

void widen(Real& a, const Real& b) {
  if (b.prec() > a.prec()) mpfr_prec_round(a.raw(), b.prec(), MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const BigRational& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw DomainError("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Real Real::with_prec(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real operator*(Real a, long b) {
  mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

Real operator/(Real a, long b) {
  if (b == 0) throw DomainError("division by zero");
  mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

Real operator+(Real a, long b) {
  mpfr_add_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

Real operator-(Real a, long b) {
  mpfr_sub_si(a.v_, a.v_, b, MPFR_RNDN);
  return a;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

double Real::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigInt Real::round() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string Real::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real abs(const Real& x) {
  Real r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative real");
  Real r(x.prec());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive real");
  Real r(x.prec());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.prec());
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real sin(const Real& x) {
  Real r(x.prec());
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex Complex::e(const Real& x) {
  const Real t = Real::pi(x.prec()) * x * 2;
  Real c(x.prec()), s(x.prec());
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

Complex Complex::e(const BigRational& x, mpfr_prec_t prec) {
  // reduce modulo 1 first so the argument stays small
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return e(Real(BigRational(x - fl), prec));
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) { return *this *= o.inverse(); }

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Complex operator+(Complex a, long b) {
  a.re_ = a.re_ + b;
  return a;
}

Complex operator-(Complex a, long b) {
  a.re_ = a.re_ - b;
  return a;
}

Complex operator-(long b, const Complex& a) { return -a + b; }

Complex operator*(Complex a, long b) {
  a.re_ = a.re_ * b;
  a.im_ = a.im_ * b;
  return a;
}

Complex operator/(long b, const Complex& a) { return a.inverse() * b; }

Real Complex::abs() const {
  Real r(prec());
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

Complex Complex::inverse() const {
  const Real n = norm();
  if (n.is_zero()) throw DomainError("inverse of zero");
  return Complex(re_ / n, -im_ / n);
}

Complex Complex::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Complex r(1L, prec()), b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

std::string Complex::str(int digits) const {
  std::string s = re_.str(digits);
  std::string t = im_.str(digits);
  if (t.empty() || t[0] != '-') t = "+" + t;
  return s + " " + t.substr(0, 1) + " " + t.substr(1) + "*i";
}

Complex sqrt(const Complex& z) {
  const mpfr_prec_t p = z.prec();
  if (z.re().is_zero() && z.im().is_zero()) return Complex(p);
  const Real r = z.abs();
  // rounding can push r - |re| a hair below zero
  auto half_root = [](Real t) { return t.sign() < 0 ? Real(t.prec()) : sqrt(t / 2); };
  Real a = half_root(r + z.re());
  Real b = half_root(r - z.re());
  if (z.im().sign() < 0) b = -b;
  return Complex(std::move(a), std::move(b));
}

Complex exp(const Complex& z) {
  const Real m = exp(z.re());
  Real c(z.prec()), s(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

}  // namespace rcf::cm
