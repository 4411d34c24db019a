#pragma once

#include <string>
#include <vector>

#include "rcflab/cmnumeric/real.hpp"
#include "rcflab/qseries/series.hpp"

namespace rcf::cm {

// A value with an absolute error bound: the truncation tail of the product
// or sum, plus a rounding allowance for the working precision.
struct Value {
  Complex z;
  Real err;
};

Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value operator*(const Value& a, const Value& b);
Value operator/(const Value& a, const Value& b);
Value operator*(const Value& a, const Complex& c);
Value operator+(const Value& a, long c);
Value pow(const Value& a, long n);
Value exact(const Complex& z);

// exp(2 pi i z) for complex z.
Complex e(const Complex& z);

// prod_{n >= 0} (1 + c q^(offset + step n))^power, q = e(tau).
struct ProductFactor {
  Complex c;
  BigRational offset;
  BigRational step;
  long power;
};

// prefactor * q^shift * prod of the factors.
Value eval_product(const Complex& prefactor, const BigRational& shift,
                   const std::vector<ProductFactor>& factors, const Complex& tau, long prec);

// Requires Im tau > 0.
void check_upper_half_plane(const Complex& tau);

Value eta(const Complex& tau, long prec);
Value fminus(const Complex& tau, long prec);
Value phi(const Complex& tau, long prec);
Value psi(const Complex& tau, long prec);
Value chi(const Complex& tau, long prec);
Value v(const Complex& tau, long prec);
Value u(const Complex& tau, long prec);
Value p(const Complex& tau, long prec);
Value b(const Complex& tau, long prec);
Value weber_f(const Complex& tau, long prec);
Value weber_f1(const Complex& tau, long prec);
Value weber_f2(const Complex& tau, long prec);
Value alpha4(const Complex& tau, long prec);
// j = (f^24 - 16)^3 / f^24.
Value j(const Complex& tau, long prec);
// theta[eps; eps'](tau) from its defining sum.
Value theta(const BigRational& eps, const BigRational& epsp, const Complex& tau, long prec);

// Evaluate by name: eta, fminus, phi, psi, chi, v, u, p, b, weber_f, weber_f1,
// weber_f2, alpha4, j, or theta(eps,eps').
Value eval(const std::string& name, const Complex& tau, long prec);
std::vector<std::string> eval_names();

Complex to_complex(const Cyclo8& c, long prec);
// Sum of the known terms of a truncated series at q = e(tau).
Complex eval_series(const QSeries& s, const Complex& tau, long prec);
Complex eval_series(const CSeries& s, const Complex& tau, long prec);

}  // namespace rcf::cm
