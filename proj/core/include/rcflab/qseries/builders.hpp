#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcflab/qseries/series.hpp"

// Builders for the q-expansions used throughout. Each takes an absolute
// order N and returns a series known at least modulo q^N.
namespace rcf::qs {

// (c q^e; q^step)_inf^power with c = +-1, e > 0.
QSeries qpoch(long c, const BigRational& e, const BigRational& step, const BigRational& order,
              long power = 1);

QSeries phi(const BigRational& order);
QSeries psi(const BigRational& order);
// f(-q) = (q;q)_inf as a product.
QSeries fminus(const BigRational& order);
// Euler's pentagonal sum.
QSeries pentagonal(const BigRational& order);
QSeries chi(const BigRational& order);
// Ramanujan's f(a, b) with a = ca q^ea, b = cb q^eb, ca, cb = +-1, ea, eb > 0.
QSeries ramanujan_f(long ca, const BigRational& ea, long cb, const BigRational& eb,
                    const BigRational& order);

struct EtaFactor {
  BigRational k;  // eta(k tau)
  long e;
};
QSeries eta_quotient(const std::vector<EtaFactor>& spec, const BigRational& order);

// v with exponents (8/n), as defined by residues mod 8.
QSeries v(const BigRational& order);
// v with exponents given by the Kronecker symbol (2/n).
QSeries v_kronecker2(const BigRational& order);
// v from its continued fraction.
QSeries v_cf(const BigRational& order);

CSeries u(const BigRational& order);
QSeries u2(const BigRational& order);
QSeries u4(const BigRational& order);

QSeries p(const BigRational& order);
QSeries b(const BigRational& order);

// Squares of the Weber functions f, f1, f2.
QSeries weber_f_sq(const BigRational& order);
QSeries weber_f1_sq(const BigRational& order);
QSeries weber_f2_sq(const BigRational& order);

CSeries alpha(const BigRational& order);
QSeries alpha4(const BigRational& order);

// j = G(alpha^4) with G(x) = (x^2 - 16x + 16)^3 / (x (x - 16)).
QSeries j(const BigRational& order);
// j = E4^3 / eta^24 from divisor sums.
QSeries j_eisenstein(const BigRational& order);

// theta[eps; eps'](tau) = e(phase) * series. eps' must lie in (1/4)Z.
struct ThetaSeries {
  BigRational phase;
  CSeries series;
};
ThetaSeries theta(const BigRational& eps, const BigRational& epsp, const BigRational& order);
// The triple-product form
//   e(eps eps'/4) q^(eps^2/8) prod (1 - q^n)(1 + e(-eps'/2) q^(n-(1+eps)/2))
//                                           (1 + e(eps'/2) q^(n-(1-eps)/2)),
// with the roots of unity paired as the triple product dictates; needs |eps| <= 1.
ThetaSeries theta_product(const BigRational& eps, const BigRational& epsp,
                          const BigRational& order);

// e(r) = exp(2 pi i r) as an element of Q(zeta8); 8r must be an integer.
Cyclo8 unit_root(const BigRational& r);

// Kronecker symbol (8/n) from n mod 8.
int kronecker8(long n);

// Build a series by name: phi, psi, fminus, chi, v, u2, u4, p, b, alpha4, j,
// eta_quotient(k:e,...), theta(eps,eps'). Rational-coefficient names return
// their series; theta returns the series part with the phase folded in when
// it is an 8th root of unity.
CSeries build(const std::string& name, const BigRational& order);
std::vector<std::string> builder_names();

}  // namespace rcf::qs
