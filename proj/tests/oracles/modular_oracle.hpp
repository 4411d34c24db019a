#pragma once

// Direct-sum oracles, independent of the product evaluator.

#include "rcflab/cmnumeric/real.hpp"
#include "rcflab/cmnumeric/modular.hpp"

namespace oracle {

using rcf::cm::Complex;
using rcf::cm::Real;

// Number of terms n with |q|^n below 2^-(prec + 20).
inline long terms_for(const Complex& q, long prec) {
  const double l = -q.abs().log2_abs();
  return static_cast<long>((prec + 20) / l) + 2;
}

// eta(tau) = q^(1/24) sum_k (-1)^k q^(k(3k-1)/2) over all integers k.
inline Complex eta_pentagonal(const Complex& tau, long prec) {
  const Complex q = rcf::cm::e(tau);
  const long N = terms_for(q, prec);
  Complex s(1L, prec);
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 > N) break;
    const Complex t = q.pow(e1) + q.pow(e2);
    if (k % 2) s -= t; else s += t;
  }
  return rcf::cm::e(tau * Complex(Real(rcf::rat(1, 24), prec))) * s;
}

// j = E4^3 / Delta with E4 = 1 + 240 sum sigma_3(n) q^n and Delta from eta^24.
inline Complex j_eisenstein(const Complex& tau, long prec) {
  const Complex q = rcf::cm::e(tau);
  const long N = terms_for(q, prec);
  Complex e4(1L, prec), qn(1L, prec);
  for (long n = 1; n <= N; ++n) {
    qn = qn * q;
    long s3 = 0;
    for (long dd = 1; dd <= n; ++dd)
      if (n % dd == 0) s3 += dd * dd * dd;
    e4 += qn * (240 * s3);
  }
  const Complex et = eta_pentagonal(tau, prec);
  return e4 * e4 * e4 / et.pow(24);
}

}  // namespace oracle
