#pragma once

#include <vector>

#include "rcflab/exactalg/poly.hpp"

namespace rcf {

// f(x, y) = x^2 y + x^2 + y^2 - y, stored with x outer and y inner.
ZBiPoly f_curve();
// g(x, y) = y^2 - (x^2 - 4x + 1) y + x^2.
ZBiPoly g_curve();

// R^(n)(x, t): R^(1) = f(x, t), R^(n) = Res_y(R^(n-1)(x, y), f(y, t)). x outer, t inner.
ZBiPoly iterated_resultant(int n);
// R^(1) .. R^(n), sharing the intermediate work.
std::vector<ZBiPoly> iterated_resultant_chain(int n);

// R_n(x) = R^(n)(x, x), content removed, positive leading coefficient.
ZPoly periodic_poly(int n);
ZPoly normalize_periodic(const ZPoly& diag);

struct Mod2Result {
  bool holds = false;
  F2Poly residual;  // R_n - (x^(2^n) + x)(x + 1)^(2^n - 1) over GF(2)
};

// (x^(2^n) + x)(x + 1)^(2^n - 1) over GF(2).
F2Poly mod2_target(int n);
Mod2Result check_mod2_congruence(int n);
Mod2Result check_mod2_congruence(const ZPoly& rn, int n);

// Polynomial whose roots are the squares of the roots of p.
ZPoly graeffe_square(const ZPoly& p);

}  // namespace rcf
