#pragma once

#include <string>
#include <vector>

#include "rcflab/exactalg/mobius.hpp"
#include "rcflab/exactalg/poly.hpp"

namespace rcf {

struct BivariateIdentity {
  std::string id;
  std::string description;
  KBiPoly residual;  // lhs - rhs after clearing denominators
  bool passed() const { return residual.zero(); }
};

// The five transformation identities of f, g and F2 under the sqrt(2) maps.
std::vector<BivariateIdentity> check_bivariate_identities();
// Identity (i) with sigma replaced by an arbitrary value; used as a fault injection.
BivariateIdentity f_transform_identity(const QuadExt& sigma);

// F2(X, Y) = X^2 + Y^2 - sigma^2 (1 + X^2 Y^2).
KBiPoly F2_curve();

struct RationalIdentity {
  std::string id;
  std::string description;
  KPoly residual;
  bool passed() const { return residual.zero(); }
};

// j22(x) = j2(t(x)) and j2(((1-x)/(1+x))^2) = j2(x^2), cross-multiplied.
std::vector<RationalIdentity> check_rational_identities();

// Numerator/denominator of j2(x) and j22(x).
ZPoly j2_numerator();
ZPoly j2_denominator();
ZPoly j22_numerator();
ZPoly j22_denominator();

// Checks the sigma (c odd) or delta (c even) functional equation and the -1/x symmetry.
bool check_fd_functional_equation(const ZPoly& fd, int h, int c_parity);

// f_d(x) = 2^-h (x^2 - 1)^(2h) b_d((-1)^c 2x / (1 - x^2)).
ZPoly build_fd_from_bd(const ZPoly& bd, int h, int c_parity);

struct DiscIdentityResult {
  bool holds = false;
  BigRational lhs;  // disc(prod (X^2 - z_i X - 1))
  BigRational rhs;  // prod (z_i^2 + 4) * disc(prod (X - z_i))^2
};

DiscIdentityResult check_disc_identity(const std::vector<BigRational>& z);

}  // namespace rcf
