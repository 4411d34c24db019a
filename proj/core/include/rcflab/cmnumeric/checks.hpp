#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcflab/cmnumeric/modular.hpp"
#include "rcflab/exactalg/poly.hpp"

namespace rcf::cm {

// w = (a + sqrt(-d))/2 with a^2 + d = 0 mod 32 and gcd(N(w), f) = 1.
struct CMParams {
  long d = 0;
  long a = 0;
  long f = 1;  // conductor: -d = d_K f^2
  int c_parity = 0;
  long h = 0;  // class number of the order of discriminant -d

  long norm_w() const { return (a * a + d) / 4; }
  Complex w(long prec) const;
};

// Class number of primitive positive definite forms of discriminant -d.
long class_number(long d);
long conductor(long d);
// c from c = 1 - (a^2 + d)/32 mod 2, and c-bar/2 from c-bar = a(2 - (a^2 + d)/16) mod 4.
int c_parity_direct(long a, long d);
int c_parity_from_cbar(long a, long d);

CMParams derive_cm_params(long d);

struct CheckReport {
  std::string id;
  Real residual;
  Real tolerance;
  Real eval_error;  // accumulated error bound of the evaluated inputs
  bool passed = false;
  nlohmann::json params;
};

// Pass threshold at a working precision: 2^(-133 prec / 256), so 256 bits gives
// about 9e-41.
Real default_tolerance(long prec);

// v(-1/tau) = A-bar(v(tau/4)); wrong_map uses A as a negative control.
CheckReport check_v_inversion(const Complex& tau, long prec, bool wrong_map = false);
// v^2(-1/(8 tau)) = t(v^2(tau)).
CheckReport check_v2_inversion(const Complex& tau, long prec);
// theta[eps; eps'](tau + 1) = e(-eps/4 (1 + eps/2)) theta[eps; eps + eps' + 1](tau).
CheckReport check_theta_shift(const BigRational& eps, const BigRational& epsp, const Complex& tau,
                              long prec);
// theta[eps; eps'](-1/tau) = e(-1/8) sqrt(tau) e(eps eps'/4) theta[eps'; -eps](tau).
CheckReport check_theta_inversion(const BigRational& eps, const BigRational& epsp,
                                  const Complex& tau, long prec);

// The seven CM relations at w, in a fixed order:
//   v-pi, v-branch, p2w-xi-pi, curve-c2, frobenius-image, f-orbit, xi4-pi4.
std::vector<CheckReport> check_cm_suite(const CMParams& params, long prec);

// Smallest n <= n_max with R_n((-1)^(1+c) v(w/8)) = 0 to working accuracy.
std::optional<int> estimate_minimal_period(const CMParams& params, int n_max, long prec);
// Same test at an arbitrary point.
std::optional<int> estimate_minimal_period_at(const Complex& x, int n_max, long prec);
// |R_n(x)| / sum |c_k| max(1, |x|)^k.
Real periodic_residual(const ZPoly& rn, const Complex& x);
// R_n from exactalg, cached.
const ZPoly& cached_periodic_poly(int n);

nlohmann::json to_json(const CMParams& p);
CMParams cm_params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CheckReport& r);

}  // namespace rcf::cm
