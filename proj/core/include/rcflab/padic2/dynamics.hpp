#pragma once

#include <optional>
#include <vector>

#include "rcflab/padic2/unramified.hpp"

namespace rcf::padic {

constexpr int kSlack = 8;

// Catalan numbers C_0..C_K.
class CatalanTable {
 public:
  explicit CatalanTable(int K);
  int size() const { return static_cast<int>(c_.size()); }
  const BigInt& operator[](int k) const { return c_.at(k); }
  // (-1)^(k-1) 2^(2k-1) binom(1/2, k), k >= 1. Equals C_(k-1).
  static BigRational closed_form(int k);

 private:
  std::vector<BigInt> c_;
};

// T(x) = x^2 - 4x + 2 - (x-1)(x-3) sum_{k>=1} C_(k-1) 2^k / (x-3)^(2k).
// Requires x - 3 to be a unit; the sum is cut at k = P.
Elem eval_T(const Elem& x);

struct TValue {
  Elem value;
  Elem derivative;
};
TValue eval_T_with_derivative(const Elem& x);

// T^n(x).
Elem iterate_T(const Elem& x, int n);

struct PeriodicPoint {
  Elem x;
  unsigned long residue = 0;
  // v(T^n(x_k) - x_k) for the Newton iterates x_0, x_1, ...
  std::vector<int> newton_valuations;
};

using Orbit = std::vector<PeriodicPoint>;

// Lifts of the residues of F_(2^n) \ {0, 1} to solutions of T^n(x) = x,
// grouped into T-orbits. Orbits are listed by least residue, each starting
// at its least residue and following T.
std::vector<Orbit> find_periodic_points(int n, const ContextPtr& ctx);

// Smallest k <= n_max with v(T^k(x) - x) >= P - slack.
std::optional<int> orbit_period(const Elem& x, int n_max);

// A square root of a unit, correct modulo 2^(P-1); empty if x is not a square.
std::optional<Elem> sqrt_unit(const Elem& x);

struct RnCheck {
  int literal = 0;                  // v(R_n(x))
  std::optional<int> sqrt_root;     // max v(R_n(+-sqrt x)), capped at P - 1
  int graeffe = 0;                  // v(G(x)), G(y^2) = +-R_n(y) R_n(-y)
};

RnCheck verify_against_Rn(const Elem& x, const ZPoly& Rn);

}  // namespace rcf::padic
