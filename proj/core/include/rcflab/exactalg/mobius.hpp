#pragma once

#include <string>

#include "rcflab/exactalg/poly.hpp"

namespace rcf {

// x -> (p x + q) / (r x + s) with entries in Q(sqrt 2).
class MobiusMap {
 public:
  MobiusMap() : p_(1), q_(0), r_(0), s_(1) {}
  MobiusMap(QuadExt p, QuadExt q, QuadExt r, QuadExt s);

  const QuadExt& p() const { return p_; }
  const QuadExt& q() const { return q_; }
  const QuadExt& r() const { return r_; }
  const QuadExt& s() const { return s_; }

  QuadExt det() const { return p_ * s_ - q_ * r_; }

  // (this o other)(x) = this(other(x)); matrix product.
  MobiusMap compose(const MobiusMap& other) const;
  QuadExt apply(const QuadExt& x) const;

  // Equal as maps, i.e. matrices agree up to a nonzero scalar.
  bool same_map(const MobiusMap& other) const;
  bool is_identity() const { return same_map(MobiusMap()); }

  // (r x + s)^n F(M(x)) with n >= deg F.
  KPoly substitute(const KPoly& f, int n) const;

 private:
  QuadExt p_, q_, r_, s_;
};

namespace maps {
MobiusMap A();          // (sigma x + 1)/(x - sigma)
MobiusMap A_bar();      // (-x + sigma)/(sigma x + 1)
MobiusMap B();          // (delta x + 1)/(x - delta)
MobiusMap B_bar();      // (-sigma x + 1)/(x + sigma)
MobiusMap rho();        // -1/x
MobiusMap t_map();      // (x - sigma^2)/(sigma^2 x - 1)
MobiusMap cayley();     // (1 - x)/(1 + x)
}  // namespace maps

// Homogenised substitution of independent maps into each variable of a bivariate poly:
// (r1 x + s1)^nx (r2 y + s2)^ny F(M1(x), M2(y)). Pass the identity map to leave a variable alone.
KBiPoly substitute(const KBiPoly& f, const MobiusMap& mx, int nx, const MobiusMap& my, int ny);

struct GroupCheck {
  bool closed = false;
  bool has_identity = false;
  bool has_inverses = false;
  bool ok() const { return closed && has_identity && has_inverses; }
};

GroupCheck check_group(const std::vector<MobiusMap>& elems);

}  // namespace rcf
