#include "rcflab/exactalg/periodic.hpp"

#include "rcflab/exactalg/resultant.hpp"

namespace rcf {

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

// Coefficients in y of p(x, y), each embedded in Z[x, t] as a t-constant.
UniPoly<ZBiPoly> as_poly_in_inner(const ZBiPoly& p) {
  ZBiPoly swapped = swap_vars(p);  // y outer, x inner
  std::vector<ZBiPoly> out;
  out.reserve(swapped.size());
  for (const auto& xpoly : swapped.coeffs()) {
    out.push_back(xpoly.map<ZPoly>([](const BigInt& c) { return ZPoly(c); }));
  }
  return UniPoly<ZBiPoly>(std::move(out));
}

// f(y, t) as a polynomial in y with coefficients in Z[x, t] (x-constant).
UniPoly<ZBiPoly> f_in_first_variable() {
  std::vector<ZBiPoly> c(3);
  c[0] = ZBiPoly(zp({0, -1, 1}));
  c[2] = ZBiPoly(zp({1, 1}));
  return UniPoly<ZBiPoly>(std::move(c));
}

}  // namespace

ZBiPoly f_curve() {
  return ZBiPoly(std::vector<ZPoly>{zp({0, -1, 1}), ZPoly(), zp({1, 1})});
}

ZBiPoly g_curve() {
  return ZBiPoly(std::vector<ZPoly>{zp({0, -1, 1}), zp({0, 4}), zp({1, -1})});
}

std::vector<ZBiPoly> iterated_resultant_chain(int n) {
  if (n < 1) throw DomainError("iterated_resultant needs n >= 1");
  std::vector<ZBiPoly> chain;
  chain.reserve(static_cast<std::size_t>(n));
  chain.push_back(f_curve());
  const UniPoly<ZBiPoly> b = f_in_first_variable();
  for (int k = 2; k <= n; ++k) {
    chain.push_back(resultant(as_poly_in_inner(chain.back()), b));
  }
  return chain;
}

ZBiPoly iterated_resultant(int n) { return iterated_resultant_chain(n).back(); }

ZPoly normalize_periodic(const ZPoly& diag) { return primitive_part(diag); }

ZPoly periodic_poly(int n) { return normalize_periodic(diagonal(iterated_resultant(n))); }

F2Poly mod2_target(int n) {
  if (n < 1) throw DomainError("mod2_target needs n >= 1");
  const int e = 1 << n;
  F2Poly a = F2Poly::monomial(Gf2(1), e) + F2Poly::x();
  F2Poly b = F2Poly::x() + F2Poly(1L);
  return a * pow(b, static_cast<unsigned>(e - 1));
}

Mod2Result check_mod2_congruence(const ZPoly& rn, int n) {
  Mod2Result r;
  r.residual = reduce_mod2(rn) - mod2_target(n);
  r.holds = r.residual.zero();
  return r;
}

Mod2Result check_mod2_congruence(int n) { return check_mod2_congruence(periodic_poly(n), n); }

ZPoly graeffe_square(const ZPoly& p) {
  if (p.zero()) return p;
  ZPoly prod = p * p.negated_var();
  std::vector<BigInt> even;
  for (std::size_t i = 0; i < prod.size(); i += 2) even.push_back(prod[i]);
  ZPoly q(std::move(even));
  if (sgn(q.lc()) < 0) q = -q;
  return q;
}

}  // namespace rcf
