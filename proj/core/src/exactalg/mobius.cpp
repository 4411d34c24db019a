#include "rcflab/exactalg/mobius.hpp"

namespace rcf {

MobiusMap::MobiusMap(QuadExt p, QuadExt q, QuadExt r, QuadExt s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (det().is_zero()) throw DomainError("degenerate linear fractional map");
}

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return MobiusMap(p_ * o.p_ + q_ * o.r_, p_ * o.q_ + q_ * o.s_,
                   r_ * o.p_ + s_ * o.r_, r_ * o.q_ + s_ * o.s_);
}

QuadExt MobiusMap::apply(const QuadExt& x) const {
  QuadExt den = r_ * x + s_;
  if (den.is_zero()) throw DomainError("linear fractional map evaluated at its pole");
  return (p_ * x + q_) / den;
}

bool MobiusMap::same_map(const MobiusMap& o) const {
  const QuadExt* u[4] = {&p_, &q_, &r_, &s_};
  const QuadExt* v[4] = {&o.p_, &o.q_, &o.r_, &o.s_};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*u[i] * *v[j] != *u[j] * *v[i]) return false;
  return true;
}

KPoly MobiusMap::substitute(const KPoly& f, int n) const {
  if (f.degree() > n) throw DomainError("homogenising degree below polynomial degree");
  const KPoly num(std::vector<QuadExt>{q_, p_});
  const KPoly den(std::vector<QuadExt>{s_, r_});
  KPoly out;
  KPoly num_pow(1L);
  for (int k = 0; k <= n; ++k) {
    const QuadExt c = f.coeff(k);
    if (!c.is_zero()) out += num_pow * pow(den, static_cast<unsigned>(n - k)) * c;
    num_pow *= num;
  }
  return out;
}

namespace maps {
MobiusMap A() { return {sigma_const(), 1, 1, -sigma_const()}; }
MobiusMap A_bar() { return {-1, sigma_const(), sigma_const(), 1}; }
MobiusMap B() { return {delta_const(), 1, 1, -delta_const()}; }
MobiusMap B_bar() { return {-sigma_const(), 1, 1, sigma_const()}; }
MobiusMap rho() { return {0, -1, 1, 0}; }
MobiusMap t_map() {
  QuadExt s2 = sigma_const() * sigma_const();
  return {1, -s2, s2, -1};
}
MobiusMap cayley() { return {-1, 1, 1, 1}; }
}  // namespace maps

KBiPoly substitute(const KBiPoly& f, const MobiusMap& mx, int nx, const MobiusMap& my, int ny) {
  if (f.degree() > nx) throw DomainError("homogenising degree below x-degree");
  const KPoly xnum(std::vector<QuadExt>{mx.q(), mx.p()});
  const KPoly xden(std::vector<QuadExt>{mx.s(), mx.r()});
  std::vector<KPoly> rows(static_cast<std::size_t>(nx) + 1);
  KPoly xnum_pow(1L);
  for (int i = 0; i <= nx; ++i) {
    const KPoly fi = f.coeff(i);
    if (!fi.zero()) {
      KPoly gi = my.substitute(fi, ny);
      KPoly xi = xnum_pow * pow(xden, static_cast<unsigned>(nx - i));
      for (std::size_t k = 0; k < xi.size(); ++k) {
        if (!xi[k].is_zero()) rows[k] += gi * xi[k];
      }
    }
    xnum_pow *= xnum;
  }
  return KBiPoly(std::move(rows));
}

GroupCheck check_group(const std::vector<MobiusMap>& elems) {
  GroupCheck g;
  auto contains = [&](const MobiusMap& m) {
    for (const auto& e : elems)
      if (e.same_map(m)) return true;
    return false;
  };
  g.has_identity = contains(MobiusMap());
  g.closed = true;
  g.has_inverses = true;
  for (const auto& a : elems) {
    bool inv = false;
    for (const auto& b : elems) {
      MobiusMap ab = a.compose(b);
      if (!contains(ab)) g.closed = false;
      if (ab.is_identity()) inv = true;
    }
    if (!inv) g.has_inverses = false;
  }
  return g;
}

}  // namespace rcf
