#include "rcflab/padic2/dynamics.hpp"

#include <algorithm>
#include <map>

#include "rcflab/errors.hpp"
#include "rcflab/exactalg/periodic.hpp"

namespace rcf::padic {

CatalanTable::CatalanTable(int K) {
  if (K < 0) throw DomainError("negative Catalan table size");
  c_.reserve(K + 1);
  c_.emplace_back(1);
  for (int k = 1; k <= K; ++k) c_.push_back(c_.back() * 2 * (2 * k - 1) / (k + 1));
}

BigRational CatalanTable::closed_form(int k) {
  if (k < 1) throw DomainError("closed form needs k >= 1");
  BigRational binom(1);
  for (int i = 0; i < k; ++i) binom *= (rat(1, 2) - i) / BigRational(i + 1);
  BigInt p2 = BigInt(1) << (2 * k - 1);
  return (k % 2 == 1 ? 1 : -1) * BigRational(p2) * binom;
}

namespace {

const CatalanTable& catalan() {
  static const CatalanTable table(128);
  return table;
}

}  // namespace

TValue eval_T_with_derivative(const Elem& x) {
  const auto& ctx = x.ctx();
  auto c = [&](long a) { return Elem::from_int(ctx, a); };
  const Elem z = x - c(3);
  if (!z.is_unit()) throw DomainError("T needs |x - 3|_2 = 1");
  const Elem iz = z.inverse();
  const Elem iz2 = iz * iz;
  const CatalanTable& C = catalan();

  Elem S(ctx), Sd(ctx);
  Elem t = c(1);
  for (int k = 1; k <= ctx->P(); ++k) {
    t = (t * iz2).scaled(2);
    S += t.scaled(C[k - 1]);
    Sd += t.scaled(-2 * k * C[k - 1]);
  }
  Sd *= iz;

  const Elem x1 = x - c(1);
  const Elem lin = x.scaled(2) - c(4);
  TValue out{x * x - x.scaled(4) + c(2) - x1 * z * S, Elem(ctx)};
  out.derivative = lin - lin * S - x1 * z * Sd;
  return out;
}

Elem eval_T(const Elem& x) { return eval_T_with_derivative(x).value; }

Elem iterate_T(const Elem& x, int n) {
  Elem y = x;
  for (int i = 0; i < n; ++i) y = eval_T(y);
  return y;
}

namespace {

PeriodicPoint newton_lift(unsigned long r, int n, const ContextPtr& ctx) {
  PeriodicPoint pt{Elem::from_residue(ctx, r), r, {}};
  const int P = ctx->P();
  int budget = 4;
  for (int b = 1; b < P; b *= 2) ++budget;
  for (int it = 0; it < budget; ++it) {
    Elem y = pt.x;
    Elem d = Elem::from_int(ctx, 1);
    for (int i = 0; i < n; ++i) {
      TValue tv = eval_T_with_derivative(y);
      d *= tv.derivative;
      y = tv.value;
    }
    const Elem g = y - pt.x;
    const int v = g.valuation();
    pt.newton_valuations.push_back(v);
    if (v >= P) return pt;
    // g' = (T^n)' - 1 is congruent to -1 mod 2
    pt.x -= g * (d - Elem::from_int(ctx, 1)).inverse();
  }
  if (pt.newton_valuations.back() >= P - kSlack) return pt;
  throw InternalError("Newton lift of a periodic point did not converge");
}

}  // namespace

std::vector<Orbit> find_periodic_points(int n, const ContextPtr& ctx) {
  if (n < 1) throw DomainError("period must be positive");
  if (ctx->m() != n) throw DomainError("residue degree must equal the period");
  if (ctx->P() < 16) throw DomainError("periodic point search needs P >= 16");
  const int P = ctx->P();
  const unsigned long q = 1UL << n;

  std::map<unsigned long, PeriodicPoint> points;
  for (unsigned long r = 2; r < q; ++r) points.emplace(r, newton_lift(r, n, ctx));

  std::vector<Orbit> orbits;
  std::map<unsigned long, bool> seen;
  for (const auto& [r, pt] : points) {
    if (seen[r]) continue;
    Orbit orbit;
    unsigned long cur = r;
    do {
      const PeriodicPoint& p = points.at(cur);
      seen[cur] = true;
      orbit.push_back(p);
      const Elem next = eval_T(p.x);
      const unsigned long nr = next.residue();
      auto it = points.find(nr);
      if (it == points.end() || (next - it->second.x).valuation() < P - kSlack)
        throw InternalError("T does not permute the lifted points");
      cur = nr;
    } while (cur != r && orbit.size() <= q);
    if (cur != r) throw InternalError("orbit did not close");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::optional<int> orbit_period(const Elem& x, int n_max) {
  const int target = x.ctx()->P() - kSlack;
  Elem y = x;
  for (int k = 1; k <= n_max; ++k) {
    y = eval_T(y);
    if ((y - x).valuation() >= target) return k;
  }
  return std::nullopt;
}

std::optional<Elem> sqrt_unit(const Elem& x) {
  if (!x.is_unit()) throw DomainError("sqrt_unit needs a unit");
  const auto& ctx = x.ctx();
  const int m = ctx->m();
  const int P = ctx->P();
  // Frobenius is a bijection on the residue field; its inverse is r^(2^(m-1)).
  unsigned long s = x.residue();
  for (int i = 0; i + 1 < m; ++i) s = gf2m_mul(s, s, ctx->modulus_bits(), m);
  const Elem base = Elem::from_residue(ctx, s);

  std::optional<Elem> y;
  for (unsigned long a = 0; a < (1UL << m) && !y; ++a) {
    Elem cand = base + Elem::from_residue(ctx, a).scaled(2);
    if ((cand * cand - x).valuation() >= 3) y = cand;
  }
  if (!y) return std::nullopt;
  for (int it = 0; it < 16; ++it) {
    const Elem r = *y * *y - x;
    if (r.valuation() >= P - 1) return y;
    *y -= r.half() * y->inverse();
  }
  throw InternalError("square root iteration did not converge");
}

RnCheck verify_against_Rn(const Elem& x, const ZPoly& Rn) {
  RnCheck out;
  out.literal = eval_poly(Rn, x).valuation();
  out.graeffe = eval_poly(graeffe_square(Rn), x).valuation();
  if (x.is_unit()) {
    if (auto y = sqrt_unit(x)) {
      const int cap = x.ctx()->P() - 1;
      const int v = std::max(eval_poly(Rn, *y).valuation(), eval_poly(Rn, -*y).valuation());
      out.sqrt_root = std::min(v, cap);
    }
  }
  return out;
}

}  // namespace rcf::padic
