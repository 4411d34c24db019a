#include "rcflab/qseries/catalog.hpp"

#include <algorithm>
#include <initializer_list>

#include "rcflab/errors.hpp"
#include "rcflab/qseries/builders.hpp"

namespace rcf::qs {

namespace {

using Q = BigRational;
using Terms = std::vector<Term>;

Term T(long c, const QSeries& s) { return {BigInt(c), to_cyclo(s)}; }
Term T(long c, const CSeries& s) { return {BigInt(c), s}; }

// Ascending integer coefficients.
ZPoly zp(std::initializer_list<long> asc) {
  std::vector<BigInt> v;
  for (long c : asc) v.emplace_back(c);
  return ZPoly(std::move(v));
}

QSeries ev(const ZPoly& f, const QSeries& x) { return compose(f, x); }

// The j-formulas in v, v^2, z and b.
ZPoly j_of_v_num() {
  return pow(zp({1, 0, 232, 0, 732, 0, -1192, 0, 710, 0, -1192, 0, 732, 0, 232, 0, 1}), 3);
}
ZPoly j_of_v_den() {
  return zp({0, 0, 1}) * pow(zp({-1, 0, 1}), 2) * pow(zp({1, 0, 1}), 4) *
         pow(zp({1, 0, -6, 0, 1}), 8);
}
ZPoly j2_num() { return pow(zp({1, 232, 732, -1192, 710, -1192, 732, 232, 1}), 3); }
ZPoly j2_den() {
  return zp({0, 1}) * pow(zp({-1, 1}), 2) * pow(zp({1, 1}), 4) * pow(zp({1, -6, 1}), 8);
}
ZPoly j4_num() {
  return pow(zp({1, 0, -8, 0, 12, 0, 8, 0, 230, 0, 8, 0, 12, 0, -8, 0, 1}), 3);
}
ZPoly j4_den() {
  return ZPoly::monomial(BigInt(1), 8) * pow(zp({1, 0, 1}), 4) * pow(zp({-1, 0, 1}), 8) *
         pow(zp({1, 0, -6, 0, 1}), 2);
}
ZPoly jz_num() { return pow(zp({256, 0, 3840, 0, 2144, 0, 240, 0, 1}), 3); }
ZPoly jz_den() {
  return zp({0, 0, 1}) * pow(zp({4, 0, 1}), 2) * pow(zp({-2, 1}), 8) * pow(zp({2, 1}), 8);
}
ZPoly jb_num() { return pow(zp({256, 0, 0, 0, 224, 0, 0, 0, 1}), 3); }
ZPoly jb_den() { return ZPoly::monomial(BigInt(1), 4) * pow(zp({-16, 0, 0, 0, 1}), 4); }

std::vector<IdentityRecord> make_catalog() {
  std::vector<IdentityRecord> c;
  auto add = [&](std::string id, std::string desc, std::function<Terms(const Q&)> fn) {
    c.push_back({std::move(id), std::move(desc), std::move(fn)});
  };

  add("I2.11", "phi(q)^2 + phi(-q)^2 = 2 phi(q^2)^2", [](const Q& w) {
    QSeries a = phi(w), m = a.negate_q(), s = phi(w / 2).rescale(2);
    return Terms{T(1, a * a), T(1, m * m), T(-2, s * s)};
  });
  add("I2.12", "phi(q)^4 - phi(-q)^4 = 16 q psi(q^2)^4", [](const Q& w) {
    QSeries a = phi(w), m = a.negate_q(), s = psi(w / 2).rescale(2);
    return Terms{T(1, a.pow(4)), T(-1, m.pow(4)), T(-16, s.pow(4).shifted(1))};
  });
  add("I2.13", "phi(q) psi(q^2) = psi(q)^2", [](const Q& w) {
    QSeries s = psi(w);
    return Terms{T(1, phi(w) * psi(w / 2).rescale(2)), T(-1, s * s)};
  });
  add("I2.14", "psi(q) (phi(-q) + phi(q^2)) = 2 f(q^3, q^5)^2", [](const Q& w) {
    QSeries s = psi(w), f = ramanujan_f(1, 3, 1, 5, w);
    return Terms{T(1, s * phi(w).negate_q()), T(1, s * phi(w / 2).rescale(2)), T(-2, f * f)};
  });
  add("I2.15", "psi(q) (phi(-q) - phi(q^2)) = -2 q f(q, q^7)^2", [](const Q& w) {
    QSeries s = psi(w), f = ramanujan_f(1, 1, 1, 7, w);
    return Terms{T(1, s * phi(w).negate_q()), T(-1, s * phi(w / 2).rescale(2)),
                 T(2, (f * f).shifted(1))};
  });
  add("I2.16", "phi(q) phi(-q) = phi(-q^2)^2", [](const Q& w) {
    QSeries a = phi(w), s = phi(w / 2).negate_q().rescale(2);
    return Terms{T(1, a * a.negate_q()), T(-1, s * s)};
  });
  add("I2.17", "phi(q) + phi(-q) = 2 phi(q^4)", [](const Q& w) {
    QSeries a = phi(w);
    return Terms{T(1, a), T(1, a.negate_q()), T(-2, phi(w / 4).rescale(4))};
  });
  add("I2.18", "phi(q)^2 - phi(-q)^2 = 8 q psi(q^4)^2", [](const Q& w) {
    QSeries a = phi(w), m = a.negate_q(), s = psi(w / 4).rescale(4);
    return Terms{T(1, a * a), T(-1, m * m), T(-8, (s * s).shifted(1))};
  });
  add("EULER", "(q;q)_inf = sum (-1)^n q^(n(3n-1)/2)", [](const Q& w) {
    return Terms{T(1, fminus(w)), T(-1, pentagonal(w))};
  });
  add("JTP-PHI", "phi(q) = (-q;q^2)^2 (q^2;q^2)", [](const Q& w) {
    QSeries x = chi(w);
    return Terms{T(1, phi(w)), T(-1, x * x * qpoch(1, 2, 2, w))};
  });
  add("JTP-PSI", "psi(q) = (q^2;q^2) / (q;q^2)", [](const Q& w) {
    return Terms{T(1, psi(w)), T(-1, qpoch(1, 2, 2, w) * qpoch(1, 1, 2, w, -1))};
  });
  add("JTP-PSI2", "psi(q) = (-q;q) (q^2;q^2)", [](const Q& w) {
    return Terms{T(1, psi(w)), T(-1, qpoch(-1, 1, 1, w) * qpoch(1, 2, 2, w))};
  });
  add("JTP-F35", "f(q^3, q^5) = (-q^3;q^8) (-q^5;q^8) (q^8;q^8)", [](const Q& w) {
    return Terms{T(1, ramanujan_f(1, 3, 1, 5, w)),
                 T(-1, qpoch(-1, 3, 8, w) * qpoch(-1, 5, 8, w) * qpoch(1, 8, 8, w))};
  });
  add("JTP-F17", "f(-q, -q^7) = (q;q^8) (q^7;q^8) (q^8;q^8)", [](const Q& w) {
    return Terms{T(1, ramanujan_f(-1, 1, -1, 7, w)),
                 T(-1, qpoch(1, 1, 8, w) * qpoch(1, 7, 8, w) * qpoch(1, 8, 8, w))};
  });
  add("JTP-THETA1", "theta[1/4; 1/2] as a sum and as a product", [](const Q& w) {
    return Terms{T(1, theta(rat(1, 4), rat(1, 2), w).series),
                 T(-1, theta_product(rat(1, 4), rat(1, 2), w).series)};
  });
  add("JTP-THETA2", "theta[1/2; 1/4] as a sum and as a product", [](const Q& w) {
    return Terms{T(1, theta(rat(1, 2), rat(1, 4), w).series),
                 T(-1, theta_product(rat(1, 2), rat(1, 4), w).series)};
  });
  add("JTP-THETA3", "theta[3/4; 1] as a sum and as a product", [](const Q& w) {
    return Terms{T(1, theta(rat(3, 4), Q(1), w).series),
                 T(-1, theta_product(rat(3, 4), Q(1), w).series)};
  });
  add("V-KRONECKER", "v with exponents (8/n) equals v with exponents (2/n)", [](const Q& w) {
    return Terms{T(1, v(w)), T(-1, v_kronecker2(w))};
  });
  add("V-CF", "v as a continued fraction equals v as a product", [](const Q& w) {
    return Terms{T(1, v_cf(w)), T(-1, v(w))};
  });
  add("THETA-V", "v(tau) theta[1/4;1](8tau) = e(-1/8) theta[3/4;1](8tau)", [](const Q& w) {
    ThetaSeries t1 = theta(rat(1, 4), Q(1), w / 8), t3 = theta(rat(3, 4), Q(1), w / 8);
    Cyclo8 ph = unit_root(rat(-1, 8) + t3.phase - t1.phase);
    return Terms{T(1, to_cyclo(v(w)) * t1.series.rescale(8)),
                 T(-1, t3.series.rescale(8).scaled(ph))};
  });
  add("U-PSI", "u(tau) phi(q) = sqrt2 q^(1/8) psi(q)", [](const Q& w) {
    CSeries rhs = to_cyclo(psi(w)).shifted(rat(1, 8)).scaled(Cyclo8::sqrt2());
    return Terms{T(1, u(w) * to_cyclo(phi(w))), T(-1, rhs)};
  });
  add("P1a", "x^4 (y^4 + 1) = 2 y^2, x = u(tau), y = u(2tau)", [](const Q& w) {
    QSeries x4 = u4(w), y2 = u2(w / 2).rescale(2), y4 = u4(w / 2).rescale(2);
    return Terms{T(1, x4 * y4), T(1, x4), T(-2, y2)};
  });
  add("P1b", "x^2 y + x^2 + y^2 = y, x = v(tau), y = v(2tau)", [](const Q& w) {
    QSeries x = v(w), y = v(w / 2).rescale(2), x2 = x * x;
    return Terms{T(1, x2 * y), T(1, x2), T(1, y * y), T(-1, y)};
  });
  add("E3.2", "u^4 (v^2 + 1)^2 + 4 v (v^2 - 1) = 0", [](const Q& w) {
    QSeries a = u4(w), x = v(w), x2 = x * x;
    return Terms{T(1, a * x2 * x2), T(2, a * x2), T(1, a), T(4, x2 * x), T(-4, x)};
  });
  add("P2", "y^2 - (x^2 - 4x + 1) y + x^2 = 0, x = v(tau)^2, y = v(2tau)^2", [](const Q& w) {
    QSeries x = v(w), y = v(w / 2).rescale(2);
    x = x * x;
    y = y * y;
    return Terms{T(1, y * y), T(-1, x * x * y), T(4, x * y), T(-1, y), T(1, x * x)};
  });
  add("P5", "2 / p(8tau) = (1 - v^2) / v", [](const Q& w) {
    QSeries x = v(w), p8 = p(w / 8).rescale(8);
    return Terms{T(2, x), T(-1, p8), T(1, p8 * x * x)};
  });
  add("P6", "p(tau)^2 p(2tau)^2 + p(tau)^2 = 2 p(2tau)", [](const Q& w) {
    QSeries a = p(w), b2 = p(w / 2).rescale(2), a2 = a * a;
    return Terms{T(1, a2 * b2 * b2), T(1, a2), T(-2, b2)};
  });
  add("P7a", "x^2 y^2 + 4 y^2 = 16 x, x = b(tau), y = b(2tau)", [](const Q& w) {
    QSeries x = b(w), y = b(w / 2).rescale(2), y2 = y * y;
    return Terms{T(1, x * x * y2), T(4, y2), T(-16, x)};
  });
  add("P7b", "(b(tau) + 2)^4 b(4tau)^4 = 2^8 (b(tau)^3 + 4 b(tau))", [](const Q& w) {
    QSeries x = b(w), z = b(w / 4).rescale(4);
    QSeries x2 = x + QSeries(Q(2));
    return Terms{T(1, x2.pow(4) * z.pow(4)), T(-256, x.pow(3)), T(-1024, x)};
  });
  add("P8", "(v^2 + 1)^2 b(4tau)^2 = 4 (v^4 - 6 v^2 + 1)", [](const Q& w) {
    QSeries x = v(w), z = b(w / 4).rescale(4), x2 = x * x;
    QSeries s = x2 + QSeries(Q(1));
    return Terms{T(1, s * s * z * z), T(-4, x2 * x2), T(24, x2), T(-4, QSeries(Q(1)))};
  });
  add("WEBER", "b(4tau)^4 / 16 = 1 - p(4tau)^4", [](const Q& w) {
    QSeries z = b(w / 4).rescale(4), y = p(w / 4).rescale(4);
    return Terms{T(1, z.pow(4)), T(-16, QSeries(Q(1))), T(16, y.pow(4))};
  });
  add("WEBER-F", "f1^8 + f2^8 = f^8", [](const Q& w) {
    Q ww = w + 1;
    return Terms{T(1, weber_f1_sq(ww).pow(4)), T(1, weber_f2_sq(ww).pow(4)),
                 T(-1, weber_f_sq(ww).pow(4))};
  });
  add("E4.1", "p(tau) = f2(tau/2)^2 / f(tau/2)^2", [](const Q& w) {
    QSeries f = weber_f_sq(2 * w + 1).rescale(rat(1, 2));
    QSeries f2 = weber_f2_sq(2 * w).rescale(rat(1, 2));
    return Terms{T(1, p(w) * f), T(-1, f2)};
  });
  add("E4.2", "b(tau) = 2 f1(tau/2)^2 / f(tau/2)^2", [](const Q& w) {
    QSeries f = weber_f_sq(2 * w + 1).rescale(rat(1, 2));
    QSeries f1 = weber_f1_sq(2 * w + 1).rescale(rat(1, 2));
    return Terms{T(1, b(w) * f), T(-2, f1)};
  });
  add("E5.2", "alpha^4 = -eta(tau/4)^8 / eta(tau)^8", [](const Q& w) {
    return Terms{T(1, alpha(w + 1).pow(4)), T(-1, alpha4(w))};
  });
  add("E5.3", "G(alpha^4) = E4^3 / eta^24", [](const Q& w) {
    return Terms{T(1, j(w)), T(-1, j_eisenstein(w))};
  });
  add("E5.4", "16 alpha^4 + 16 b^4 = alpha^4 b^4", [](const Q& w) {
    QSeries a = alpha4(w + 1), z = b(w + 1).pow(4);
    return Terms{T(16, a), T(16, z), T(-1, a * z)};
  });
  add("J-B", "j = (b^8 + 224 b^4 + 256)^3 / (b^4 (b^4 - 16)^4)", [](const Q& w) {
    QSeries x = b(w);
    return Terms{T(1, j(w) * ev(jb_den(), x)), T(-1, ev(jb_num(), x))};
  });
  add("E5.5", "j(4tau) as a rational function of v", [](const Q& w) {
    QSeries x = v(w), j4 = j(w / 4).rescale(4);
    return Terms{T(1, j4 * ev(j4_den(), x)), T(-1, ev(j4_num(), x))};
  });
  add("E5.7", "j(tau) = j2(v(tau)^2)", [](const Q& w) {
    QSeries x = v(w);
    x = x * x;
    return Terms{T(1, j(w) * ev(j2_den(), x)), T(-1, ev(j2_num(), x))};
  });
  add("P9", "j(tau) as a rational function of v", [](const Q& w) {
    QSeries x = v(w);
    return Terms{T(1, j(w) * ev(j_of_v_den(), x)), T(-1, ev(j_of_v_num(), x))};
  });
  add("E5.9", "v^-2 + v^2 - 6 = eta(tau)^4 eta(4tau)^2 / (eta(2tau)^2 eta(8tau)^4)",
      [](const Q& w) {
        QSeries x = v(w + 2), x2 = x * x;
        QSeries e = eta_quotient({{Q(1), 4}, {Q(4), 2}, {Q(2), -2}, {Q(8), -4}}, w);
        return Terms{T(1, x2.inverse()), T(1, x2), T(-6, QSeries(Q(1))), T(-1, e)};
      });
  add("JZ", "j(tau) = J(v - 1/v)", [](const Q& w) {
    QSeries x = v(w), z = x - x.inverse();
    return Terms{T(1, j(w) * ev(jz_den(), z)), T(-1, ev(jz_num(), z))};
  });
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return c;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> c = make_catalog();
  return c;
}

const IdentityRecord& find_identity(const std::string& id) {
  for (const auto& r : catalog())
    if (r.id == id) return r;
  throw DomainError("unknown identity: " + id);
}

IdentityReport verify_identity(const std::string& id, const BigRational& order,
                               std::optional<Mutation> mutation) {
  return verify_identity(find_identity(id), order, mutation);
}

IdentityReport verify_identity(const IdentityRecord& rec, const BigRational& order,
                               std::optional<Mutation> mutation) {
  if (sgn(order) <= 0) throw DomainError("identity order must be positive");
  Q work = order + 1;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Terms terms = rec.terms(work);
    if (mutation) {
      if (mutation->term >= terms.size()) throw DomainError("mutation term out of range");
      terms[mutation->term].coeff += mutation->delta;
    }
    CSeries res;
    for (const auto& t : terms) {
      if (sgn(t.coeff) == 0) continue;
      res += t.value.scaled(Cyclo8(Q(t.coeff)));
    }
    if (res.order() && *res.order() < order) {
      work += order - *res.order() + 1;
      continue;
    }
    IdentityReport rep;
    rep.id = rec.id;
    rep.order = order;
    rep.residual = res.truncated(order);
    rep.passed = rep.residual.is_zero();
    rep.low_order = order < kLowOrder;
    if (!rep.passed) {
      rep.first_bad_exponent = rep.residual.offset();
      rep.first_bad_coefficient = rep.residual.leading();
    }
    return rep;
  }
  throw InternalError("identity " + rec.id + ": working order did not reach the target");
}

}  // namespace rcf::qs
