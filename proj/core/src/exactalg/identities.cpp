#include "rcflab/exactalg/identities.hpp"

#include <set>

#include "rcflab/exactalg/periodic.hpp"
#include "rcflab/exactalg/resultant.hpp"

namespace rcf {

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(std::move(v));
}

KBiPoly scaled(const KBiPoly& p, const QuadExt& s) {
  return p.map<KPoly>([&](const KPoly& row) { return row * s; });
}

// p(x^2, y^2)
ZBiPoly square_vars(const ZBiPoly& p) {
  std::vector<ZPoly> rows(2 * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<BigInt> r(2 * p[i].size(), BigInt(0));
    for (std::size_t j = 0; j < p[i].size(); ++j) r[2 * j] = p[i][j];
    rows[2 * i] = ZPoly(std::move(r));
  }
  return ZBiPoly(std::move(rows));
}

// p(x, -y)
ZBiPoly negate_inner(const ZBiPoly& p) {
  return p.map<ZPoly>([](const ZPoly& row) { return row.negated_var(); });
}

// p(x^2) for a univariate polynomial
ZPoly square_var(const ZPoly& p) {
  std::vector<BigInt> r(2 * p.size(), BigInt(0));
  for (std::size_t j = 0; j < p.size(); ++j) r[2 * j] = p[j];
  return ZPoly(std::move(r));
}

QuadExt qpow(const QuadExt& x, unsigned e) { return ring_pow(x, e); }

KPoly fd_residual(const KPoly& f, const MobiusMap& m, int n, const QuadExt& factor) {
  return m.substitute(f, n) - f * factor;
}

}  // namespace

KBiPoly F2_curve() {
  const QuadExt s2 = sigma_const() * sigma_const();
  // rows in X: X^0: Y^2 - s2, X^2: 1 - s2 Y^2
  std::vector<KPoly> rows(3);
  rows[0] = KPoly(std::vector<QuadExt>{-s2, 0, 1});
  rows[2] = KPoly(std::vector<QuadExt>{1, 0, -s2});
  return KBiPoly(std::move(rows));
}

BivariateIdentity f_transform_identity(const QuadExt& s) {
  const KBiPoly f = to_k(f_curve());
  const MobiusMap abar(-1, s, s, 1);
  KBiPoly lhs = substitute(f, abar, 2, abar, 2);
  KBiPoly rhs = scaled(swap_vars(f), QuadExt(8) * s * s);
  return {"F-ABAR", "(s x+1)^2 (s y+1)^2 f(Abar x, Abar y) = 8 s^2 f(y, x)", lhs - rhs};
}

std::vector<BivariateIdentity> check_bivariate_identities() {
  std::vector<BivariateIdentity> out;
  const QuadExt sig = sigma_const();
  const KBiPoly f = to_k(f_curve());
  const KBiPoly g = to_k(g_curve());
  const MobiusMap id;

  {
    BivariateIdentity r = f_transform_identity(sig);
    r.id = "BI-1";
    r.description = "(sigma x+1)^2 (sigma y+1)^2 f(Abar x, Abar y) = 2^3 sigma^2 f(y, x)";
    out.push_back(std::move(r));
  }
  {
    KBiPoly lhs = substitute(g, maps::t_map(), 2, maps::t_map(), 2);
    KBiPoly rhs = scaled(swap_vars(g), QuadExt(32) * qpow(sig, 4));
    out.push_back({"BI-2", "(sigma^2 x-1)^2 (sigma^2 y-1)^2 g(t x, t y) = 2^5 sigma^4 g(y, x)",
                   lhs - rhs});
  }
  {
    KBiPoly lhs = substitute(F2_curve(), id, 2, maps::A_bar(), 2);
    KBiPoly rhs = scaled(f, QuadExt(4) * QuadExt::sqrt2() * sig * sig);
    out.push_back({"BI-3", "(sigma Y+1)^2 F2(X, Abar Y) = 4 sqrt2 sigma^2 f(X, Y)", lhs - rhs});
  }
  {
    const ZBiPoly fz = f_curve();
    ZBiPoly res = square_vars(g_curve()) - negate_inner(fz) * fz;
    out.push_back({"BI-4", "g(x^2, y^2) = f(x, -y) f(x, y)", to_k(res)});
  }
  {
    KBiPoly lhs = substitute(f, id, 2, maps::cayley(), 2);
    KBiPoly rhs = scaled(f, QuadExt(2));
    out.push_back({"BI-5", "(1+y)^2 f(x, (1-y)/(1+y)) = 2 f(x, y)", lhs - rhs});
  }
  return out;
}

ZPoly j2_numerator() {
  return pow(zp({1, 232, 732, -1192, 710, -1192, 732, 232, 1}), 3);
}

ZPoly j2_denominator() {
  return zp({0, 1}) * pow(zp({-1, 1}), 2) * pow(zp({1, 1}), 4) * pow(zp({1, -6, 1}), 8);
}

ZPoly j22_numerator() {
  return pow(zp({1, -8, 12, 8, -10, 8, 12, -8, 1}), 3);
}

ZPoly j22_denominator() {
  return ZPoly::monomial(BigInt(1), 8) * pow(zp({-1, 1}), 4) * pow(zp({1, 1}), 2) *
         zp({1, -6, 1});
}

std::vector<RationalIdentity> check_rational_identities() {
  std::vector<RationalIdentity> out;
  {
    const int n = j2_numerator().degree();
    KPoly num = maps::t_map().substitute(to_k(j2_numerator()), n);
    KPoly den = maps::t_map().substitute(to_k(j2_denominator()), n);
    KPoly res = num * to_k(j22_denominator()) - to_k(j22_numerator()) * den;
    out.push_back({"J22", "j22(x) = j2(t(x))", res});
  }
  {
    ZPoly n2 = square_var(j2_numerator());
    ZPoly d2 = square_var(j2_denominator());
    const int n = n2.degree();
    KPoly num = maps::cayley().substitute(to_k(n2), n);
    KPoly den = maps::cayley().substitute(to_k(d2), n);
    KPoly res = num * to_k(d2) - to_k(n2) * den;
    out.push_back({"J2-CAYLEY", "j2(((1-x)/(1+x))^2) = j2(x^2)", res});
  }
  return out;
}

bool check_fd_functional_equation(const ZPoly& fd, int h, int c_parity) {
  if (h < 1) throw DomainError("class number must be positive");
  if (fd.degree() != 4 * h) throw DomainError("f_d must have degree 4h");
  const KPoly f = to_k(fd);
  const int n = 4 * h;
  const QuadExt two_pow = qpow(QuadExt(2), static_cast<unsigned>(3 * h));
  bool ok;
  if (c_parity & 1) {
    ok = fd_residual(f, maps::A(), n, two_pow * qpow(sigma_const(), 2 * h)).zero();
  } else {
    ok = fd_residual(f, maps::B(), n, two_pow * qpow(delta_const(), 2 * h)).zero();
  }
  return ok && fd_residual(f, maps::rho(), n, QuadExt(1)).zero();
}

ZPoly build_fd_from_bd(const ZPoly& bd, int h, int c_parity) {
  if (h < 1) throw DomainError("class number must be positive");
  if (bd.degree() != 2 * h) throw DomainError("b_d must have degree 2h");
  BigInt two_h = BigInt(1) << h;
  if (bd.coeff(0) != two_h) throw DomainError("constant term of b_d must be 2^h");
  // sum_k b_k (-2 s x)^k (x^2 - 1)^(2h - k), s = (-1)^c
  const long lin = (c_parity & 1) ? 2 : -2;
  const ZPoly u = zp({0, lin});
  const ZPoly w = zp({-1, 0, 1});
  ZPoly acc;
  ZPoly u_pow(1L);
  for (int k = 0; k <= 2 * h; ++k) {
    const BigInt& b = bd[static_cast<std::size_t>(k)];
    if (sgn(b) != 0) acc += u_pow * pow(w, static_cast<unsigned>(2 * h - k)) * b;
    u_pow *= u;
  }
  std::vector<BigInt> c = acc.coeffs();
  for (auto& x : c) {
    if (!mpz_divisible_2exp_p(x.get_mpz_t(), static_cast<mp_bitcnt_t>(h)))
      throw ConsistencyError("2^-h scaling of f_d left a non-integer coefficient");
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(h));
  }
  return ZPoly(std::move(c));
}

DiscIdentityResult check_disc_identity(const std::vector<BigRational>& z) {
  if (z.empty()) throw DomainError("need at least one z_i");
  std::set<BigRational> seen;
  for (const auto& zi : z)
    if (!seen.insert(zi).second) throw DomainError("z_i must be pairwise distinct");
  QPoly mu_tilde(BigRational(1)), mu(BigRational(1));
  BigRational prod(1);
  for (const auto& zi : z) {
    mu_tilde *= QPoly(std::vector<BigRational>{BigRational(-1), BigRational(-zi), BigRational(1)});
    mu *= QPoly(std::vector<BigRational>{BigRational(-zi), BigRational(1)});
    prod *= zi * zi + 4;
  }
  DiscIdentityResult r;
  r.lhs = discriminant(mu_tilde);
  BigRational dm = discriminant(mu);
  r.rhs = prod * dm * dm;
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace rcf
