#include "rcflab/cmnumeric/checks.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "rcflab/errors.hpp"
#include "rcflab/exactalg/periodic.hpp"
#include "rcflab/cmnumeric/recognize.hpp"

namespace rcf::cm {

namespace {

constexpr long kArgGuard = 64;

Complex scalar(const BigRational& r, long prec) { return Complex(Real(r, prec)); }

Value vsqrt(const Value& a) {
  Complex s = sqrt(a.z);
  const Real m = s.abs();
  if (m.is_zero()) throw DomainError("square root at zero");
  return {s, a.err / m};
}

Value f_curve(const Value& x, const Value& y) {
  const Value x2 = x * x;
  return x2 * y + x2 + y * y - y;
}

CheckReport make_report(std::string id, const Value& diff, long prec, nlohmann::json params) {
  CheckReport r{std::move(id), diff.z.abs(), default_tolerance(prec), diff.err, false,
                std::move(params)};
  r.passed = r.residual < r.tolerance && r.eval_error < r.tolerance;
  return r;
}

Real sigma(long prec) { return sqrt(Real(2L, prec)) - 1; }

}  // namespace

Complex CMParams::w(long prec) const {
  return Complex(Real(a, prec) / 2, sqrt(Real(d, prec)) / 2);
}

long class_number(long d) {
  if (d <= 0 || (d % 4 != 0 && d % 4 != 3)) throw DomainError("-d must be a discriminant");
  long h = 0;
  for (long a = 1; 3 * a * a <= d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if ((b * b + d) % (4 * a) != 0) continue;
      const long c = (b * b + d) / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

long conductor(long d) {
  long f = 1;
  for (long p = 2; p * p <= d; ++p)
    while (d % (p * p) == 0 && ((d / (p * p)) % 4 == 3 || (d / (p * p)) % 4 == 0)) {
      d /= p * p;
      f *= p;
    }
  return f;
}

int c_parity_direct(long a, long d) {
  const long k = (a * a + d) / 32;
  return static_cast<int>(((1 - k) % 2 + 2) % 2);
}

int c_parity_from_cbar(long a, long d) {
  const long cbar = ((a * (2 - (a * a + d) / 16)) % 4 + 4) % 4;
  if (cbar % 2 != 0) throw InternalError("c-bar is odd although 32 divides a^2 + d");
  return static_cast<int>(cbar / 2);
}

CMParams derive_cm_params(long d) {
  if (d <= 0 || d % 8 != 7) throw DomainError("need d > 0 with -d = 1 mod 8");
  CMParams p;
  p.d = d;
  p.f = conductor(d);
  p.h = class_number(d);
  for (long a = 1; a < 64 * d; a += 2) {
    if ((a * a + d) % 32 != 0) continue;
    if (std::gcd((a * a + d) / 4, p.f) != 1) continue;
    p.a = a;
    break;
  }
  if (p.a == 0) throw InternalError("no admissible a found");
  p.c_parity = c_parity_direct(p.a, d);
  if (p.c_parity != c_parity_from_cbar(p.a, d))
    throw ConsistencyError("the two congruences for c disagree in parity");
  return p;
}

Real default_tolerance(long prec) { return Real::pow2(-(133 * prec + 255) / 256, 64); }

CheckReport check_v_inversion(const Complex& tau, long prec, bool wrong_map) {
  const long ap = prec + kArgGuard;
  const Complex t = Complex(tau.re().with_prec(ap), tau.im().with_prec(ap));
  const Value lhs = v(-1L / t, prec);
  const Value x = v(t * scalar(rat(1, 4), ap), prec);
  const Complex s(sigma(ap));
  const Value rhs = wrong_map ? (x * s + 1) / (x - exact(s)) : (exact(s) - x) / (x * s + 1);
  return make_report(wrong_map ? "v-inversion-wrong-map" : "v-inversion", lhs - rhs, prec,
                     {{"tau", t.str(30)}});
}

CheckReport check_v2_inversion(const Complex& tau, long prec) {
  const long ap = prec + kArgGuard;
  const Complex t = Complex(tau.re().with_prec(ap), tau.im().with_prec(ap));
  const Value a = v(-1L / (t * 8L), prec);
  const Value x = v(t, prec);
  const Complex s2(sigma(ap) * sigma(ap));
  const Value x2 = x * x;
  const Value rhs = (x2 - exact(s2)) / (x2 * s2 + (-1));
  return make_report("v2-inversion", a * a - rhs, prec, {{"tau", t.str(30)}});
}

CheckReport check_theta_shift(const BigRational& eps, const BigRational& epsp, const Complex& tau,
                              long prec) {
  const long ap = prec + kArgGuard;
  const Complex t = Complex(tau.re().with_prec(ap), tau.im().with_prec(ap));
  const Value lhs = theta(eps, epsp, t + 1, prec);
  const Value rhs = theta(eps, eps + epsp + 1, t, prec) *
                    Complex::e(-eps / 4 * (1 + eps / 2), ap);
  return make_report("theta-shift", lhs - rhs, prec,
                     {{"tau", t.str(30)}, {"eps", eps.get_str()}, {"eps'", epsp.get_str()}});
}

CheckReport check_theta_inversion(const BigRational& eps, const BigRational& epsp,
                                  const Complex& tau, long prec) {
  const long ap = prec + kArgGuard;
  const Complex t = Complex(tau.re().with_prec(ap), tau.im().with_prec(ap));
  const Value lhs = theta(eps, epsp, -1L / t, prec);
  const Complex k = Complex::e(rat(-1, 8), ap) * sqrt(t) * Complex::e(eps * epsp / 4, ap);
  const Value rhs = theta(epsp, -eps, t, prec) * k;
  return make_report("theta-inversion", lhs - rhs, prec,
                     {{"tau", t.str(30)}, {"eps", eps.get_str()}, {"eps'", epsp.get_str()}});
}

std::vector<CheckReport> check_cm_suite(const CMParams& params, long prec) {
  if (prec < 192) throw DomainError("the CM suite needs at least 192 bits");
  const long ap = prec + kArgGuard;
  const Complex w = params.w(ap);
  const bool odd = params.c_parity == 1;
  const long sc = odd ? -1 : 1;

  const Value V = v(w * scalar(rat(1, 8), ap), prec);
  const Value nu = v(w * scalar(rat(1, 4), ap), prec);
  const Value Y = v(-1L / w, prec);
  const Value P1 = p(w, prec);
  const Value P2 = p(w * 2L, prec);
  const Value Bw = b(w, prec);

  // i^(-a)
  static const long re_tab[4] = {1, 0, -1, 0}, im_tab[4] = {0, -1, 0, 1};
  const int am = static_cast<int>(params.a % 4);
  const Complex ia(Real(re_tab[am], ap), Real(im_tab[am], ap));

  const Value pi = P1 * Complex(sc, ap);
  const Value xi = Bw * (ia * scalar(rat(1, 2), ap));
  const Complex s(sigma(ap));
  const Value one = exact(Complex(1L, ap));

  nlohmann::json base = to_json(params);
  std::vector<CheckReport> out;

  // (-1)^c 2/pi = 1/v(w/8) - v(w/8)
  out.push_back(make_report("v-pi", exact(Complex(2 * sc, ap)) / pi - (one / V - V), prec, base));

  // exactly one of +-(1 +- sqrt(1 + pi^2))/pi equals v(w/8)
  {
    const Value S = vsqrt(pi * pi + 1);
    std::vector<std::pair<Value, std::pair<int, int>>> cands;
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        cands.push_back({(one + S * Complex(s2, ap)) * Complex(s1, ap) / pi - V, {s1, s2}});
    std::size_t best = 0;
    int matches = 0;
    const Real tol = default_tolerance(prec);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (cands[k].first.z.abs() < cands[best].first.z.abs()) best = k;
      if (cands[k].first.z.abs() < tol) ++matches;
    }
    nlohmann::json pj = base;
    pj["outer_sign"] = cands[best].second.first;
    pj["inner_sign"] = cands[best].second.second;
    pj["matching_branches"] = matches;
    CheckReport r = make_report("v-branch", cands[best].first, prec, pj);
    r.passed = r.passed && matches == 1;
    out.push_back(std::move(r));
  }

  // p(2w) = (1 + xi^2)/pi^2
  out.push_back(make_report("p2w-xi-pi", P2 - (one + xi * xi) / (pi * pi), prec, base));

  // (v(w/8), v(-1/w)) on X^2 + Y^2 = sigma^2 (1 + X^2 Y^2)
  {
    const Complex s2 = s * s;
    const Value X2 = V * V, Y2 = Y * Y;
    out.push_back(make_report("curve-c2", X2 + Y2 - (one + X2 * Y2) * s2, prec, base));
  }

  // the tau_2 image of v(w/8) from v(w/4), by parity
  const Value Vt = odd ? (one - nu) / (one + nu) : (nu - one) / (nu + one);
  {
    const Complex sgs = s * Complex(sc, ap);
    const Value rhs = (Vt + exact(sgs)) / (Vt * s - exact(Complex(sc, ap)));
    nlohmann::json pj = base;
    pj["tau2_image"] = odd ? "(1 - v(w/4))/(1 + v(w/4))" : "(v(w/4) - 1)/(v(w/4) + 1)";
    out.push_back(make_report("frobenius-image", Y - rhs, prec, pj));
  }

  {
    nlohmann::json pj = base;
    pj["branch"] = odd ? "f(v, v^tau2)" : "f(-v, -v^tau2)";
    const Value r = odd ? f_curve(V, Vt) : f_curve(V * Complex(-1L, ap), Vt * Complex(-1L, ap));
    out.push_back(make_report("f-orbit", r, prec, pj));
  }

  {
    const Value x2 = xi * xi, p2 = pi * pi;
    out.push_back(make_report("xi4-pi4", x2 * x2 + p2 * p2 - one, prec, base));
  }
  return out;
}

const ZPoly& cached_periodic_poly(int n) {
  static std::mutex mu;
  static std::map<int, ZPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, periodic_poly(n)).first;
  return it->second;
}

Real periodic_residual(const ZPoly& rn, const Complex& x) {
  const long prec = x.prec();
  Real height(prec);
  const Real ax = max(x.abs(), Real(1L, prec));
  Real pw(1L, prec);
  for (int k = 0; k <= rn.degree(); ++k) {
    height += abs(Real(rn.coeff(k), prec)) * pw;
    pw *= ax;
  }
  return eval_poly(rn, x).abs() / height;
}

std::optional<int> estimate_minimal_period_at(const Complex& x, int n_max, long prec) {
  const Real tol = default_tolerance(prec);
  for (int n = 1; n <= n_max; ++n)
    if (periodic_residual(cached_periodic_poly(n), x) < tol) return n;
  return std::nullopt;
}

std::optional<int> estimate_minimal_period(const CMParams& params, int n_max, long prec) {
  const long ap = prec + kArgGuard;
  const Complex w = params.w(ap);
  const Value V = v(w * scalar(rat(1, 8), ap), prec);
  const Complex eta = params.c_parity == 1 ? V.z : -V.z;
  return estimate_minimal_period_at(eta, n_max, prec);
}

nlohmann::json to_json(const CMParams& p) {
  return {{"d", p.d}, {"a", p.a}, {"f", p.f}, {"c_parity", p.c_parity}};
}

CMParams cm_params_from_json(const nlohmann::json& j) {
  CMParams p;
  p.d = j.at("d").get<long>();
  p.a = j.at("a").get<long>();
  p.f = j.at("f").get<long>();
  p.c_parity = j.at("c_parity").get<int>();
  p.h = class_number(p.d);
  return p;
}

nlohmann::json to_json(const CheckReport& r) {
  return {{"id", r.id},
          {"residual", r.residual.str(6)},
          {"tolerance", r.tolerance.str(6)},
          {"eval_error", r.eval_error.str(6)},
          {"passed", r.passed},
          {"params", r.params}};
}

}  // namespace rcf::cm
