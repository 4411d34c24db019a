#include "rcflab/cmnumeric/modular.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "rcflab/errors.hpp"

namespace rcf::cm {

namespace {

constexpr long kGuard = 48;
constexpr double kLog2e = 1.4426950408889634;

Complex widened(const Complex& z, long wp) {
  return Complex(z.re().with_prec(wp), z.im().with_prec(wp));
}

// 2^l as a Real, rounded up to the next integer exponent.
Real pow2_up(double l, long prec) {
  if (std::isinf(l) && l < 0) return Real(prec);
  return Real::pow2(static_cast<long>(std::ceil(l)), prec);
}

Real rounding(const Complex& z) { return z.abs() * Real::pow2(-static_cast<long>(z.prec()) + 4, 64); }

double log2_sum(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double m = std::max(a, b);
  return m + std::log2(std::exp2(a - m) + std::exp2(b - m));
}

}  // namespace

Value operator+(const Value& a, const Value& b) {
  Complex z = a.z + b.z;
  return {z, a.err + b.err + rounding(z)};
}

Value operator-(const Value& a, const Value& b) {
  Complex z = a.z - b.z;
  return {z, a.err + b.err + rounding(z)};
}

Value operator*(const Value& a, const Value& b) {
  Complex z = a.z * b.z;
  return {z, a.z.abs() * b.err + b.z.abs() * a.err + a.err * b.err + rounding(z)};
}

Value operator/(const Value& a, const Value& b) {
  const Real bb = b.z.abs();
  if (bb <= b.err) throw DomainError("division by a value indistinguishable from zero");
  Complex z = a.z / b.z;
  return {z, (a.err + z.abs() * b.err) / (bb - b.err) + rounding(z)};
}

Value operator*(const Value& a, const Complex& c) {
  Complex z = a.z * c;
  return {z, a.err * c.abs() + rounding(z)};
}

Value operator+(const Value& a, long c) {
  Complex z = a.z + c;
  return {z, a.err + rounding(z)};
}

Value pow(const Value& a, long n) {
  if (n < 0) return exact(Complex(1L, a.z.prec())) / pow(a, -n);
  Value r = exact(Complex(1L, a.z.prec()));
  Value base = a;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Value exact(const Complex& z) { return {z, Real(z.prec())}; }

Complex e(const Complex& z) {
  const Real m = exp(-Real::pi(z.prec()) * z.im() * 2);
  return Complex::e(z.re()) * m;
}

void check_upper_half_plane(const Complex& tau) {
  if (tau.im().sign() <= 0) throw DomainError("tau must lie in the upper half-plane");
}

Value eval_product(const Complex& prefactor, const BigRational& shift,
                   const std::vector<ProductFactor>& factors, const Complex& tau, long prec) {
  check_upper_half_plane(tau);
  const long wp = prec + kGuard;
  const Complex t = widened(tau, wp);
  const double y = tau.im().to_double();
  const double target = -static_cast<double>(prec + 24);

  Complex acc = widened(prefactor, wp);
  if (sgn(shift) != 0) acc *= e(t * Complex(Real(shift, wp)));
  double tail = -INFINITY;
  long ops = 0;
  for (const ProductFactor& f : factors) {
    if (sgn(f.step) <= 0) throw DomainError("product step must be positive");
    if (f.power == 0) continue;
    const double lr = -2 * M_PI * y * f.step.get_d() * kLog2e;
    const double lx = f.c.abs().log2_abs() - 2 * M_PI * y * f.offset.get_d() * kLog2e;
    const double absr = std::exp2(lr);
    if (absr > 1 - 1e-9) throw DomainError("tau is too close to the real axis");
    const double l1mr = std::log2(1 - absr);
    const double lp = std::log2(static_cast<double>(std::labs(f.power)));
    // tail of log(prod) is at most 2 |power| sum_{n >= N} |x_n|
    const double need = (target - lx - 1 - lp + l1mr) / lr;
    const long N = std::max(1L, static_cast<long>(std::ceil(need)));
    tail = log2_sum(tail, 1 + lp + lx + static_cast<double>(N) * lr - l1mr);

    Complex x = widened(f.c, wp);
    if (sgn(f.offset) != 0) x *= e(t * Complex(Real(f.offset, wp)));
    const Complex r = e(t * Complex(Real(f.step, wp)));
    Complex P(1L, wp);
    for (long n = 0; n < N; ++n) {
      P *= x + 1;
      x *= r;
    }
    ops += N + 64;
    acc *= f.power > 0 ? P.pow(f.power) : P.inverse().pow(-f.power);
  }
  // |prod_tail - 1| <= 2 L for L <= 1/2
  Real rel = pow2_up(tail + 1.1, 64) + Real(ops, 64) * Real::pow2(-wp + 4, 64);
  return {acc, acc.abs() * rel};
}

namespace {

Complex real_c(long v, long prec) { return Complex(v, prec + kGuard); }

Complex sqrt2_c(long prec) { return Complex(sqrt(Real(2L, prec + kGuard))); }

ProductFactor pf(long c, const BigRational& off, const BigRational& step, long power, long prec) {
  return {real_c(c, prec), off, step, power};
}

}  // namespace

Value eta(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), rat(1, 24), {pf(-1, 1, 1, 1, prec)}, tau, prec);
}

Value fminus(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), 0, {pf(-1, 1, 1, 1, prec)}, tau, prec);
}

Value phi(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), 0, {pf(1, 1, 2, 2, prec), pf(-1, 2, 2, 1, prec)}, tau,
                      prec);
}

Value psi(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), 0, {pf(-1, 2, 2, 1, prec), pf(-1, 1, 2, -1, prec)}, tau,
                      prec);
}

Value chi(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), 0, {pf(1, 1, 2, 1, prec)}, tau, prec);
}

Value v(const Complex& tau, long prec) {
  std::vector<ProductFactor> fs;
  for (long r : {1, 3, 5, 7}) fs.push_back(pf(-1, r, 8, (r == 1 || r == 7) ? 1 : -1, prec));
  return eval_product(real_c(1, prec), rat(1, 2), fs, tau, prec);
}

Value u(const Complex& tau, long prec) {
  return eval_product(sqrt2_c(prec), rat(1, 8), {pf(1, 2, 2, 1, prec), pf(1, 1, 2, -1, prec)},
                      tau, prec);
}

Value p(const Complex& tau, long prec) {
  return eval_product(real_c(2, prec), rat(1, 16),
                      {pf(1, rat(1, 2), rat(1, 2), 2, prec), pf(1, rat(1, 4), rat(1, 2), -2, prec)},
                      tau, prec);
}

Value b(const Complex& tau, long prec) {
  return eval_product(real_c(2, prec), 0,
                      {pf(-1, rat(1, 4), rat(1, 2), 2, prec), pf(1, rat(1, 4), rat(1, 2), -2, prec)},
                      tau, prec);
}

Value weber_f(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), rat(-1, 48), {pf(1, rat(1, 2), 1, 1, prec)}, tau, prec);
}

Value weber_f1(const Complex& tau, long prec) {
  return eval_product(real_c(1, prec), rat(-1, 48), {pf(-1, rat(1, 2), 1, 1, prec)}, tau, prec);
}

Value weber_f2(const Complex& tau, long prec) {
  return eval_product(sqrt2_c(prec), rat(1, 24), {pf(1, 1, 1, 1, prec)}, tau, prec);
}

Value alpha4(const Complex& tau, long prec) {
  return eval_product(real_c(-1, prec), rat(-1, 4),
                      {pf(-1, rat(1, 4), rat(1, 4), 8, prec), pf(-1, 1, 1, -8, prec)}, tau, prec);
}

Value j(const Complex& tau, long prec) {
  const Value F = eval_product(real_c(1, prec), rat(-1, 2), {pf(1, rat(1, 2), 1, 24, prec)}, tau,
                               prec);
  return pow(F + (-16), 3) / F;
}

Value theta(const BigRational& eps, const BigRational& epsp, const Complex& tau, long prec) {
  check_upper_half_plane(tau);
  const long wp = prec + kGuard;
  const Complex t = widened(tau, wp);
  const double y = tau.im().to_double();
  const double ae = std::fabs(eps.get_d()) / 2;
  const double c = M_PI * y * kLog2e;
  const double l1 = std::log2(-std::expm1(-M_PI * y));
  const double target = static_cast<double>(prec + 24);
  const long M = static_cast<long>(std::ceil(std::sqrt((target + 1 - l1) / c) + ae)) + 1;
  // terms with |n| > M are dominated by a geometric series of ratio e^(-pi y)
  const double ltail = 1 - c * (M + 1 - ae) * (M + 1 - ae) - l1;

  Complex sum(wp);
  for (long n = -M; n <= M; ++n) {
    const BigRational x = BigRational(n) + eps / 2;
    const BigRational ex = x * x / 2;
    sum += e(t * Complex(Real(ex, wp))) * Complex::e(epsp * x / 2, wp);
  }
  return {sum, pow2_up(ltail, 64) + Real(2 * M + 2, 64) * Real::pow2(-wp + 4, 64)};
}

std::vector<std::string> eval_names() {
  return {"alpha4", "b", "chi", "eta", "fminus", "j", "p", "phi", "psi", "theta(eps,eps')",
          "u", "v", "weber_f", "weber_f1", "weber_f2"};
}

Value eval(const std::string& name, const Complex& tau, long prec) {
  using F = std::function<Value(const Complex&, long)>;
  static const std::map<std::string, F> table = {
      {"alpha4", alpha4}, {"b", b},     {"chi", chi},         {"eta", eta},
      {"fminus", fminus}, {"j", j},     {"p", p},             {"phi", phi},
      {"psi", psi},       {"u", u},     {"v", v},             {"weber_f", weber_f},
      {"weber_f1", weber_f1}, {"weber_f2", weber_f2}};
  if (auto it = table.find(name); it != table.end()) return it->second(tau, prec);
  if (name.rfind("theta(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(6, name.size() - 7);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw DomainError("theta needs two characteristics");
    return theta(parse_rational(inner.substr(0, comma)), parse_rational(inner.substr(comma + 1)),
                 tau, prec);
  }
  throw DomainError("unknown function: " + name);
}

Complex to_complex(const Cyclo8& c, long prec) {
  Complex out(prec);
  for (int k = 0; k < 4; ++k)
    if (sgn(c[k]) != 0) out += Complex::e(rat(k, 8), prec) * Real(c[k], prec);
  return out;
}

Complex eval_series(const QSeries& s, const Complex& tau, long prec) {
  Complex out(prec);
  for (const auto& [ex, c] : s.terms()) out += e(tau * Complex(Real(ex, prec))) * Real(c, prec);
  return out;
}

Complex eval_series(const CSeries& s, const Complex& tau, long prec) {
  Complex out(prec);
  for (const auto& [ex, c] : s.terms()) out += e(tau * Complex(Real(ex, prec))) * to_complex(c, prec);
  return out;
}

}  // namespace rcf::cm
