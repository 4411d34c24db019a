#include "rcflab/qseries/builders.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "rcflab/errors.hpp"

namespace rcf::qs {

namespace {

using Q = BigRational;

QSeries one(const Q& order) { return QSeries(Q(1), order); }

// Repeats fn with a growing working order until the result is known modulo
// q^order.
template <class S>
S adaptive(const Q& order, const Q& slack, const std::function<S(const Q&)>& fn) {
  Q work = order + slack;
  for (int attempt = 0; attempt < 8; ++attempt) {
    S r = fn(work);
    if (!r.order() || *r.order() >= order) return r.truncated(order);
    work += order - *r.order() + 1;
  }
  throw InternalError("working order did not converge");
}

QSeries poly_eval(const std::vector<long>& coeffs_desc, const QSeries& x) {
  QSeries r;
  for (long c : coeffs_desc) {
    r = r * x;
    if (c != 0) r = r + QSeries(Q(c));
  }
  return r;
}

long isqrt_ceil(const Q& x) {
  double d = std::sqrt(std::max(0.0, x.get_d()));
  return static_cast<long>(std::ceil(d)) + 2;
}

}  // namespace

QSeries qpoch(long c, const Q& e, const Q& step, const Q& order, long power) {
  if (sgn(e) <= 0 || sgn(step) <= 0) throw DomainError("q-Pochhammer exponents must be positive");
  QSeries s = one(order);
  Q k(-c);
  for (Q m = e; m < order; m += step) {
    for (long t = 0; t < std::labs(power); ++t)
      s = power > 0 ? s.mul_binomial(k, m) : s.div_binomial(k, m);
  }
  return s;
}

QSeries phi(const Q& order) {
  std::vector<std::pair<Q, Q>> t;
  long m = isqrt_ceil(order);
  for (long n = -m; n <= m; ++n)
    if (Q(n * n) < order) t.emplace_back(Q(n * n), Q(1));
  return from_terms(t, order);
}

QSeries psi(const Q& order) {
  std::vector<std::pair<Q, Q>> t;
  for (long n = 0; Q(n * (n + 1) / 2) < order; ++n) t.emplace_back(Q(n * (n + 1) / 2), Q(1));
  return from_terms(t, order);
}

QSeries fminus(const Q& order) { return qpoch(1, 1, 1, order); }

QSeries pentagonal(const Q& order) {
  std::vector<std::pair<Q, Q>> t;
  long m = isqrt_ceil(order);
  for (long n = -m; n <= m; ++n) {
    Q e(n * (3 * n - 1) / 2);
    if (e < order) t.emplace_back(e, Q(n % 2 == 0 ? 1 : -1));
  }
  return from_terms(t, order);
}

QSeries chi(const Q& order) { return qpoch(-1, 1, 2, order); }

QSeries ramanujan_f(long ca, const Q& ea, long cb, const Q& eb, const Q& order) {
  if (sgn(ea) <= 0 || sgn(eb) <= 0) throw DomainError("f(a,b) needs positive exponents");
  std::vector<std::pair<Q, Q>> t;
  auto term = [&](long n) {
    long ta = n * (n + 1) / 2, tb = n * (n - 1) / 2;
    Q e = ea * ta + eb * tb;
    long sign = 1;
    if (ca < 0 && (ta % 2 != 0)) sign = -sign;
    if (cb < 0 && (tb % 2 != 0)) sign = -sign;
    return std::make_pair(e, Q(sign));
  };
  for (long n = 0;; ++n) {
    auto [e, c] = term(n);
    if (e >= order) break;
    t.emplace_back(e, c);
  }
  for (long n = -1;; --n) {
    auto [e, c] = term(n);
    if (e >= order) break;
    t.emplace_back(e, c);
  }
  return from_terms(t, order);
}

QSeries eta_quotient(const std::vector<EtaFactor>& spec, const Q& order) {
  Q pre = 0;
  for (const auto& f : spec) {
    if (sgn(f.k) <= 0) throw DomainError("eta quotient needs positive arguments");
    pre += f.k * f.e / 24;
  }
  Q rel = order - pre;
  QSeries s = one(rel);
  for (const auto& f : spec)
    if (f.e != 0) s = s * qpoch(1, f.k, f.k, rel, f.e);
  return s.shifted(pre);
}

int kronecker8(long n) {
  switch (((n % 8) + 8) % 8) {
    case 1:
    case 7:
      return 1;
    case 3:
    case 5:
      return -1;
    default:
      return 0;
  }
}

namespace {

QSeries v_from(const Q& order, const std::function<int(long)>& chi_n) {
  Q rel = order - rat(1, 2);
  QSeries s = one(rel);
  for (long n = 1; Q(n) < rel; ++n) {
    int k = chi_n(n);
    if (k > 0) s = s.mul_binomial(Q(-1), Q(n));
    if (k < 0) s = s.div_binomial(Q(-1), Q(n));
  }
  return s.shifted(rat(1, 2));
}

}  // namespace

QSeries v(const Q& order) { return v_from(order, kronecker8); }

QSeries v_kronecker2(const Q& order) {
  return v_from(order, [](long n) { return mpz_si_kronecker(2, BigInt(n).get_mpz_t()); });
}

QSeries v_cf(const Q& order) {
  Q rel = order - rat(1, 2);
  long depth = series_detail::ceil_long(rel / 2) + 1;
  QSeries t = QSeries::big_o(Q(2 * depth));
  for (long k = depth - 1; k >= 1; --k) {
    QSeries den = QSeries(Q(1)) + QSeries::monomial(Q(1), Q(2 * k + 1)) + t;
    t = den.inverse().shifted(Q(2 * k));
  }
  QSeries den = QSeries(Q(1)) + QSeries::monomial(Q(1), Q(1)) + t;
  return den.inverse().shifted(rat(1, 2)).truncated(order);
}

namespace {

// prod (1+q^n)^{(-1)^n}
QSeries u_product(const Q& rel) {
  QSeries s = one(rel);
  for (long n = 1; Q(n) < rel; ++n)
    s = n % 2 == 0 ? s.mul_binomial(Q(1), Q(n)) : s.div_binomial(Q(1), Q(n));
  return s;
}

}  // namespace

CSeries u(const Q& order) {
  return to_cyclo(u_product(order - rat(1, 8))).shifted(rat(1, 8)).scaled(Cyclo8::sqrt2());
}

QSeries u2(const Q& order) {
  QSeries r = u_product(order - rat(1, 4));
  return (r * r).shifted(rat(1, 4)).scaled(Q(2));
}

QSeries u4(const Q& order) {
  QSeries r = u_product(order - rat(1, 2));
  QSeries r2 = r * r;
  return (r2 * r2).shifted(rat(1, 2)).scaled(Q(4));
}

QSeries p(const Q& order) {
  Q rel = order - rat(1, 16);
  QSeries s = one(rel);
  for (long n = 1;; ++n) {
    Q top = rat(n, 2), bot = rat(n, 2) - rat(1, 4);
    if (bot >= rel) break;
    if (top < rel) s = s.mul_binomial(Q(1), top).mul_binomial(Q(1), top);
    s = s.div_binomial(Q(1), bot).div_binomial(Q(1), bot);
  }
  return s.shifted(rat(1, 16)).scaled(Q(2));
}

QSeries b(const Q& order) {
  QSeries s = one(order);
  for (long n = 1;; ++n) {
    Q e = rat(n, 2) - rat(1, 4);
    if (e >= order) break;
    s = s.mul_binomial(Q(-1), e).mul_binomial(Q(-1), e);
    s = s.div_binomial(Q(1), e).div_binomial(Q(1), e);
  }
  return s.scaled(Q(2));
}

namespace {

QSeries half_odd_product(long c, const Q& rel) {
  QSeries s = one(rel);
  for (long n = 1; Q(n) - rat(1, 2) < rel; ++n) {
    Q e = Q(n) - rat(1, 2);
    s = s.mul_binomial(Q(c), e).mul_binomial(Q(c), e);
  }
  return s;
}

}  // namespace

QSeries weber_f_sq(const Q& order) {
  return half_odd_product(1, order + rat(1, 24)).shifted(rat(-1, 24));
}

QSeries weber_f1_sq(const Q& order) {
  return half_odd_product(-1, order + rat(1, 24)).shifted(rat(-1, 24));
}

QSeries weber_f2_sq(const Q& order) {
  Q rel = order - rat(1, 12);
  QSeries s = one(rel);
  for (long n = 1; Q(n) < rel; ++n) s = s.mul_binomial(Q(1), Q(n)).mul_binomial(Q(1), Q(n));
  return s.shifted(rat(1, 12)).scaled(Q(2));
}

CSeries alpha(const Q& order) {
  QSeries r = eta_quotient({{rat(1, 4), 2}, {Q(1), -2}}, order);
  return to_cyclo(r).scaled(Cyclo8::zeta(-1));
}

QSeries alpha4(const Q& order) { return -eta_quotient({{rat(1, 4), 8}, {Q(1), -8}}, order); }

QSeries j(const Q& order) {
  return adaptive<QSeries>(order, Q(2), [](const Q& w) {
    QSeries x = alpha4(w);
    QSeries num = poly_eval({1, -16, 16}, x).pow(3);
    QSeries den = x * poly_eval({1, -16}, x);
    return num * den.inverse();
  });
}

QSeries j_eisenstein(const Q& order) {
  return adaptive<QSeries>(order, Q(3), [](const Q& w) {
    long n = std::max(1L, series_detail::ceil_long(w));
    std::vector<Q> e4(static_cast<std::size_t>(n), Q(0));
    e4[0] = 1;
    for (long m = 1; m < n; ++m) {
      BigInt s3 = 0;
      for (long d = 1; d <= m; ++d)
        if (m % d == 0) s3 += BigInt(d) * d * d;
      e4[static_cast<std::size_t>(m)] = Q(240 * s3);
    }
    QSeries E4 = QSeries::from_coeffs(0, 1, std::move(e4), w);
    QSeries delta = qpoch(1, 1, 1, w, 24).shifted(1);
    return E4.pow(3) * delta.inverse();
  });
}

Cyclo8 unit_root(const Q& r) {
  Q k = r * 8;
  if (k.get_den() != 1) throw DomainError("e(" + r.get_str() + ") is not an 8th root of unity");
  return Cyclo8::zeta(series_detail::to_long(k.get_num()));
}

ThetaSeries theta(const Q& eps, const Q& epsp, const Q& order) {
  if (Q(epsp * 4).get_den() != 1) throw DomainError("theta characteristic eps' must lie in Z/4");
  std::vector<std::pair<Q, Cyclo8>> t;
  long m = isqrt_ceil(Q(2 * order)) + series_detail::ceil_long(abs(eps));
  for (long n = -m; n <= m; ++n) {
    Q x = Q(n) + eps / 2;
    Q e = x * x / 2;
    if (e < order) t.emplace_back(e, unit_root(Q(n) * epsp / 2));
  }
  return {eps * epsp / 4, from_terms(t, order)};
}

ThetaSeries theta_product(const Q& eps, const Q& epsp, const Q& order) {
  if (abs(eps) > 1) throw DomainError("product form needs |eps| <= 1");
  Cyclo8 wp = unit_root(epsp / 2), wm = unit_root(-epsp / 2);
  Q pre = eps * eps / 8;
  Q rel = order - pre;
  CSeries s = CSeries(Cyclo8(1), rel);
  for (long n = 1;; ++n) {
    Q e1 = Q(n) - (1 + eps) / 2, e2 = Q(n) - (1 - eps) / 2;
    if (Q(n) >= rel && e1 >= rel && e2 >= rel) break;
    if (Q(n) < rel) s = s.mul_binomial(Cyclo8(-1), Q(n));
    for (auto [e, w] : {std::pair{e1, wm}, std::pair{e2, wp}}) {
      if (e >= rel) continue;
      if (sgn(e) == 0)
        s = s.scaled(Cyclo8(1) + w);
      else
        s = s.mul_binomial(w, e);
    }
  }
  return {eps * epsp / 4, s.shifted(pre)};
}

namespace {

std::vector<Q> parse_args(const std::string& inner, char sep) {
  std::vector<Q> out;
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t end = inner.find(sep, start);
    if (end == std::string::npos) end = inner.size();
    out.push_back(parse_rational(inner.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

}  // namespace

std::vector<std::string> builder_names() {
  return {"alpha", "alpha4", "b",  "chi", "eta_quotient(k:e,...)", "fminus", "j",
          "p",     "phi",    "psi", "theta(eps,eps')", "u", "u2", "u4", "v"};
}

CSeries build(const std::string& name, const Q& order) {
  static const std::map<std::string, std::function<QSeries(const Q&)>> rational = {
      {"phi", phi}, {"psi", psi}, {"fminus", fminus}, {"chi", chi}, {"v", v},
      {"u2", u2},   {"u4", u4},   {"p", p},           {"b", b},     {"alpha4", alpha4},
      {"j", j}};
  if (auto it = rational.find(name); it != rational.end()) return to_cyclo(it->second(order));
  if (name == "u") return u(order);
  if (name == "alpha") return alpha(order);
  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    std::string head = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    if (head == "theta") {
      auto args = parse_args(inner, ',');
      if (args.size() != 2) throw DomainError("theta needs two characteristics");
      ThetaSeries t = theta(args[0], args[1], order);
      return t.series.scaled(unit_root(t.phase));
    }
    if (head == "eta_quotient") {
      std::vector<EtaFactor> spec;
      std::size_t start = 0;
      while (start < inner.size()) {
        std::size_t end = inner.find(',', start);
        if (end == std::string::npos) end = inner.size();
        auto kv = parse_args(inner.substr(start, end - start), ':');
        if (kv.size() != 2 || kv[1].get_den() != 1)
          throw DomainError("eta_quotient factors are k:e with integer e");
        spec.push_back({kv[0], kv[1].get_num().get_si()});
        start = end + 1;
      }
      return to_cyclo(eta_quotient(spec, order));
    }
  }
  throw DomainError("unknown series: " + name);
}

}  // namespace rcf::qs
