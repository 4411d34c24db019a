#include "rcflab/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rcflab/cmnumeric.hpp"
#include "rcflab/errors.hpp"
#include "rcflab/exactalg/identities.hpp"
#include "rcflab/exactalg/periodic.hpp"
#include "rcflab/exactalg/serialize.hpp"
#include "rcflab/padic2.hpp"
#include "rcflab/qseries/catalog.hpp"
#include "rcflab/qseries/serialize.hpp"

#ifndef RCFLAB_DEFAULT_DATA
#define RCFLAB_DEFAULT_DATA "data"
#endif
#ifndef RCFLAB_SOURCE_DATA
#define RCFLAB_SOURCE_DATA "data"
#endif

namespace rcflab_cli {

using nlohmann::json;

namespace {

// Runs fn over items with at most jobs in flight; results keep the item order.
template <class T, class F>
auto run_parallel(const std::vector<T>& items, int jobs, F fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  const std::size_t step = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t i = 0; i < items.size(); i += step) {
    std::vector<std::future<R>> batch;
    for (std::size_t k = i; k < std::min(items.size(), i + step); ++k)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&fn, &items, k] { return fn(items[k]); }));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

void append(std::vector<Record>& dst, std::vector<Record> src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

void sort_records(Report& r) {
  std::stable_sort(r.records.begin(), r.records.end(),
                   [](const Record& a, const Record& b) { return a.id < b.id; });
}

std::string sci(const rcf::cm::Real& x) { return x.str(3); }

rcf::BigRational parse_order(const std::string& s) {
  rcf::BigRational q;
  try {
    q = rcf::parse_rational(s);
  } catch (const rcf::DomainError&) {
    throw UsageError("--order must be a rational number, got '" + s + "'");
  }
  if (q <= 0) throw UsageError("--order must be positive");
  return q;
}

std::vector<long> discriminants(const RunConfig& cfg) {
  std::vector<long> d = cfg.d.empty() ? std::vector<long>{7} : cfg.d;
  for (long x : d)
    if (x <= 0 || x % 8 != 7) throw UsageError("--d must satisfy d > 0 and d = 7 mod 8");
  return d;
}

std::string d_prefix(long d) { return "d" + std::to_string(d) + "/"; }

}  // namespace

bool Report::passed() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.passed; });
}

std::string golden_path(const std::string& override_path) {
  std::string p = override_path;
  if (p.empty()) {
    if (const char* env = std::getenv("RCF_LAB_DATA")) p = env;
  }
  if (p.empty()) {
    namespace fs = std::filesystem;
    std::vector<fs::path> candidates{RCFLAB_DEFAULT_DATA};
    std::error_code ec;
    const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) candidates.push_back(exe.parent_path().parent_path() / "share" / "rcflab");
    candidates.emplace_back(RCFLAB_SOURCE_DATA);
    p = candidates.back().string();
    for (const auto& c : candidates)
      if (fs::exists(c / "golden.json")) {
        p = c.string();
        break;
      }
  }
  if (std::filesystem::is_directory(p)) p = (std::filesystem::path(p) / "golden.json").string();
  return p;
}

json load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("golden data not found at " + path + " (set RCF_LAB_DATA)");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("golden data at " + path + " is not valid JSON: " + e.what());
  }
}

// ---- identities

Report cmd_identities(const RunConfig& cfg) {
  const rcf::BigRational order = parse_order(cfg.order);
  const json golden = load_golden(golden_path(cfg.data_path));
  const json& loc = golden.at("identities");

  std::vector<std::string> ids = cfg.only;
  if (ids.empty())
    for (const auto& rec : rcf::qs::catalog()) ids.push_back(rec.id);
  for (const auto& id : ids) {
    try {
      rcf::qs::find_identity(id);
    } catch (const rcf::DomainError&) {
      throw UsageError("unknown identity '" + id + "'");
    }
  }

  Report rep;
  rep.records = run_parallel(ids, cfg.jobs, [&](const std::string& id) {
    std::optional<rcf::qs::Mutation> mut;
    if (cfg.fault == Fault::check && id == ids.front()) mut = rcf::qs::Mutation{0, 1};
    const rcf::qs::IdentityReport r = rcf::qs::verify_identity(id, order, mut);
    Record rec{id, r.passed, r.low_order, "", rcf::qs::to_json(r)};
    const std::string where = loc.contains(id) ? loc[id].at("location").get<std::string>() : "";
    rec.detail["location"] = where;
    if (loc.contains(id)) rec.detail["anchor"] = loc[id].at("anchor");
    rec.summary = where;
    if (r.low_order) rec.summary += " [low order: residual only checked through q^" + cfg.order + "]";
    if (!r.passed && r.first_bad_exponent)
      rec.summary += " [first nonzero residual at q^" + r.first_bad_exponent->get_str() + "]";
    return rec;
  });
  sort_records(rep);
  return rep;
}

// ---- resultants

Report cmd_resultants(const RunConfig& cfg) {
  const int n = cfg.n.value_or(4);
  if (n < 1 || n > 7) throw UsageError("--n must be in 1..7 for resultants");
  std::vector<rcf::ZPoly> R(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) R[static_cast<std::size_t>(k)] = rcf::periodic_poly(k);
  if (cfg.fault == Fault::check) {
    rcf::ZPoly& last = R[static_cast<std::size_t>(n)];
    last.set(0, last.coeff(0) + 1);
  }

  Report rep;
  json polys = json::object();
  for (int k = 1; k <= n; ++k) {
    const rcf::ZPoly& rk = R[static_cast<std::size_t>(k)];
    const std::string tag = "R" + std::to_string(k);
    polys[tag] = rcf::to_json(rk);
    const int want = (1 << (k + 1)) - 1;
    rep.records.push_back({"degree/" + tag, rk.degree() == want, false,
                           "deg " + std::to_string(rk.degree()) + ", expected " +
                               std::to_string(want),
                           {{"degree", rk.degree()}, {"expected", want}}});
    for (int m = 1; m < k; ++m) {
      if (k % m) continue;
      const bool ok = rcf::prem(rk, R[static_cast<std::size_t>(m)]).zero();
      rep.records.push_back({"divides/R" + std::to_string(m) + "|" + tag, ok, false,
                             ok ? "exact division" : "nonzero remainder", json::object()});
    }
    if (cfg.mod2) {
      const auto res = rcf::check_mod2_congruence(rk, k);
      rep.records.push_back({"mod2/" + tag, res.holds, false,
                             res.holds ? "R_n = (x^(2^n) + x)(x + 1)^(2^n - 1) mod 2"
                                       : "reduction mod 2 differs",
                             json::object()});
    }
  }
  if (cfg.check_paper) {
    const json golden = load_golden(golden_path(cfg.data_path));
    const json& printed = golden.at("periodic_polys");
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const std::string key = std::to_string(k);
      rcf::ZPoly prod(1L);
      json factors = json::array();
      for (const auto& f : printed.at(key)) {
        prod *= rcf::zpoly_from_json(f);
        factors.push_back(f);
      }
      const std::string got = rcf::canonical(R[static_cast<std::size_t>(k)]);
      const std::string want = rcf::canonical(prod);
      const bool ok = got == want;
      rep.records.push_back({"printed/R" + key, ok, false,
                             ok ? "matches the printed factorization byte for byte"
                                : "differs from the printed factorization",
                             {{"printed_factors", factors}, {"canonical", got}}});
    }
  }
  rep.extra["polynomials"] = polys;
  sort_records(rep);
  return rep;
}

// ---- padic

Report cmd_padic(const RunConfig& cfg) {
  const int n = cfg.n.value_or(3);
  const long P = cfg.precision.value_or(64);
  if (n < 1 || n > 6) throw UsageError("--n must be in 1..6 for padic");
  if (P < 16 || P > 128) throw UsageError("--precision must be in 16..128 for padic");
  const auto ctx = rcf::padic::Context::make(n, static_cast<int>(P));
  std::vector<rcf::padic::Orbit> orbits = rcf::padic::find_periodic_points(n, ctx);
  if (cfg.fault == Fault::check && !orbits.empty())
    orbits.front().front().x = orbits.front().front().x + rcf::padic::Elem::from_int(ctx, 1L << 12);

  const rcf::ZPoly& rn = rcf::cm::cached_periodic_poly(n);
  const int fixed_min = static_cast<int>(P) - rcf::padic::kSlack;
  const int rn_min = static_cast<int>(P) - 14;

  Report rep;
  std::size_t points = 0;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& orb = orbits[k];
    points += orb.size();
    bool ok = n % static_cast<int>(orb.size()) == 0;
    int worst_fixed = static_cast<int>(P), worst_rn = static_cast<int>(P);
    bool doubling = true;
    json pts = json::array();
    for (const auto& pt : orb) {
      const int vf = (rcf::padic::iterate_T(pt.x, n) - pt.x).valuation();
      const auto rc = rcf::padic::verify_against_Rn(pt.x, rn);
      const int vr = std::min(rc.sqrt_root.value_or(0), rc.graeffe);
      worst_fixed = std::min(worst_fixed, vf);
      worst_rn = std::min(worst_rn, vr);
      const auto& nv = pt.newton_valuations;
      for (std::size_t i = 1; i < nv.size(); ++i)
        if (nv[i] < std::min(2 * nv[i - 1], static_cast<int>(P))) doubling = false;
      pts.push_back({{"residue", pt.residue},
                     {"v_fixed", vf},
                     {"v_Rn_literal", rc.literal},
                     {"v_Rn_sqrt_root", rc.sqrt_root ? json(*rc.sqrt_root) : json(nullptr)},
                     {"v_Rn_graeffe", rc.graeffe},
                     {"newton_valuations", nv}});
    }
    ok = ok && worst_fixed >= fixed_min && worst_rn >= rn_min && doubling;
    std::ostringstream s;
    s << "length " << orb.size() << ", min v(T^n(x) - x) = " << worst_fixed
      << ", min v(R_n at sqrt root / Graeffe) = " << worst_rn
      << (doubling ? ", Newton doubling" : ", Newton NOT doubling");
    std::ostringstream id;
    id << "orbit/" << std::setw(2) << std::setfill('0') << k;
    rep.records.push_back({id.str(), ok, false, s.str(), {{"length", orb.size()}, {"points", pts}}});
  }
  const std::size_t want = (std::size_t{1} << n) - 2;
  rep.records.push_back({"count", points == want, false,
                         std::to_string(points) + " periodic points, expected " +
                             std::to_string(want),
                         {{"points", points}, {"orbits", orbits.size()}, {"expected", want}}});
  rep.extra["field"] = {{"m", n}, {"P", P}, {"modulus", ctx->modulus_string()}};
  rep.extra["orbits"] = rcf::padic::to_json(orbits);
  sort_records(rep);
  return rep;
}

// ---- cm

Report cmd_cm(const RunConfig& cfg) {
  const long prec = cfg.precision.value_or(256);
  if (prec < 192) throw UsageError("--precision must be at least 192 for cm");
  const std::vector<long> ds = discriminants(cfg);
  const int n_max = cfg.n.value_or(6);

  Report rep;
  json params = json::array();
  auto results = run_parallel(ds, cfg.jobs, [&](long d) {
    rcf::cm::CMParams p = rcf::cm::derive_cm_params(d);
    if (cfg.fault == Fault::check) p.a += 1;
    std::vector<Record> out;
    for (const auto& r : rcf::cm::check_cm_suite(p, prec))
      out.push_back({d_prefix(d) + r.id, r.passed, false,
                     "residual " + sci(r.residual) + ", tolerance " + sci(r.tolerance),
                     rcf::cm::to_json(r)});
    if (cfg.period) {
      const auto per = rcf::cm::estimate_minimal_period(p, n_max, std::max(prec, 512L));
      out.push_back({d_prefix(d) + "minimal-period", per.has_value(), false,
                     per ? "R_" + std::to_string(*per) + " vanishes at (-1)^(1+c) v(w/8)"
                         : "no R_n with n <= " + std::to_string(n_max) + " vanishes",
                     {{"period", per ? json(*per) : json(nullptr)}, {"n_max", n_max}}});
    }
    json pj = rcf::cm::to_json(p);
    pj["h"] = p.h;
    return std::make_pair(std::move(out), pj);
  });
  for (auto& [recs, pj] : results) {
    append(rep.records, std::move(recs));
    params.push_back(pj);
  }
  rep.extra["params"] = params;
  rep.extra["precision"] = prec;
  sort_records(rep);
  return rep;
}

// ---- minpoly

Report cmd_minpoly(const RunConfig& cfg) {
  using rcf::cm::Complex;
  using rcf::cm::Real;
  const std::vector<long> ds = discriminants(cfg);
  if (cfg.precision && *cfg.precision < 32) throw UsageError("--precision must be at least 32");

  Report rep;
  auto results = run_parallel(ds, cfg.jobs, [&](long d) {
    const rcf::cm::CMParams p = rcf::cm::derive_cm_params(d);
    const int h = static_cast<int>(p.h);
    const rcf::BigInt hb = rcf::BigInt(1) << (4 * h + 4);
    const rcf::BigInt hf = rcf::BigInt(1) << (4 * h + 8);
    long pb = cfg.precision.value_or(rcf::cm::recognition_precision(2 * h, hb));
    long pf = cfg.precision.value_or(rcf::cm::recognition_precision(4 * h, hf));

    auto pi_at = [&](long bits) {
      const Complex v = rcf::cm::p(p.w(bits + 64), bits).z;
      return p.c_parity ? -v : v;
    };
    auto v_at = [&](long bits) {
      const Complex w = p.w(bits + 64);
      Complex x = rcf::cm::v(w * Complex(Real(rcf::rat(1, 8), bits + 64)), bits).z;
      // A value that is off by 2^-80 is not algebraic of small height.
      if (cfg.fault == Fault::check) x = x + Complex(Real::pow2(-80, bits));
      return x;
    };
    const auto bd = rcf::cm::recognize_min_poly(pi_at, 2 * h, hb, pb);
    const auto fd = rcf::cm::recognize_min_poly(v_at, 4 * h, hf, pf);

    const std::string pre = d_prefix(d);
    std::vector<Record> out;
    const rcf::BigInt two_h = rcf::BigInt(1) << h;
    const bool b_ok = bd && bd->degree() == 2 * h && abs(bd->coeff(0)) == two_h;
    out.push_back({pre + "b_d", b_ok, false,
                   bd ? "degree " + std::to_string(bd->degree()) + ", constant term " +
                            bd->coeff(0).get_str()
                      : "no relation found",
                   {{"poly", bd ? rcf::to_json(*bd) : json(nullptr)},
                    {"lattice_bits", pb},
                    {"expected_degree", 2 * h}}});
    const bool f_ok = fd && fd->degree() == 4 * h;
    out.push_back({pre + "f_d", f_ok, false,
                   fd ? "degree " + std::to_string(fd->degree()) : "no relation found",
                   {{"poly", fd ? rcf::to_json(*fd) : json(nullptr)},
                    {"lattice_bits", pf},
                    {"expected_degree", 4 * h}}});
    bool built = false;
    std::string why = "needs both polynomials";
    if (bd && fd) {
      try {
        built = rcf::build_fd_from_bd(*bd, h, p.c_parity) == *fd;
        why = built ? "build_fd_from_bd(b_d) equals the recognized f_d"
                    : "build_fd_from_bd(b_d) differs from f_d";
      } catch (const rcf::ConsistencyError& e) {
        why = e.what();
      } catch (const rcf::DomainError& e) {
        why = e.what();
      }
    }
    out.push_back({pre + "fd-from-bd", built, false, why, json::object()});
    const bool fe = fd && fd->degree() == 4 * h && rcf::check_fd_functional_equation(*fd, h, p.c_parity);
    out.push_back({pre + "functional-equation", fe, false,
                   fe ? "holds exactly over Q(sqrt 2)" : "fails", {{"c_parity", p.c_parity}}});
    return out;
  });
  for (auto& r : results) append(rep.records, std::move(r));
  sort_records(rep);
  return rep;
}

// ---- output

json to_json(const RunConfig& cfg) {
  json j{{"subcommand", cfg.subcommand}, {"order", cfg.order}, {"jobs", cfg.jobs}};
  j["n"] = cfg.n ? json(*cfg.n) : json(nullptr);
  j["precision"] = cfg.precision ? json(*cfg.precision) : json(nullptr);
  j["d"] = cfg.d;
  j["only"] = cfg.only;
  j["check_paper"] = cfg.check_paper;
  j["mod2"] = cfg.mod2;
  return j;
}

json to_json(const Report& r, const RunConfig& cfg) {
  json recs = json::array();
  for (const auto& x : r.records)
    recs.push_back({{"id", x.id},
                    {"status", x.passed ? "pass" : "fail"},
                    {"warning", x.warning},
                    {"summary", x.summary},
                    {"detail", x.detail}});
  json out{{"command", cfg.subcommand},
           {"config", to_json(cfg)},
           {"passed", r.passed()},
           {"records", recs}};
  for (auto it = r.extra.begin(); it != r.extra.end(); ++it) out[it.key()] = it.value();
  return out;
}

void print_text(const Report& r, const RunConfig& cfg, std::ostream& out) {
  std::size_t pass = 0, warn = 0;
  for (const auto& x : r.records) {
    pass += x.passed;
    warn += x.warning;
  }
  for (const auto& x : r.records) {
    const char* status = !x.passed ? "FAIL" : x.warning ? "passed (low order)" : "pass";
    out << status << "  " << x.id;
    if (!x.summary.empty()) out << "  " << x.summary;
    out << "\n";
  }
  out << cfg.subcommand << ": " << pass << "/" << r.records.size() << " passed";
  if (warn) out << ", " << warn << " with low-order warnings";
  out << "\n";
}

}  // namespace rcflab_cli
