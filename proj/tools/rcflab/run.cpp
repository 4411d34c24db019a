#include <ostream>

#include <CLI11.hpp>

#include "rcflab/commands.hpp"
#include "rcflab/errors.hpp"

namespace rcflab_cli {

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--json", cfg.json, "Emit a JSON report");
  sub->add_option("--jobs,-j", cfg.jobs, "Independent checks to run concurrently")
      ->check(CLI::Range(1, 256));
  sub->add_option("--data", cfg.data_path, "Golden data file or directory (default: RCF_LAB_DATA)");
  std::map<std::string, Fault> faults{{"check", Fault::check}, {"internal", Fault::internal}};
  sub->add_option("--inject-fault", cfg.fault, "Testing only")
      ->transform(CLI::CheckedTransformer(faults))
      ->group("");
}

Report dispatch(const RunConfig& cfg) {
  if (cfg.fault == Fault::internal) throw rcf::InternalError("injected internal fault");
  if (cfg.subcommand == "identities") return cmd_identities(cfg);
  if (cfg.subcommand == "resultants") return cmd_resultants(cfg);
  if (cfg.subcommand == "padic") return cmd_padic(cfg);
  if (cfg.subcommand == "cm") return cmd_cm(cfg);
  if (cfg.subcommand == "minpoly") return cmd_minpoly(cfg);
  throw UsageError("unknown subcommand");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Checks for the real-cyclotomic modular function identities, iterated "
               "resultants, 2-adic periodic points and CM values",
               "rcflab"};
  app.require_subcommand(1);

  auto* ids = app.add_subcommand("identities", "Verify the q-series identity catalog");
  ids->add_option("--order", cfg.order, "Truncation order (rational, default 50)");
  ids->add_option("--only", cfg.only, "Restrict to these identity ids");

  auto* res = app.add_subcommand("resultants", "Iterated resultants R_n and their properties");
  res->add_option("--n", cfg.n, "Largest n (default 4)");
  res->add_flag("--check-paper", cfg.check_paper, "Compare R_1..R_4 with the printed factorizations");
  res->add_flag("--mod2", cfg.mod2, "Check the reduction mod 2");

  auto* pad = app.add_subcommand("padic", "Periodic points of the 2-adic Frobenius lift");
  pad->add_option("--n", cfg.n, "Period and residue degree (default 3)");
  pad->add_option("--precision,--prec", cfg.precision, "2-adic precision P (default 64)");

  auto* cm = app.add_subcommand("cm", "Numerical checks at the CM point w");
  cm->add_option("--d", cfg.d, "Discriminants, d = 7 mod 8 (default 7)");
  cm->add_option("--precision,--prec", cfg.precision, "Working precision in bits (default 256)");
  cm->add_flag("--period", cfg.period, "Also estimate the minimal period");
  cm->add_option("--n", cfg.n, "Largest period tried with --period (default 6)");

  auto* mp = app.add_subcommand("minpoly", "Recognize b_d and f_d and check them exactly");
  mp->add_option("--d", cfg.d, "Discriminants, d = 7 mod 8 (default 7)");
  mp->add_option("--precision,--prec", cfg.precision, "Lattice precision in bits (default: automatic)");

  for (auto* s : {ids, res, pad, cm, mp}) add_common(s, cfg);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    const Report rep = dispatch(cfg);
    if (cfg.json)
      out << to_json(rep, cfg).dump(2) << "\n";
    else
      print_text(rep, cfg, out);
    for (const auto& r : rep.records)
      if (r.warning) err << "warning: " << r.id << " passed at low order " << cfg.order << "\n";
    return rep.passed() ? kPass : kCheckFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const rcf::DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const rcf::ConsistencyError& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace rcflab_cli
