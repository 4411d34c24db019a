#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "rcflab/cmnumeric/checks.hpp"
#include "rcflab/commands.hpp"
#include "rcflab/exactalg/identities.hpp"
#include "rcflab/exactalg/periodic.hpp"
#include "rcflab/exactalg/serialize.hpp"
#include "rcflab/padic2.hpp"
#include "rcflab/qseries/catalog.hpp"

using nlohmann::json;
using rcflab_cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.push_back("--data");
  args.push_back(RCFLAB_TEST_DATA_DIR);
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expect = 0) {
  args.push_back("--json");
  const Result r = call(std::move(args));
  EXPECT_EQ(r.code, expect) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, IdentitiesFullCatalog) {
  const json j = call_json({"identities", "--order", "50", "--jobs", "4"});
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["records"].size(), rcf::qs::catalog().size());
  std::vector<std::string> ids;
  for (const auto& r : j["records"]) {
    ids.push_back(r["id"]);
    EXPECT_FALSE(r["detail"]["location"].get<std::string>().empty()) << r["id"];
    EXPECT_EQ(r["status"], "pass");
  }
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
}

TEST(Cli, IdentitiesOnlyOne) {
  const json j = call_json({"identities", "--order", "50", "--only", "I2.13"});
  ASSERT_EQ(j["records"].size(), 1u);
  EXPECT_EQ(j["records"][0]["id"], "I2.13");
  std::ifstream in(std::string(RCFLAB_TEST_DATA_DIR) + "/golden.json");
  const json g = json::parse(in);
  EXPECT_EQ(j["records"][0]["detail"]["location"], g["identities"]["I2.13"]["location"]);
}

TEST(Cli, LowOrderIsFlagged) {
  const Result r = call({"identities", "--order", "3", "--only", "I2.11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("passed (low order)"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const json j = call_json({"identities", "--order", "3", "--only", "I2.11"});
  EXPECT_TRUE(j["records"][0]["warning"].get<bool>());
}

TEST(Cli, JobsDoNotChangeOutput) {
  const json a = call_json({"identities", "--order", "20", "--jobs", "1"});
  json b = call_json({"identities", "--order", "20", "--jobs", "8"});
  b["config"]["jobs"] = 1;
  EXPECT_EQ(a, b);
}

TEST(Cli, ResultantsAgainstPrintedFactors) {
  const json j = call_json({"resultants", "--n", "4", "--check-paper", "--mod2"});
  EXPECT_TRUE(j["passed"].get<bool>());
  int printed = 0;
  for (const auto& r : j["records"])
    if (r["id"].get<std::string>().rfind("printed/", 0) == 0) ++printed;
  EXPECT_EQ(printed, 4);
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(rcf::zpoly_from_json(j["polynomials"]["R" + std::to_string(n)]),
              rcf::periodic_poly(n));
}

TEST(Cli, PadicTwoThreeCycles) {
  const json j = call_json({"padic", "--n", "3", "--precision", "64"});
  EXPECT_TRUE(j["passed"].get<bool>());
  ASSERT_EQ(j["orbits"].size(), 2u);
  const auto ctx = rcf::padic::Context::make(3, 64);
  for (const auto& orb : j["orbits"]) {
    ASSERT_EQ(orb.size(), 3u);
    for (const auto& pt : orb) {
      const rcf::padic::Elem x = rcf::padic::elem_from_json(pt, ctx);
      EXPECT_GE((rcf::padic::iterate_T(x, 3) - x).valuation(), 56);
    }
  }
}

TEST(Cli, CmSevenRecords) {
  const json j = call_json({"cm", "--d", "7", "--prec", "256"});
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["records"].size(), 7u);
  const auto p = rcf::cm::cm_params_from_json(j["params"][0]);
  EXPECT_EQ(p.a, 5);
  EXPECT_EQ(p.c_parity, 0);
}

TEST(Cli, CmWithPeriods) {
  const json j = call_json({"cm", "--d", "7", "--d", "15", "--period", "--n", "4", "--jobs", "2"});
  EXPECT_EQ(j["records"].size(), 16u);
  for (const auto& r : j["records"])
    if (r["id"] == "d7/minimal-period") EXPECT_EQ(r["detail"]["period"], 2);
}

TEST(Cli, MinpolyRoundTrip) {
  const json j = call_json({"minpoly", "--d", "7"});
  EXPECT_TRUE(j["passed"].get<bool>());
  for (const auto& r : j["records"]) {
    if (r["id"] == "d7/f_d") {
      const rcf::ZPoly f = rcf::zpoly_from_json(r["detail"]["poly"]);
      EXPECT_EQ(f.degree(), 4);
      EXPECT_TRUE(rcf::check_fd_functional_equation(f, 1, 0));
    }
  }
}

TEST(Cli, ExitCodesUnderInjectedFaults) {
  for (const char* cmd : {"identities", "resultants", "padic", "cm", "minpoly"}) {
    EXPECT_EQ(call({cmd, "--inject-fault", "check"}).code, 2) << cmd;
    EXPECT_EQ(call({cmd, "--inject-fault", "internal"}).code, 3) << cmd;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"cm", "--d", "8"}).code, 1);
  EXPECT_EQ(call({"cm", "--precision", "64"}).code, 1);
  EXPECT_EQ(call({"identities", "--only", "missing"}).code, 1);
  EXPECT_EQ(call({"identities", "--order", "-2"}).code, 1);
  EXPECT_EQ(call({"padic", "--n", "12"}).code, 1);
  EXPECT_EQ(call({"resultants", "--n", "0"}).code, 1);
  EXPECT_EQ(call({"nonsense"}).code, 1);
  EXPECT_EQ(call({"cm", "--inject-fault", "bogus"}).code, 1);
  std::ostringstream out, err;
  EXPECT_EQ(run({"identities", "--data", "/nonexistent/golden.json"}, out, err), 1);
  EXPECT_EQ(run({"--help"}, out, err), 0);
}
