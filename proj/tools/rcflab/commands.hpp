#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rcflab_cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kCheckFailed = 2, kInternal = 3 };

// Faults for exercising the exit-code paths end to end.
enum class Fault { none, check, internal };

struct RunConfig {
  std::string subcommand;
  std::string order = "50";
  std::optional<int> n;
  std::optional<long> precision;
  std::vector<long> d;
  bool json = false;
  std::vector<std::string> only;
  bool check_paper = false;
  bool mod2 = false;
  bool period = false;
  int jobs = 1;
  std::string data_path;
  Fault fault = Fault::none;
};

struct Record {
  std::string id;
  bool passed = false;
  bool warning = false;
  std::string summary;
  nlohmann::json detail;
};

struct Report {
  std::vector<Record> records;
  nlohmann::json extra = nlohmann::json::object();
  bool passed() const;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Report cmd_identities(const RunConfig& cfg);
Report cmd_resultants(const RunConfig& cfg);
Report cmd_padic(const RunConfig& cfg);
Report cmd_cm(const RunConfig& cfg);
Report cmd_minpoly(const RunConfig& cfg);

// Golden data file: RCF_LAB_DATA (file or directory) or the built-in default.
std::string golden_path(const std::string& override_path);
nlohmann::json load_golden(const std::string& path);

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const Report& r, const RunConfig& cfg);
void print_text(const Report& r, const RunConfig& cfg, std::ostream& out);

// Parse, dispatch and print; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcflab_cli
