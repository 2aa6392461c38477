#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qla/check.hpp"

namespace qla {

enum class Group { su, external };
enum class RepChoice { fn, ad, both };
enum class OutputFormat { text, json };

struct RunConfig {
  Group group = Group::su;
  int n = 2;
  std::optional<int> root_order;
  std::optional<std::string> r_matrix_path;
  std::set<std::string> checks{"all"};  // cubic is given as "cubic:eps=1" / "cubic:eps=-1"
  RepChoice rep = RepChoice::both;
  std::vector<Rational> eval_points;
  OutputFormat format = OutputFormat::text;
  bool skip_heavy = false;
  std::optional<std::string> out_path;
  std::optional<std::string> cache_dir;
  std::optional<std::string> fixture;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Throws ConfigError on inconsistent settings.
void validate(const RunConfig& cfg);

struct SuiteRun {
  std::string suite;
  CheckSuite checks;
};

std::vector<SuiteRun> run_checks(const RunConfig& cfg);

// Exit codes: 0 all pass, 1 a check failed, 2 usage or configuration error.
int cmd_check(const RunConfig& cfg, std::ostream& out);
int cmd_report(const RunConfig& cfg, std::ostream& out);
int cmd_su2_tables(const RunConfig& cfg, std::ostream& out);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qla
