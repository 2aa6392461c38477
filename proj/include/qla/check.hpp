#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qla/tensor.hpp"

namespace qla {

// Outcome of one identity check. Failures carry the first offending index
// tuple and the residual there.
struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
  std::vector<int> indices;
  std::optional<Scalar> residual;

  static CheckResult pass(std::string name, std::string detail = {});
  static CheckResult skip(std::string name, std::string why);
  static CheckResult fail(std::string name, std::string detail, std::vector<int> indices = {},
                          std::optional<Scalar> residual = std::nullopt);
  std::string summary() const;
};

struct CheckSuite {
  std::vector<CheckResult> results;

  void add(CheckResult r) { results.push_back(std::move(r)); }
  void add(const CheckSuite& s) { results.insert(results.end(), s.results.begin(), s.results.end()); }
  bool passed() const;
  std::size_t failures() const;
  const CheckResult* find(const std::string& name) const;
};

// Compares lhs and rhs entrywise; the witness is the first differing entry,
// reported as (row, col) unless a decoder splits them further.
CheckResult compare_mats(const std::string& name, const Mat& lhs, const Mat& rhs, int index_dim = 0);
CheckResult expect_zero(const std::string& name, const Mat& m, int index_dim = 0);
CheckResult expect_equal(const std::string& name, const Scalar& lhs, const Scalar& rhs);

}  // namespace qla
