#include "qla/check.hpp"

#include <algorithm>

namespace qla {

namespace {

std::vector<int> digits(std::size_t v, int dim, std::size_t side) {
  std::vector<int> out;
  if (dim <= 1) return {static_cast<int>(v)};
  for (std::size_t s = side; s > 1; s /= static_cast<std::size_t>(dim)) {
    out.insert(out.begin(), static_cast<int>(v % static_cast<std::size_t>(dim)));
    v /= static_cast<std::size_t>(dim);
  }
  return out;
}

}  // namespace

CheckResult CheckResult::pass(std::string name, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.detail = std::move(detail);
  return r;
}

CheckResult CheckResult::skip(std::string name, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.skipped = true;
  r.detail = std::move(why);
  return r;
}

CheckResult CheckResult::fail(std::string name, std::string detail, std::vector<int> indices,
                              std::optional<Scalar> residual) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = false;
  r.detail = std::move(detail);
  r.indices = std::move(indices);
  r.residual = std::move(residual);
  return r;
}

std::string CheckResult::summary() const {
  std::string s = (skipped ? "SKIP " : passed ? "PASS " : "FAIL ") + name;
  if (!detail.empty()) s += ": " + detail;
  if (!indices.empty()) {
    s += " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    s += ")";
  }
  if (residual) s += " residual " + residual->str();
  return s;
}

bool CheckSuite::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::size_t CheckSuite::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
}

const CheckResult* CheckSuite::find(const std::string& name) const {
  for (auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

CheckResult compare_mats(const std::string& name, const Mat& lhs, const Mat& rhs, int index_dim) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return CheckResult::fail(name, "shape mismatch");
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == rhs(i, j))) {
        std::vector<int> idx = digits(i, index_dim, lhs.rows());
        auto col = digits(j, index_dim, lhs.cols());
        idx.insert(idx.end(), col.begin(), col.end());
        return CheckResult::fail(name, "entries differ", idx, lhs(i, j) - rhs(i, j));
      }
  return CheckResult::pass(name);
}

CheckResult expect_zero(const std::string& name, const Mat& m, int index_dim) {
  return compare_mats(name, m, Mat(m.rows(), m.cols()), index_dim);
}

CheckResult expect_equal(const std::string& name, const Scalar& lhs, const Scalar& rhs) {
  if (lhs == rhs) return CheckResult::pass(name, lhs.str());
  return CheckResult::fail(name, "got " + lhs.str() + ", expected " + rhs.str(), {}, lhs - rhs);
}

}  // namespace qla
