#include "qla/rmatrix.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qla {

RMatrixSpec sun_r_matrix(int n) {
  DeformationContext ctx = DeformationContext::su(n);
  const Scalar pre = ctx.q_pow(-1, n);
  const Scalar lam = ctx.lambda();
  BiMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) r(i, i, i, i) = pre * ctx.q();
      else r(i, j, i, j) = pre;
      if (i > j) r(i, j, j, i) = pre * lam;
    }
  return {n, n, r, "SU_q(" + std::to_string(n) + ") fundamental"};
}

CheckResult check_ybe(const BiMat& r, const std::string& name) {
  const BiMat rh = hat(r);
  const Mat id = Mat::identity(static_cast<std::size_t>(r.n()));
  const Mat a = kron(rh.mat(), id), b = kron(id, rh.mat());
  const Mat lhs = a * b * a, rhs = b * a * b;
  CheckResult res = compare_mats(name, lhs, rhs, r.n());
  if (res.passed) res.detail = "Rhat12 Rhat23 Rhat12 = Rhat23 Rhat12 Rhat23";
  return res;
}

CheckResult check_hecke(const RMatrixSpec& spec) {
  DeformationContext ctx = spec.ctx();
  const int n = spec.n;
  const Mat rh = hat(spec.r).mat();
  const Mat id = Mat::identity(rh.rows());
  const Mat res = rh * rh - rh * (ctx.q_pow(-1, n) * ctx.lambda()) - id * ctx.q_pow(-2, n);
  CheckResult c = expect_zero("hecke", res, n);
  if (c.passed) c.detail = "Rhat^2 = q^{-1/N} lambda Rhat + q^{-2/N}";
  return c;
}

CheckResult check_cubic(const RMatrixSpec& spec, int eps) {
  DeformationContext ctx = spec.ctx();
  const Mat rh = hat(spec.r).mat();
  const Mat id = Mat::identity(rh.rows());
  const Mat res = (rh - id * ctx.q()) * (rh + id * ctx.q_pow(-1)) * (rh - id * (Scalar(eps) * ctx.q_pow(eps - spec.n)));
  CheckResult c = expect_zero("cubic(eps=" + std::to_string(eps) + ")", res, spec.n);
  if (c.passed) c.detail = "(Rhat - q)(Rhat + 1/q)(Rhat - eps q^{eps-N}) = 0";
  return c;
}

LMatrices fundamental_L_matrices(const BiMat& r) {
  const int n = r.n();
  const BiMat r21inv = inverse(swap_factors(r));
  LMatrices out;
  out.n = n;
  const auto sz = static_cast<std::size_t>(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Mat p(sz, sz), m(sz, sz), s(sz, sz);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
          p(a, b) = r(i, k, j, l);
          m(a, b) = r21inv(i, k, j, l);
          s(a, b) = r(k, i, l, j);
        }
      out.plus.push_back(std::move(p));
      out.minus.push_back(std::move(m));
      out.s_minus.push_back(std::move(s));
    }
  return out;
}

// ------------------------------------------------------------------------ I/O

std::string r_matrix_to_json(const RMatrixSpec& spec) {
  nlohmann::ordered_json j;
  j["label"] = spec.label;
  j["n"] = spec.n;
  j["root_order"] = spec.root_order;
  j["entries"] = nlohmann::ordered_json::array();
  const int n = spec.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Scalar& v = spec.r(a, b, c, d);
          if (v.is_zero()) continue;
          j["entries"].push_back({{"i", a}, {"j", b}, {"k", c}, {"l", d}, {"value", v.str()}});
        }
  return j.dump(2) + "\n";
}

RMatrixSpec r_matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  RMatrixSpec spec;
  try {
    spec.label = j.value("label", std::string());
    spec.n = j.at("n").get<int>();
    spec.root_order = j.at("root_order").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("R-matrix header: ") + e.what(), 0);
  }
  (void)spec.ctx();  // validates n, k
  spec.r = BiMat(spec.n);
  std::size_t count = 0;
  for (const auto& e : j.at("entries")) {
    int idx[4];
    const char* keys[4] = {"i", "j", "k", "l"};
    for (int t = 0; t < 4; ++t) {
      if (!e.contains(keys[t]) || !e[keys[t]].is_number_integer())
        throw ParseError("entry " + std::to_string(count) + " lacks integer index '" + keys[t] + "'", 0);
      idx[t] = e[keys[t]].get<int>();
      if (idx[t] < 0 || idx[t] >= spec.n)
        throw DimensionError("entry " + std::to_string(count) + " index " + keys[t] + "=" + std::to_string(idx[t]) +
                             " out of range for n=" + std::to_string(spec.n));
    }
    if (!e.contains("value") || !e["value"].is_string())
      throw ParseError("entry " + std::to_string(count) + " lacks a string value", 0);
    Scalar v;
    try {
      v = Scalar::parse(e["value"].get<std::string>());
    } catch (const ParseError& pe) {
      throw ParseError("entry " + std::to_string(count) + " value: " + pe.what(), pe.position);
    }
    spec.r(idx[0], idx[1], idx[2], idx[3]) = v;
    ++count;
  }
  if (determinant(spec.r.mat()).is_zero()) {
    auto ns = null_space(spec.r.mat());
    throw SingularMatrixError("R-matrix '" + spec.label + "' is singular", ns.front());
  }
  return spec;
}

RMatrixSpec load_r_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open R-matrix file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return r_matrix_from_json(ss.str());
}

void save_r_matrix(const RMatrixSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << r_matrix_to_json(spec);
}

}  // namespace qla
