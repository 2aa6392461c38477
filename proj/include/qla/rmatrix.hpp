#pragma once

#include <string>
#include <vector>

#include "qla/check.hpp"
#include "qla/tensor.hpp"

namespace qla {

struct RMatrixSpec {
  int n = 2;
  int root_order = 2;
  BiMat r;
  std::string label;

  DeformationContext ctx() const { return DeformationContext(n, root_order); }
};

// q^{-1/N}(q sum E_II x E_II + sum_{I!=J} E_II x E_JJ + lambda sum_{I>J} E_IJ x E_JI), with p = q^{1/N}.
RMatrixSpec sun_r_matrix(int n);

CheckResult check_ybe(const BiMat& r, const std::string& name = "ybe");
CheckResult check_hecke(const RMatrixSpec& spec);
// (Rhat - q)(Rhat + 1/q)(Rhat - eps q^{eps-N}) = 0
CheckResult check_cubic(const RMatrixSpec& spec, int eps);

// Fundamental images, indexed [k*N + l]:
//   plus[k,l]^i_j = R^{ik}_{jl}, minus[k,l]^i_j = (R_21^{-1})^{ik}_{jl},
//   s_minus[k,l]^i_j = R^{ki}_{lj} (image of S(L^-)).
struct LMatrices {
  int n = 0;
  std::vector<Mat> plus, minus, s_minus;
  const Mat& lp(int k, int l) const { return plus[static_cast<std::size_t>(k * n + l)]; }
  const Mat& lm(int k, int l) const { return minus[static_cast<std::size_t>(k * n + l)]; }
  const Mat& slm(int k, int l) const { return s_minus[static_cast<std::size_t>(k * n + l)]; }
};

LMatrices fundamental_L_matrices(const BiMat& r);

std::string r_matrix_to_json(const RMatrixSpec& spec);
RMatrixSpec r_matrix_from_json(const std::string& text);
RMatrixSpec load_r_matrix(const std::string& path);
void save_r_matrix(const RMatrixSpec& spec, const std::string& path);

}  // namespace qla
