#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qla/appendix.hpp"
#include "qla/contract.hpp"
#include "qla/rmatrix.hpp"

namespace qla {

// Images of the generators chi_A (A = i*N + j), of O_A^B (index A*n + B)
// and of u in one representation.
struct RepBundle {
  std::string name;
  int dim = 0;
  std::vector<Mat> gen;
  std::vector<Mat> orep;
  Mat u;
  std::optional<BiMat> numerical_R;

  int n() const { return static_cast<int>(gen.size()); }
  const Mat& O(int a, int b) const { return orep[static_cast<std::size_t>(a * n() + b)]; }
  // rho(x) for x = sum_A x^A chi_A
  Mat image(const Vec& coords) const;
};

struct QlaStructure {
  int N = 0;  // fundamental dimension
  int n = 0;  // N^2
  int root_order = 0;
  BiMat R;
  BiMat bigR;  // bigR(A,B,C,D) = R^{AB}_{CD}
  Tensor f;    // f[A,B,C] = f_{AB}^C
  Vec I_id;    // I_(ij) = delta^i_j
  Mat bigD;    // D^A_B = tilde(bigR)^{CA}_{BC}
  BiMat F_adj;
  Scalar lambda;

  DeformationContext ctx() const { return DeformationContext(N, root_order); }
  const Scalar& f_at(int a, int b, int c) const {
    return f[static_cast<std::size_t>((a * n + b) * n + c)];
  }
};

// Generators X = (1 - L+ S(L-))/lambda in the defining representation, with
// O images L+ S(L-) and u from the Appendix.
RepBundle fundamental_generators(const RMatrixSpec& spec);
// The same generator matrices read off (delta delta - (Rhat^2)^{ki}_{lj})/lambda.
std::vector<Mat> fn_from_rhat_squared(const RMatrixSpec& spec);

QlaStructure build_structure(const RMatrixSpec& spec);

// tilde(bigR) read off S(O_C^A) acting on chi_D, i.e. the inverse of the block
// matrix (C,X),(A,Y) -> bigR^{XA}_{CY}. The partial-transpose recipe cannot be
// used here: bigR^{t1} is singular whenever the I-relations hold.
BiMat adjoint_tilde(const BiMat& bigR);

struct VerifyOptions {
  bool heavy = true;  // include YBE-QLA
};

CheckSuite lie_comm_checks(const QlaStructure& q, const RepBundle& b);
CheckSuite verify_qla(const QlaStructure& q, const RepBundle& b, const VerifyOptions& opt = {});

// I_A = tr(rho(u) rho(chi_A)); throws StructureError if the I-relations fail.
Vec deformed_traces(const QlaStructure& q, const RepBundle& b);
CheckSuite check_I_relations(const QlaStructure& q, const Vec& I);

RepBundle adjoint_rep(const QlaStructure& q);

// sum_B D^B_A rho(chi_B) = rho(u) rho(chi_A) rho(u)^{-1} for all A
CheckResult check_S2_consistency(const QlaStructure& q, const RepBundle& b);
// D1 D2 bigR = bigR D1 D2 and tilde(bigR)^{AB}_{CD} = (D1^{-1} bigR^{-1} D2)^{AB}_{DC}
CheckSuite check_bigD_identities(const QlaStructure& q);
// Joint right kernel of the transposed ad(chi_A), i.e. solutions of f_{AB}^C v_C = 0.
std::vector<Vec> transposed_adjoint_kernel(const QlaStructure& q);

std::string structure_to_json(const QlaStructure& q);
QlaStructure structure_from_json(const std::string& text);

}  // namespace qla
