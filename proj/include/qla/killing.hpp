#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qla/primed.hpp"

namespace qla {

// tr(rho(u) rho(x) rho(y)) for coordinate vectors x, y.
Scalar killing_form(const RepBundle& b, const Vec& x, const Vec& y);
// eta_AB = tr(rho(u) rho(chi_A) rho(chi_B)) in the unprimed basis.
Mat killing_metric(const RepBundle& b);
// T^t eta T: the metric over {chi_0, chi'_a}.
Mat primed_metric(const Mat& eta, const PrimedBasis& pb);

// eta_AB = R^{CD}_{AB} eta_CD = D^C_A eta_BC, and f_{CA}^D eta_DB + R^{ED}_{CA} f_{DB}^F eta_EF = 0.
CheckSuite check_metric_identities(const QlaStructure& q, const Mat& eta, const std::string& label);
// Closed form of the su(N) fundamental metric over {chi_(ij)}.
Mat sun_fundamental_metric(int N);
CheckResult check_block_diagonal(const Mat& eta_primed, const std::string& label);

struct KillingReport {
  std::string rep_name;
  Mat eta_full;       // unprimed basis
  Mat eta_primed_all; // primed basis, n x n
  Mat eta_primed;     // (n-1) x (n-1) block
  Scalar eta00;
  Mat canonical, inv_canonical, K;
  Scalar index;
  Mat casimir_mat;
  std::optional<Scalar> casimir_eigen;
  CheckSuite checks;
};

// Index of fn fixing the canonical normalization: q^{-9/2}/[2]_{1/q} for N = 2, else 1.
Scalar fn_index_convention(int N);

// Report for `rho`; the fn metric block and fn_index fix the canonical metric, and K is
// checked against the ad' matrices of pb.
KillingReport killing_report(const QlaStructure& q, const PrimedBasis& pb, const RepBundle& rho,
                             const Mat& fn_eta_primed, const Scalar& fn_index);

struct CanonicalResult {
  Mat canonical;
  Scalar index;
  Mat K;
  CheckSuite checks;
};
CanonicalResult canonical_and_index(const Mat& fn_block, const Mat& rho_block, const Scalar& fn_index,
                                    const std::vector<Mat>& adjoint_blocks);

// rho(Q') = eta^{ab} rho(chi'_a) rho(chi'_b), with centrality checked against every rho(chi_A).
std::pair<Mat, CheckResult> casimir(const RepBundle& b, const Mat& inv_canonical, const PrimedBasis& pb);

// Quadratic form of the fn metric on the primed part of xi^(ij) = Xi^j_i, at p = p0.
// The value must be >= 0 and vanish only for Xi proportional to D^-1.
struct PositivitySample {
  Rational p;
  Mat xi;
  Rational value;
  bool proportional_to_dinv = false;
};
std::vector<PositivitySample> positivity_sample(const Mat& eta_primed_all, const PrimedBasis& pb, const Mat& D,
                                                const std::vector<Rational>& p_samples, const std::vector<Mat>& xi_samples);
CheckResult positivity_verdict(const std::vector<PositivitySample>& samples);

std::string killing_to_json(const KillingReport& r);

}  // namespace qla
