#pragma once

#include <vector>

#include "qla/check.hpp"
#include "qla/rmatrix.hpp"

namespace qla {

struct UData {
  Mat rep_u;       // image of u, tr_2(P tilde(R))
  Mat D;           // alpha * rep_u with D^0_0 = 1
  Scalar alpha;
  Scalar beta;
  Scalar c_scalar;  // image of c = u S(u) is c_scalar * I, c_scalar = 1/(alpha beta)
};

Mat rep_u(const BiMat& r);
// Returns (D, alpha) with D = alpha * rep_u and D^0_0 = 1.
std::pair<Mat, Scalar> normalize_D(const Mat& rep_u);
// beta from tr_1(D_1^{-1} Rhat) = beta I, cross-checked against beta tr_2(D_2 Rhat^{-1}) = I.
Scalar beta_constant(const Mat& D, const BiMat& r);
UData appendix_data(const BiMat& r);

// tr(D^{-1} M)
Scalar invariant_trace(const Mat& D, const Mat& m);

// All Appendix identities for (R, D, alpha, beta). `samples` are the N x N
// matrices used for the invariant-trace identity; empty means a fixed set.
CheckSuite check_D_identities(const BiMat& r, const Mat& D, const Scalar& alpha, const Scalar& beta,
                              const std::vector<Mat>& samples = {});

}  // namespace qla
