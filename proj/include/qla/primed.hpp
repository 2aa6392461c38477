#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qla/qla.hpp"

namespace qla {

// Basis {chi_0, chi'_a} of the QLA. Column A of T holds the coordinates of
// the A-th primed basis element in the basis {chi_(ij)}; column 0 is D^A.
struct PrimedBasis {
  int n = 0;
  Vec d_vec;
  Vec traces;           // I'_A in the rep used to build the chi'
  Scalar trace0;        // I'_0 = D^A I'_A
  Mat T, T_inv;
  int dropped_index = -1;  // -1 when the columns were supplied explicitly
  Tensor f_primed;         // f'[A,B,C] over the primed basis
  std::map<std::string, Scalar> mu;

  const Scalar& fp(int a, int b, int c) const {
    return f_primed[static_cast<std::size_t>((a * n + b) * n + c)];
  }
  // Coordinates of chi'_A = chi_A - (I'_A/I'_0) chi_0 for an unprimed index A.
  Vec primed_generator(int A) const;
};

// Solves f_{AB}^C D^B = 0 (1-dim kernel required), scaled so D^(ij) = (D^-1)^j_i.
Vec d_vector(const QlaStructure& q, const Mat& D);

PrimedBasis build_primed(const QlaStructure& q, const RepBundle& ref, const Mat& D, int dropped = -1);
// Same, with the n-1 non-central columns given as coordinate vectors.
PrimedBasis build_primed_with(const QlaStructure& q, const RepBundle& ref, const Mat& D, const std::vector<Vec>& columns);

// rho(e_A) for the primed basis element A (0 = chi_0).
Mat primed_image(const RepBundle& b, const PrimedBasis& pb, int A);
// c with rho(chi_0) = c I, if it is scalar.
std::optional<Scalar> mu_of(const RepBundle& b, const PrimedBasis& pb);

// Zero pattern of f', the adjoint-action formulas for chi_0 and chi'_A, D = (1,0,...,0).
CheckSuite primed_structure_checks(const QlaStructure& q, const PrimedBasis& pb);
// Deformed commutators of the chi'_A in rho, with chi_0 -> mu I.
CheckResult check_comm_prime(const QlaStructure& q, const PrimedBasis& pb, const RepBundle& b, const Scalar& mu);
// rho(chi_0) commutes with every rho(chi_A).
CheckResult check_chi0_central(const RepBundle& b, const PrimedBasis& pb);
// tr(rho(u) rho(chi'_a)) = 0 for a = 1..n-1.
CheckResult check_traceless(const RepBundle& b, const PrimedBasis& pb);

// ad'(e_A)^a_b = f'_{Ab}^a. The bundle's gen[] is indexed by the unprimed chi_X,
// its u is the primed block of rep_u(F). Throws StructureError if reducible.
RepBundle adjoint_prime(const PrimedBasis& pb, const QlaStructure& q);
std::vector<Mat> adjoint_prime_matrices(const PrimedBasis& pb);

std::string primed_to_json(const PrimedBasis& pb);

}  // namespace qla
