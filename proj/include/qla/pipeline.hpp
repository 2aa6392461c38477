#pragma once

#include <optional>

#include "qla/killing.hpp"

namespace qla {

// Everything the reports need for one R-matrix: structure, fn, primed basis, ad' and
// the two Killing reports.
struct Pipeline {
  RMatrixSpec spec;
  QlaStructure q;
  RepBundle fn;
  UData u;
  PrimedBasis pb;
  RepBundle ad;
  KillingReport kfn, kad;
};

struct PipelineOptions {
  // For N = 2, use the basis {chi_0, chi_+, chi_-, chi_3} with chi_3 = q^2 chi'_(00).
  bool su2_basis = true;
  int dropped = -1;
  std::optional<Scalar> fn_index;  // default fn_index_convention(N)
};

// {chi_(01), chi_(10), q^2 chi'_(00)}
PrimedBasis su2_standard_basis(const QlaStructure& q, const RepBundle& fn, const Mat& D);

Pipeline build_pipeline(const RMatrixSpec& spec, const PipelineOptions& opt = {});
// Reuses an already built (e.g. cached) structure.
Pipeline build_pipeline(const RMatrixSpec& spec, QlaStructure q, const PipelineOptions& opt = {});

}  // namespace qla
