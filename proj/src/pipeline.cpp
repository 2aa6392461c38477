#include "qla/pipeline.hpp"

namespace qla {

PrimedBasis su2_standard_basis(const QlaStructure& q, const RepBundle& fn, const Mat& D) {
  if (q.N != 2) throw DimensionError("su(2) basis needs N = 2");
  const Vec chi1 = build_primed(q, fn, D).primed_generator(0);
  Vec ep(4), em(4);
  ep[1] = 1;
  em[2] = 1;
  return build_primed_with(q, fn, D, {ep, em, q.ctx().q_pow(2) * chi1});
}

Pipeline build_pipeline(const RMatrixSpec& spec, const PipelineOptions& opt) {
  return build_pipeline(spec, build_structure(spec), opt);
}

Pipeline build_pipeline(const RMatrixSpec& spec, QlaStructure q, const PipelineOptions& opt) {
  Pipeline p;
  p.spec = spec;
  p.q = std::move(q);
  p.fn = fundamental_generators(spec);
  p.u = appendix_data(spec.r);
  if (opt.su2_basis && spec.n == 2 && opt.dropped < 0)
    p.pb = su2_standard_basis(p.q, p.fn, p.u.D);
  else
    p.pb = build_primed(p.q, p.fn, p.u.D, opt.dropped);
  p.ad = adjoint_prime(p.pb, p.q);
  const auto m = static_cast<std::size_t>(p.q.n - 1);
  const Mat block = primed_metric(killing_metric(p.fn), p.pb).block(1, 1, m, m);
  const Scalar idx = opt.fn_index ? *opt.fn_index : fn_index_convention(spec.n);
  p.kfn = killing_report(p.q, p.pb, p.fn, block, idx);
  p.kad = killing_report(p.q, p.pb, p.ad, block, idx);
  return p;
}

}  // namespace qla
