#include "qla/appendix.hpp"

namespace qla {

Mat rep_u(const BiMat& r) { return partial_trace(perm_P(r.n()) * tilde(r), 2); }

std::pair<Mat, Scalar> normalize_D(const Mat& u) {
  if (!u.square() || u.rows() == 0) throw DimensionError("normalize_D needs a square matrix");
  if (u(0, 0).is_zero()) throw StructureError("cannot normalize D: the (0,0) entry of u vanishes");
  Scalar alpha = u(0, 0).inv();
  return {u * alpha, alpha};
}

Scalar beta_constant(const Mat& D, const BiMat& r) {
  const BiMat rh = hat(r);
  const Mat t = partial_trace(embed(inverse(D), 1) * rh, 1);
  auto beta = t.scalar_multiple_of_identity();
  if (!beta) throw StructureError("tr_1(D_1^{-1} Rhat) is not proportional to the identity");
  if (beta->is_zero()) throw StructureError("beta vanishes");
  const Mat other = partial_trace(embed(D, 2) * inverse(rh), 2) * *beta;
  if (!other.is_identity()) throw StructureError("beta tr_2(D_2 Rhat^{-1}) != I");
  return *beta;
}

UData appendix_data(const BiMat& r) {
  UData d;
  d.rep_u = rep_u(r);
  std::tie(d.D, d.alpha) = normalize_D(d.rep_u);
  d.beta = beta_constant(d.D, r);
  d.c_scalar = (d.alpha * d.beta).inv();
  return d;
}

Scalar invariant_trace(const Mat& D, const Mat& m) { return (inverse(D) * m).trace(); }

CheckSuite check_D_identities(const BiMat& r, const Mat& D, const Scalar& alpha, const Scalar& beta,
                              const std::vector<Mat>& samples) {
  const int n = r.n();
  const auto sz = static_cast<std::size_t>(n);
  const Mat id = Mat::identity(sz);
  const BiMat rh = hat(r), rhinv = inverse(rh), rinv = inverse(r), p = perm_P(n);
  const Mat dinv = inverse(D);
  const BiMat d1 = embed(D, 1), d2 = embed(D, 2), d1inv = embed(dinv, 1), d2inv = embed(dinv, 2);
  CheckSuite s;

  s.add(compare_mats("til-ex alpha tr1(D1^-1 Rhat^-1) = I", partial_trace(d1inv * rhinv, 1) * alpha, id, 1));
  s.add(compare_mats("til-ex alpha^-1 tr2(D2 Rhat) = I", partial_trace(d2 * rh, 2) * alpha.inv(), id, 1));
  s.add(compare_mats("beta^-1 tr1(D1^-1 Rhat) = I", partial_trace(d1inv * rh, 1) * beta.inv(), id, 1));
  s.add(compare_mats("beta tr2(D2 Rhat^-1) = I", partial_trace(d2 * rhinv, 2) * beta, id, 1));

  const BiMat rt = tilde(r), rinvt = tilde(rinv);
  s.add(compare_mats("D = alpha tr2(P tilde R)", partial_trace(p * rt, 2) * alpha, D, 1));
  s.add(compare_mats("D^-1 = alpha^-1 tr2(P tilde(R^-1))", partial_trace(p * rinvt, 2) * alpha.inv(), dinv, 1));
  s.add(compare_mats("D = beta^-1 tr1(P tilde(R^-1))", partial_trace(p * rinvt, 1) * beta.inv(), D, 1));
  s.add(compare_mats("D^-1 = beta tr1(P tilde R)", partial_trace(p * rt, 1) * beta, dinv, 1));

  s.add(compare_mats("tilde R = D1^-1 R^-1 D1", rt.mat(), (d1inv * rinv * d1).mat(), n));
  s.add(compare_mats("tilde R = D2 R^-1 D2^-1", rt.mat(), (d2 * rinv * d2inv).mat(), n));
  s.add(compare_mats("D1 D2 R = R D1 D2", (d1 * d2 * r).mat(), (r * d1 * d2).mat(), n));

  std::vector<Mat> ms = samples;
  if (ms.empty()) {
    for (int t = 0; t < 3; ++t) {
      Mat m(sz, sz);
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) {
          const long v = static_cast<long>((i * 7 + j * 3 + static_cast<std::size_t>(t) * 5) % 5) - 2;
          m(i, j) = Scalar::p_power(static_cast<int>(i) - static_cast<int>(j) + t, Rational(v));
        }
      ms.push_back(m);
    }
  }
  const BiMat r21 = swap_factors(r), r21inv = inverse(r21);
  bool ok = true;
  CheckResult bad;
  for (std::size_t t = 0; t < ms.size() && ok; ++t) {
    const BiMat m1 = embed(ms[t], 1);
    const Mat want = id * invariant_trace(D, ms[t]);
    CheckResult a = compare_mats("", partial_trace(d1inv * rinv * m1 * r, 1), want, 1);
    CheckResult b = compare_mats("", partial_trace(d1inv * r21 * m1 * r21inv, 1), want, 1);
    if (!a.passed) bad = a;
    else if (!b.passed) bad = b;
    ok = a.passed && b.passed;
  }
  const std::string name = "tr1(D1^-1 R^-1 M1 R) = tr1(D1^-1 R21 M1 R21^-1) = tr(D^-1 M) I";
  if (ok) s.add(CheckResult::pass(name, std::to_string(ms.size()) + " sample matrices"));
  else s.add(CheckResult::fail(name, bad.detail, bad.indices, bad.residual));
  return s;
}

}  // namespace qla
