#include "qla/killing.hpp"

#include "json.hpp"

namespace qla {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

CheckResult tensor_zero(const std::string& name, const Tensor& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t[i].is_zero()) {
      std::vector<int> idx(z(t.rank()));
      std::size_t rem = i;
      for (int k = t.rank() - 1; k >= 0; --k) {
        idx[z(k)] = static_cast<int>(rem % z(t.dim()));
        rem /= z(t.dim());
      }
      return CheckResult::fail(name, "nonzero residual", idx, t[i]);
    }
  return CheckResult::pass(name);
}

bool proportional(const Mat& a, const Mat& b) {
  // a = c b for some c (c = 0 allowed)
  std::optional<Scalar> c;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j).is_zero()) {
        if (!a(i, j).is_zero()) return false;
        continue;
      }
      Scalar r = a(i, j) / b(i, j);
      if (!c) c = r;
      else if (!(*c == r)) return false;
    }
  return true;
}

}  // namespace

Scalar killing_form(const RepBundle& b, const Vec& x, const Vec& y) {
  return (b.u * b.image(x) * b.image(y)).trace();
}

Mat killing_metric(const RepBundle& b) {
  const int n = b.n();
  Mat eta(z(n), z(n));
  std::vector<Mat> ug;
  for (const auto& g : b.gen) ug.push_back(b.u * g);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) eta(z(a), z(c)) = (ug[z(a)] * b.gen[z(c)]).trace();
  return eta;
}

Mat primed_metric(const Mat& eta, const PrimedBasis& pb) { return pb.T.transpose() * eta * pb.T; }

CheckSuite check_metric_identities(const QlaStructure& q, const Mat& eta, const std::string& label) {
  CheckSuite s;
  const int n = q.n;
  const Tensor R = Tensor::from(q.bigR);
  const Tensor e = Tensor::from(eta, n);
  const Tensor& f = q.f;
  {
    Mat viaR = einsum("cdab,cd->ab", {&R, &e}).as_mat(1);
    s.add(compare_mats("eta_AB = R^{CD}_{AB} eta_CD [" + label + "]", eta, viaR, 0));
    Mat viaD = q.bigD.transpose() * eta.transpose();
    s.add(compare_mats("eta_AB = D^C_A eta_BC [" + label + "]", eta, viaD, 0));
  }
  {
    Tensor a = einsum("cad,db->cab", {&f, &e});
    Tensor b = einsum("edca,dbf,ef->cab", {&R, &f, &e});
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    CheckResult r = tensor_zero("f_{CA}^D eta_DB + R^{ED}_{CA} f_{DB}^F eta_EF = 0 [" + label + "]", a);
    s.add(r);
  }
  return s;
}

Mat sun_fundamental_metric(int N) {
  const DeformationContext ctx(N, N);
  const Scalar c1 = ctx.q_pow(-1, N) *
                    (ctx.q() * qnum(N - 1, N, QBase::q, ctx) - ctx.q_pow(-1) * qnum(N + 1, N, QBase::q_inv, ctx) +
                     ctx.q_pow(2 - 3 * N, N) * qnum(1, N, QBase::q_inv, ctx) * qnum(1, N, QBase::q_inv, ctx) *
                         qnum(N, QBase::q_inv, ctx));
  const Scalar c2 = ctx.q_pow(N - 3 - 2 * N * N, N);
  const int n = N * N;
  Mat eta(z(n), z(n));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          Scalar v;
          if (i == j && k == l) v += c1;
          if (i == l && k == j) v += c2 * ctx.q_pow(2 * k);
          eta(z(i * N + j), z(k * N + l)) = v;
        }
  return eta;
}

CheckResult check_block_diagonal(const Mat& eta_primed, const std::string& label) {
  const std::string name = "eta block-diagonal in the primed basis [" + label + "]";
  for (std::size_t a = 1; a < eta_primed.rows(); ++a) {
    if (!eta_primed(0, a).is_zero()) return CheckResult::fail(name, "eta_0a != 0", {0, static_cast<int>(a)}, eta_primed(0, a));
    if (!eta_primed(a, 0).is_zero()) return CheckResult::fail(name, "eta_a0 != 0", {static_cast<int>(a), 0}, eta_primed(a, 0));
  }
  return CheckResult::pass(name);
}

Scalar fn_index_convention(int N) {
  if (N != 2) return Scalar(1);
  const DeformationContext ctx(2, 2);
  return ctx.q_pow(-9, 2) / qnum(2, QBase::q_inv, ctx);
}

CanonicalResult canonical_and_index(const Mat& fn_block, const Mat& rho_block, const Scalar& fn_index,
                                    const std::vector<Mat>& adjoint_blocks) {
  CanonicalResult out;
  Mat fn_inv;
  try {
    fn_inv = inverse(fn_block);
  } catch (const SingularMatrixError&) {
    throw StructureError("the fn metric on the primed generators is not invertible");
  }
  out.canonical = fn_block * fn_index.inv();
  out.K = fn_inv * rho_block;
  CheckResult comm = CheckResult::pass("K commutes with ad'");
  for (std::size_t a = 0; a < adjoint_blocks.size(); ++a)
    if (!commutator(out.K, adjoint_blocks[a]).is_zero()) {
      comm = CheckResult::fail(comm.name, "[K, ad'(e_A)] != 0", {static_cast<int>(a)});
      break;
    }
  out.checks.add(comm);
  if (auto k = out.K.scalar_multiple_of_identity()) {
    out.index = *k * fn_index;
    out.checks.add(CheckResult::pass("K is scalar", "K = " + k->str() + " I"));
  } else {
    out.checks.add(CheckResult::fail("K is scalar", "K is not proportional to the identity"));
  }
  return out;
}

std::pair<Mat, CheckResult> casimir(const RepBundle& b, const Mat& inv_canonical, const PrimedBasis& pb) {
  const int n = pb.n;
  std::vector<Mat> e;
  for (int a = 1; a < n; ++a) e.push_back(primed_image(b, pb, a));
  Mat qm(z(b.dim), z(b.dim));
  for (int a = 0; a < n - 1; ++a)
    for (int c = 0; c < n - 1; ++c) {
      const Scalar& w = inv_canonical(z(a), z(c));
      if (!w.is_zero()) qm += e[z(a)] * e[z(c)] * w;
    }
  const std::string name = "casimir central [" + b.name + "]";
  for (int a = 0; a < n; ++a)
    if (!commutator(qm, b.gen[z(a)]).is_zero()) return {qm, CheckResult::fail(name, "[Q', rho(chi_A)] != 0", {a})};
  return {qm, CheckResult::pass(name)};
}

KillingReport killing_report(const QlaStructure& q, const PrimedBasis& pb, const RepBundle& rho,
                             const Mat& fn_eta_primed, const Scalar& fn_index) {
  KillingReport r;
  const auto m = z(pb.n - 1);
  r.rep_name = rho.name;
  r.eta_full = killing_metric(rho);
  r.eta_primed_all = primed_metric(r.eta_full, pb);
  r.eta_primed = r.eta_primed_all.block(1, 1, m, m);
  r.eta00 = r.eta_primed_all(0, 0);
  r.checks.add(check_metric_identities(q, r.eta_full, rho.name));
  r.checks.add(check_block_diagonal(r.eta_primed_all, rho.name));
  CanonicalResult c = canonical_and_index(fn_eta_primed, r.eta_primed, fn_index, adjoint_prime_matrices(pb));
  r.checks.add(c.checks);
  r.canonical = c.canonical;
  r.K = c.K;
  r.index = c.index;
  r.inv_canonical = inverse(r.canonical);
  auto [qm, central] = casimir(rho, r.inv_canonical, pb);
  r.casimir_mat = qm;
  r.casimir_eigen = qm.scalar_multiple_of_identity();
  r.checks.add(central);
  // full-metric casimir from this rep's own metric
  try {
    const Mat inv_full = inverse(r.eta_full);
    Mat qf(z(rho.dim), z(rho.dim));
    for (int a = 0; a < pb.n; ++a)
      for (int b = 0; b < pb.n; ++b)
        if (!inv_full(z(a), z(b)).is_zero()) qf += rho.gen[z(a)] * rho.gen[z(b)] * inv_full(z(a), z(b));
    CheckResult fc = CheckResult::pass("full-metric casimir central [" + rho.name + "]");
    for (int a = 0; a < pb.n; ++a)
      if (!commutator(qf, rho.gen[z(a)]).is_zero()) {
        fc = CheckResult::fail(fc.name, "[Q, rho(chi_A)] != 0", {a});
        break;
      }
    r.checks.add(fc);
    // Q^(rho) - eta^00 chi_0^2 = Q'/index with this rep's own metric
    if (!r.index.is_zero() && !r.eta00.is_zero()) {
      Mat c0 = primed_image(rho, pb, 0);
      Mat lhs = qf - c0 * c0 * r.eta00.inv();
      r.checks.add(compare_mats("Q - eta^00 chi_0^2 = Q'/index [" + rho.name + "]", lhs, qm * r.index.inv()));
    }
  } catch (const SingularMatrixError&) {
    r.checks.add(CheckResult::skip("full-metric casimir central [" + rho.name + "]", "full metric is singular"));
  }
  return r;
}

std::vector<PositivitySample> positivity_sample(const Mat& eta_primed_all, const PrimedBasis& pb, const Mat& D,
                                                const std::vector<Rational>& p_samples, const std::vector<Mat>& xi_samples) {
  std::vector<PositivitySample> out;
  const int n = pb.n;
  const int N = static_cast<int>(D.rows());
  for (const auto& p0 : p_samples) {
    const Mat eta = eta_primed_all.eval_at(p0);
    const Mat tinv = pb.T_inv.eval_at(p0);
    const Mat dinv = inverse(D).eval_at(p0);
    for (const auto& xi : xi_samples) {
      Vec v(z(n));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) v[z(i * N + j)] = xi(z(j), z(i));
      Vec w = tinv * v;
      Scalar val;
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
          if (!eta(z(a), z(b)).is_zero()) val += eta(z(a), z(b)) * w[z(a)] * w[z(b)];
      PositivitySample s;
      s.p = p0;
      s.xi = xi;
      s.value = val.rational_value();
      s.proportional_to_dinv = proportional(xi, dinv);
      out.push_back(std::move(s));
    }
  }
  return out;
}

CheckResult positivity_verdict(const std::vector<PositivitySample>& samples) {
  const std::string name = "primed fn metric is positive";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.value < 0) return CheckResult::fail(name, "negative value at p = " + to_string(s.p), {static_cast<int>(i)}, Scalar(s.value));
    if ((s.value == 0) != s.proportional_to_dinv)
      return CheckResult::fail(name, "zero set differs from Xi ~ D^-1 at p = " + to_string(s.p), {static_cast<int>(i)}, Scalar(s.value));
  }
  return CheckResult::pass(name, std::to_string(samples.size()) + " samples");
}

std::string killing_to_json(const KillingReport& r) {
  auto mat = [](const Mat& m) {
    auto a = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
      a.push_back(row);
    }
    return a;
  };
  nlohmann::ordered_json j;
  j["rep"] = r.rep_name;
  j["eta_full"] = mat(r.eta_full);
  j["eta_primed"] = mat(r.eta_primed);
  j["eta00"] = r.eta00.str();
  j["canonical"] = mat(r.canonical);
  j["index"] = r.index.str();
  j["K"] = mat(r.K);
  j["casimir"] = mat(r.casimir_mat);
  j["casimir_eigenvalue"] = r.casimir_eigen ? nlohmann::ordered_json(r.casimir_eigen->str()) : nlohmann::ordered_json();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks.results) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}});
  j["checks"] = checks;
  return j.dump(1) + "\n";
}

}  // namespace qla
