#include "doctest.h"
#include "qla/qla.hpp"

using namespace qla;

namespace {

void require_all(const CheckSuite& s) {
  for (const auto& r : s.results) CHECK_MESSAGE((r.passed || r.skipped), r.summary());
}

const QlaStructure& su(int n) {
  static std::vector<std::optional<QlaStructure>> cache(5);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) slot = build_structure(sun_r_matrix(n));
  return *slot;
}

}  // namespace

TEST_CASE("fundamental generators of su(2)") {
  RMatrixSpec s = sun_r_matrix(2);
  DeformationContext ctx = s.ctx();
  RepBundle fn = fundamental_generators(s);
  REQUIRE(fn.gen.size() == 4);
  Mat g01(2, 2);
  g01(1, 0) = -ctx.q_pow(-1);
  CHECK(fn.gen[1] == g01);
  // every image is finite at p = 1 and tends to -E_lk + delta_kl/N
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      Mat want(2, 2);
      want(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) = -1;
      if (k == l) want += Mat::identity(2) * Scalar(Rational(1, 2));
      CHECK(fn.gen[static_cast<std::size_t>(k * 2 + l)].eval_at(1) == want);
    }
  std::vector<Mat> alt = fn_from_rhat_squared(s);
  for (std::size_t a = 0; a < 4; ++a) CHECK(alt[a] == fn.gen[a]);
}

TEST_CASE("generator placement agrees for su(3)") {
  RMatrixSpec s = sun_r_matrix(3);
  RepBundle fn = fundamental_generators(s);
  std::vector<Mat> alt = fn_from_rhat_squared(s);
  for (std::size_t a = 0; a < 9; ++a) CHECK(alt[a] == fn.gen[a]);
}

TEST_CASE("classical limits of the structure") {
  for (int N : {2, 3}) {
    const QlaStructure& q = su(N);
    const int n = q.n;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            CHECK(eval_at(q.bigR(a, b, c, d), 1) == Scalar((a == d && b == c) ? 1 : 0));
    // gl(N) brackets [chi_kl, chi_mn] = delta_ml chi_kn - delta_kn chi_ml
    for (int k = 0; k < N; ++k)
      for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m)
          for (int nn = 0; nn < N; ++nn)
            for (int r = 0; r < N; ++r)
              for (int s = 0; s < N; ++s) {
                int want = 0;
                if (m == l && k == r && nn == s) want += 1;
                if (k == nn && m == r && l == s) want -= 1;
                CHECK(eval_at(q.f_at(k * N + l, m * N + nn, r * N + s), 1) == Scalar(want));
              }
  }
}

TEST_CASE("QLA axioms in the fundamental representation") {
  for (int N : {2, 3}) {
    const QlaStructure& q = su(N);
    RepBundle fn = fundamental_generators(sun_r_matrix(N));
    VerifyOptions opt;
    opt.heavy = N == 2;
    CheckSuite s = verify_qla(q, fn, opt);
    require_all(s);
    CHECK(s.find("deformed jacobi") != nullptr);
  }
}

TEST_CASE("QLA axioms in the adjoint representation of su(2)") {
  const QlaStructure& q = su(2);
  RepBundle ad = adjoint_rep(q);
  require_all(verify_qla(q, ad));
  CHECK(check_ybe(q.F_adj, "F").passed);
  CHECK(check_S2_consistency(q, ad).passed);
}

TEST_CASE("perturbations are caught") {
  QlaStructure q = build_structure(sun_r_matrix(2));
  RepBundle fn = fundamental_generators(sun_r_matrix(2));
  q.f[static_cast<std::size_t>((1 * q.n + 2) * q.n + 0)] += Scalar(1);
  CheckSuite s = verify_qla(q, fn, VerifyOptions{false});
  CHECK_FALSE(s.passed());
  const CheckResult* j = s.find("deformed jacobi");
  REQUIRE(j != nullptr);
  CHECK_FALSE(j->passed);
  CHECK(j->indices.size() == 4);
  const CheckResult* l1 = s.find("commutation relation 1 [fn]");
  REQUIRE(l1 != nullptr);
  CHECK_FALSE(l1->passed);
  CHECK(l1->indices.size() >= 2);

  QlaStructure r = build_structure(sun_r_matrix(2));
  r.bigR(0, 0, 0, 0) += Scalar(1);
  CHECK_FALSE(verify_qla(r, fn, VerifyOptions{false}).passed());
}

TEST_CASE("deformed traces of the fundamental representation") {
  for (int N : {2, 3}) {
    RMatrixSpec s = sun_r_matrix(N);
    DeformationContext ctx = s.ctx();
    const QlaStructure& q = su(N);
    Vec I = deformed_traces(q, fundamental_generators(s));
    Scalar c = ctx.q_pow(-1, N) * (qnum(1, N, QBase::q, ctx) * qnum(N, QBase::q_inv, ctx) - Scalar(1));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const Scalar& v = I[static_cast<std::size_t>(i * N + j)];
        CHECK(v == (i == j ? c : Scalar(0)));
        CHECK(eval_at(v, 1) == 0);
      }
  }
}

TEST_CASE("trace relations reject a wrong vector") {
  const QlaStructure& q = su(2);
  Vec bad = q.I_id;
  bad[1] = 1;
  CHECK_FALSE(check_I_relations(q, bad).passed());
  CHECK(check_I_relations(q, q.I_id).passed());
}

TEST_CASE("bigD identities and S^2") {
  for (int N : {2, 3}) {
    const QlaStructure& q = su(N);
    require_all(check_bigD_identities(q));
    CHECK(check_S2_consistency(q, fundamental_generators(sun_r_matrix(N))).passed);
  }
  QlaStructure q = build_structure(sun_r_matrix(2));
  q.bigD(0, 1) += Scalar(1);
  CHECK_FALSE(check_S2_consistency(q, fundamental_generators(sun_r_matrix(2))).passed);
}

TEST_CASE("kernel of the transposed adjoint is spanned by I") {
  for (int N : {2, 3}) {
    const QlaStructure& q = su(N);
    auto ker = transposed_adjoint_kernel(q);
    REQUIRE(ker.size() == 1);
    const Vec& v = ker.front();
    Scalar ratio;
    for (std::size_t a = 0; a < v.size(); ++a)
      if (!q.I_id[a].is_zero()) ratio = v[a];
    REQUIRE_FALSE(ratio.is_zero());
    for (std::size_t a = 0; a < v.size(); ++a) CHECK(v[a] == ratio * q.I_id[a]);
  }
}

TEST_CASE("SO_q(3) from a file") {
  RMatrixSpec s = load_r_matrix(QLA_TEST_DATA_DIR "/so3_r_matrix.json");
  DeformationContext ctx = s.ctx();
  QlaStructure q = build_structure(s);
  RepBundle fn = fundamental_generators(s);
  require_all(verify_qla(q, fn, VerifyOptions{false}));
  Vec I = deformed_traces(q, fn);
  // proportional to delta with factor q^{eps-N} - q^{N-eps}, eps = 1, up to q^{-(N-eps)}
  Scalar c = ctx.q_pow(-2) * (ctx.q_pow(-2) - ctx.q_pow(2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(I[static_cast<std::size_t>(i * 3 + j)] == (i == j ? c : Scalar(0)));
}

TEST_CASE("structure JSON round trip") {
  const QlaStructure& q = su(2);
  QlaStructure back = structure_from_json(structure_to_json(q));
  CHECK(back.bigR.mat() == q.bigR.mat());
  CHECK(back.F_adj.mat() == q.F_adj.mat());
  CHECK(back.bigD == q.bigD);
  CHECK(back.f.data() == q.f.data());
  CHECK(back.lambda == q.lambda);
  CHECK_THROWS_AS(structure_from_json("{"), ParseError);
}

TEST_CASE("tilde of the structure R-matrix") {
  const QlaStructure& q = su(2);
  const int n = q.n;
  CHECK_THROWS_AS(tilde(q.bigR), StructureError);
  BiMat t = adjoint_tilde(q.bigR);
  // ad(O) ad(S(O)) = 1 written out on the structure constants
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < n; ++x)
      for (int e = 0; e < n; ++e)
        for (int z = 0; z < n; ++z) {
          Scalar sum;
          for (int a = 0; a < n; ++a)
            for (int y = 0; y < n; ++y) sum += q.bigR(x, a, c, y) * t(e, y, a, z);
          CHECK(sum == Scalar((c == e && x == z) ? 1 : 0));
        }
  DeformationContext ctx = q.ctx();
  CHECK(q.bigD == Mat::diag({Scalar(1), ctx.q_pow(2), ctx.q_pow(-2), Scalar(1)}));
}
