#include "doctest.h"
#include "qla/primed.hpp"

using namespace qla;

namespace {

struct Setup {
  RMatrixSpec spec;
  QlaStructure q;
  RepBundle fn;
  UData u;
  explicit Setup(int N) : spec(sun_r_matrix(N)), q(build_structure(spec)), fn(fundamental_generators(spec)), u(appendix_data(spec.r)) {}
};

const Setup& setup(int N) {
  static Setup s2(2), s3(3);
  return N == 2 ? s2 : s3;
}

// {chi_+, chi_-, chi_3} with chi_3 = q^2 chi'_(11)
PrimedBasis paper_basis(const Setup& s) {
  Vec chi1 = build_primed(s.q, s.fn, s.u.D).primed_generator(0);
  Vec ep(4), em(4);
  ep[1] = 1;
  em[2] = 1;
  return build_primed_with(s.q, s.fn, s.u.D, {ep, em, s.spec.ctx().q_pow(2) * chi1});
}

void require_all(const CheckSuite& s) {
  for (const auto& r : s.results) CHECK_MESSAGE((r.passed || r.skipped), r.summary());
}

}  // namespace

TEST_CASE("D-vector") {
  const Setup& s2 = setup(2);
  DeformationContext c2 = s2.spec.ctx();
  Vec d = d_vector(s2.q, s2.u.D);
  CHECK(d == Vec{Scalar(1), Scalar(0), Scalar(0), c2.q_pow(-2)});

  const Setup& s3 = setup(3);
  DeformationContext c3 = s3.spec.ctx();
  Vec d3 = d_vector(s3.q, s3.u.D);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d3[static_cast<std::size_t>(i * 3 + j)] == (i == j ? c3.q_pow(-2 * i) : Scalar(0)));

  for (const Setup* s : {&s2, &s3}) {
    const int n = s->q.n;
    Vec dv = d_vector(s->q, s->u.D);
    // f_{AB}^C D^B = 0 and R^{CA}_{BD} D^D = delta^A_B D^C
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        Scalar sum;
        for (int b = 0; b < n; ++b) sum += s->q.f_at(a, b, c) * dv[static_cast<std::size_t>(b)];
        CHECK(sum.is_zero());
      }
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Scalar sum;
          for (int e = 0; e < n; ++e) sum += s->q.bigR(c, a, b, e) * dv[static_cast<std::size_t>(e)];
          CHECK(sum == (a == b ? dv[static_cast<std::size_t>(c)] : Scalar(0)));
        }
  }

  QlaStructure flat = s2.q;
  flat.f = Tensor(flat.n, 3);
  CHECK_THROWS_AS(d_vector(flat, s2.u.D), StructureError);
}

TEST_CASE("su(2) basis of the paper") {
  const Setup& s = setup(2);
  DeformationContext ctx = s.spec.ctx();
  PrimedBasis pb = paper_basis(s);
  Scalar two = qnum(2, QBase::q_inv, ctx);
  Vec chi3{two.inv(), Scalar(0), Scalar(0), -two.inv()};
  for (int x = 0; x < 4; ++x) CHECK(pb.T(static_cast<std::size_t>(x), 3) == chi3[static_cast<std::size_t>(x)]);
  require_all(primed_structure_checks(s.q, pb));

  // chi_0 ad chi_a = -lambda [2]_{1/q} chi_a
  Scalar c0 = -ctx.lambda() * two;
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) CHECK(pb.fp(0, a, b) == (a == b ? c0 : Scalar(0)));
  // chi_3 ad chi_3 = -lambda chi_3, chi_+- ad chi_-+ = +-([2]_{1/q}/q) chi_3, chi_3 ad chi_+- = +-q^{-+1} chi_+-
  CHECK(pb.fp(3, 3, 3) == -ctx.lambda());
  CHECK(pb.fp(1, 2, 3) == two / ctx.q());
  CHECK(pb.fp(2, 1, 3) == -two / ctx.q());
  CHECK(pb.fp(3, 1, 1) == ctx.q_pow(-1));
  CHECK(pb.fp(3, 2, 2) == -ctx.q());
  CHECK(pb.fp(1, 3, 1) == -ctx.q());
  CHECK(pb.fp(2, 3, 2) == ctx.q_pow(-1));

  // mu(fn) = -lambda [1/2]_q [3/2]_{1/q}
  Scalar mu = -ctx.lambda() * qnum(1, 2, QBase::q, ctx) * qnum(3, 2, QBase::q_inv, ctx);
  REQUIRE(pb.mu.count("fn") == 1);
  CHECK(pb.mu.at("fn") == mu);
  CHECK(mu_of(s.fn, pb) == mu);
  CHECK(eval_at(mu, 1) == 0);
}

TEST_CASE("f' reduces to su(2) at p = 1") {
  const Setup& s = setup(2);
  PrimedBasis pb = paper_basis(s);
  std::vector<Mat> e;
  for (int a = 0; a < 4; ++a) e.push_back(primed_image(s.fn, pb, a).eval_at(1));
  CHECK(e[0].is_zero());
  // coordinates of a traceless 2x2 matrix on e_+ = -E10, e_- = -E01, e_3 = diag(-1/2, 1/2)
  auto coords = [&](const Mat& m) {
    return std::vector<Scalar>{m(1, 0) / e[1](1, 0), m(0, 1) / e[2](0, 1), m(1, 1) / e[3](1, 1)};
  };
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) {
      auto c = coords(commutator(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]));
      for (int k = 1; k < 4; ++k) CHECK(eval_at(pb.fp(a, b, k), 1) == c[static_cast<std::size_t>(k - 1)]);
      CHECK(eval_at(pb.fp(a, b, 0), 1) == 0);
      CHECK(eval_at(pb.fp(0, a, b), 1) == 0);
    }
}

TEST_CASE("ad' for su(2)") {
  const Setup& s = setup(2);
  DeformationContext ctx = s.spec.ctx();
  PrimedBasis pb = paper_basis(s);
  RepBundle ad = adjoint_prime(pb, s.q);
  CHECK(ad.dim == 3);
  CHECK(ad.u == Mat::diag({ctx.q_pow(-2), ctx.q_pow(-6), ctx.q_pow(-4)}));
  std::vector<Mat> m = adjoint_prime_matrices(pb);
  Scalar two = qnum(2, QBase::q_inv, ctx);
  CHECK(m[0] == Mat::identity(3) * (-ctx.lambda() * two));
  CHECK(m[3] == Mat::diag({ctx.q_pow(-1), -ctx.q(), -ctx.lambda()}));
  auto mu = mu_of(ad, pb);
  REQUIRE(mu.has_value());
  CHECK(*mu == -ctx.lambda() * qnum(1, QBase::q, ctx) * qnum(2, QBase::q_inv, ctx));
  CHECK(check_comm_prime(s.q, pb, ad, *mu).passed);
  CHECK(check_comm_prime(s.q, pb, s.fn, pb.mu.at("fn")).passed);
  CHECK(check_chi0_central(ad, pb).passed);
  CHECK(check_chi0_central(s.fn, pb).passed);
  CHECK(check_traceless(ad, pb).passed);
  CHECK(check_traceless(s.fn, pb).passed);
  for (const auto& r : verify_qla(s.q, ad).results) CHECK_MESSAGE(r.passed, r.summary());
  CHECK_FALSE(check_comm_prime(s.q, pb, ad, *mu + Scalar(1)).passed);
}

TEST_CASE("default basis and other drops") {
  const Setup& s = setup(2);
  for (int drop : {0, 3}) {
    PrimedBasis pb = build_primed(s.q, s.fn, s.u.D, drop);
    CHECK(pb.dropped_index == drop);
    require_all(primed_structure_checks(s.q, pb));
    CHECK(adjoint_prime(pb, s.q).dim == 3);
  }
  CHECK_THROWS_AS(build_primed(s.q, s.fn, s.u.D, 4), DimensionError);
  // dropping an off-diagonal generator leaves chi'_(01) out of the span
  Vec bad(4);
  bad[0] = 1;
  CHECK_THROWS_AS(build_primed_with(s.q, s.fn, s.u.D, {bad, bad, bad}), StructureError);
}

TEST_CASE("su(3) primed basis") {
  const Setup& s = setup(3);
  PrimedBasis pb = build_primed(s.q, s.fn, s.u.D);
  CHECK(pb.dropped_index == 8);
  require_all(primed_structure_checks(s.q, pb));
  RepBundle ad = adjoint_prime(pb, s.q);
  CHECK(ad.dim == 8);
  CHECK(null_space(vstack(adjoint_prime_matrices(pb))).empty());
  CHECK(mu_of(ad, pb).has_value());
  CHECK(check_traceless(s.fn, pb).passed);
  CHECK(check_traceless(ad, pb).passed);
  CHECK(check_chi0_central(s.fn, pb).passed);
  CHECK(check_comm_prime(s.q, pb, s.fn, pb.mu.at("fn")).passed);
  for (const auto& r : lie_comm_checks(s.q, ad).results) CHECK_MESSAGE(r.passed, r.summary());
}

TEST_CASE("primed JSON") {
  PrimedBasis pb = paper_basis(setup(2));
  std::string j = primed_to_json(pb);
  CHECK(j.find("\"d_vec\"") != std::string::npos);
  CHECK(j.find("\"mu\"") != std::string::npos);
}
