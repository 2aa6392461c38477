#include <random>

#include "doctest.h"
#include "qla/killing.hpp"
#include "support.hpp"

using namespace qla;

namespace {

struct Setup {
  RMatrixSpec spec;
  QlaStructure q;
  RepBundle fn, ad;
  UData u;
  PrimedBasis pb;
  KillingReport kfn, kad;
  explicit Setup(int N)
      : spec(sun_r_matrix(N)), q(build_structure(spec)), fn(fundamental_generators(spec)), u(appendix_data(spec.r)) {
    if (N == 2) {
      Vec chi1 = build_primed(q, fn, u.D).primed_generator(0);
      Vec ep(4), em(4);
      ep[1] = 1;
      em[2] = 1;
      pb = build_primed_with(q, fn, u.D, {ep, em, spec.ctx().q_pow(2) * chi1});
    } else {
      pb = build_primed(q, fn, u.D);
    }
    ad = adjoint_prime(pb, q);
    Mat block = primed_metric(killing_metric(fn), pb).block(1, 1, static_cast<std::size_t>(q.n - 1), static_cast<std::size_t>(q.n - 1));
    kfn = killing_report(q, pb, fn, block, fn_index_convention(N));
    kad = killing_report(q, pb, ad, block, fn_index_convention(N));
  }
};

const Setup& setup(int N) {
  static Setup s2(2), s3(3);
  return N == 2 ? s2 : s3;
}

Mat su2_pattern(const DeformationContext& ctx) {
  Mat m(3, 3);
  m(0, 1) = ctx.q();
  m(1, 0) = ctx.q_pow(-1);
  m(2, 2) = ctx.q() / qnum(2, QBase::q_inv, ctx);
  return m;
}

void require_all(const CheckSuite& s) {
  for (const auto& r : s.results) CHECK_MESSAGE((r.passed || r.skipped), r.summary());
}

}  // namespace

TEST_CASE("Killing form basics") {
  const Setup& s = setup(2);
  DeformationContext ctx = s.spec.ctx();
  Vec zero(4), ep(4), em(4);
  ep[1] = 1;
  em[2] = 1;
  CHECK(killing_form(s.fn, zero, zero).is_zero());
  CHECK(killing_form(s.fn, ep, em) == ctx.q_pow(-7, 2) * ctx.q());

  // eta(y, x) = eta(x, S^2 y) with S^2(chi_A) = D^B_A chi_B
  std::mt19937 rng(7);
  for (int t = 0; t < 5; ++t) {
    Vec x, y;
    for (int a = 0; a < 4; ++a) {
      x.push_back(Scalar(testing::random_poly(rng, 2, 2)));
      y.push_back(Scalar(testing::random_poly(rng, 2, 2)));
    }
    CHECK(killing_form(s.fn, y, x) == killing_form(s.fn, x, s.q.bigD * y));
  }
}

TEST_CASE("metric identities") {
  for (int N : {2, 3}) {
    const Setup& s = setup(N);
    require_all(s.kfn.checks);
    require_all(s.kad.checks);
    CHECK(killing_metric(s.fn) == sun_fundamental_metric(N));
  }
  const Setup& s = setup(2);
  Mat bad = s.kfn.eta_full;
  bad(1, 2) += Scalar(1);
  CheckSuite c = check_metric_identities(s.q, bad, "perturbed");
  REQUIRE(c.results.size() == 3);
  CHECK_FALSE(c.results[2].passed);
  CHECK(c.results[2].indices.size() == 3);
}

TEST_CASE("su(2) metrics, indices and casimirs") {
  const Setup& s = setup(2);
  DeformationContext ctx = s.spec.ctx();
  const Scalar two = qnum(2, QBase::q_inv, ctx), four = qnum(4, QBase::q_inv, ctx);
  const Mat pat = su2_pattern(ctx);

  CHECK(s.kfn.eta_primed == pat * ctx.q_pow(-7, 2));
  CHECK(s.kad.eta_primed == pat * (four / ctx.q_pow(3)));
  CHECK(s.kfn.canonical == pat * (ctx.q() + ctx.q_pow(-1)));
  CHECK(s.kfn.index == ctx.q_pow(-9, 2) / two);
  CHECK(s.kad.index == four / (ctx.q_pow(4) * two));
  CHECK(s.kad.K == Mat::identity(3) * (ctx.q_pow(1, 2) * four));

  const Scalar lam = ctx.lambda();
  const Scalar half = qnum(1, 2, QBase::q, ctx), three_half = qnum(3, 2, QBase::q_inv, ctx);
  CHECK(s.kfn.eta00 == lam * lam * ctx.q_pow(-1, 2) * two * half * half * three_half * three_half);
  CHECK(s.kad.eta00 == ctx.q_pow(-2) * lam * lam * two * two * qnum(3, QBase::q_inv, ctx));

  REQUIRE(s.kfn.casimir_eigen.has_value());
  REQUIRE(s.kad.casimir_eigen.has_value());
  CHECK(*s.kfn.casimir_eigen == qnum(3, QBase::q_inv, ctx) / (qnum(2, QBase::q, ctx) * two));
  CHECK(*s.kad.casimir_eigen == four / two);

  CHECK(eval_at(s.kfn.index, 1) == Scalar(Rational(1, 2)));
  CHECK(eval_at(s.kad.index, 1) == 2);
  CHECK(eval_at(*s.kfn.casimir_eigen, 1) == Scalar(Rational(3, 4)));
  CHECK(eval_at(*s.kad.casimir_eigen, 1) == 2);
}

TEST_CASE("su(3) rep independence") {
  const Setup& s = setup(3);
  CHECK(s.kad.K.scalar_multiple_of_identity().has_value());
  CHECK(check_block_diagonal(s.kfn.eta_primed_all, "fn").passed);
  CHECK(check_block_diagonal(s.kad.eta_primed_all, "ad'").passed);
  CHECK(eval_at(s.kad.index, 1) == 6);
  CHECK(s.kad.casimir_eigen.has_value());
}

TEST_CASE("K that does not commute is reported") {
  const Setup& s = setup(2);
  Mat rho = s.kfn.eta_primed;
  rho(2, 2) += Scalar(1);
  CanonicalResult c = canonical_and_index(s.kfn.eta_primed, rho, Scalar(1), adjoint_prime_matrices(s.pb));
  CHECK_FALSE(c.checks.passed());
}

TEST_CASE("positivity of the primed fn metric") {
  for (int N : {2, 3}) {
    const Setup& s = setup(N);
    DeformationContext ctx = s.spec.ctx();
    const auto sz = static_cast<std::size_t>(N);
    Mat off(sz, sz);
    off(0, 1) = 1;
    off(1, 0) = 1;
    std::mt19937 rng(11 + N);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Mat> random;
    for (int t = 0; t < 6; ++t) {
      Mat x(sz, sz);
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i; j < sz; ++j) x(i, j) = x(j, i) = Scalar(Rational(num(rng), den(rng)));
      random.push_back(x);
    }
    // closed form q^{1-3/N-2N} tr(D (Xi - tr(Xi)/tr(D^-1) D^-1)^2)
    const Scalar pref = ctx.q_pow(N - 3 - 2 * N * N, N);
    for (const Rational& p0 : {Rational(1), Rational(3, 2), Rational(2)}) {
      const Mat d = s.u.D.eval_at(p0), dinv = inverse(s.u.D).eval_at(p0);
      std::vector<Mat> xis{Mat(sz, sz), dinv * Scalar(Rational(-3, 2)), off};
      xis.insert(xis.end(), random.begin(), random.end());
      auto samples = positivity_sample(s.kfn.eta_primed_all, s.pb, s.u.D, {p0}, xis);
      CHECK(positivity_verdict(samples).passed);
      for (const auto& smp : samples) {
        Scalar r = smp.xi.trace() / dinv.trace();
        Mat y = smp.xi - dinv * r;
        CHECK(Scalar(smp.value) == eval_at(pref, p0) * (d * y * y).trace());
      }
      CHECK(samples[0].value == 0);
      CHECK(samples[1].value == 0);
      CHECK(samples[1].proportional_to_dinv);
      CHECK(samples[2].value > 0);
    }
  }
}

TEST_CASE("a negative sample fails the verdict") {
  PositivitySample s;
  s.p = 2;
  s.value = -1;
  CHECK_FALSE(positivity_verdict({s}).passed);
  s.value = 0;
  s.proportional_to_dinv = false;
  CHECK_FALSE(positivity_verdict({s}).passed);
}

TEST_CASE("report JSON") {
  std::string j = killing_to_json(setup(2).kfn);
  CHECK(j.find("\"index\"") != std::string::npos);
}
