#include <random>

#include "doctest.h"
#include "qla/scalar.hpp"
#include "support.hpp"

using namespace qla;

namespace {
Scalar P(const char* s) { return Scalar::parse(s); }
}  // namespace

TEST_CASE("arithmetic examples") {
  DeformationContext su2 = DeformationContext::su(2);
  Scalar lam = su2.lambda();
  CHECK(lam + Scalar(0) == lam);
  CHECK(lam * lam.inv() == Scalar(1));
  for (int k : {1, 2, 3}) {
    DeformationContext ctx(2, k);
    Scalar q = ctx.q();
    Scalar lhs = (q * q - Scalar(1)).inv() * (q.pow(4) - Scalar(1));
    CHECK(lhs == q * q + Scalar(1));
    CHECK(lhs.is_polynomial());
  }
  CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("canonical form") {
  Scalar s = Scalar::fraction(LaurentPoly::monomial(2, 3), LaurentPoly::monomial(Rational(-4, 3), 5) + LaurentPoly::monomial(4, 2));
  // den: lowest exponent 0, integer primitive, positive leading
  CHECK(s.den().low() == 0);
  CHECK(s.den().leading() > 0);
  CHECK(s.den() == LaurentPoly::monomial(1, 3) - LaurentPoly(3));
  CHECK(s.num() == LaurentPoly::monomial(Rational(-3, 2), 1));
  CHECK(Scalar::fraction(LaurentPoly(0), LaurentPoly::monomial(1, 3) + LaurentPoly(1)).den().is_one());
}

TEST_CASE("printing and parsing") {
  CHECK(P("p^2 - 1/2*p + 3").str() == "p^2-1/2*p+3");
  CHECK(P("p^-3").str() == "p^-3");
  CHECK(P("-p").str() == "-p");
  CHECK(P("0").str() == "0");
  CHECK(P("2/4").str() == "1/2");
  CHECK(P("p/2") == Scalar::p_power(1, Rational(1, 2)));
  CHECK(P("(p+1)/2") == Scalar::fraction(LaurentPoly::monomial(1, 1) + LaurentPoly(1), LaurentPoly(2)));
  CHECK(P("p+1/2") == Scalar::fraction(LaurentPoly::monomial(2, 1) + LaurentPoly(1), LaurentPoly(2)));
  CHECK(P("p^2-1/p+1") == P("(p^2-1)/(p+1)"));
  CHECK(P("(p^2-1)/(p+1)") == P("p-1"));
  CHECK(P("1 / p") == Scalar::p_power(-1));
  CHECK_THROWS_AS(P("p^"), ParseError);
  CHECK_THROWS_AS(P("2p"), ParseError);
  CHECK_THROWS_AS(P("p/0"), ParseError);
  CHECK_THROWS_AS(P("(p+1"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);

  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    Scalar s = testing::random_scalar(rng);
    CHECK(Scalar::parse(s.str()) == s);
  }
}

TEST_CASE("quantum numbers") {
  for (int n : {2, 3}) {
    DeformationContext ctx = DeformationContext::su(n);
    Scalar q = ctx.q();
    CHECK(qnum(1, QBase::q, ctx) == Scalar(1));
    CHECK(qnum(2, QBase::q, ctx) == q * q + Scalar(1));
    CHECK(qnum(0, QBase::q, ctx) == Scalar(0));
    for (int m = 1; m <= 5; ++m) {
      CHECK(eval_at(qnum(m, QBase::q, ctx), 1) == m);
      CHECK(eval_at(qnum(m, QBase::q_inv, ctx), 1) == m);
      CHECK(qnum(m, QBase::q, ctx) * qnum(1, QBase::q, ctx) == qnum(m, QBase::q, ctx));
      CHECK(qnum(m, QBase::q_inv, ctx) == qnum(m, QBase::q, ctx).reflected());
    }
    CHECK(qfact(0, ctx) == Scalar(1));
    CHECK(qfact(1, ctx) == Scalar(1));
    CHECK(qfact(2, ctx) == q * q + Scalar(1));
    CHECK(qfact(4, ctx) == qnum(1, QBase::q, ctx) * qnum(2, QBase::q, ctx) * qnum(3, QBase::q, ctx) * qnum(4, QBase::q, ctx));
  }
  DeformationContext k2(2, 2);
  // [1/2]_q = (q - 1)/(q^2 - 1) = 1/(q + 1)
  CHECK(qnum(1, 2, QBase::q, k2) == (k2.q() + Scalar(1)).inv());
  CHECK(eval_at(qnum(3, 2, QBase::q_inv, k2), 1) == Rational(3, 2));
  CHECK_THROWS_AS(qnum(1, 3, QBase::q, k2), Error);
  CHECK_THROWS_AS(k2.q_pow(1, 3), Error);
  CHECK(k2.q_pow(-5, 2) == Scalar::p_power(-5));
  CHECK_THROWS_AS(DeformationContext(1, 1), Error);
}

TEST_CASE("evaluation") {
  DeformationContext ctx = DeformationContext::su(2);
  CHECK(eval_at(ctx.lambda(), 1) == 0);
  CHECK(eval_at(qnum(3, QBase::q_inv, ctx), 1) == 3);
  try {
    (void)eval_at(ctx.lambda().inv(), 1);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.denominator == ctx.lambda().inv().den().str());
  }
  // regular only after cancellation
  DeformationContext su3 = DeformationContext::su(3);
  Scalar s = (Scalar(1) - su3.q_pow(-2, 3)) / su3.lambda();
  CHECK(eval_at(s, 1) == Rational(1, 3));
  CHECK(eval_at(P("p^2+1/p"), Rational(1, 2)) == Rational(5, 2));
  CHECK(eval_at(P("p^2+p^-1"), Rational(1, 2)) == Rational(9, 4));
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 150; ++i) {
    Scalar a = testing::random_scalar(rng), b = testing::random_scalar(rng), c = testing::random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK((a - a).den().is_one());
    if (!a.is_zero()) {
      CHECK(a * a.inv() == Scalar(1));
      if (!b.is_zero()) CHECK((a / b) * (b / a) == Scalar(1));
    }
  }
}
