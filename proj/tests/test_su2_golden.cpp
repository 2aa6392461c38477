#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qla/su2_golden.hpp"

using namespace qla;

namespace {

const Pipeline& su2() {
  static const Pipeline p = build_pipeline(sun_r_matrix(2));
  return p;
}

std::size_t diffs_in(const GoldenReport& r, const std::string& table) {
  for (const auto& t : r.tables)
    if (t.table == table) return t.diffs.size();
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("embedded fixture matches the data file") {
  std::ifstream in(QLA_SOURCE_DIR "/data/su2_tables.json");
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == su2_fixture_text());
  CHECK_THROWS_AS(su2_tables_from_json("{"), ParseError);
  CHECK_THROWS_AS(su2_tables_from_json("{\"root_order\": 2}"), ParseError);
}

TEST_CASE("golden suite reproduces every table") {
  GoldenReport r = golden_suite(su2_tables(), su2());
  for (const auto& t : r.tables) CHECK_MESSAGE(t.diffs.empty(), t.table);
  for (const auto& c : r.checks.results) CHECK_MESSAGE(c.passed, c.summary());
  CHECK(r.diff_count() == 0);
  CHECK(r.passed());
  CHECK(r.render().find("0 diffs, 0 failed checks") != std::string::npos);
  CHECK(r.tables.size() >= 25);
  CHECK(golden_suite(su2_tables(), build_pipeline(sun_r_matrix(2))).to_json() == r.to_json());
}

TEST_CASE("classical columns") {
  GoldenReport r = golden_suite(su2_tables(), su2());
  CHECK(r.values.at("index(fn)").eval_at(1) == Rational(1, 2));
  CHECK(r.values.at("fn(Q')").eval_at(1) == Rational(3, 4));
  CHECK(r.values.at("index(ad')").eval_at(1) == 2);
  CHECK(r.values.at("ad'(Q')").eval_at(1) == 2);
  std::string text = r.render({Rational(1)});
  CHECK(text.find("index(fn) = (p^-5)/(p^4+1)  | 1/2") != std::string::npos);
}

TEST_CASE("stale tables give localized diffs") {
  Su2Tables t = su2_tables();
  t.fn.index *= Scalar(2);
  GoldenReport r = golden_suite(t, su2());
  CHECK(r.diff_count() == 1);
  CHECK(diffs_in(r, "index(fn)") == 1);

  t = su2_tables();
  t.ad.gen["chi_3"](1, 1) += Scalar(1);
  r = golden_suite(t, su2());
  CHECK(r.diff_count() == 1);
  REQUIRE(diffs_in(r, "ad'(chi_3)") == 1);
  for (const auto& tc : r.tables)
    if (tc.table == "ad'(chi_3)") CHECK(tc.diffs[0].entry == "(1,1)");
  CHECK_FALSE(r.passed());

  t = su2_tables();
  t.adj_basis.pop_back();
  r = golden_suite(t, su2());
  CHECK(r.diff_count() == 1);
  CHECK(diffs_in(r, "adjoint action") == 1);
}

TEST_CASE("Jimbo-Drinfeld relations") {
  Su2Tables t = su2_tables();
  CHECK(jimbo_drinfeld_check(t).passed);
  // p = 1: [H, X+-] = +-2 X+-, [X+, X-] = H
  CHECK(commutator(t.Xp, t.Xm).eval_at(1) == t.H);
  Su2Tables bad = t;
  bad.Xp = bad.Xp * Scalar(-1);
  CheckResult r = jimbo_drinfeld_check(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.name.find("[X+, X-]") != std::string::npos);
}

TEST_CASE("universal R-matrix truncation") {
  Su2Tables t = su2_tables();
  DeformationContext ctx(2, 2);
  const Scalar q = ctx.q(), lam = ctx.lambda();
  // n = 0: q^{HxH/2} with H = diag(-1, 1)
  Mat t0 = Mat::diag({ctx.q_pow(1, 2), ctx.q_pow(-1, 2), ctx.q_pow(-1, 2), ctx.q_pow(1, 2)});
  CHECK(universal_r_term(t, 0).mat() == t0);
  CHECK_FALSE(t0 == t.R.mat());
  // n = 1: only X+ (x) X- survives, at composite row (1,0), column (0,1)
  Mat t1 = universal_r_term(t, 1).mat();
  CHECK(t1.nonzeros() == 1);
  CHECK(t1(2, 1) == ctx.q_pow(-1, 2) * lam);
  CHECK(t.R.mat()(2, 1) == ctx.q_pow(-1, 2) * lam);
  CHECK(universal_r_term(t, 2).mat().is_zero());
  CHECK(universal_r_truncation(t).passed);
  CHECK(sun_r_matrix(2).r.mat() == t0 + t1);

  Su2Tables bad = t;
  bad.R.mat()(2, 1) = q;
  CheckResult r = universal_r_truncation(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.indices == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("su(2) relations at representation level") {
  const Pipeline& p = su2();
  std::vector<Mat> fn;
  for (int a = 0; a < 4; ++a) fn.push_back(primed_image(p.fn, p.pb, a));
  for (const auto& c : su2_comm_relations(p.spec.ctx(), fn, "fn").results) CHECK(c.passed);
  fn[3] = fn[3] * Scalar(2);
  CHECK_FALSE(su2_comm_relations(p.spec.ctx(), fn, "fn").passed());
}

TEST_CASE("fixture round trip through JSON edits") {
  nlohmann::json j = nlohmann::json::parse(su2_fixture_text());
  j["fn"]["index"] = "p";
  Su2Tables t = su2_tables_from_json(j.dump());
  CHECK(t.fn.index == Scalar::p_power(1));
  j["root_order"] = 4;
  CHECK_THROWS_AS(su2_tables_from_json(j.dump()), ParseError);
}
