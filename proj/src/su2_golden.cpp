#include "qla/su2_golden.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qla {

extern const char* const kSu2FixtureJson;

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

const char* const kNames[4] = {"chi_0", "chi_+", "chi_-", "chi_3"};

int name_index(const std::string& s) {
  for (int i = 0; i < 4; ++i)
    if (s == kNames[i]) return i;
  throw ParseError("unknown generator '" + s + "'", 0);
}

Scalar scalar_from(const nlohmann::json& j) {
  if (!j.is_string()) throw ParseError("expected a scalar string", 0);
  return Scalar::parse(j.get<std::string>());
}

Mat mat_from(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix", 0);
  Mat m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != m.cols()) throw DimensionError("ragged matrix in fixture");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from(j[r][c]);
  }
  return m;
}

Su2RepTables rep_from(const nlohmann::json& j) {
  Su2RepTables r;
  for (const char* g : kNames) r.gen[g] = mat_from(j.at(g));
  r.u = mat_from(j.at("u"));
  r.eta00 = scalar_from(j.at("eta00"));
  r.eta = mat_from(j.at("eta"));
  r.index = scalar_from(j.at("index"));
  r.casimir = mat_from(j.at("casimir"));
  return r;
}

std::string cell(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

class Comparer {
 public:
  explicit Comparer(GoldenReport& r) : r_(r) {}

  void mat(const std::string& table, const Mat& expected, const Mat& computed, const std::string& note = {}) {
    TableCompare t{table, note, 0, {}};
    if (expected.rows() != computed.rows() || expected.cols() != computed.cols()) {
      t.entries = 1;
      t.diffs.push_back({"shape", Scalar(static_cast<long>(expected.rows())), Scalar(static_cast<long>(computed.rows()))});
    } else {
      t.entries = expected.rows() * expected.cols();
      for (std::size_t i = 0; i < expected.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
          if (!(expected(i, j) == computed(i, j))) t.diffs.push_back({cell(i, j), expected(i, j), computed(i, j)});
    }
    r_.tables.push_back(std::move(t));
  }

  void scalar(const std::string& table, const Scalar& expected, const Scalar& computed, const std::string& note = {}) {
    TableCompare t{table, note, 1, {}};
    if (!(expected == computed)) t.diffs.push_back({"value", expected, computed});
    r_.tables.push_back(std::move(t));
  }

  void push(TableCompare t) { r_.tables.push_back(std::move(t)); }

 private:
  GoldenReport& r_;
};

Mat diag_q_power(const Mat& h, const DeformationContext& ctx, int sign) {
  Vec d;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const Rational e = h(i, i).rational_value();
    if (e.get_den() != 1) throw StructureError("H must have integer eigenvalues");
    d.push_back(ctx.q_pow(sign * e.get_num().get_si()));
  }
  return Mat::diag(d);
}

bool is_diagonal(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

Mat power(const Mat& m, int n) {
  Mat r = Mat::identity(m.rows());
  for (int i = 0; i < n; ++i) r = r * m;
  return r;
}

}  // namespace

const std::string& su2_fixture_text() {
  static const std::string text(kSu2FixtureJson);
  return text;
}

Su2Tables su2_tables() { return su2_tables_from_json(su2_fixture_text()); }

Su2Tables su2_tables_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  Su2Tables t;
  try {
    if (j.at("root_order").get<int>() != 2) throw ParseError("su(2) tables must use root order 2", 0);
    const auto& f = j.at("fundamental");
    t.H = mat_from(f.at("H"));
    t.Xp = mat_from(f.at("X+"));
    t.Xm = mat_from(f.at("X-"));
    t.R = BiMat(2, mat_from(j.at("R")));
    t.fn = rep_from(j.at("fn"));
    t.ad = rep_from(j.at("ad"));
    t.canonical = mat_from(j.at("canonical"));
    for (const auto& e : j.at("adj_basis"))
      t.adj_basis.push_back({name_index(e.at("x")), name_index(e.at("y")), name_index(e.at("z")), scalar_from(e.at("c"))});
    t.so_s_squared = scalar_from(j.at("so_q2_3").at("s_squared"));
    t.so_metric = mat_from(j.at("so_q2_3").at("metric"));
    for (const auto& [k, v] : j.at("spin_j").items()) t.spin_j.push_back({k, scalar_from(v.at("mu")), scalar_from(v.at("casimir"))});
    const auto& c = j.at("classical");
    t.classical_fn_index = parse_rational(c.at("fn").at("index").get<std::string>());
    t.classical_fn_casimir = parse_rational(c.at("fn").at("casimir").get<std::string>());
    t.classical_ad_index = parse_rational(c.at("ad").at("index").get<std::string>());
    t.classical_ad_casimir = parse_rational(c.at("ad").at("casimir").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("su(2) tables: ") + e.what(), 0);
  }
  return t;
}

Su2Tables load_su2_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return su2_tables_from_json(ss.str());
}

CheckResult jimbo_drinfeld_check(const Su2Tables& t) {
  const DeformationContext ctx(2, 2);
  const std::string name = "jimbo-drinfeld relations";
  if (!is_diagonal(t.H)) return CheckResult::fail(name, "H is not diagonal");
  CheckResult r = compare_mats(name + ": [H, X+] = 2X+", commutator(t.H, t.Xp), t.Xp * Scalar(2));
  if (!r.passed) return r;
  r = compare_mats(name + ": [H, X-] = -2X-", commutator(t.H, t.Xm), t.Xm * Scalar(-2));
  if (!r.passed) return r;
  const Mat rhs = (diag_q_power(t.H, ctx, 1) - diag_q_power(t.H, ctx, -1)) * ctx.lambda().inv();
  r = compare_mats(name + ": [X+, X-] = (q^H - q^-H)/lambda", commutator(t.Xp, t.Xm), rhs);
  if (!r.passed) return r;
  return CheckResult::pass(name);
}

BiMat universal_r_term(const Su2Tables& t, int n) {
  const DeformationContext ctx(2, 2);
  if (!is_diagonal(t.H)) throw StructureError("H is not diagonal");
  const Scalar coeff = (Scalar(1) - ctx.q_pow(-2)).pow(n) / qfact(n, ctx);
  Vec d;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational hi = t.H(i, i).rational_value(), hj = t.H(j, j).rational_value();
      const Rational e = hi * hj + n * hi - n * hj;
      if (e.get_den() != 1) throw StructureError("H must have integer eigenvalues");
      d.push_back(ctx.q_pow(e.get_num().get_si(), 2));
    }
  return BiMat(2, Mat::diag(d) * kron(power(t.Xp, n), power(t.Xm, n)) * coeff);
}

CheckResult universal_r_truncation(const Su2Tables& t) {
  const std::string name = "universal R-matrix truncation";
  if (!power(t.Xp, 2).is_zero() || !power(t.Xm, 2).is_zero())
    return CheckResult::fail(name, "fn(X+-)^2 != 0, the series does not truncate");
  const Mat sum = universal_r_term(t, 0).mat() + universal_r_term(t, 1).mat();
  CheckResult r = compare_mats(name, sum, t.R.mat(), 2);
  if (r.passed) r.detail = "n = 0, 1 terms";
  return r;
}

CheckSuite su2_comm_relations(const DeformationContext& ctx, const std::vector<Mat>& c, const std::string& label) {
  if (c.size() != 4) throw DimensionError("su2 relations need {chi_0, chi_+, chi_-, chi_3}");
  const Scalar q = ctx.q(), lam = ctx.lambda(), two = qnum(2, QBase::q_inv, ctx);
  const Mat& c0 = c[0];
  const Mat& cp = c[1];
  const Mat& cm = c[2];
  const Mat& c3 = c[3];
  const Mat k = Mat::identity(c0.rows()) - c0 * (lam / two);
  CheckSuite s;
  s.add(expect_zero("su2 relation chi_3 chi_+ [" + label + "]", c3 * cp * q.inv() - cp * c3 * q - k * cp));
  s.add(expect_zero("su2 relation chi_3 chi_- [" + label + "]", c3 * cm * q - cm * c3 * q.inv() + k * cm));
  s.add(expect_zero("su2 relation chi_+ chi_- [" + label + "]",
                    commutator(cp, cm) - k * c3 * (two / q) - c3 * c3 * (lam * two / q)));
  s.add(expect_zero("chi_0 central [" + label + "]",
                    vstack({commutator(c0, cp), commutator(c0, cm), commutator(c0, c3)})));
  return s;
}

std::size_t GoldenReport::diff_count() const {
  std::size_t n = 0;
  for (const auto& t : tables) n += t.diffs.size();
  return n;
}

GoldenReport golden_suite(const Su2Tables& t) { return golden_suite(t, build_pipeline(sun_r_matrix(2))); }

GoldenReport golden_suite(const Su2Tables& t, const Pipeline& p) {
  GoldenReport rep;
  Comparer cmp(rep);
  const DeformationContext ctx = p.spec.ctx();
  const Scalar q = ctx.q(), lam = ctx.lambda(), two = qnum(2, QBase::q_inv, ctx);

  cmp.mat("R", t.R.mat(), p.spec.r.mat());

  std::vector<Mat> fn_img, ad_img = adjoint_prime_matrices(p.pb);
  for (int a = 0; a < 4; ++a) fn_img.push_back(primed_image(p.fn, p.pb, a));
  for (int a = 0; a < 4; ++a) cmp.mat(std::string("fn(") + kNames[a] + ")", t.fn.gen.at(kNames[a]), fn_img[z(a)]);
  cmp.mat("fn(u)", t.fn.u, p.u.rep_u);
  cmp.mat("eta^fn", t.fn.eta, p.kfn.eta_primed);
  cmp.scalar("eta^fn_00", t.fn.eta00 * lam * lam, p.kfn.eta00, "tabulated value times lambda^2");
  cmp.mat("canonical metric", t.canonical, p.kfn.canonical);
  cmp.scalar("index(fn)", t.fn.index, p.kfn.index);
  cmp.mat("fn(Q')", t.fn.casimir, p.kfn.casimir_mat);

  // tabulated ad' matrices use chi_3 scaled by [2]_{1/q}
  Mat s = Mat::identity(3), s_inv = Mat::identity(3);
  s(2, 2) = two;
  s_inv(2, 2) = two.inv();
  for (int a = 0; a < 4; ++a)
    cmp.mat(std::string("ad'(") + kNames[a] + ")", t.ad.gen.at(kNames[a]), s_inv * ad_img[z(a)] * s,
            a == 1 || a == 2 ? "compared as S^-1 ad' S, S = diag(1, 1, [2]_{1/q})" : "");
  cmp.mat("ad'(u)", t.ad.u, p.ad.u);
  cmp.mat("eta^ad'", t.ad.eta, p.kad.eta_primed);
  cmp.scalar("eta^ad'_00", t.ad.eta00, p.kad.eta00);
  cmp.scalar("index(ad')", t.ad.index, p.kad.index);
  cmp.mat("ad'(Q')", t.ad.casimir, p.kad.casimir_mat);

  {
    TableCompare tc{"adjoint action", "entries not listed are zero", 64, {}};
    Tensor want(4, 3);
    for (const auto& e : t.adj_basis) want[z((e.x * 4 + e.y) * 4 + e.z)] = e.c;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int w = 0; w < 4; ++w) {
          const Scalar& a = want[z((x * 4 + y) * 4 + w)];
          const Scalar& b = p.pb.fp(x, y, w);
          if (!(a == b)) tc.diffs.push_back({std::string(kNames[x]) + " ad " + kNames[y] + " -> " + kNames[w], a, b});
        }
    cmp.push(std::move(tc));
  }

  {
    const Mat& g = p.kfn.canonical;
    TableCompare tc{"SO_q^2(3) metric", "basis {chi_-, s chi_3, chi_+}, scale q + 1/q", 9, {}};
    if (!(g(2, 0).is_zero() && g(2, 1).is_zero() && g(0, 2).is_zero() && g(1, 2).is_zero())) {
      tc.diffs.push_back({"chi_3 block", Scalar(0), g(2, 0)});
    } else {
      const int perm[3] = {1, 2, 0};
      Mat gp(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Scalar v = g(z(perm[i]), z(perm[j]));
          if (i == 1 && j == 1) v *= t.so_s_squared;
          gp(z(i), z(j)) = v;
        }
      const Mat want = t.so_metric * (q + q.inv());
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (!(want(i, j) == gp(i, j))) tc.diffs.push_back({cell(i, j), want(i, j), gp(i, j)});
    }
    cmp.push(std::move(tc));
  }

  const auto mu_fn = mu_of(p.fn, p.pb), mu_ad = mu_of(p.ad, p.pb);
  for (const auto& sj : t.spin_j) {
    const bool half = sj.j == "1/2";
    if (!half && sj.j != "1") continue;
    const auto& mu = half ? mu_fn : mu_ad;
    const auto& cas = half ? p.kfn.casimir_eigen : p.kad.casimir_eigen;
    cmp.scalar("spin " + sj.j + " mu", sj.mu, mu ? *mu : Scalar(0));
    cmp.scalar("spin " + sj.j + " casimir", sj.casimir, cas ? *cas : Scalar(0));
  }

  {
    TableCompare tc{"classical limits", "p = 1", 4, {}};
    auto one = [&](const std::string& name, const Rational& want, const std::optional<Scalar>& v) {
      const Scalar got = v ? Scalar(v->eval_at(1)) : Scalar(-1);
      if (!(got == Scalar(want))) tc.diffs.push_back({name, Scalar(want), got});
    };
    one("index(fn)", t.classical_fn_index, p.kfn.index);
    one("fn(Q')", t.classical_fn_casimir, p.kfn.casimir_eigen);
    one("index(ad')", t.classical_ad_index, p.kad.index);
    one("ad'(Q')", t.classical_ad_casimir, p.kad.casimir_eigen);
    cmp.push(std::move(tc));
  }

  rep.values["index(fn)"] = p.kfn.index;
  rep.values["index(ad')"] = p.kad.index;
  if (p.kfn.casimir_eigen) rep.values["fn(Q')"] = *p.kfn.casimir_eigen;
  if (p.kad.casimir_eigen) rep.values["ad'(Q')"] = *p.kad.casimir_eigen;
  if (mu_fn) rep.values["mu(fn)"] = *mu_fn;
  if (mu_ad) rep.values["mu(ad')"] = *mu_ad;

  rep.checks.add(jimbo_drinfeld_check(t));
  rep.checks.add(universal_r_truncation(t));
  rep.checks.add(su2_comm_relations(ctx, fn_img, "fn"));
  rep.checks.add(su2_comm_relations(ctx, ad_img, "ad'"));
  rep.checks.add(su2_comm_relations(
      ctx, {t.ad.gen.at("chi_0"), t.ad.gen.at("chi_+"), t.ad.gen.at("chi_-"), t.ad.gen.at("chi_3")}, "ad' tabulated"));
  rep.checks.add(primed_structure_checks(p.q, p.pb));
  if (mu_fn) rep.checks.add(check_comm_prime(p.q, p.pb, p.fn, *mu_fn));
  if (mu_ad) rep.checks.add(check_comm_prime(p.q, p.pb, p.ad, *mu_ad));
  rep.checks.add(p.kfn.checks);
  rep.checks.add(p.kad.checks);
  {
    const Vec traces = deformed_traces(p.q, p.fn);
    CheckResult c = CheckResult::pass("deformed traces vanish at p = 1 [fn]");
    for (std::size_t a = 0; a < traces.size(); ++a)
      if (traces[a].eval_at(1) != 0) {
        c = CheckResult::fail(c.name, "nonzero trace", {static_cast<int>(a)}, traces[a]);
        break;
      }
    rep.checks.add(c);
  }
  return rep;
}

std::string GoldenReport::render(const std::vector<Rational>& eval_points) const {
  std::ostringstream os;
  for (const auto& t : tables) {
    os << (t.diffs.empty() ? "ok    " : "DIFF  ") << t.table << "  (" << t.entries << " entries";
    if (!t.diffs.empty()) os << ", " << t.diffs.size() << " diffs";
    os << ")";
    if (!t.note.empty()) os << "  [" << t.note << "]";
    os << "\n";
    for (const auto& d : t.diffs)
      os << "        " << d.entry << ": expected " << d.expected << ", computed " << d.computed << "\n";
  }
  os << "\nvalues";
  for (const auto& p0 : eval_points) os << "  | p = " << to_string(p0);
  os << "\n";
  for (const auto& [k, v] : values) {
    os << "  " << k << " = " << v;
    for (const auto& p0 : eval_points) {
      os << "  | ";
      try {
        os << to_string(v.eval_at(p0));
      } catch (const PoleError&) {
        os << "pole";
      }
    }
    os << "\n";
  }
  os << "\n";
  for (const auto& c : checks.results) os << c.summary() << "\n";
  os << "\n" << diff_count() << " diffs, " << checks.failures() << " failed checks\n";
  return os.str();
}

std::string GoldenReport::to_json() const {
  nlohmann::ordered_json j;
  auto ts = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    auto diffs = nlohmann::ordered_json::array();
    for (const auto& d : t.diffs)
      diffs.push_back({{"entry", d.entry}, {"expected", d.expected.str()}, {"computed", d.computed.str()}});
    ts.push_back({{"table", t.table}, {"note", t.note}, {"entries", t.entries}, {"diffs", diffs}});
  }
  j["tables"] = ts;
  auto vals = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) vals[k] = v.str();
  j["values"] = vals;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : checks.results) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
  j["checks"] = cs;
  j["diffs"] = diff_count();
  return j.dump(1) + "\n";
}

}  // namespace qla
