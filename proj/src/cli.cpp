#include "qla/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qla/su2_golden.hpp"

namespace qla {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kSuites{"ybe", "hecke", "cubic", "appendix", "qla", "primed", "killing", "golden"};

bool wants(const RunConfig& cfg, const std::string& suite) {
  if (cfg.checks.count("all")) return suite != "cubic" || cfg.group == Group::external;
  for (const auto& c : cfg.checks)
    if (c == suite || c.rfind(suite + ":", 0) == 0) return true;
  return false;
}

int cubic_eps(const RunConfig& cfg) {
  for (const auto& c : cfg.checks) {
    if (c == "cubic:eps=1") return 1;
    if (c == "cubic:eps=-1") return -1;
  }
  return 1;
}

bool want_fn(const RunConfig& cfg) { return cfg.rep != RepChoice::ad; }
bool want_ad(const RunConfig& cfg) { return cfg.rep != RepChoice::fn; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RMatrixSpec load_spec(const RunConfig& cfg) {
  if (cfg.group == Group::su) return sun_r_matrix(cfg.n);
  try {
    RMatrixSpec s = load_r_matrix(*cfg.r_matrix_path);
    if (cfg.root_order && *cfg.root_order != s.root_order)
      throw ConfigError("--root-order " + std::to_string(*cfg.root_order) + " disagrees with the file (" +
                        std::to_string(s.root_order) + ")");
    return s;
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(*cfg.r_matrix_path + ": " + e.what());
  }
}

QlaStructure load_structure(const RunConfig& cfg, const RMatrixSpec& spec) {
  if (!cfg.cache_dir) return build_structure(spec);
  const std::string key = r_matrix_to_json(spec);
  std::ostringstream name;
  name << "structure-" << std::hex << std::hash<std::string>{}(key) << ".json";
  const fs::path path = fs::path(*cfg.cache_dir) / name.str();
  if (fs::exists(path)) {
    QlaStructure q = structure_from_json(read_file(path.string()));
    if (q.R.mat() == spec.r.mat()) return q;
  }
  QlaStructure q = build_structure(spec);
  fs::create_directories(*cfg.cache_dir);
  std::ofstream(path) << structure_to_json(q);
  return q;
}

// Lazily built objects shared by the suites.
class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg), spec_(load_spec(cfg)) {}

  const RMatrixSpec& spec() const { return spec_; }
  const QlaStructure& structure() {
    if (!q_) q_ = load_structure(cfg_, spec_);
    return *q_;
  }
  const Pipeline& pipeline() {
    if (!p_) p_ = build_pipeline(spec_, structure());
    return *p_;
  }

 private:
  const RunConfig& cfg_;
  RMatrixSpec spec_;
  std::optional<QlaStructure> q_;
  std::optional<Pipeline> p_;
};

CheckSuite guarded(const std::string& suite, const std::function<CheckSuite()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    CheckSuite s;
    s.add(CheckResult::fail(suite, std::string("error: ") + e.what()));
    return s;
  }
}

CheckSuite run_suite(const std::string& suite, const RunConfig& cfg, Session& s) {
  CheckSuite out;
  const VerifyOptions vo{!cfg.skip_heavy};
  if (suite == "ybe") {
    out.add(check_ybe(s.spec().r));
  } else if (suite == "hecke") {
    out.add(check_hecke(s.spec()));
  } else if (suite == "cubic") {
    out.add(check_cubic(s.spec(), cubic_eps(cfg)));
  } else if (suite == "appendix") {
    const UData u = appendix_data(s.spec().r);
    out.add(check_D_identities(s.spec().r, u.D, u.alpha, u.beta));
  } else if (suite == "qla") {
    const QlaStructure& q = s.structure();
    if (want_fn(cfg)) {
      const RepBundle fn = fundamental_generators(s.spec());
      out.add(verify_qla(q, fn, vo));
      out.add(check_S2_consistency(q, fn));
      out.add(guarded("trace relations", [&] { return check_I_relations(q, deformed_traces(q, fn)); }));
    }
    if (want_ad(cfg)) {
      const RepBundle ad = adjoint_rep(q);
      out.add(verify_qla(q, ad, vo));
      out.add(check_S2_consistency(q, ad));
    }
    out.add(check_bigD_identities(q));
  } else if (suite == "primed") {
    const Pipeline& p = s.pipeline();
    out.add(primed_structure_checks(p.q, p.pb));
    std::vector<const RepBundle*> reps;
    if (want_fn(cfg)) reps.push_back(&p.fn);
    if (want_ad(cfg)) reps.push_back(&p.ad);
    for (const RepBundle* b : reps) {
      out.add(check_traceless(*b, p.pb));
      out.add(check_chi0_central(*b, p.pb));
      const auto mu = mu_of(*b, p.pb);
      if (mu)
        out.add(check_comm_prime(p.q, p.pb, *b, *mu));
      else
        out.add(CheckResult::fail("primed commutators [" + b->name + "]", "rho(chi_0) is not scalar"));
    }
  } else if (suite == "killing") {
    const Pipeline& p = s.pipeline();
    if (want_fn(cfg)) out.add(p.kfn.checks);
    if (want_ad(cfg)) out.add(p.kad.checks);
  } else if (suite == "golden") {
    if (cfg.group != Group::su || cfg.n != 2) {
      out.add(CheckResult::skip("golden tables", "only for su(2)"));
    } else {
      const Su2Tables t = cfg.fixture ? load_su2_tables(*cfg.fixture) : su2_tables();
      const GoldenReport g = golden_suite(t, s.pipeline());
      const std::size_t d = g.diff_count();
      out.add(d == 0 ? CheckResult::pass("golden tables", std::to_string(g.tables.size()) + " tables, 0 diffs")
                     : CheckResult::fail("golden tables", std::to_string(d) + " diffs"));
      out.add(g.checks);
    }
  }
  return out;
}

std::string eval_cells(const Scalar& s, const std::vector<Rational>& pts) {
  std::string out;
  for (const auto& p0 : pts) {
    out += "  | p=" + to_string(p0) + ": ";
    try {
      out += to_string(s.eval_at(p0));
    } catch (const PoleError&) {
      out += "pole";
    }
  }
  return out;
}

void render_mat(std::ostream& os, const std::string& name, const Mat& m) {
  os << "  " << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
}

std::string render_tables(const Pipeline& p, const RunConfig& cfg) {
  std::ostringstream os;
  const auto& e = cfg.eval_points;
  os << "R-matrix: " << (p.spec.label.empty() ? "(unlabelled)" : p.spec.label) << ", N = " << p.spec.n
     << ", root order " << p.spec.root_order << "\n";
  os << "primed basis: dim " << p.pb.n << ", I'_0 = " << p.pb.trace0 << eval_cells(p.pb.trace0, e) << "\n";
  std::vector<std::pair<const RepBundle*, const KillingReport*>> reps;
  if (want_fn(cfg)) reps.push_back({&p.fn, &p.kfn});
  if (want_ad(cfg)) reps.push_back({&p.ad, &p.kad});
  for (const auto& [b, k] : reps) {
    os << "\n[" << b->name << "] dim " << b->dim << "\n";
    const auto mu = mu_of(*b, p.pb);
    if (mu) os << "  mu = " << *mu << eval_cells(*mu, e) << "\n";
    os << "  index = " << k->index << eval_cells(k->index, e) << "\n";
    if (k->casimir_eigen) os << "  casimir = " << *k->casimir_eigen << eval_cells(*k->casimir_eigen, e) << "\n";
    os << "  eta_00 = " << k->eta00 << eval_cells(k->eta00, e) << "\n";
    render_mat(os, "eta (primed block)", k->eta_primed);
    render_mat(os, "canonical metric", k->canonical);
    render_mat(os, "rho(u)", b->u);
    os << "  checks: " << (k->checks.results.size() - k->checks.failures()) << "/" << k->checks.results.size()
       << " pass\n";
  }
  return os.str();
}

nlohmann::ordered_json check_json(const CheckResult& c) {
  nlohmann::ordered_json j{{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}};
  j["indices"] = c.indices;
  j["residual"] = c.residual ? nlohmann::ordered_json(c.residual->str()) : nlohmann::ordered_json();
  return j;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

Rational parse_point(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw ConfigError("--eval-at " + s + ": " + e.what());
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.group == Group::external && !cfg.r_matrix_path) throw ConfigError("--group external needs --r-matrix");
  if (cfg.group == Group::su) {
    if (cfg.n < 2) throw ConfigError("--n must be at least 2");
    if (cfg.root_order && *cfg.root_order != cfg.n)
      throw ConfigError("su(N) is built with root order N; got --root-order " + std::to_string(*cfg.root_order));
  }
  for (const auto& c : cfg.checks) {
    if (c == "all" || c == "cubic:eps=1" || c == "cubic:eps=-1") continue;
    if (std::find(kSuites.begin(), kSuites.end(), c) == kSuites.end()) throw ConfigError("unknown check suite '" + c + "'");
  }
}

std::vector<SuiteRun> run_checks(const RunConfig& cfg) {
  validate(cfg);
  Session s(cfg);
  std::vector<SuiteRun> runs;
  for (const auto& suite : kSuites) {
    if (!wants(cfg, suite)) continue;
    if (suite == "hecke" && cfg.checks.count("all") && cfg.group == Group::external) continue;
    runs.push_back({suite, guarded(suite, [&] { return run_suite(suite, cfg, s); })});
  }
  return runs;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto runs = run_checks(cfg);
  std::size_t total = 0, failed = 0, skipped = 0;
  for (const auto& r : runs)
    for (const auto& c : r.checks.results) {
      ++total;
      if (c.skipped) ++skipped;
      else if (!c.passed) ++failed;
    }
  std::ostringstream os;
  if (cfg.format == OutputFormat::json) {
    nlohmann::ordered_json j;
    auto suites = nlohmann::ordered_json::array();
    for (const auto& r : runs) {
      auto cs = nlohmann::ordered_json::array();
      for (const auto& c : r.checks.results) cs.push_back(check_json(c));
      suites.push_back({{"suite", r.suite}, {"checks", cs}});
    }
    j["suites"] = suites;
    j["total"] = total;
    j["failed"] = failed;
    j["skipped"] = skipped;
    j["passed"] = failed == 0;
    os << j.dump(1) << "\n";
  } else {
    for (const auto& r : runs) {
      os << "== " << r.suite << "\n";
      for (const auto& c : r.checks.results) os << c.summary() << "\n";
    }
    os << total << " checks: " << (total - failed - skipped) << " passed, " << failed << " failed, " << skipped
       << " skipped\n";
  }
  if (cfg.out_path) write_file(*cfg.out_path, os.str());
  out << os.str();
  return failed == 0 ? 0 : 1;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  Session s(cfg);
  const Pipeline& p = s.pipeline();
  const std::string tables = render_tables(p, cfg);
  if (cfg.out_path) {
    const fs::path dir(*cfg.out_path);
    try {
      fs::create_directories(dir);
    } catch (const fs::filesystem_error& e) {
      throw Error(std::string("cannot create ") + dir.string() + ": " + e.what());
    }
    write_file(dir / "r_matrix.json", r_matrix_to_json(p.spec));
    write_file(dir / "structure.json", structure_to_json(p.q));
    write_file(dir / "primed.json", primed_to_json(p.pb));
    if (want_fn(cfg)) write_file(dir / "killing_fn.json", killing_to_json(p.kfn));
    if (want_ad(cfg)) write_file(dir / "killing_ad.json", killing_to_json(p.kad));
    write_file(dir / "tables.txt", tables);
  }
  if (cfg.format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["r_matrix"] = nlohmann::ordered_json::parse(r_matrix_to_json(p.spec));
    j["structure"] = nlohmann::ordered_json::parse(structure_to_json(p.q));
    j["primed"] = nlohmann::ordered_json::parse(primed_to_json(p.pb));
    if (want_fn(cfg)) j["killing"]["fn"] = nlohmann::ordered_json::parse(killing_to_json(p.kfn));
    if (want_ad(cfg)) j["killing"]["ad'"] = nlohmann::ordered_json::parse(killing_to_json(p.kad));
    out << j.dump(1) << "\n";
  } else {
    out << tables;
  }
  return 0;
}

int cmd_su2_tables(const RunConfig& cfg, std::ostream& out) {
  Su2Tables t;
  try {
    t = cfg.fixture ? load_su2_tables(*cfg.fixture) : su2_tables();
  } catch (const Error& e) {
    throw ConfigError(std::string("fixture: ") + e.what());
  }
  RunConfig su2 = cfg;
  su2.group = Group::su;
  su2.n = 2;
  Session s(su2);
  const GoldenReport g = golden_suite(t, s.pipeline());
  const std::string text = cfg.format == OutputFormat::json ? g.to_json() : g.render(cfg.eval_points);
  if (cfg.out_path) write_file(*cfg.out_path, text);
  out << text;
  return g.passed() ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Lie algebra toolkit: exact checks and reports for R-matrix quantum groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string group = "su", rep = "both", format = "text", checks = "all";
  std::vector<std::string> points;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", group, "su or external")->check(CLI::IsMember({"su", "external"}));
    sub->add_option("--n", cfg.n, "N for su(N)");
    sub->add_option("--root-order", cfg.root_order, "k with p = q^(1/k)");
    sub->add_option("--r-matrix", cfg.r_matrix_path, "R-matrix JSON for --group external");
    sub->add_option("--rep", rep, "fn, ad or both")->check(CLI::IsMember({"fn", "ad", "both"}));
    sub->add_option("--eval-at", points, "evaluate scalars at p = P0 (repeatable)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "output file (check, su2-tables) or directory (report)");
    sub->add_option("--cache-dir", cfg.cache_dir, "cache built structures here");
  };
  CLI::App* check = app.add_subcommand("check", "run identity checks");
  common(check);
  check->add_option("--checks", checks,
                    "comma list of ybe, hecke, cubic:eps=1, cubic:eps=-1, appendix, qla, primed, killing, golden, all");
  check->add_flag("--skip-heavy", cfg.skip_heavy, "skip the YBE check on the n^2-dimensional braid");
  check->add_option("--fixture", cfg.fixture, "su(2) tables JSON");
  CLI::App* report = app.add_subcommand("report", "write structure, primed basis and Killing reports");
  common(report);
  CLI::App* tables = app.add_subcommand("su2-tables", "compare the su(2) pipeline with the reference tables");
  tables->add_option("--fixture", cfg.fixture, "su(2) tables JSON (default: built in)");
  tables->add_option("--eval-at", points, "evaluate scalars at p = P0 (repeatable)");
  tables->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  tables->add_option("--out", cfg.out_path, "also write the report here");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    cfg.group = group == "external" ? Group::external : Group::su;
    cfg.rep = rep == "fn" ? RepChoice::fn : rep == "ad" ? RepChoice::ad : RepChoice::both;
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    cfg.checks.clear();
    std::stringstream ss(checks);
    for (std::string c; std::getline(ss, c, ',');)
      if (!c.empty()) cfg.checks.insert(c);
    for (const auto& p : points) cfg.eval_points.push_back(parse_point(p));
    if (check->parsed()) return cmd_check(cfg, out);
    if (report->parsed()) return cmd_report(cfg, out);
    return cmd_su2_tables(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qla
