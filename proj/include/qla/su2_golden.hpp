#pragma once

#include <map>
#include <string>
#include <vector>

#include "qla/pipeline.hpp"

namespace qla {

// Reference su(2) data (k = 2). Generator tables are keyed chi_0, chi_+, chi_-, chi_3;
// ad' matrices act on {chi_+, chi_-, chi_3}.
struct Su2RepTables {
  std::map<std::string, Mat> gen;
  Mat u;
  Scalar eta00;
  Mat eta;
  Scalar index;
  Mat casimir;
};

struct Su2Tables {
  Mat H, Xp, Xm;
  BiMat R;
  Su2RepTables fn, ad;
  Mat canonical;
  struct AdjEntry {
    int x, y, z;  // over {chi_0, chi_+, chi_-, chi_3}
    Scalar c;
  };
  std::vector<AdjEntry> adj_basis;
  Scalar so_s_squared;
  Mat so_metric;
  struct SpinJ {
    std::string j;
    Scalar mu, casimir;
  };
  std::vector<SpinJ> spin_j;
  Rational classical_fn_index, classical_fn_casimir, classical_ad_index, classical_ad_casimir;
};

const std::string& su2_fixture_text();
Su2Tables su2_tables();
Su2Tables su2_tables_from_json(const std::string& text);
Su2Tables load_su2_tables(const std::string& path);

// [H, X+-] = +-2 X+-, [X+, X-] = (q^H - q^-H)/lambda with q^H built from diagonal H.
CheckResult jimbo_drinfeld_check(const Su2Tables& t);
// n-th term of the universal R-matrix in fn x fn.
BiMat universal_r_term(const Su2Tables& t, int n);
// Sum of the n = 0, 1 terms against the tabulated R (fn(X+-)^2 = 0 is checked too).
CheckResult universal_r_truncation(const Su2Tables& t);

// su(2) commutation relations with chi_0 kept as a matrix: c = {chi_0, chi_+, chi_-, chi_3}.
CheckSuite su2_comm_relations(const DeformationContext& ctx, const std::vector<Mat>& c, const std::string& label);

struct EntryDiff {
  std::string entry;
  Scalar expected, computed;
};

struct TableCompare {
  std::string table;
  std::string note;
  std::size_t entries = 0;
  std::vector<EntryDiff> diffs;
};

struct GoldenReport {
  std::vector<TableCompare> tables;
  CheckSuite checks;
  // name -> (computed, tabulated) for the classical limits
  std::map<std::string, Scalar> values;

  std::size_t diff_count() const;
  bool passed() const { return diff_count() == 0 && checks.passed(); }
  std::string render(const std::vector<Rational>& eval_points = {}) const;
  std::string to_json() const;
};

GoldenReport golden_suite(const Su2Tables& t = su2_tables());
GoldenReport golden_suite(const Su2Tables& t, const Pipeline& p);

}  // namespace qla
