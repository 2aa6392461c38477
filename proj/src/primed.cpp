#include "qla/primed.hpp"

#include "json.hpp"

namespace qla {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

Vec ad_coords(const QlaStructure& q, const Vec& x, const Vec& y) {
  Vec out(z(q.n));
  for (int a = 0; a < q.n; ++a) {
    if (x[z(a)].is_zero()) continue;
    for (int b = 0; b < q.n; ++b) {
      if (y[z(b)].is_zero()) continue;
      Scalar xy = x[z(a)] * y[z(b)];
      for (int c = 0; c < q.n; ++c) {
        const Scalar& f = q.f_at(a, b, c);
        if (!f.is_zero()) out[z(c)] += xy * f;
      }
    }
  }
  return out;
}

Vec unit(int n, int a) {
  Vec v(z(n));
  v[z(a)] = 1;
  return v;
}

CheckResult vec_equal(const std::string& name, const Vec& a, const Vec& b, std::vector<int> where) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) {
      where.push_back(static_cast<int>(i));
      return CheckResult::fail(name, "coordinates differ", where, a[i] - b[i]);
    }
  return CheckResult::pass(name);
}

}  // namespace

Vec PrimedBasis::primed_generator(int A) const {
  Vec v = unit(n, A);
  Scalar r = traces[z(A)] / trace0;
  if (!r.is_zero())
    for (int b = 0; b < n; ++b)
      if (!d_vec[z(b)].is_zero()) v[z(b)] -= r * d_vec[z(b)];
  return v;
}

Vec d_vector(const QlaStructure& q, const Mat& D) {
  const int n = q.n, N = q.N;
  Mat sys(z(n * n), z(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) sys(z(a * n + c), z(b)) = q.f_at(a, b, c);
  auto ker = null_space(sys);
  if (ker.size() != 1)
    throw StructureError("the null space of the structure constants has dimension " + std::to_string(ker.size()) +
                         ", expected 1");
  Vec v = ker.front();
  const Mat dinv = inverse(D);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Scalar& have = v[z(i * N + j)];
      const Scalar& want = dinv(z(j), z(i));
      if (have.is_zero() || want.is_zero()) continue;
      Scalar s = want / have;
      for (auto& x : v) x *= s;
      return v;
    }
  throw StructureError("D-vector has no entry to normalize against D^-1");
}

PrimedBasis build_primed_with(const QlaStructure& q, const RepBundle& ref, const Mat& D, const std::vector<Vec>& columns) {
  const int n = q.n;
  if (static_cast<int>(columns.size()) != n - 1) throw DimensionError("primed basis needs n-1 columns");
  PrimedBasis pb;
  pb.n = n;
  pb.d_vec = d_vector(q, D);
  for (const auto& g : ref.gen) pb.traces.push_back((ref.u * g).trace());
  pb.trace0 = dot(pb.d_vec, pb.traces);
  if (pb.trace0.is_zero())
    throw StructureError("deformed trace of chi_0 vanishes in " + ref.name + "; pick another reference rep");
  pb.T = Mat(z(n), z(n));
  for (int x = 0; x < n; ++x) pb.T(z(x), 0) = pb.d_vec[z(x)];
  for (int a = 0; a < n - 1; ++a)
    for (int x = 0; x < n; ++x) pb.T(z(x), z(a + 1)) = columns[z(a)][z(x)];
  try {
    pb.T_inv = inverse(pb.T);
  } catch (const SingularMatrixError&) {
    throw StructureError("primed basis is singular; choose a different dropped index");
  }
  const Tensor t = Tensor::from(pb.T, n), ti = Tensor::from(pb.T_inv, n);
  pb.f_primed = einsum("xa,yb,xyw,cw->abc", {&t, &t, &q.f, &ti});
  if (auto mu = mu_of(ref, pb)) pb.mu[ref.name] = *mu;
  return pb;
}

PrimedBasis build_primed(const QlaStructure& q, const RepBundle& ref, const Mat& D, int dropped) {
  const int n = q.n;
  if (dropped < 0) dropped = n - 1;
  if (dropped >= n) throw DimensionError("dropped index out of range");
  PrimedBasis probe;
  probe.n = n;
  probe.d_vec = d_vector(q, D);
  for (const auto& g : ref.gen) probe.traces.push_back((ref.u * g).trace());
  probe.trace0 = dot(probe.d_vec, probe.traces);
  if (probe.trace0.is_zero())
    throw StructureError("deformed trace of chi_0 vanishes in " + ref.name + "; pick another reference rep");
  std::vector<Vec> cols;
  for (int a = 0; a < n; ++a)
    if (a != dropped) cols.push_back(probe.primed_generator(a));
  PrimedBasis pb = build_primed_with(q, ref, D, cols);
  pb.dropped_index = dropped;
  return pb;
}

Mat primed_image(const RepBundle& b, const PrimedBasis& pb, int A) {
  Mat m(z(b.dim), z(b.dim));
  for (int x = 0; x < pb.n; ++x) {
    const Scalar& c = pb.T(z(x), z(A));
    if (!c.is_zero()) m += b.gen[z(x)] * c;
  }
  return m;
}

std::optional<Scalar> mu_of(const RepBundle& b, const PrimedBasis& pb) {
  return primed_image(b, pb, 0).scalar_multiple_of_identity();
}

CheckSuite primed_structure_checks(const QlaStructure& q, const PrimedBasis& pb) {
  CheckSuite s;
  const int n = pb.n;
  {
    CheckResult r = CheckResult::pass("f' zero pattern", "only f'_{Aa}^b survive");
    for (int a = 0; a < n && r.passed; ++a)
      for (int b = 0; b < n && r.passed; ++b)
        for (int c = 0; c < n && r.passed; ++c)
          if ((b == 0 || c == 0) && !pb.fp(a, b, c).is_zero())
            r = CheckResult::fail(r.name, "nonzero f' outside the (Aa)^b block", {a, b, c}, pb.fp(a, b, c));
    s.add(r);
  }
  {
    Vec want = unit(n, 0);
    CheckResult r = vec_equal("D in the primed basis is (1,0,...,0)", pb.T_inv * pb.d_vec, want, {});
    s.add(r);
  }
  // adjoint actions written through the chi'_A
  std::vector<Vec> P;
  for (int a = 0; a < n; ++a) P.push_back(pb.primed_generator(a));
  {
    CheckResult r = vec_equal("chi_0 ad chi_0 = 0", ad_coords(q, pb.d_vec, pb.d_vec), Vec(z(n)), {});
    for (int a = 0; a < n && r.passed; ++a) {
      CheckResult c = vec_equal("chi'_A ad chi_0 = 0", ad_coords(q, P[z(a)], pb.d_vec), Vec(z(n)), {a});
      if (!c.passed) r = c;
    }
    s.add(r);
  }
  {
    CheckResult r = CheckResult::pass("chi_0 ad chi'_A = D^B f_{BA}^C chi'_C");
    for (int a = 0; a < n && r.passed; ++a) {
      Vec rhs(z(n));
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Scalar w = pb.d_vec[z(b)] * q.f_at(b, a, c);
          if (!w.is_zero()) rhs = rhs + w * P[z(c)];
        }
      CheckResult c = vec_equal(r.name, ad_coords(q, pb.d_vec, P[z(a)]), rhs, {a});
      if (!c.passed) r = c;
    }
    s.add(r);
  }
  {
    CheckResult r = CheckResult::pass("chi'_A ad chi'_B = (delta_A^D - I'_A D^D / I'_0) f_{DB}^C chi'_C");
    for (int a = 0; a < n && r.passed; ++a) {
      const Scalar ra = pb.traces[z(a)] / pb.trace0;
      for (int b = 0; b < n && r.passed; ++b) {
        Vec rhs(z(n));
        for (int d = 0; d < n; ++d) {
          Scalar w = (d == a ? Scalar(1) : Scalar(0)) - ra * pb.d_vec[z(d)];
          if (w.is_zero()) continue;
          for (int c = 0; c < n; ++c) {
            Scalar wc = w * q.f_at(d, b, c);
            if (!wc.is_zero()) rhs = rhs + wc * P[z(c)];
          }
        }
        CheckResult c = vec_equal(r.name, ad_coords(q, P[z(a)], P[z(b)]), rhs, {a, b});
        if (!c.passed) r = c;
      }
    }
    s.add(r);
  }
  return s;
}

CheckResult check_comm_prime(const QlaStructure& q, const PrimedBasis& pb, const RepBundle& b, const Scalar& mu) {
  const int n = q.n;
  const auto d = z(b.dim);
  std::vector<Mat> G;
  for (int a = 0; a < n; ++a) {
    Vec c = pb.primed_generator(a);
    Mat m(d, d);
    for (int x = 0; x < n; ++x)
      if (!c[z(x)].is_zero()) m += b.gen[z(x)] * c[z(x)];
    G.push_back(std::move(m));
  }
  Vec ratio;
  for (int a = 0; a < n; ++a) ratio.push_back(pb.traces[z(a)] / pb.trace0 * mu);
  const std::string name = "primed commutators [" + b.name + "]";
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) {
      Mat lhs = G[z(A)] * G[z(B)];
      Mat rhs(d, d);
      for (int C = 0; C < n; ++C) {
        Scalar coef = q.f_at(A, B, C);
        for (int D = 0; D < n; ++D) {
          Scalar k = (D == A && C == B) ? Scalar(1) : Scalar(0);
          k -= q.bigR(C, D, A, B);
          if (!k.is_zero()) coef -= k * ratio[z(D)];
          const Scalar& r = q.bigR(C, D, A, B);
          if (!r.is_zero()) lhs -= G[z(C)] * G[z(D)] * r;
        }
        if (!coef.is_zero()) rhs += G[z(C)] * coef;
      }
      CheckResult c = compare_mats(name, lhs, rhs);
      if (!c.passed) {
        c.indices.insert(c.indices.begin(), {A, B});
        return c;
      }
    }
  return CheckResult::pass(name);
}

CheckResult check_chi0_central(const RepBundle& b, const PrimedBasis& pb) {
  const Mat c0 = primed_image(b, pb, 0);
  const std::string name = "chi_0 central [" + b.name + "]";
  for (int a = 0; a < pb.n; ++a)
    if (!commutator(c0, b.gen[z(a)]).is_zero()) return CheckResult::fail(name, "does not commute", {a});
  return CheckResult::pass(name);
}

CheckResult check_traceless(const RepBundle& b, const PrimedBasis& pb) {
  const std::string name = "primed generators traceless [" + b.name + "]";
  for (int a = 1; a < pb.n; ++a) {
    Scalar t = (b.u * primed_image(b, pb, a)).trace();
    if (!t.is_zero()) return CheckResult::fail(name, "nonzero deformed trace", {a}, t);
  }
  return CheckResult::pass(name);
}

std::vector<Mat> adjoint_prime_matrices(const PrimedBasis& pb) {
  const int n = pb.n;
  std::vector<Mat> out;
  for (int A = 0; A < n; ++A) {
    Mat m(z(n - 1), z(n - 1));
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) m(z(a - 1), z(b - 1)) = pb.fp(A, b, a);
    out.push_back(std::move(m));
  }
  return out;
}

RepBundle adjoint_prime(const PrimedBasis& pb, const QlaStructure& q) {
  const int n = pb.n;
  const auto m = z(n - 1);
  std::vector<Mat> prim = adjoint_prime_matrices(pb);
  if (!null_space(vstack(prim)).empty()) throw StructureError("ad' has a common null vector; it is reducible");
  RepBundle b;
  b.name = "ad'";
  b.dim = n - 1;
  for (int x = 0; x < n; ++x) {
    Mat g(m, m);
    for (int a = 0; a < n; ++a) {
      const Scalar& c = pb.T_inv(z(a), z(x));
      if (!c.is_zero()) g += prim[z(a)] * c;
    }
    b.gen.push_back(std::move(g));
  }
  auto restrict = [&](const Mat& full) -> std::optional<Mat> {
    Mat t = pb.T_inv * full * pb.T;
    for (int a = 1; a < n; ++a)
      if (!t(0, z(a)).is_zero() || !t(z(a), 0).is_zero()) return std::nullopt;
    return t.block(1, 1, m, m);
  };
  const Mat u = rep_u(q.F_adj);
  auto ub = restrict(u);
  if (!ub) throw StructureError("u of the adjoint rep does not preserve the primed block");
  b.u = *ub;
  std::vector<Mat> orep;
  for (int C = 0; C < n; ++C)
    for (int B = 0; B < n; ++B) {
      Mat o(z(n), z(n));
      for (int A = 0; A < n; ++A)
        for (int D = 0; D < n; ++D) o(z(A), z(D)) = q.bigR(A, B, C, D);
      auto ob = restrict(o);
      if (!ob) {
        orep.clear();
        break;
      }
      orep.push_back(std::move(*ob));
    }
  b.orep = std::move(orep);
  return b;
}

std::string primed_to_json(const PrimedBasis& pb) {
  nlohmann::ordered_json j;
  auto vec = [](const Vec& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  j["n"] = pb.n;
  j["d_vec"] = vec(pb.d_vec);
  j["traces"] = vec(pb.traces);
  j["dropped_index"] = pb.dropped_index;
  auto t = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < pb.T.rows(); ++r) {
    Vec row;
    for (std::size_t c = 0; c < pb.T.cols(); ++c) row.push_back(pb.T(r, c));
    t.push_back(vec(row));
  }
  j["T"] = t;
  auto f = nlohmann::ordered_json::array();
  for (int a = 0; a < pb.n; ++a)
    for (int b = 0; b < pb.n; ++b)
      for (int c = 0; c < pb.n; ++c)
        if (!pb.fp(a, b, c).is_zero()) f.push_back({a, b, c, pb.fp(a, b, c).str()});
  j["f_primed"] = f;
  auto mu = nlohmann::ordered_json::object();
  for (const auto& [k, v] : pb.mu) mu[k] = v.str();
  j["mu"] = mu;
  return j.dump(1) + "\n";
}

}  // namespace qla
