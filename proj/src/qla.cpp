#include "qla/qla.hpp"

#include <functional>

#include "json.hpp"

namespace qla {

Mat RepBundle::image(const Vec& coords) const {
  if (coords.size() != gen.size()) throw DimensionError("coordinate vector length must equal the number of generators");
  Mat m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (std::size_t a = 0; a < coords.size(); ++a)
    if (!coords[a].is_zero()) m += gen[a] * coords[a];
  return m;
}

RepBundle fundamental_generators(const RMatrixSpec& spec) {
  const int N = spec.n;
  const auto sz = static_cast<std::size_t>(N);
  const Scalar inv_lam = spec.ctx().lambda().inv();
  const LMatrices L = fundamental_L_matrices(spec.r);
  RepBundle b;
  b.name = "fn";
  b.dim = N;
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      Mat y(sz, sz);
      for (int m = 0; m < N; ++m) y += L.lp(k, m) * L.slm(m, l);
      Mat x = (k == l ? Mat::identity(sz) : Mat(sz, sz)) - y;
      b.gen.push_back(x * inv_lam);
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) b.orep.push_back(L.lp(i, k) * L.slm(l, j));
  b.u = rep_u(spec.r);
  b.numerical_R = spec.r;
  return b;
}

std::vector<Mat> fn_from_rhat_squared(const RMatrixSpec& spec) {
  const int N = spec.n;
  const auto sz = static_cast<std::size_t>(N);
  const BiMat rh = hat(spec.r);
  const BiMat rh2 = rh * rh;
  const Scalar inv_lam = spec.ctx().lambda().inv();
  std::vector<Mat> out;
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      Mat m(sz, sz);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          Scalar v = (i == j && k == l) ? Scalar(1) : Scalar(0);
          v -= rh2(k, i, l, j);
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v * inv_lam;
        }
      out.push_back(std::move(m));
    }
  return out;
}

QlaStructure build_structure(const RMatrixSpec& spec) {
  QlaStructure q;
  q.N = spec.n;
  q.n = spec.n * spec.n;
  q.root_order = spec.root_order;
  q.R = spec.r;
  q.lambda = spec.ctx().lambda();
  const int N = q.N;

  const BiMat rh = hat(spec.r);
  const BiMat rhi = inverse(rh);
  const Tensor Rt = Tensor::from(tilde(spec.r)), Rh = Tensor::from(rh), Rhi = Tensor::from(rhi),
               Rh2 = Tensor::from(rh * rh);

  q.bigR = einsum("mkjn,sdml,nira,rbsc->abcdijkl", {&Rt, &Rh, &Rhi, &Rh}).as_bimat(q.n);

  Tensor fs = einsum("mkjn,nitr,tsml->ijklrs", {&Rt, &Rhi, &Rh2});
  const Scalar inv_lam = q.lambda.inv();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
          for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s) {
              Scalar& v = fs.at({i, j, k, l, r, s});
              Scalar d = (i == j && k == r && s == l) ? Scalar(1) : Scalar(0);
              v = (d - v) * inv_lam;
            }
  q.f = fs.reshaped(q.n);

  q.I_id.assign(static_cast<std::size_t>(q.n), Scalar());
  for (int i = 0; i < N; ++i) q.I_id[static_cast<std::size_t>(i * N + i)] = 1;

  const BiMat bigRt = adjoint_tilde(q.bigR);
  q.bigD = Mat(static_cast<std::size_t>(q.n), static_cast<std::size_t>(q.n));
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      for (int c = 0; c < q.n; ++c)
        if (!bigRt(c, a, b, c).is_zero()) q.bigD(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) += bigRt(c, a, b, c);

  q.F_adj = einsum("mkjn,sbml,nirc,rdsa->abcdijkl", {&Rt, &Rh, &Rh, &Rhi}).as_bimat(q.n);
  return q;
}

BiMat adjoint_tilde(const BiMat& bigR) {
  const int n = bigR.n();
  const auto n2 = static_cast<std::size_t>(n * n);
  auto at = [n](int a, int b) { return static_cast<std::size_t>(a * n + b); };
  Mat blocks(n2, n2);
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a)
        for (int y = 0; y < n; ++y) blocks(at(c, x), at(a, y)) = bigR(x, a, c, y);
  Mat inv;
  try {
    inv = inverse(blocks);
  } catch (const SingularMatrixError&) {
    throw StructureError("the O images of the adjoint representation are not invertible");
  }
  BiMat t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) t(a, b, c, d) = inv(at(c, b), at(a, d));
  return t;
}

// ------------------------------------------------------------ identity checks

namespace {

struct Sparse {
  // by_lower[A*n+B]: (C, D, value) with bigR^{CD}_{AB} != 0
  std::vector<std::vector<std::tuple<int, int, const Scalar*>>> by_lower, by_upper;
  // f_nz[A*n+B]: (C, value) with f_{AB}^C != 0; f_by_upper[C]: (A, B, value)
  std::vector<std::vector<std::pair<int, const Scalar*>>> f_nz;

  explicit Sparse(const QlaStructure& q) {
    const int n = q.n;
    const auto n2 = static_cast<std::size_t>(n * n);
    by_lower.resize(n2);
    by_upper.resize(n2);
    f_nz.resize(n2);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const Scalar& v = q.bigR(a, b, c, d);
            if (v.is_zero()) continue;
            by_lower[static_cast<std::size_t>(c * n + d)].emplace_back(a, b, &v);
            by_upper[static_cast<std::size_t>(a * n + b)].emplace_back(c, d, &v);
          }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const Scalar& v = q.f_at(a, b, c);
          if (!v.is_zero()) f_nz[static_cast<std::size_t>(a * n + b)].emplace_back(c, &v);
        }
  }
};

class ProductCache {
 public:
  ProductCache(const std::vector<Mat>& left, const std::vector<Mat>& right)
      : l_(left), r_(right), cache_(left.size() * right.size()) {}
  const Mat& operator()(std::size_t a, std::size_t b) {
    auto& slot = cache_[a * r_.size() + b];
    if (!slot) slot = l_[a] * r_[b];
    return *slot;
  }

 private:
  const std::vector<Mat>& l_;
  const std::vector<Mat>& r_;
  std::vector<std::optional<Mat>> cache_;
};

CheckResult first_mismatch(const std::string& name, const Mat& lhs, const Mat& rhs, std::vector<int> where) {
  CheckResult c = compare_mats(name, lhs, rhs);
  if (c.passed) return c;
  where.insert(where.end(), c.indices.begin(), c.indices.end());
  c.indices = std::move(where);
  c.detail = "entries differ (generator indices, then matrix entry)";
  return c;
}

CheckResult tensor_equal(const std::string& name, const Tensor& a, const Tensor& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) {
      std::vector<int> idx(static_cast<std::size_t>(a.rank()));
      std::size_t rem = i;
      for (int t = a.rank() - 1; t >= 0; --t) {
        idx[static_cast<std::size_t>(t)] = static_cast<int>(rem % static_cast<std::size_t>(a.dim()));
        rem /= static_cast<std::size_t>(a.dim());
      }
      return CheckResult::fail(name, "entries differ", idx, a[i] - b[i]);
    }
  return CheckResult::pass(name);
}

Tensor tensor_diff(Tensor a, const Tensor& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

}  // namespace

CheckSuite lie_comm_checks(const QlaStructure& q, const RepBundle& b) {
  CheckSuite s;
  const int n = q.n;
  if (b.n() != n) throw DimensionError("bundle does not match the structure");
  const auto d = static_cast<std::size_t>(b.dim);
  const Sparse sp(q);
  ProductCache gg(b.gen, b.gen);
  const auto un = static_cast<std::size_t>(n);

  {
    CheckResult res = CheckResult::pass("commutation relation 1 [" + b.name + "]", "chi_A chi_B - R^{CD}_{AB} chi_C chi_D = f_{AB}^C chi_C");
    for (int A = 0; A < n && res.passed; ++A)
      for (int B = 0; B < n && res.passed; ++B) {
        Mat lhs = gg(static_cast<std::size_t>(A), static_cast<std::size_t>(B));
        for (auto [C, D, v] : sp.by_lower[static_cast<std::size_t>(A * n + B)])
          lhs -= gg(static_cast<std::size_t>(C), static_cast<std::size_t>(D)) * *v;
        Mat rhs(d, d);
        for (auto [C, v] : sp.f_nz[static_cast<std::size_t>(A * n + B)]) rhs += b.gen[static_cast<std::size_t>(C)] * *v;
        CheckResult c = first_mismatch(res.name, lhs, rhs, {A, B});
        if (!c.passed) res = c;
      }
    s.add(res);
  }
  if (b.orep.empty()) {
    s.add(CheckResult::skip("commutation relation 2-4 [" + b.name + "]", "bundle has no O images"));
    return s;
  }

  ProductCache oo(b.orep, b.orep);
  ProductCache go(b.gen, b.orep);
  ProductCache og(b.orep, b.gen);
  auto oidx = [n](int a, int c) { return static_cast<std::size_t>(a * n + c); };

  {
    CheckResult res = CheckResult::pass("commutation relation 2 [" + b.name + "]", "R^{EF}_{AB} O_E^C O_F^D = O_A^E O_B^F R^{CD}_{EF}");
    for (int A = 0; A < n && res.passed; ++A)
      for (int B = 0; B < n && res.passed; ++B)
        for (int C = 0; C < n && res.passed; ++C)
          for (int D = 0; D < n && res.passed; ++D) {
            Mat lhs(d, d), rhs(d, d);
            for (auto [E, F, v] : sp.by_lower[static_cast<std::size_t>(A * n + B)]) lhs += oo(oidx(E, C), oidx(F, D)) * *v;
            for (auto [E, F, v] : sp.by_upper[static_cast<std::size_t>(C * n + D)]) rhs += oo(oidx(A, E), oidx(B, F)) * *v;
            CheckResult c = first_mismatch(res.name, lhs, rhs, {A, B, C, D});
            if (!c.passed) res = c;
          }
    s.add(res);
  }
  {
    CheckResult res = CheckResult::pass("commutation relation 3 [" + b.name + "]",
                                        "chi_A O_B^C - R^{DE}_{AB} O_D^C chi_E = f_{AB}^D O_D^C - O_A^D O_B^E f_{DE}^C");
    for (int A = 0; A < n && res.passed; ++A)
      for (int B = 0; B < n && res.passed; ++B)
        for (int C = 0; C < n && res.passed; ++C) {
          Mat lhs = go(static_cast<std::size_t>(A), oidx(B, C));
          for (auto [D, E, v] : sp.by_lower[static_cast<std::size_t>(A * n + B)])
            lhs -= og(oidx(D, C), static_cast<std::size_t>(E)) * *v;
          Mat rhs(d, d);
          for (auto [D, v] : sp.f_nz[static_cast<std::size_t>(A * n + B)]) rhs += b.orep[oidx(D, C)] * *v;
          for (int D = 0; D < n; ++D)
            for (int E = 0; E < n; ++E) {
              const Scalar& fv = q.f_at(D, E, C);
              if (!fv.is_zero()) rhs -= oo(oidx(A, D), oidx(B, E)) * fv;
            }
          CheckResult c = first_mismatch(res.name, lhs, rhs, {A, B, C});
          if (!c.passed) res = c;
        }
    s.add(res);
  }
  {
    CheckResult res = CheckResult::pass("commutation relation 4 [" + b.name + "]", "O_A^B chi_C = R^{DE}_{AC} chi_D O_E^B");
    for (int A = 0; A < n && res.passed; ++A)
      for (int B = 0; B < n && res.passed; ++B)
        for (int C = 0; C < n && res.passed; ++C) {
          const Mat& lhs = og(oidx(A, B), static_cast<std::size_t>(C));
          Mat rhs(d, d);
          for (auto [D, E, v] : sp.by_lower[static_cast<std::size_t>(A * n + C)])
            rhs += go(static_cast<std::size_t>(D), oidx(E, B)) * *v;
          CheckResult c = first_mismatch(res.name, lhs, rhs, {A, B, C});
          if (!c.passed) res = c;
        }
    s.add(res);
  }
  (void)un;
  return s;
}

CheckSuite check_I_relations(const QlaStructure& q, const Vec& I) {
  CheckSuite s;
  const int n = q.n;
  const Tensor R = Tensor::from(q.bigR);
  Tensor It(n, 1);
  for (int a = 0; a < n; ++a) It[static_cast<std::size_t>(a)] = I[static_cast<std::size_t>(a)];
  Tensor zero(n, 2);
  s.add(tensor_equal("f_{AB}^C I_C = 0", einsum("abc,c->ab", {&q.f, &It}), zero));
  Tensor want(n, 3);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) want.at({a, a, c}) = It[static_cast<std::size_t>(c)];
  s.add(tensor_equal("R^{DB}_{AC} I_D = delta^B_A I_C", einsum("dbac,d->abc", {&R, &It}), want));
  return s;
}

Vec deformed_traces(const QlaStructure& q, const RepBundle& b) {
  Vec I;
  for (const auto& g : b.gen) I.push_back((b.u * g).trace());
  CheckSuite s = check_I_relations(q, I);
  for (auto& r : s.results)
    if (!r.passed) throw StructureError("deformed traces of " + b.name + " violate " + r.summary());
  return I;
}

CheckSuite verify_qla(const QlaStructure& q, const RepBundle& b, const VerifyOptions& opt) {
  CheckSuite s = lie_comm_checks(q, b);
  const int n = q.n;
  const Tensor R = Tensor::from(q.bigR);
  const Tensor& f = q.f;

  if (opt.heavy) {
    const Mat id = Mat::identity(static_cast<std::size_t>(n));
    const Mat a = kron(q.bigR.mat(), id), c = kron(id, q.bigR.mat());
    CheckResult y = compare_mats("structure ybe", a * c * a, c * a * c, n);
    if (y.passed) y.detail = "R12 R23 R12 = R23 R12 R23";
    s.add(y);
  } else {
    s.add(CheckResult::skip("structure ybe", "heavy check skipped"));
  }

  {
    Tensor t1 = einsum("alm,bnl->abmn", {&f, &f});
    Tensor t2 = einsum("cdab,clm,dnl->abmn", {&R, &f, &f});
    Tensor rhs = einsum("abc,cnm->abmn", {&f, &f});
    CheckResult c = tensor_equal("deformed jacobi", tensor_diff(t1, t2), rhs);
    if (c.passed) c.detail = "f_{AL}^M f_{BN}^L - R^{CD}_{AB} f_{CL}^M f_{DN}^L = f_{AB}^C f_{CN}^M";
    s.add(c);
  }
  {
    Tensor t1 = einsum("dcbn,adm->abcmn", {&R, &f});
    Tensor t2 = einsum("deab,mcdf,enf->abcmn", {&R, &R, &f});
    Tensor t3 = einsum("mcdn,abd->abcmn", {&R, &f});
    Tensor t4 = einsum("dfbn,mead,efc->abcmn", {&R, &R, &f});
    s.add(tensor_equal("auxiliary R-f relation 1", tensor_diff(t1, t2), tensor_diff(t3, t4)));
    Tensor u1 = einsum("mbad,cnd->abcmn", {&R, &f});
    Tensor u2 = einsum("deac,fben,dfm->abcmn", {&R, &R, &f});
    s.add(tensor_equal("auxiliary R-f relation 2", u1, u2));
  }
  {
    Tensor It(n, 1);
    for (int a = 0; a < n; ++a) It[static_cast<std::size_t>(a)] = q.I_id[static_cast<std::size_t>(a)];
    s.add(tensor_equal("trace relation: f_{AB}^C I_C = 0", einsum("abc,c->ab", {&f, &It}), Tensor(n, 2)));
    Tensor w1(n, 3), w2(n, 3);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          if (a == d) w1.at({a, b, d}) = It[static_cast<std::size_t>(b)];
          Scalar v = b == d ? It[static_cast<std::size_t>(a)] : Scalar(0);
          w2.at({a, b, d}) = v - q.lambda * q.f_at(a, b, d);
        }
    s.add(tensor_equal("trace relation: R^{CD}_{AB} I_C = delta^D_A I_B", einsum("cdab,c->abd", {&R, &It}), w1));
    s.add(tensor_equal("trace relation: R^{CD}_{AB} I_D = delta^C_B I_A - lambda f_{AB}^C", einsum("cdab,d->abc", {&R, &It}), w2));
  }
  return s;
}

RepBundle adjoint_rep(const QlaStructure& q) {
  const int n = q.n;
  const auto sz = static_cast<std::size_t>(n);
  RepBundle b;
  b.name = "ad";
  b.dim = n;
  for (int A = 0; A < n; ++A) {
    Mat m(sz, sz);
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C) m(static_cast<std::size_t>(C), static_cast<std::size_t>(B)) = q.f_at(A, B, C);
    b.gen.push_back(std::move(m));
  }
  for (int C = 0; C < n; ++C)
    for (int B = 0; B < n; ++B) {
      Mat m(sz, sz);
      for (int A = 0; A < n; ++A)
        for (int D = 0; D < n; ++D) m(static_cast<std::size_t>(A), static_cast<std::size_t>(D)) = q.bigR(A, B, C, D);
      b.orep.push_back(std::move(m));
    }
  b.u = rep_u(q.F_adj);
  b.numerical_R = q.F_adj;
  return b;
}

CheckResult check_S2_consistency(const QlaStructure& q, const RepBundle& b) {
  const Mat uinv = inverse(b.u);
  const std::string name = "S^2 via bigD [" + b.name + "]";
  for (int A = 0; A < q.n; ++A) {
    Mat lhs(static_cast<std::size_t>(b.dim), static_cast<std::size_t>(b.dim));
    for (int B = 0; B < q.n; ++B) {
      const Scalar& d = q.bigD(static_cast<std::size_t>(B), static_cast<std::size_t>(A));
      if (!d.is_zero()) lhs += b.gen[static_cast<std::size_t>(B)] * d;
    }
    Mat rhs = b.u * b.gen[static_cast<std::size_t>(A)] * uinv;
    CheckResult c = first_mismatch(name, lhs, rhs, {A});
    if (!c.passed) return c;
  }
  return CheckResult::pass(name, "sum_B D^B_A rho(chi_B) = rho(u) rho(chi_A) rho(u)^-1");
}

CheckSuite check_bigD_identities(const QlaStructure& q) {
  CheckSuite s;
  const int n = q.n;
  const BiMat d1 = embed(q.bigD, 1), d2 = embed(q.bigD, 2);
  s.add(compare_mats("bigD1 bigD2 bigR = bigR bigD1 bigD2", (d1 * d2 * q.bigR).mat(), (q.bigR * d1 * d2).mat(), n));
  const BiMat rhs = embed(inverse(q.bigD), 1) * inverse(q.bigR) * d2;
  const BiMat rt = adjoint_tilde(q.bigR);
  BiMat swapped(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) swapped(a, b, c, d) = rhs(a, b, d, c);
  s.add(compare_mats("tilde(bigR)^{AB}_{CD} = (bigD1^-1 bigR^-1 bigD2)^{AB}_{DC}", rt.mat(), swapped.mat(), n));
  return s;
}

std::vector<Vec> transposed_adjoint_kernel(const QlaStructure& q) {
  const int n = q.n;
  Mat sys(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n));
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C) sys(static_cast<std::size_t>(A * n + B), static_cast<std::size_t>(C)) = q.f_at(A, B, C);
  return null_space(sys);
}

// ----------------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json bimat_json(const BiMat& m) {
  auto arr = nlohmann::ordered_json::array();
  const int n = m.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (!m(a, b, c, d).is_zero()) arr.push_back({a, b, c, d, m(a, b, c, d).str()});
  return arr;
}

BiMat bimat_from(const nlohmann::json& j, int n) {
  BiMat m(n);
  for (const auto& e : j) m(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()) = Scalar::parse(e[4].get<std::string>());
  return m;
}

}  // namespace

std::string structure_to_json(const QlaStructure& q) {
  nlohmann::ordered_json j;
  j["N"] = q.N;
  j["n"] = q.n;
  j["root_order"] = q.root_order;
  j["R"] = bimat_json(q.R);
  j["bigR"] = bimat_json(q.bigR);
  auto f = nlohmann::ordered_json::array();
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      for (int c = 0; c < q.n; ++c)
        if (!q.f_at(a, b, c).is_zero()) f.push_back({a, b, c, q.f_at(a, b, c).str()});
  j["f"] = f;
  auto d = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < q.bigD.rows(); ++a)
    for (std::size_t b = 0; b < q.bigD.cols(); ++b)
      if (!q.bigD(a, b).is_zero()) d.push_back({a, b, q.bigD(a, b).str()});
  j["bigD"] = d;
  j["F_adj"] = bimat_json(q.F_adj);
  return j.dump(1) + "\n";
}

QlaStructure structure_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  QlaStructure q;
  try {
    q.N = j.at("N").get<int>();
    q.n = j.at("n").get<int>();
    q.root_order = j.at("root_order").get<int>();
    if (q.n != q.N * q.N) throw DimensionError("structure file: n != N^2");
    q.lambda = q.ctx().lambda();
    q.R = bimat_from(j.at("R"), q.N);
    q.bigR = bimat_from(j.at("bigR"), q.n);
    q.f = Tensor(q.n, 3);
    for (const auto& e : j.at("f"))
      q.f.at({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}) = Scalar::parse(e[3].get<std::string>());
    q.bigD = Mat(static_cast<std::size_t>(q.n), static_cast<std::size_t>(q.n));
    for (const auto& e : j.at("bigD"))
      q.bigD(e[0].get<std::size_t>(), e[1].get<std::size_t>()) = Scalar::parse(e[2].get<std::string>());
    q.F_adj = bimat_from(j.at("F_adj"), q.n);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("structure file: ") + e.what(), 0);
  }
  q.I_id.assign(static_cast<std::size_t>(q.n), Scalar());
  for (int i = 0; i < q.N; ++i) q.I_id[static_cast<std::size_t>(i * q.N + i)] = 1;
  return q;
}

}  // namespace qla
