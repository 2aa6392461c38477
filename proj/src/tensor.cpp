#include "qla/tensor.hpp"

#include <algorithm>

#include "qla/contract.hpp"

namespace qla {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diag(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::column(const Vec& v) {
  Mat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

std::optional<Scalar> Mat::scalar_multiple_of_identity() const {
  if (!square() || rows_ == 0) return std::nullopt;
  const Scalar& c = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !((*this)(i, j) == c) : !(*this)(i, j).is_zero()) return std::nullopt;
  return c;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& c) {
  for (auto& x : e_)
    if (!x.is_zero()) x *= c;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Mat::trace() const {
  if (!square()) throw DimensionError("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Mat Mat::map(const std::function<Scalar(const Scalar&)>& f) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f(e_[i]);
  return r;
}

Mat Mat::eval_at(const Rational& p0) const {
  return map([&](const Scalar& s) { return Scalar(s.eval_at(p0)); });
}

std::size_t Mat::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

Mat vstack(const std::vector<Mat>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw DimensionError("vstack column mismatch");
    rows += p.rows();
  }
  Mat m(rows, parts[0].cols());
  std::size_t r = 0;
  for (auto& p : parts)
    for (std::size_t i = 0; i < p.rows(); ++i, ++r)
      for (std::size_t j = 0; j < p.cols(); ++j) m(r, j) = p(i, j);
  return m;
}

Mat hstack(const std::vector<Mat>& parts) {
  std::vector<Mat> t;
  for (auto& p : parts) t.push_back(p.transpose());
  return vstack(t).transpose();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          if (!b(r, s).is_zero()) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------- BiMat

BiMat::BiMat(int n, Mat m) : n_(n), m_(std::move(m)) {
  const auto side = static_cast<std::size_t>(n * n);
  if (m_.rows() != side || m_.cols() != side) throw DimensionError("BiMat needs a square matrix of side N^2");
}

BiMat perm_P(int n) {
  BiMat p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j, j, i) = 1;
  return p;
}

BiMat hat(const BiMat& r) {
  const int n = r.n();
  BiMat h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) h(i, j, k, l) = r(j, i, k, l);
  return h;
}

BiMat swap_factors(const BiMat& r) {
  const int n = r.n();
  BiMat s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s(i, j, k, l) = r(j, i, l, k);
  return s;
}

BiMat kron_bimat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || !a.square() || !b.square()) throw DimensionError("kron_bimat needs equal square factors");
  return BiMat(static_cast<int>(a.rows()), kron(a, b));
}

BiMat partial_transpose(const BiMat& m, int slot) {
  if (slot != 1 && slot != 2) throw Error("partial_transpose slot must be 1 or 2");
  const int n = m.n();
  BiMat t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) t(i, j, k, l) = slot == 1 ? m(k, j, i, l) : m(i, l, k, j);
  return t;
}

Mat partial_trace(const BiMat& m, int slot) {
  if (slot != 1 && slot != 2) throw Error("partial_trace slot must be 1 or 2");
  const int n = m.n();
  Mat r(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        const Scalar& x = slot == 1 ? m(s, i, s, j) : m(i, s, j, s);
        if (!x.is_zero()) r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += x;
      }
  return r;
}

BiMat embed(const Mat& a, int slot) {
  if (slot != 1 && slot != 2) throw Error("embed slot must be 1 or 2");
  Mat id = Mat::identity(a.rows());
  return slot == 1 ? kron_bimat(a, id) : kron_bimat(id, a);
}

// ---------------------------------------------------------------------- tilde

bool tilde_contractions_hold(const BiMat& m, const BiMat& t) {
  const int n = m.n();
  Tensor tm = Tensor::from(m), tt = Tensor::from(t);
  // First: M^{im}_{nl} T^{nk}_{jm}; second: M^{mi}_{ln} T^{kn}_{mj}; outputs laid out as X^{ik}_{jl}.
  Tensor a = einsum("amnd,nbcm->abcd", {&tm, &tt});
  Tensor b = einsum("madn,bnmc->abcd", {&tm, &tt});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          Scalar want = (i == j && k == l) ? Scalar(1) : Scalar(0);
          if (!(a.at({i, k, j, l}) == want) || !(b.at({i, k, j, l}) == want)) return false;
        }
  return true;
}

BiMat tilde(const BiMat& m) {
  BiMat inv_t1;
  try {
    inv_t1 = inverse(partial_transpose(m, 1));
  } catch (const SingularMatrixError&) {
    throw StructureError("tilde does not exist: the partial transpose is singular");
  }
  BiMat t = partial_transpose(inv_t1, 1);
  if (!tilde_contractions_hold(m, t)) throw StructureError("tilde contraction identities failed");
  return t;
}

}  // namespace qla
