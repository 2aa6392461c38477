#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qla/scalar.hpp"

namespace qla {

using Vec = std::vector<Scalar>;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat diag(const Vec& d);
  static Mat column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return e_; }

  bool is_zero() const;
  bool is_identity() const;
  // c if this == c*I, otherwise nullopt.
  std::optional<Scalar> scalar_multiple_of_identity() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& c);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& c) { return a *= c; }
  friend Mat operator*(const Scalar& c, Mat a) { return a *= c; }
  friend Mat operator*(const Mat& a, const Mat& b);
  Vec operator*(const Vec& v) const;

  Mat transpose() const;
  Scalar trace() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat map(const std::function<Scalar(const Scalar&)>& f) const;
  Mat eval_at(const Rational& p0) const;
  std::size_t nonzeros() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

Mat vstack(const std::vector<Mat>& parts);
Mat hstack(const std::vector<Mat>& parts);
Mat kron(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

// N^2 x N^2 matrix with entry M^{ij}_{kl} at row i*N+j, column k*N+l.
class BiMat {
 public:
  BiMat() = default;
  explicit BiMat(int n) : n_(n), m_(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n)) {}
  BiMat(int n, Mat m);

  static BiMat identity(int n) { return BiMat(n, Mat::identity(static_cast<std::size_t>(n * n))); }

  int n() const { return n_; }
  const Mat& mat() const { return m_; }
  Mat& mat() { return m_; }

  Scalar& operator()(int i, int j, int k, int l) { return m_(idx(i, j), idx(k, l)); }
  const Scalar& operator()(int i, int j, int k, int l) const { return m_(idx(i, j), idx(k, l)); }

  bool operator==(const BiMat& o) const { return n_ == o.n_ && m_ == o.m_; }
  friend BiMat operator*(const BiMat& a, const BiMat& b) { return BiMat(a.n_, a.m_ * b.m_); }
  friend BiMat operator+(const BiMat& a, const BiMat& b) { return BiMat(a.n_, a.m_ + b.m_); }
  friend BiMat operator-(const BiMat& a, const BiMat& b) { return BiMat(a.n_, a.m_ - b.m_); }
  friend BiMat operator*(const Scalar& c, const BiMat& a) { return BiMat(a.n_, a.m_ * c); }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }
  int n_ = 0;
  Mat m_;
};

BiMat perm_P(int n);
BiMat hat(const BiMat& r);          // P*R
BiMat swap_factors(const BiMat& r);  // R_21: (R_21)^{ij}_{kl} = R^{ji}_{lk}
BiMat kron_bimat(const Mat& a, const Mat& b);
// slot 1: (M^{t1})^{ij}_{kl} = M^{kj}_{il}; slot 2: (M^{t2})^{ij}_{kl} = M^{il}_{kj}.
BiMat partial_transpose(const BiMat& m, int slot);
// slot 1: sum_m M^{mi}_{mj}; slot 2: sum_m M^{im}_{jm}.
Mat partial_trace(const BiMat& m, int slot);
// A acting on the first (slot 1) or second (slot 2) factor.
BiMat embed(const Mat& a, int slot);

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, Vec null_vec) : Error(what), null_vector(std::move(null_vec)) {}
  Vec null_vector;
};

// Gauss-Jordan over Q(p) on each connected block, pivoting on least complex entries.
Mat inverse(const Mat& m);
BiMat inverse(const BiMat& m);
// Fraction-free (Bareiss) inverse: rows are scaled to polynomial entries first.
Mat inverse_bareiss(const Mat& m);
Scalar determinant(const Mat& m);
std::vector<Vec> null_space(const Mat& m);
std::size_t rank(const Mat& m);
// Solve X*A = B for X (A square invertible).
Mat solve_right(const Mat& a, const Mat& b);

// ((M^{t1})^{-1})^{t1}; checks both defining contractions before returning.
BiMat tilde(const BiMat& m);
// Residual-free check of M^{im}_{nl} T^{nk}_{jm} = M^{mi}_{ln} T^{kn}_{mj} = delta^i_j delta^k_l.
bool tilde_contractions_hold(const BiMat& m, const BiMat& t);

}  // namespace qla
