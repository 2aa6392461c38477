#include <algorithm>
#include <numeric>

#include "qla/tensor.hpp"

namespace qla {

namespace {

// Least complex nonzero entry in column c among rows [r0, rows).
std::optional<std::size_t> pick_pivot(const Mat& a, std::size_t c, std::size_t r0) {
  std::optional<std::size_t> best;
  std::size_t best_cost = 0;
  for (std::size_t r = r0; r < a.rows(); ++r) {
    const Scalar& x = a(r, c);
    if (x.is_zero()) continue;
    std::size_t cost = x.complexity();
    if (!best || cost < best_cost) {
      best = r;
      best_cost = cost;
    }
  }
  return best;
}

void swap_rows(Mat& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    auto p = pick_pivot(a, c, r);
    if (!p) continue;
    swap_rows(a, r, *p);
    Scalar pinv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) *= pinv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Gauss-Jordan on one dense block; nullopt when singular.
std::optional<Mat> gj_inverse(Mat a) {
  const std::size_t n = a.rows();
  Mat inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto p = pick_pivot(a, c, c);
    if (!p) return std::nullopt;
    swap_rows(a, c, *p);
    swap_rows(inv, c, *p);
    Scalar pinv = a(c, c).inv();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= pinv;
      if (!inv(c, j).is_zero()) inv(c, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Connected components of the symmetric sparsity graph.
std::vector<std::vector<std::size_t>> blocks_of(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return comps;
}

[[noreturn]] void throw_singular(const Mat& m) {
  auto ns = null_space(m);
  throw SingularMatrixError("singular matrix", ns.empty() ? Vec(m.cols()) : ns.front());
}

}  // namespace

std::vector<Vec> null_space(const Mat& m) {
  Mat a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!a(i, f).is_zero()) v[pivots[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Mat& m) {
  Mat a = m;
  return rref(a).size();
}

Mat inverse(const Mat& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat out(n, n);
  for (const auto& comp : blocks_of(m)) {
    const std::size_t k = comp.size();
    Mat b(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) b(i, j) = m(comp[i], comp[j]);
    auto inv = gj_inverse(std::move(b));
    if (!inv) throw_singular(m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(comp[i], comp[j]) = (*inv)(i, j);
  }
  return out;
}

BiMat inverse(const BiMat& m) { return BiMat(m.n(), inverse(m.mat())); }

Mat inverse_bareiss(const Mat& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Augment [S*M | S] with S clearing each row's denominators.
  Mat a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly l(1);
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& d = m(i, j).den();
      if (d.is_one()) continue;
      l = l * exact_div(d, poly_gcd(l, d));
    }
    Scalar s(l);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j) * s;
    a(i, n + i) = s;
  }
  Scalar prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw_singular(m);
    swap_rows(a, k, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  // Left block is now prev*I (up to the final row's own pivot, also prev).
  Mat inv(n, n);
  Scalar d = prev.inv();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j) * d;
  return inv;
}

Scalar determinant(const Mat& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    auto p = pick_pivot(a, c, c);
    if (!p) return Scalar();
    if (*p != c) {
      swap_rows(a, c, *p);
      det = -det;
    }
    det *= a(c, c);
    Scalar pinv = a(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * pinv;
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Mat solve_right(const Mat& a, const Mat& b) { return b * inverse(a); }

}  // namespace qla
