#include <random>

#include "doctest.h"
#include "qla/contract.hpp"
#include "qla/tensor.hpp"
#include "support.hpp"

using namespace qla;
using qla::testing::random_mat;

namespace {

BiMat random_bimat(std::mt19937& rng, int n, double density = 0.6) {
  return BiMat(n, random_mat(rng, static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n), density));
}

Mat brute_trace(const BiMat& m, int slot) {
  int n = m.n();
  Mat r(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              bool hit = slot == 1 ? (a == c && b == i && d == j) : (b == d && a == i && c == j);
              if (hit) r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += m(a, b, c, d);
            }
  return r;
}

}  // namespace

TEST_CASE("permutation, hat and kron") {
  BiMat p = perm_P(2);
  CHECK(p.mat()(0, 0) == Scalar(1));
  CHECK(p.mat()(1, 2) == Scalar(1));
  CHECK(p.mat()(2, 1) == Scalar(1));
  CHECK(p.mat()(3, 3) == Scalar(1));
  CHECK(p.mat().nonzeros() == 4);
  CHECK(hat(BiMat::identity(2)) == p);
  CHECK(hat(BiMat::identity(3)) == perm_P(3));
  CHECK(p * p == BiMat::identity(2));

  std::mt19937 rng(3);
  Mat a = random_mat(rng, 3, 3), b = random_mat(rng, 3, 3);
  BiMat k = kron_bimat(a, b);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) CHECK(k(i, j, r, s) == a(i, r) * b(j, s));
  // P (A x B) P = B x A
  CHECK(perm_P(3) * k * perm_P(3) == kron_bimat(b, a));
  CHECK(swap_factors(k) == kron_bimat(b, a));
}

TEST_CASE("partial transpose and trace") {
  CHECK(partial_trace(perm_P(2), 2) == Mat::identity(2));
  CHECK(partial_trace(perm_P(2), 1) == Mat::identity(2));
  std::mt19937 rng(11);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 5; ++rep) {
      BiMat m = random_bimat(rng, n);
      for (int s : {1, 2}) {
        CHECK(partial_transpose(partial_transpose(m, s), s) == m);
        CHECK(partial_trace(m, s) == brute_trace(m, s));
        CHECK(partial_trace(partial_transpose(m, s), s) == partial_trace(m, s));
      }
      Mat a = random_mat(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      Mat b = random_mat(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      CHECK(partial_trace(kron_bimat(a, b), 1) == b * a.trace());
      CHECK(partial_trace(kron_bimat(a, b), 2) == a * b.trace());
      // t1 agrees with the einsum relabelling
      Tensor t = Tensor::from(m);
      CHECK(einsum("kjil->ijkl", {&t}).as_bimat(n) == partial_transpose(m, 1));
      CHECK(einsum("ilkj->ijkl", {&t}).as_bimat(n) == partial_transpose(m, 2));
      CHECK(einsum("mamb->ab", {&t}).as_mat(1) == partial_trace(m, 1));
    }
  }
  CHECK_THROWS_AS(partial_trace(perm_P(2), 3), Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(Mat::identity(4)) == Mat::identity(4));
  Mat sing(3, 3);
  sing(0, 0) = 1;
  sing(0, 1) = Scalar::p_power(1);
  sing(1, 0) = Scalar::p_power(-1);
  sing(1, 1) = 1;
  sing(2, 2) = 5;
  try {
    (void)inverse(sing);
    FAIL("expected singular");
  } catch (const SingularMatrixError& e) {
    Vec v = e.null_vector;
    REQUIRE(v.size() == 3);
    CHECK(!std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }));
    Vec mv = sing * v;
    CHECK(std::all_of(mv.begin(), mv.end(), [](const Scalar& s) { return s.is_zero(); }));
  }
  CHECK_THROWS_AS(inverse_bareiss(sing), SingularMatrixError);
  CHECK(determinant(sing).is_zero());

  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 12) {
    Mat m = random_mat(rng, 4, 4, 0.8);
    if (determinant(m).is_zero()) continue;
    Mat inv = inverse(m);
    CHECK(m * inv == Mat::identity(4));
    CHECK(inv * m == Mat::identity(4));
    CHECK(inverse_bareiss(m) == inv);
    ++tested;
  }
  Mat a = random_mat(rng, 3, 3, 1.0), b = random_mat(rng, 3, 3, 1.0);
  CHECK(determinant(a * b) == determinant(a) * determinant(b));
  CHECK_THROWS_AS(inverse(Mat(2, 3)), DimensionError);
}

TEST_CASE("block structure does not change the inverse") {
  std::mt19937 rng(5);
  Mat a = random_mat(rng, 2, 2, 1.0), b = random_mat(rng, 3, 3, 1.0);
  while (determinant(a).is_zero()) a = random_mat(rng, 2, 2, 1.0);
  while (determinant(b).is_zero()) b = random_mat(rng, 3, 3, 1.0);
  // interleave the blocks: rows/cols {0,2} and {1,3,4}
  std::vector<std::size_t> ia = {0, 2}, ib = {1, 3, 4};
  Mat m(5, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(ia[i], ia[j]) = a(i, j);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(ib[i], ib[j]) = b(i, j);
  Mat inv = inverse(m);
  CHECK(m * inv == Mat::identity(5));
  CHECK(inverse_bareiss(m) == inv);
}

TEST_CASE("tilde") {
  CHECK(tilde(BiMat::identity(2)) == BiMat::identity(2));
  Scalar c = Scalar::parse("p^2-p^-2");
  CHECK(tilde(c * BiMat::identity(3)) == c.inv() * BiMat::identity(3));
  // P^{t1} is singular for N >= 2
  CHECK_THROWS_AS(tilde(perm_P(2)), StructureError);

  std::mt19937 rng(2024);
  for (int n : {2, 3}) {
    int tested = 0;
    while (tested < (n == 2 ? 6 : 3)) {
      BiMat m = random_bimat(rng, n, n == 2 ? 0.7 : 0.35);
      if (determinant(partial_transpose(m, 1).mat()).is_zero()) continue;
      BiMat t = tilde(m);
      CHECK(tilde_contractions_hold(m, t));
      ++tested;
    }
  }
}

TEST_CASE("null space") {
  CHECK(null_space(Mat::identity(3)).empty());
  CHECK(null_space(Mat(3, 3)).size() == 3);
  std::mt19937 rng(8);
  Mat a = random_mat(rng, 2, 4, 1.0);
  auto ns = null_space(a);
  CHECK(ns.size() == 4 - rank(a));
  for (auto& v : ns) {
    Vec r = a * v;
    CHECK(std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); }));
  }
}

TEST_CASE("einsum") {
  std::mt19937 rng(21);
  Mat a = random_mat(rng, 3, 3), b = random_mat(rng, 3, 3);
  Tensor ta = Tensor::from(a, 3), tb = Tensor::from(b, 3);
  CHECK(einsum("ik,kj->ij", {&ta, &tb}).as_mat(1) == a * b);
  CHECK(einsum("ii->", {&ta})[0] == a.trace());
  CHECK(einsum("ij->ji", {&ta}).as_mat(1) == a.transpose());
  CHECK(einsum("ik,jl->ijkl", {&ta, &tb}).as_bimat(3) == kron_bimat(a, b));
  Tensor zero = Tensor::from(Mat(3, 3), 3);
  CHECK(einsum("ik,kj->ij", {&ta, &zero}).as_mat(1).is_zero());
  CHECK_THROWS_AS(einsum("ik,kj", {&ta, &tb}), Error);
  CHECK_THROWS_AS(einsum("ik,kj->iz", {&ta, &tb}), Error);
  CHECK_THROWS_AS(einsum("ikl,kj->ij", {&ta, &tb}), DimensionError);
  // four-operand chain against repeated products
  Mat c = random_mat(rng, 3, 3), d = random_mat(rng, 3, 3);
  Tensor tc = Tensor::from(c, 3), td = Tensor::from(d, 3);
  CHECK(einsum("ab,bc,cd,de->ae", {&ta, &tb, &tc, &td}).as_mat(1) == a * b * c * d);
}
