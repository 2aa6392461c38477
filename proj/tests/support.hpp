#pragma once

#include <random>

#include "qla/tensor.hpp"

namespace qla::testing {

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 3, int span = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(-span, span), c(-4, 4), d(1, 3);
  LaurentPoly p;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) p += LaurentPoly::monomial(Rational(c(rng), d(rng)), ex(rng));
  return p;
}

inline Scalar random_scalar(std::mt19937& rng, bool allow_zero = true) {
  for (;;) {
    LaurentPoly n = random_poly(rng);
    LaurentPoly d = random_poly(rng, 2, 2);
    if (d.is_zero() || (!allow_zero && n.is_zero())) continue;
    return Scalar::fraction(n, d);
  }
}

inline Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.7) {
  std::bernoulli_distribution keep(density);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = Scalar(random_poly(rng, 2, 2));
  return m;
}

}  // namespace qla::testing
