#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qla/errors.hpp"

namespace qla {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Finitely supported sum of c_e p^e. Stored densely from the lowest exponent;
// the end coefficients are never zero and the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly from_dense(int low, std::vector<Rational> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& dense() const { return c_; }
  Rational coeff(int e) const;
  const Rational& leading() const { return c_.back(); }
  const Rational& trailing() const { return c_.front(); }
  std::size_t term_count() const;

  LaurentPoly shifted(int s) const;
  LaurentPoly reflected() const;  // p -> 1/p
  Rational eval(const Rational& p0) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }

  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }

  std::string str() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

// Exact quotient a/b; throws if b does not divide a in Q[p, 1/p].
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Monic-free gcd in Q[p]: integer primitive, positive leading coefficient,
// lowest exponent 0. gcd(0, 0) = 1 by convention.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Element of Q(p) kept in canonical form num/den.
class Scalar {
 public:
  Scalar() : den_(Rational(1)) {}
  Scalar(int v) : num_(Rational(v)), den_(Rational(1)) {}
  Scalar(long v) : num_(Rational(v)), den_(Rational(1)) {}
  Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}
  Scalar(const LaurentPoly& v) : num_(v), den_(Rational(1)) {}

  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);
  static Scalar p_power(int e, const Rational& c = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  Rational rational_value() const;  // requires is_rational()
  std::size_t complexity() const { return num_.term_count() + den_.term_count(); }

  Scalar inv() const;
  Scalar reflected() const;  // p -> 1/p
  Rational eval_at(const Rational& p0) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar pow(int e) const;

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  Scalar(LaurentPoly n, LaurentPoly d, int) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& s);

inline Rational eval_at(const Scalar& s, const Rational& p0) { return s.eval_at(p0); }

// p = q^{1/k}; N is the fundamental dimension.
struct DeformationContext {
  int n = 2;
  int root_order = 2;

  static DeformationContext su(int n);
  DeformationContext(int n_ = 2, int k = 2);

  // q^{num/den}; throws if k*num/den is not an integer.
  Scalar q_pow(long num, long den = 1) const;
  Scalar q() const { return q_pow(1); }
  Scalar lambda() const { return q_pow(1) - q_pow(-1); }
};

enum class QBase { q, q_inv };

// [m]_q = (q^{2m} - 1)/(q^2 - 1) with m = m_num/m_den.
Scalar qnum(long m_num, long m_den, QBase base, const DeformationContext& ctx);
inline Scalar qnum(long m, QBase base, const DeformationContext& ctx) { return qnum(m, 1, base, ctx); }
Scalar qfact(int n, const DeformationContext& ctx);

}  // namespace qla
