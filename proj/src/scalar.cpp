#include "qla/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <utility>

namespace qla {

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) throw ParseError("bad rational '" + std::string(text) + "'", 0);
  r.canonicalize();
  if (r.get_den() == 0) throw DivisionByZero();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly r(c);
  if (!r.is_zero()) r.low_ = exponent;
  return r;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Rational> coeffs) {
  LaurentPoly r;
  r.low_ = low;
  r.c_ = std::move(coeffs);
  for (auto& x : r.c_) x.canonicalize();
  r.trim();
  return r;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; }));
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += s;
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.low_ = -high();
  return r;
}

Rational LaurentPoly::eval(const Rational& p0) const {
  if (c_.empty()) return 0;
  if (p0 == 0) {
    if (low_ < 0) throw PoleError(str());
    return low_ == 0 ? c_[0] : Rational(0);
  }
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= p0;
    acc += *it;
  }
  Rational base = low_ >= 0 ? p0 : Rational(1 / p0);
  Rational scale = 1;
  mpz_pow_ui(scale.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(low_)));
  mpz_pow_ui(scale.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(low_)));
  scale.canonicalize();
  return acc * scale;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return (b * a.c_[0]).shifted(a.low_);
  if (b.is_monomial()) return (a * b.c_[0]).shifted(b.low_);
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = c_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    std::string term;
    if (e == 0) {
      term = c.get_str();
    } else {
      std::string mono = e == 1 ? "p" : "p^" + std::to_string(e);
      if (c == 1) term = mono;
      else if (c == -1) term = "-" + mono;
      else term = c.get_str() + "*" + mono;
    }
    if (!s.empty() && term[0] != '-') s += '+';
    s += term;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& s) { return os << s.str(); }

// ------------------------------------------------------------- gcd, division

namespace {

using ZPoly = std::vector<Integer>;

void trim_z(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
}

void make_primitive(ZPoly& z) {
  Integer g = 0;
  for (auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (z.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_primitive_z(const std::vector<Rational>& c) {
  Integer l = 1;
  for (auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZPoly z(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i].get_num() * (l / c[i].get_den());
  make_primitive(z);
  return z;
}

// Pseudo-remainder of a by b, up to an integer factor.
ZPoly prem(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  Integer g, fa, fb;
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    fa = lb / g;
    fb = a.back() / g;
    for (auto& x : a) x *= fa;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= fb * b[j];
    trim_z(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly(1);
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
  ZPoly x = a.is_zero() ? ZPoly{} : to_primitive_z(a.dense());
  ZPoly y = b.is_zero() ? ZPoly{} : to_primitive_z(b.dense());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return LaurentPoly(1);
    ZPoly r = prem(std::move(x), y);
    x = std::move(y);
    if (!r.empty()) make_primitive(r);
    y = std::move(r);
  }
  std::vector<Rational> c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = Rational(x[i]);
  return LaurentPoly::from_dense(0, std::move(c));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (b.is_monomial()) return (a * Rational(1 / b.trailing())).shifted(-b.low());
  const auto& bc = b.dense();
  std::vector<Rational> rem = a.dense();
  if (rem.size() < bc.size()) throw Error("inexact polynomial division");
  const std::size_t nq = rem.size() - bc.size() + 1;
  std::vector<Rational> q(nq);
  const Rational inv_lead = 1 / bc.back();
  Rational t;
  for (std::size_t i = nq; i-- > 0;) {
    Rational& top = rem[i + bc.size() - 1];
    if (top == 0) continue;
    q[i] = top * inv_lead;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), q[i].get_mpq_t(), bc[j].get_mpq_t());
      rem[i + j] -= t;
    }
  }
  for (std::size_t i = 0; i + 1 < bc.size(); ++i)
    if (rem[i] != 0) throw Error("inexact polynomial division");
  return LaurentPoly::from_dense(a.low() - b.low(), std::move(q));
}

// --------------------------------------------------------------------- Scalar

namespace {

// c with den/c integer, primitive, positive leading coefficient.
Rational primitive_factor(const std::vector<Rational>& c) {
  Integer l = 1;
  for (auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0, t;
  for (auto& x : c) {
    t = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
  }
  Rational f(g, l);
  f.canonicalize();
  if (c.back() < 0) f = -f;
  return f;
}

}  // namespace

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const int s = den_.low();
  if (s != 0) {
    num_ = num_.shifted(-s);
    den_ = den_.shifted(-s);
  }
  Rational f = primitive_factor(den_.dense());
  if (f != 1) {
    Rational fi = 1 / f;
    num_ *= fi;
    den_ *= fi;
  }
}

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  Scalar s(num, den, 0);
  s.normalize();
  return s;
}

Scalar Scalar::p_power(int e, const Rational& c) { return Scalar(LaurentPoly::monomial(c, e)); }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error("scalar " + str() + " is not a rational constant");
  return num_.coeff(0);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r(den_, num_, 0);
  const int s = r.den_.low();
  r.num_ = r.num_.shifted(-s);
  r.den_ = r.den_.shifted(-s);
  Rational f = primitive_factor(r.den_.dense());
  if (f != 1) {
    Rational fi = 1 / f;
    r.num_ *= fi;
    r.den_ *= fi;
  }
  return r;
}

Scalar Scalar::reflected() const { return fraction(num_.reflected(), den_.reflected()); }

Rational Scalar::eval_at(const Rational& p0) const {
  Rational d = den_.eval(p0);
  if (d == 0) throw PoleError(den_.str());
  return num_.eval(p0) / d;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, 0); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  // Henrici: only the gcd of the denominators can survive in the sum.
  LaurentPoly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    LaurentPoly d1 = exact_div(den_, g);
    LaurentPoly d2 = exact_div(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = d1 * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = o.num_, ad = den_, bd = o.den_;
  LaurentPoly g1 = poly_gcd(a, bd);
  if (!g1.is_constant()) {
    a = exact_div(a, g1);
    bd = exact_div(bd, g1);
  }
  LaurentPoly g2 = poly_gcd(b, ad);
  if (!g2.is_constant()) {
    b = exact_div(b, g2);
    ad = exact_div(ad, g2);
  }
  num_ = a * b;
  den_ = ad * bd;
  const int s = den_.low();
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
  Rational f = primitive_factor(den_.dense());
  if (f != 1) {
    Rational fi = 1 / f;
    num_ *= fi;
    den_ *= fi;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::pow(int e) const {
  Scalar base = e < 0 ? inv() : *this;
  Scalar r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// --------------------------------------------------------------------- parser

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    LaurentPoly num = group();
    skip_ws();
    Scalar r;
    if (peek() == '/') {
      ++pos_;
      LaurentPoly den = group();
      if (den.is_zero()) throw ParseError("zero denominator", pos_);
      r = Scalar::fraction(num, den);
    } else {
      r = Scalar(num);
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  LaurentPoly group() {
    skip_ws();
    if (peek() != '(') return poly();
    ++pos_;
    LaurentPoly p = poly();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return p;
  }

  LaurentPoly poly() {
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    LaurentPoly acc = term() * Rational(sign);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      LaurentPoly t = term();
      if (c == '+') acc += t;
      else acc -= t;
    }
    return acc;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  LaurentPoly term() {
    skip_ws();
    if (peek() == 'p') return mono(1);
    if (!digit()) fail("expected term");
    Rational c(integer());
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (digit()) {
        Integer d = integer();
        if (d == 0) fail("zero denominator in coefficient");
        c /= Rational(d);
      } else {
        pos_ = save;
      }
    } else {
      pos_ = save;
    }
    save = pos_;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'p') fail("expected 'p' after '*'");
      return mono(c);
    }
    pos_ = save;
    return LaurentPoly(c);
  }

  LaurentPoly mono(const Rational& c) {
    ++pos_;  // 'p'
    std::size_t save = pos_;
    skip_ws();
    if (peek() != '^') {
      pos_ = save;
      return LaurentPoly::monomial(c, 1);
    }
    ++pos_;
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    Integer e = integer();
    if (!e.fits_sint_p()) fail("exponent out of range");
    return LaurentPoly::monomial(c, sign * static_cast<int>(e.get_si()));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

// ----------------------------------------------------------- quantum numbers

DeformationContext::DeformationContext(int n_, int k) : n(n_), root_order(k) {
  if (n < 2) throw Error("deformation context needs N >= 2");
  if (root_order < 1) throw Error("deformation context needs root order >= 1");
}

DeformationContext DeformationContext::su(int n) { return DeformationContext(n, n); }

Scalar DeformationContext::q_pow(long num, long den) const {
  if (den == 0) throw DivisionByZero();
  long top = static_cast<long>(root_order) * num;
  if (top % den != 0)
    throw Error("q^(" + std::to_string(num) + "/" + std::to_string(den) + ") is not a power of p for root order " +
                std::to_string(root_order));
  return Scalar::p_power(static_cast<int>(top / den));
}

Scalar qnum(long m_num, long m_den, QBase base, const DeformationContext& ctx) {
  if (m_den == 0) throw DivisionByZero();
  if (m_den < 0) {
    m_den = -m_den;
    m_num = -m_num;
  }
  long g = std::gcd(m_num, m_den);
  if (g > 1) {
    m_num /= g;
    m_den /= g;
  }
  if (ctx.root_order % m_den != 0)
    throw Error("quantum number [" + std::to_string(m_num) + "/" + std::to_string(m_den) +
                "] needs a denominator dividing the root order " + std::to_string(ctx.root_order));
  const int sgn = base == QBase::q ? 1 : -1;
  const int e = sgn * static_cast<int>(2 * ctx.root_order * m_num / m_den);
  const int e2 = sgn * 2 * ctx.root_order;
  return Scalar::fraction(LaurentPoly::monomial(1, e) - LaurentPoly(1), LaurentPoly::monomial(1, e2) - LaurentPoly(1));
}

Scalar qfact(int n, const DeformationContext& ctx) {
  if (n < 0) throw Error("quantum factorial of a negative integer");
  Scalar r = 1;
  for (int m = 1; m <= n; ++m) r *= qnum(m, 1, QBase::q, ctx);
  return r;
}

}  // namespace qla
