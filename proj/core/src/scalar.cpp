#include "qinv3/scalar.hpp"

#include "qinv3/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace qinv3 {

namespace {

long double rational_to_ld(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<long double>() /
         boost::multiprecision::denominator(r).convert_to<long double>();
}

Scalar make_quadratic(Rational a, Rational b, int d) {
  if (b == 0) return Scalar(a);
  return Scalar(Quadratic{std::move(a), std::move(b), d});
}

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return std::string(s.substr(lo, hi - lo));
}

}  // namespace

bool is_squarefree(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

std::string rational_to_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty rational");
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw ParseError("bad integer '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_int(t));
  BigInt num = parse_int(t.substr(0, slash));
  BigInt den = parse_int(t.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + t + "'");
  return Rational(num, den);
}

Scalar::Scalar(const Quadratic& q) {
  if (!is_squarefree(q.d)) throw SpecError("quadratic field needs squarefree d > 1");
  if (q.b == 0)
    value_ = q.a;
  else
    value_ = q;
}

Scalar Scalar::sqrt_of(int d) {
  int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d))));
  if (root * root == d) return Scalar(root);
  // pull out square factors: sqrt(k^2 m) = k sqrt(m)
  int k = 1, m = d;
  for (int p = 2; p * p <= m; ++p)
    while (m % (p * p) == 0) {
      m /= p * p;
      k *= p;
    }
  return Scalar(Quadratic{Rational(0), Rational(k), m});
}

Scalar::Mode Scalar::mode() const {
  switch (value_.index()) {
    case 0: return Mode::Rational;
    case 1: return Mode::Quadratic;
    default: return Mode::Real;
  }
}

const Rational& Scalar::as_rational() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw IntegrityError("scalar is not rational: " + to_string());
}

const Quadratic& Scalar::as_quadratic() const {
  if (auto* q = std::get_if<Quadratic>(&value_)) return *q;
  throw IntegrityError("scalar is not a quadratic irrational: " + to_string());
}

long double Scalar::to_long_double() const {
  switch (value_.index()) {
    case 0: return rational_to_ld(std::get<0>(value_));
    case 1: {
      const auto& q = std::get<1>(value_);
      return rational_to_ld(q.a) + rational_to_ld(q.b) * std::sqrt(static_cast<long double>(q.d));
    }
    default: return std::get<2>(value_);
  }
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: return Scalar(Rational(-std::get<0>(value_)));
    case 1: {
      const auto& q = std::get<1>(value_);
      return Scalar(Quadratic{-q.a, -q.b, q.d});
    }
    default: return Scalar::real(-std::get<2>(value_));
  }
}

namespace {

// Brings x, y to a common exact field if possible: returns d (1 for Q) or 0
// when only real arithmetic applies.
int common_field(const Scalar& x, const Scalar& y) {
  using M = Scalar::Mode;
  if (x.mode() == M::Real || y.mode() == M::Real) return 0;
  int dx = x.mode() == M::Quadratic ? x.as_quadratic().d : 1;
  int dy = y.mode() == M::Quadratic ? y.as_quadratic().d : 1;
  if (dx == 1) return dy;
  if (dy == 1 || dx == dy) return dx;
  return 0;
}

std::pair<Rational, Rational> parts(const Scalar& s) {
  if (s.is_rational()) return {s.as_rational(), Rational(0)};
  const auto& q = s.as_quadratic();
  return {q.a, q.b};
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  int d = common_field(x, y);
  if (d == 0) return Scalar::real(x.to_long_double() + y.to_long_double());
  auto [a, b] = parts(x);
  auto [c, e] = parts(y);
  if (d == 1) return Scalar(a + c);
  return make_quadratic(a + c, b + e, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  int d = common_field(x, y);
  if (d == 0) return Scalar::real(x.to_long_double() * y.to_long_double());
  auto [a, b] = parts(x);
  auto [c, e] = parts(y);
  if (d == 1) return Scalar(a * c);
  return make_quadratic(a * c + b * e * d, a * e + b * c, d);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) throw std::domain_error("scalar division by zero");
  int d = common_field(x, y);
  if (d == 0) return Scalar::real(x.to_long_double() / y.to_long_double());
  auto [c, e] = parts(y);
  if (d == 1) return x * Scalar(Rational(1) / c);
  Rational norm = c * c - e * e * d;
  return x * make_quadratic(c / norm, -e / norm, d);
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return false;  // b != 0 by construction and sqrt(d) irrational
    default: return std::get<2>(value_) == 0;
  }
}

bool Scalar::approx_equal(const Scalar& other, long double tol) const {
  if (is_exact() && other.is_exact() && common_field(*this, other) != 0)
    return (*this - other).is_zero();
  long double x = to_long_double(), y = other.to_long_double();
  long double scale = std::max({1.0L, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= tol * scale;
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return rational_to_string(std::get<0>(value_));
    case 1: {
      const auto& q = std::get<1>(value_);
      std::string out;
      Rational b = q.b;
      if (q.a != 0) {
        out = rational_to_string(q.a);
        out += b < 0 ? "-" : "+";
        if (b < 0) b = -b;
      }
      out += rational_to_string(b) + "*sqrt(" + std::to_string(q.d) + ")";
      return out;
    }
    default: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*Lg",
                    std::numeric_limits<long double>::max_digits10, std::get<2>(value_));
      std::string s = buf;
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";  // keep real mode on reparse
      return s;
    }
  }
}

std::string Scalar::to_decimal(int digits) const {
  char buf[128];
  long double v = to_long_double();
  if (v == 0) v = 0;  // no "-0.000"
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty scalar");
  auto sq = t.find("sqrt(");
  if (sq != std::string::npos) {
    auto close = t.find(')', sq);
    if (close == std::string::npos || close + 1 != t.size())
      throw ParseError("bad quadratic scalar '" + t + "'");
    int d = 0;
    try {
      d = std::stoi(t.substr(sq + 5, close - sq - 5));
    } catch (const std::exception&) {
      throw ParseError("bad radicand in '" + t + "'");
    }
    if (!is_squarefree(d)) throw ParseError("radicand must be squarefree > 1 in '" + t + "'");
    // coefficient part ends with "*" just before sqrt(
    if (sq == 0 || t[sq - 1] != '*') throw ParseError("expected '*sqrt(d)' in '" + t + "'");
    std::string head = t.substr(0, sq - 1);
    // split head into "a" and "+-b" at the last sign that is not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;)
      if (head[i] == '+' || head[i] == '-') {
        split = i;
        break;
      }
    Rational a(0), b;
    if (split == std::string::npos) {
      b = parse_rational(head);
    } else {
      a = parse_rational(head.substr(0, split));
      b = parse_rational(head.substr(split));
    }
    return make_quadratic(a, b, d);
  }
  if (t.find_first_of(".eE") != std::string::npos || t.find("inf") != std::string::npos ||
      t.find("nan") != std::string::npos) {
    char* end = nullptr;
    long double v = std::strtold(t.c_str(), &end);
    if (end != t.c_str() + t.size()) throw ParseError("bad decimal '" + t + "'");
    return Scalar::real(v);
  }
  return Scalar(parse_rational(t));
}

}  // namespace qinv3
