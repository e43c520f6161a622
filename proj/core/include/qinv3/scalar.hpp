#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace qinv3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Module-wide float tolerance.
inline constexpr long double kTolerance = 1e-9L;

/// a + b*sqrt(d) with d > 1 squarefree.
struct Quadratic {
  Rational a;
  Rational b;
  int d = 2;

  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Value type of every invariant: an exact rational, an exact element of a
/// real quadratic field, or a long double. Arithmetic promotes
/// rational -> quadratic -> real; two quadratics over different fields meet
/// in real mode.
class Scalar {
 public:
  enum class Mode { Rational, Quadratic, Real };

  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : value_(v) {}  // NOLINT
  Scalar(const BigInt& v) : value_(Rational(v)) {}  // NOLINT
  Scalar(const Quadratic& q);  // NOLINT
  static Scalar real(long double v) { return Scalar(Tag{}, v); }
  static Scalar sqrt_of(int d);

  Mode mode() const;
  bool is_exact() const { return mode() != Mode::Real; }
  bool is_rational() const { return mode() == Mode::Rational; }

  const Rational& as_rational() const;
  const Quadratic& as_quadratic() const;
  long double to_long_double() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  /// Exact equality when both sides are exact; otherwise the relative
  /// tolerance test |x-y| <= tol*max(1,|x|,|y|).
  bool approx_equal(const Scalar& other, long double tol = kTolerance) const;
  bool is_zero() const;
  /// Same mode and same value; no tolerance.
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.value_ == y.value_; }

  /// Exact form ("3/2", "1/2+1/2*sqrt(5)") for exact values, decimal otherwise.
  std::string to_string() const;
  /// Fixed-point decimal with the given number of fractional digits.
  std::string to_decimal(int digits = 12) const;

  /// Inverse of to_string: "p/q", "p/q+r/s*sqrt(d)", "r/s*sqrt(d)", decimals.
  static Scalar parse(std::string_view text);

 private:
  struct Tag {};
  Scalar(Tag, long double v) : value_(v) {}
  std::variant<Rational, Quadratic, long double> value_;
};

/// Squarefree part test used when normalizing quadratic scalars.
bool is_squarefree(int d);

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace qinv3
