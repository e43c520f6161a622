#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace qinv3 {

/// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 R() { return {1, 1, 0, 1}; }
  static Mat2 L() { return {1, 0, 1, 1}; }
  static Mat2 S() { return {0, -1, 1, 0}; }
  static Mat2 T() { return {1, 1, 0, 1}; }

  long long det() const { return a * d - b * c; }
  long long trace() const { return a + d; }
  /// Inverse of a determinant-one matrix.
  Mat2 inverse() const { return {d, -b, -c, a}; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 mod(long long m) const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;

  /// "a,b;c,d"
  std::string to_string() const;
  /// Accepts "a,b;c,d" and "[[a,b],[c,d]]"; throws ParseError.
  static Mat2 parse(std::string_view text);
};

}  // namespace qinv3
