#pragma once

#include "qinv3/scalar.hpp"

#include <complex>
#include <vector>

namespace qinv3 {

/// Exact element of the cyclotomic field Q(zeta_n), stored as rational
/// coefficients on 1, zeta, ..., zeta^(phi(n)-1) (reduced modulo the n-th
/// cyclotomic polynomial, so the representation is canonical).
class Cyclotomic {
 public:
  explicit Cyclotomic(int n = 1);
  Cyclotomic(int n, const Rational& value);
  static Cyclotomic root(int n, long long k);  ///< zeta_n^k

  int order() const { return n_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }
  std::complex<long double> to_complex() const;
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static Cyclotomic from_full(int n, std::vector<Rational> full);
  int n_;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Dense square matrix over Q(zeta_n).
class CycloMatrix {
 public:
  CycloMatrix(int dim, int n);
  static CycloMatrix identity(int dim, int n);

  int dim() const { return dim_; }
  int field_order() const { return n_; }
  Cyclotomic& at(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Cyclotomic& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

  Cyclotomic trace() const;
  CycloMatrix conj_transpose() const;
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  int dim_;
  int n_;
  std::vector<Cyclotomic> data_;
};

}  // namespace qinv3
