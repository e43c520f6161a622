#include "qinv3/cyclotomic.hpp"

#include "qinv3/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace qinv3 {

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division of monic integer polynomials.
std::vector<long long> poly_div(std::vector<long long> num, const std::vector<long long>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  if (n < 1) throw SpecError("cyclotomic order must be positive");
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  std::vector<long long> den{1};
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto it = cache.find(d);
    std::vector<long long> phi_d;
    if (it == cache.end()) {
      // recursion without holding the lock twice: compute divisors bottom-up
      // (divisors of d are divisors of n, visited earlier in this loop)
      std::vector<long long> pd(static_cast<std::size_t>(d) + 1, 0);
      pd[0] = -1;
      pd[d] = 1;
      std::vector<long long> dd{1};
      for (int e = 1; e < d; ++e)
        if (d % e == 0) dd = poly_mul(dd, cache.at(e));
      phi_d = poly_div(pd, dd);
      cache.emplace(d, phi_d);
    } else {
      phi_d = it->second;
    }
    den = poly_mul(den, phi_d);
  }
  return cache.emplace(n, poly_div(p, den)).first->second;
}

Cyclotomic::Cyclotomic(int n) : n_(n) {
  coeffs_.assign(cyclotomic_polynomial(n).size() - 1, Rational(0));
}

Cyclotomic::Cyclotomic(int n, const Rational& value) : Cyclotomic(n) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::from_full(int n, std::vector<Rational> full) {
  const auto& phi = cyclotomic_polynomial(n);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = full.size(); i-- > deg;) {
    if (full[i] == 0) continue;
    Rational c = full[i];
    for (std::size_t j = 0; j <= deg; ++j) full[i - deg + j] -= c * phi[j];
  }
  full.resize(deg, Rational(0));
  Cyclotomic out(n);
  out.coeffs_ = std::move(full);
  return out;
}

Cyclotomic Cyclotomic::root(int n, long long k) {
  long long e = ((k % n) + n) % n;
  std::vector<Rational> full(static_cast<std::size_t>(n), Rational(0));
  full[static_cast<std::size_t>(e)] = 1;
  return from_full(n, std::move(full));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::complex<long double> Cyclotomic::to_complex() const {
  std::complex<long double> z = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(j) / n_;
    long double c = Scalar(coeffs_[j]).to_long_double();
    z += c * std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> full(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    full[(static_cast<std::size_t>(n_) - j) % n_] += coeffs_[j];
  return from_full(n_, std::move(full));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) throw IntegrityError("cyclotomic field mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.n_ != n_) throw IntegrityError("cyclotomic field mismatch");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) throw IntegrityError("cyclotomic field mismatch");
  if (a.is_zero() || b.is_zero()) return Cyclotomic(a.n_);
  std::vector<Rational> full(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) full[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic::from_full(a.n_, std::move(full));
}

CycloMatrix::CycloMatrix(int dim, int n)
    : dim_(dim), n_(n), data_(static_cast<std::size_t>(dim) * dim, Cyclotomic(n)) {}

CycloMatrix CycloMatrix::identity(int dim, int n) {
  CycloMatrix m(dim, n);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic(n, Rational(1));
  return m;
}

Cyclotomic CycloMatrix::trace() const {
  Cyclotomic t(n_);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

CycloMatrix CycloMatrix::conj_transpose() const {
  CycloMatrix m(dim_, n_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.dim_ != b.dim_ || a.n_ != b.n_) throw IntegrityError("matrix shape mismatch");
  CycloMatrix out(a.dim_, a.n_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Cyclotomic& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) {
        const Cyclotomic& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

}  // namespace qinv3
