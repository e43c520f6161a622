#include "qinv3/error.hpp"
#include "qinv3/fpgroup.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace qinv3 {

IntegerMatrix::IntegerMatrix(int rows, int cols, std::initializer_list<long long> values)
    : IntegerMatrix(rows, cols) {
  if (values.size() != entries_.size()) throw SpecError("matrix initializer has wrong entry count");
  std::size_t k = 0;
  for (long long v : values) entries_[k++] = v;
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw SpecError("matrix product shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SpecError("matrix difference shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
  return c;
}

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw SpecError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Row/column operations applied to the working matrix and mirrored into the
// transforms so that left * input * right stays equal to the working matrix.
struct Reducer {
  IntegerMatrix a;
  IntegerMatrix left;
  IntegerMatrix right;
  bool track;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track)
      for (int c = 0; c < left.cols(); ++c) std::swap(left.at(i, c), left.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track)
      for (int r = 0; r < right.rows(); ++r) std::swap(right.at(r, i), right.at(r, j));
  }
  // row_i -= q * row_j
  void add_row(int i, int j, const BigInt& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    if (track)
      for (int c = 0; c < left.cols(); ++c) left.at(i, c) -= q * left.at(j, c);
  }
  // col_i -= q * col_j
  void add_col(int i, int j, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    if (track)
      for (int r = 0; r < right.rows(); ++r) right.at(r, i) -= q * right.at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    if (track)
      for (int c = 0; c < left.cols(); ++c) left.at(i, c) = -left.at(i, c);
  }
};

// Floor-free quotient: truncation toward zero keeps |remainder| < |divisor|.
BigInt quotient(const BigInt& x, const BigInt& d) { return x / d; }

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  const int rows = m.rows(), cols = m.cols();
  Reducer r{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols), with_transforms};
  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    auto find_pivot = [&](int& pi, int& pj) {
      pi = pj = -1;
      BigInt best;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const BigInt& v = r.a.at(i, j);
          if (v == 0) continue;
          BigInt mag = abs(v);
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      return pi >= 0;
    };
    int pi, pj;
    if (!find_pivot(pi, pj)) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (r.a.at(i, t) == 0) continue;
        r.add_row(i, t, quotient(r.a.at(i, t), r.a.at(t, t)));
        if (r.a.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (r.a.at(t, j) == 0) continue;
        r.add_col(j, t, quotient(r.a.at(t, j), r.a.at(t, t)));
        if (r.a.at(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // divisibility: fold any offending row into row t and continue
        int bad = -1;
        for (int i = t + 1; i < rows && bad < 0; ++i)
          for (int j = t + 1; j < cols; ++j)
            if (r.a.at(i, j) % r.a.at(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        r.add_row(t, bad, BigInt(-1));
        dirty = true;
      }
      // move the smallest remaining entry of row/col t onto the diagonal
      int bi = t, bj = t;
      BigInt best = abs(r.a.at(t, t));
      for (int i = t + 1; i < rows; ++i)
        if (r.a.at(i, t) != 0 && abs(r.a.at(i, t)) < best) {
          best = abs(r.a.at(i, t));
          bi = i;
          bj = t;
        }
      for (int j = t + 1; j < cols; ++j)
        if (r.a.at(t, j) != 0 && abs(r.a.at(t, j)) < best) {
          best = abs(r.a.at(t, j));
          bi = t;
          bj = j;
        }
      r.swap_rows(t, bi);
      r.swap_cols(t, bj);
    }
    if (r.a.at(t, t) < 0) r.negate_row(t);
  }

  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  for (int i = 0; i < t; ++i) out.factors.push_back(r.a.at(i, i));
  out.rank = static_cast<int>(out.factors.size());
  if (with_transforms) {
    out.left = std::move(r.left);
    out.right = std::move(r.right);
  }
  return out;
}

IntegerMatrix abelianization_matrix(const Presentation& p) {
  p.validate();
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.num_generators());
  for (int i = 0; i < m.rows(); ++i) {
    auto sums = exponent_sums(p.relators[static_cast<std::size_t>(i)], p.num_generators());
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = sums[static_cast<std::size_t>(j)];
  }
  return m;
}

H1Invariants cokernel_invariants(const IntegerMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  H1Invariants h;
  h.free_rank = snf.cokernel_free_rank();
  for (const auto& d : snf.factors)
    if (d != 1) h.torsion.push_back(d);
  return h;
}

H1Invariants h1_invariants(const Presentation& p) { return cokernel_invariants(abelianization_matrix(p)); }

std::string H1Invariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace qinv3
