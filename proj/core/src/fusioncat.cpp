#include "qinv3/fusioncat.hpp"

#include "qinv3/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace qinv3 {

bool FusionData::admissible(const SixjKey& l) const {
  for (int x : l)
    if (x < 0 || x >= rank) return false;
  return fusion(l[0], l[3], l[1]) && fusion(l[0], l[4], l[2]) && fusion(l[1], l[5], l[2]) &&
         fusion(l[3], l[5], l[4]);
}

namespace {

std::string key_string(const int* v, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string key_string(const SixjKey& k) { return key_string(k.data(), 6); }

FusionData blank(std::string name, int rank) {
  FusionData c;
  c.name = std::move(name);
  c.rank = rank;
  c.dual.resize(static_cast<std::size_t>(rank));
  c.qdim.assign(static_cast<std::size_t>(rank), Scalar(1));
  c.fusion_rules.assign(static_cast<std::size_t>(rank) * rank * rank, 0);
  return c;
}

// mids[a][c] lists every b with c in a (x) b
using Middles = std::vector<std::vector<std::vector<int>>>;

Middles middles(const FusionData& c) {
  Middles m(static_cast<std::size_t>(c.rank), std::vector<std::vector<int>>(static_cast<std::size_t>(c.rank)));
  for (int a = 0; a < c.rank; ++a)
    for (int b = 0; b < c.rank; ++b)
      for (int x = 0; x < c.rank; ++x)
        if (c.fusion(a, b, x)) m[a][x].push_back(b);
  return m;
}

template <typename Fn>
void for_each_admissible(const FusionData& c, const Middles& mid, Fn&& fn) {
  for (int l01 = 0; l01 < c.rank; ++l01)
    for (int l02 = 0; l02 < c.rank; ++l02)
      for (int l12 : mid[l01][l02])
        for (int l03 = 0; l03 < c.rank; ++l03)
          for (int l13 : mid[l01][l03])
            for (int l23 : mid[l02][l03])
              if (c.fusion(l12, l23, l13)) fn(SixjKey{l01, l02, l03, l12, l13, l23});
}

void fill_sixj(FusionData& c, const std::function<Scalar(const SixjKey&)>& value) {
  Middles mid = middles(c);
  for_each_admissible(c, mid, [&](const SixjKey& k) { c.sixj.emplace(k, value(k)); });
}

Scalar sum_of_squares(const std::vector<Scalar>& q) {
  Scalar k = 0;
  for (const auto& d : q) k += d * d;
  return k;
}

}  // namespace

const Scalar& FusionData::sixj_at(const SixjKey& l) const {
  auto it = sixj.find(l);
  if (it == sixj.end()) throw IntegrityError(name + ": no 6j value for admissible labels " + key_string(l));
  return it->second;
}

bool FusionData::is_rational() const {
  if (!K.is_rational()) return false;
  for (const auto& d : qdim)
    if (!d.is_rational()) return false;
  for (const auto& [k, v] : sixj)
    if (!v.is_rational()) return false;
  return true;
}

SixjKey permute_key(const SixjKey& l, const std::array<int, 4>& perm, const std::vector<int>& dual) {
  static constexpr int slot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  static constexpr int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  SixjKey out{};
  for (int e = 0; e < 6; ++e) {
    int u = perm[ends[e][0]], v = perm[ends[e][1]];
    int label = l[slot[u][v]];
    out[e] = u < v ? label : dual[label];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in categories

FusionData vec_g(const GroupTable& g) {
  FusionData c = blank("vecg:" + g.name(), g.order());
  for (int a = 0; a < g.order(); ++a) {
    c.dual[a] = g.inv(a);
    for (int b = 0; b < g.order(); ++b) c.set_fusion(a, b, g.mul(a, b));
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int x = 0; x < g.order(); ++x) {
        int ab = g.mul(a, b), bx = g.mul(b, x);
        c.sixj.emplace(SixjKey{a, ab, g.mul(ab, x), b, bx, x}, Scalar(1));
      }
  c.K = Scalar(g.order());
  return c;
}

FusionData trivial_category() {
  FusionData c = vec_g(make_group("Z1"));
  c.name = "trivial";
  return c;
}

FusionData fibonacci() {
  FusionData c = blank("fibonacci", 2);
  c.dual = {0, 1};
  c.qdim = {Scalar(1), Scalar(Quadratic{Rational(1, 2), Rational(1, 2), 5})};
  for (auto [a, b, x] : {std::array{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}}) c.set_fusion(a, b, x);
  c.K = Scalar(Quadratic{Rational(5, 2), Rational(1, 2), 5});
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  fill_sixj(c, [&](const SixjKey& k) {
    int units = 0;
    for (int x : k) units += x == 0;
    switch (units) {
      case 6: return Scalar::real(1.0L);
      case 3: return Scalar::real(1.0L / std::sqrt(phi));
      case 0: return Scalar::real(-1.0L / (phi * phi));
      default: return Scalar::real(1.0L / phi);
    }
  });
  return c;
}

FusionData ising() {
  FusionData c = blank("ising", 3);
  c.dual = {0, 1, 2};
  c.qdim = {Scalar(1), Scalar::sqrt_of(2), Scalar(1)};
  for (int a = 0; a < 3; ++a) {
    c.set_fusion(0, a, a);
    c.set_fusion(a, 0, a);
  }
  c.set_fusion(1, 1, 0);
  c.set_fusion(1, 1, 2);
  c.set_fusion(1, 2, 1);
  c.set_fusion(2, 1, 1);
  c.set_fusion(2, 2, 0);
  c.K = Scalar(4);
  fill_sixj(c, [](const SixjKey& k) {
    int sigmas = 0;
    for (int x : k) sigmas += x == 1;
    if (sigmas == 0) return Scalar::real(1.0L);
    if (sigmas == 3) return Scalar::real(std::pow(2.0L, -0.25L));
    // four sigma edges form a 4-cycle; the two remaining edges are opposite
    static constexpr int opposite[3][2] = {{0, 5}, {1, 4}, {2, 3}};
    for (auto [e, f] : opposite)
      if (k[e] != 1) {
        long double v = 1.0L / std::sqrt(2.0L);
        return Scalar::real(k[e] == 2 && k[f] == 2 ? -v : v);
      }
    throw IntegrityError("ising: unexpected sigma pattern");
  });
  return c;
}

namespace {

// Kauffman-Lins recoupling theory at A = i exp(i pi / 2r). With this choice
// the loop value and all theta nets are positive, so the symmetric 6j symbol
// Tet / sqrt(theta theta theta theta) is real.
class KauffmanLins {
 public:
  explicit KauffmanLins(int r) : r_(r) {
    const long double pi = std::numbers::pi_v<long double>;
    fact_.assign(static_cast<std::size_t>(2 * r + 2), 1.0L);
    for (int k = 1; k < static_cast<int>(fact_.size()); ++k) {
      long double q = std::sin(k * pi / r) / std::sin(pi / r);
      if (k % 2 == 0) q = -q;
      fact_[k] = fact_[k - 1] * q;
    }
  }

  long double fact(int n) const { return fact_.at(static_cast<std::size_t>(n)); }

  long double quantum_dim(int a) const {
    const long double pi = std::numbers::pi_v<long double>;
    return std::sin((a + 1) * pi / r_) / std::sin(pi / r_);
  }

  long double theta(int a, int b, int c) const {
    int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    long double v = fact(m + n + p + 1) * fact(m) * fact(n) * fact(p) / (fact(m + n) * fact(n + p) * fact(m + p));
    return (m + n + p) % 2 ? -v : v;
  }

  // Tet[A B E; C D F] with faces (A,D,E), (B,C,E), (A,B,F), (C,D,F)
  long double tet(int A, int B, int C, int D, int E, int F) const {
    int a[4] = {(A + D + E) / 2, (B + C + E) / 2, (A + B + F) / 2, (C + D + F) / 2};
    int b[3] = {(B + D + E + F) / 2, (A + C + E + F) / 2, (A + B + C + D) / 2};
    long double pre = 1.0L;
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 4; ++i) pre *= fact(b[j] - a[i]);
    for (int e : {A, B, C, D, E, F}) pre /= fact(e);
    int lo = *std::max_element(a, a + 4), hi = *std::min_element(b, b + 3);
    long double sum = 0.0L;
    for (int s = lo; s <= hi; ++s) {
      long double den = 1.0L;
      for (int i = 0; i < 4; ++i) den *= fact(s - a[i]);
      for (int j = 0; j < 3; ++j) den *= fact(b[j] - s);
      long double term = fact(s + 1) / den;
      sum += s % 2 ? -term : term;
    }
    return pre * sum;
  }

 private:
  int r_;
  std::vector<long double> fact_;
};

}  // namespace

FusionData quantum_sl2(int r) {
  if (r < 3) throw SpecError("quantum_sl2 needs r >= 3 (got " + std::to_string(r) + ")");
  const int k = r - 1;
  FusionData c = blank("sl2:" + std::to_string(r), k);
  KauffmanLins kl(r);
  for (int a = 0; a < k; ++a) {
    c.dual[a] = a;
    c.qdim[a] = Scalar::real(kl.quantum_dim(a));
    for (int b = 0; b < k; ++b)
      for (int x = 0; x < k; ++x)
        if ((a + b + x) % 2 == 0 && x <= a + b && a <= b + x && b <= a + x && a + b + x <= 2 * (r - 2))
          c.set_fusion(a, b, x);
  }
  c.K = sum_of_squares(c.qdim);
  fill_sixj(c, [&](const SixjKey& l) {
    long double t = kl.tet(l[0], l[2], l[5], l[3], l[1], l[4]);
    long double th = kl.theta(l[0], l[3], l[1]) * kl.theta(l[0], l[4], l[2]) * kl.theta(l[1], l[5], l[2]) *
                     kl.theta(l[3], l[5], l[4]);
    return Scalar::real(t / std::sqrt(th));
  });
  return c;
}

FusionData make_category(std::string_view name) {
  if (name == "trivial") return trivial_category();
  if (name == "fibonacci" || name == "fib") return fibonacci();
  if (name == "ising") return ising();
  if (name.substr(0, 4) == "sl2:") {
    std::string rest(name.substr(4));
    std::size_t used = 0;
    int r = 0;
    try {
      r = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw SpecError("bad sl2 level in '" + std::string(name) + "'");
    return quantum_sl2(r);
  }
  if (name.substr(0, 5) == "vecg:") return vec_g(make_group(name.substr(5)));
  if (name.substr(0, 4) == "vec:") return vec_g(make_group(name.substr(4)));
  throw SpecError("unknown category '" + std::string(name) +
                  "' (expected trivial, fib, ising, sl2:<r> or vecg:<group>)");
}

// ---------------------------------------------------------------------------
// Validation

namespace {

class Validator {
 public:
  Validator(const FusionData& c, long double tol) : c_(c), tol_(tol), n_(c.rank) {}

  CategoryReport run() {
    structural();
    if (!report_.passed()) return std::move(report_);  // 6j checks assume sane fusion data
    mid_ = middles(c_);
    support();
    if (!report_.check("sixj-support").passed) return std::move(report_);
    symmetry();
    pentagon();
    orthogonality();
    return std::move(report_);
  }

 private:
  bool close(const Scalar& x, const Scalar& y) const { return x.approx_equal(y, tol_); }

  CheckResult& add(std::string name) {
    report_.checks.push_back({std::move(name), true, {}});
    return report_.checks.back();
  }
  static void fail(CheckResult& r, std::string witness) {
    if (!r.passed) return;
    r.passed = false;
    r.witness = std::move(witness);
  }

  void structural() {
    bool shapes = static_cast<int>(c_.dual.size()) == n_ && static_cast<int>(c_.qdim.size()) == n_ &&
                  c_.fusion_rules.size() == static_cast<std::size_t>(n_) * n_ * n_ && n_ > 0;
    auto& dual_check = add("dual-involution");
    if (!shapes) {
      fail(dual_check, "array sizes disagree with rank " + std::to_string(n_));
      return;
    }
    for (int a = 0; a < n_; ++a) {
      int d = c_.dual[a];
      if (d < 0 || d >= n_ || c_.dual[d] != a) fail(dual_check, "label " + std::to_string(a));
    }
    if (!dual_check.passed) return;
    auto& unit_dual = add("unit-dual");
    if (c_.dual[0] != 0) fail(unit_dual, "dual(0) = " + std::to_string(c_.dual[0]));

    auto& unit = add("fusion-unit");
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        bool want = a == b;
        if (c_.fusion(0, a, b) != want || c_.fusion(a, 0, b) != want)
          fail(unit, "0 (x) " + std::to_string(a) + " vs " + std::to_string(b));
        if (c_.fusion(a, b, 0) != (b == c_.dual[a]))
          fail(unit, "unit in " + std::to_string(a) + " (x) " + std::to_string(b));
      }

    auto& dual_fusion = add("fusion-duality");
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int x = 0; x < n_; ++x)
          if (c_.fusion(a, b, x) != c_.fusion(c_.dual[b], c_.dual[a], c_.dual[x])) {
            int w[3] = {a, b, x};
            fail(dual_fusion, key_string(w, 3));
          }

    auto& qd = add("qdim-duality");
    for (int a = 0; a < n_; ++a)
      if (!close(c_.qdim[a], c_.qdim[c_.dual[a]])) fail(qd, "label " + std::to_string(a));
    auto& qu = add("qdim-unit");
    if (!close(c_.qdim[0], Scalar(1))) fail(qu, "qdim(0) = " + c_.qdim[0].to_string());

    auto& hom = add("dimension-homomorphism");
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        Scalar rhs = 0;
        for (int x = 0; x < n_; ++x)
          if (c_.fusion(a, b, x)) rhs += c_.qdim[x];
        if (!close(c_.qdim[a] * c_.qdim[b], rhs)) {
          int w[2] = {a, b};
          fail(hom, key_string(w, 2));
        }
      }

    auto& kc = add("K-consistency");
    Scalar k = sum_of_squares(c_.qdim);
    if (!close(k, c_.K)) fail(kc, "sum qdim^2 = " + k.to_string() + ", stored K = " + c_.K.to_string());
  }

  void support() {
    auto& r = add("sixj-support");
    std::size_t admissible = 0;
    for_each_admissible(c_, mid_, [&](const SixjKey& k) {
      ++admissible;
      if (!c_.sixj.count(k)) fail(r, "missing " + key_string(k));
    });
    for (const auto& [k, v] : c_.sixj)
      if (!c_.admissible(k)) fail(r, "inadmissible " + key_string(k));
    if (r.passed && admissible != c_.sixj.size()) fail(r, "entry count mismatch");
  }

  void symmetry() {
    auto& r = add("tetrahedral-symmetry");
    static constexpr std::array<std::array<int, 4>, 3> generators{{{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}}};
    for (const auto& [k, v] : c_.sixj) {
      for (const auto& p : generators) {
        SixjKey q = permute_key(k, p, c_.dual);
        auto it = c_.sixj.find(q);
        if (it == c_.sixj.end() || !close(it->second, v)) {
          fail(r, key_string(k) + " vs " + key_string(q));
          return;
        }
      }
    }
  }

  const Scalar& w(int a, int b, int c, int d, int e, int f) const { return c_.sixj.at(SixjKey{a, b, c, d, e, f}); }

  // Two tetrahedra 0123, 0124 against three around the edge 34:
  // W(0123) W(0124) = sum_x qdim(x) W(0134) W(0234) W(1234), x = l34.
  void pentagon() {
    auto& r = add("pentagon");
    const auto& N = [&](int a, int b, int x) { return c_.fusion(a, b, x); };
    for (int l01 = 0; l01 < n_; ++l01)
      for (int l02 = 0; l02 < n_; ++l02)
        for (int l12 : mid_[l01][l02])
          for (int l03 = 0; l03 < n_; ++l03)
            for (int l13 : mid_[l01][l03])
              for (int l23 : mid_[l02][l03]) {
                if (!N(l12, l23, l13)) continue;
                for (int l04 = 0; l04 < n_; ++l04)
                  for (int l14 : mid_[l01][l04])
                    for (int l24 : mid_[l02][l04]) {
                      if (!N(l12, l24, l14)) continue;
                      Scalar lhs = w(l01, l02, l03, l12, l13, l23) * w(l01, l02, l04, l12, l14, l24);
                      Scalar rhs = 0;
                      for (int x : mid_[l03][l04]) {
                        if (!N(l13, x, l14) || !N(l23, x, l24)) continue;
                        rhs += c_.qdim[x] * w(l01, l03, l04, l13, l14, x) * w(l02, l03, l04, l23, l24, x) *
                               w(l12, l13, l14, l23, l24, x);
                      }
                      if (!close(lhs, rhs)) {
                        int t[9] = {l01, l02, l03, l04, l12, l13, l14, l23, l24};
                        fail(r, "(l01,l02,l03,l04,l12,l13,l14,l23,l24) = " + key_string(t, 9) + ": " +
                                    lhs.to_string() + " vs " + rhs.to_string());
                        return;
                      }
                    }
              }
  }

  // Inserting a vertex inside tetrahedron 0123:
  // K W(0123) = sum over l04, l14, l24, l34 of the four qdims times the four new 6j symbols.
  void orthogonality() {
    auto& r = add("orthogonality");
    for (const auto& [k, v] : c_.sixj) {
      auto [l01, l02, l03, l12, l13, l23] = k;
      Scalar rhs = 0;
      for (int l04 = 0; l04 < n_; ++l04)
        for (int l14 : mid_[l01][l04])
          for (int l24 : mid_[l02][l04]) {
            if (!c_.fusion(l12, l24, l14)) continue;
            for (int l34 : mid_[l03][l04]) {
              if (!c_.fusion(l13, l34, l14) || !c_.fusion(l23, l34, l24)) continue;
              rhs += c_.qdim[l04] * c_.qdim[l14] * c_.qdim[l24] * c_.qdim[l34] * w(l01, l02, l04, l12, l14, l24) *
                     w(l01, l03, l04, l13, l14, l34) * w(l02, l03, l04, l23, l24, l34) *
                     w(l12, l13, l14, l23, l24, l34);
            }
          }
      if (!close(c_.K * v, rhs)) {
        fail(r, key_string(k) + ": " + (c_.K * v).to_string() + " vs " + rhs.to_string());
        return;
      }
    }
  }

  const FusionData& c_;
  long double tol_;
  int n_;
  Middles mid_;
  CategoryReport report_;
};

}  // namespace

CategoryReport validate_category(const FusionData& c, long double tol) { return Validator(c, tol).run(); }

Scalar global_dimension(const FusionData& c) {
  Scalar k = sum_of_squares(c.qdim);
  if (!k.approx_equal(c.K))
    throw IntegrityError(c.name + ": sum of squared qdims " + k.to_string() + " differs from stored K " +
                         c.K.to_string());
  return k;
}

}  // namespace qinv3
