// Slow, direct computations used as independent references in tests.
#pragma once

#include "qinv3/fingroup.hpp"
#include "qinv3/fpgroup.hpp"
#include "qinv3/fusioncat.hpp"
#include "qinv3/mat2.hpp"
#include "qinv3/triangulation.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using namespace qinv3;

inline int power(const GroupTable& g, int x, long long k) {
  if (k < 0) {
    x = g.inv(x);
    k = -k;
  }
  int r = 0;
  for (long long i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

inline int evaluate(const GroupTable& g, const Word& w, const std::vector<int>& images) {
  int r = 0;
  for (const auto& l : w.letters()) r = g.mul(r, power(g, images[l.generator], l.exponent));
  return r;
}

/// Every assignment of generators, every relator evaluated.
inline long long hom_count(const Presentation& p, const GroupTable& g) {
  const int n = p.num_generators();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  long long count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (const auto& r : p.relators)
        if (evaluate(g, r, img) != 0) return;
      ++count;
      return;
    }
    for (int x = 0; x < g.order(); ++x) {
      img[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

/// Homomorphisms from the torus-bundle group: pairs (x, y) fixed by the
/// monodromy a -> a^m00 b^m10, b -> a^m01 b^m11, times |G| choices of t.
/// Abelian G only.
inline long long torus_bundle_fixed_pairs(const Mat2& a, const GroupTable& g) {
  long long count = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      int fx = g.mul(power(g, x, a.a), power(g, y, a.c));
      int fy = g.mul(power(g, x, a.b), power(g, y, a.d));
      if (fx == x && fy == y) ++count;
    }
  return count;
}

// --- integer matrices ------------------------------------------------------

inline long long det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    d += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return d;
}

/// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<long long> divisors{1};
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
    std::function<void(int, int)> pick_rows;
    std::function<void(int, int)> pick_cols = [&](int at, int from) {
      if (at == k) {
        std::vector<std::vector<long long>> sub(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
        g = std::gcd(g, std::llabs(det(sub)));
        return;
      }
      for (int c = from; c < cols; ++c) {
        ci[at] = c;
        pick_cols(at + 1, c + 1);
      }
    };
    pick_rows = [&](int at, int from) {
      if (at == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = from; r < rows; ++r) {
        ri[at] = r;
        pick_rows(at + 1, r + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<long long> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

/// Cokernel of the row space of m in Z^cols as (free rank, torsion >= 2).
inline std::pair<int, std::vector<long long>> cokernel(const std::vector<std::vector<long long>>& m, int cols) {
  auto f = m.empty() ? std::vector<long long>{} : invariant_factors(m);
  std::vector<long long> torsion;
  for (long long d : f)
    if (d > 1) torsion.push_back(d);
  return {cols - static_cast<int>(f.size()), torsion};
}

/// H1 of a torus bundle: coker(A - I) plus Z.
inline std::pair<int, std::vector<long long>> torus_bundle_h1(const Mat2& a) {
  auto c = cokernel({{a.a - 1, a.b}, {a.c, a.d - 1}}, 2);
  return {c.first + 1, c.second};
}

// --- triangulations --------------------------------------------------------

struct Edges {
  int count = 0;
  std::vector<std::array<int, 6>> cls;
  std::vector<std::array<int, 6>> sign;
};

/// Edge classes by flooding across gluings, numbered by least (tet, slot),
/// oriented like that representative.
inline Edges edge_classes(const Triangulation& t) {
  const int n = t.size();
  Edges e;
  e.cls.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1, -1, -1});
  e.sign.assign(static_cast<std::size_t>(n), {0, 0, 0, 0, 0, 0});
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < 6; ++s) {
      if (e.cls[a][s] >= 0) continue;
      const int id = e.count++;
      std::vector<std::array<int, 3>> stack{{a, s, 1}};
      e.cls[a][s] = id;
      e.sign[a][s] = 1;
      while (!stack.empty()) {
        auto [b, slot, sg] = stack.back();
        stack.pop_back();
        const int u = kEdgeEnds[slot][0], v = kEdgeEnds[slot][1];
        for (int f = 0; f < 4; ++f) {
          if (f == u || f == v) continue;
          const Gluing& g = t.gluing(b, f);
          int pu = g.perm[u], pv = g.perm[v];
          int s2 = sg * (pu < pv ? 1 : -1);
          int slot2 = edge_slot(std::min(pu, pv), std::max(pu, pv));
          if (e.cls[g.tet][slot2] < 0) {
            e.cls[g.tet][slot2] = id;
            e.sign[g.tet][slot2] = s2;
            stack.push_back({g.tet, slot2, s2});
          }
        }
      }
    }
  return e;
}

inline std::size_t vertex_classes(const Triangulation& t) {
  const int n = t.size();
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      for (int v = 0; v < 4; ++v)
        if (v != f) parent[find(4 * a + v)] = find(4 * g.tet + g.perm[v]);
    }
  std::size_t roots = 0;
  for (int x = 0; x < 4 * n; ++x) roots += find(x) == x;
  return roots;
}

/// Every labelling of the edge classes, no pruning; calls visit on the
/// admissible ones in lexicographic order.
inline void each_labelling(const Triangulation& t, const FusionData& c,
                           const std::function<void(const std::vector<int>&, const Edges&)>& visit) {
  const Edges e = edge_classes(t);
  std::vector<int> lab(static_cast<std::size_t>(e.count), 0);
  auto local = [&](int tet, int slot) {
    int l = lab[e.cls[tet][slot]];
    return e.sign[tet][slot] > 0 ? l : c.dual[l];
  };
  for (;;) {
    bool ok = true;
    for (int a = 0; a < t.size() && ok; ++a) {
      int l01 = local(a, 0), l02 = local(a, 1), l03 = local(a, 2), l12 = local(a, 3), l13 = local(a, 4),
          l23 = local(a, 5);
      ok = c.fusion(l01, l12, l02) && c.fusion(l01, l13, l03) && c.fusion(l02, l23, l03) && c.fusion(l12, l23, l13);
    }
    if (ok) visit(lab, e);
    int i = e.count - 1;
    while (i >= 0 && ++lab[i] == c.rank) lab[i--] = 0;
    if (i < 0) break;
  }
}

inline std::size_t labelling_count(const Triangulation& t, const FusionData& c) {
  std::size_t n = 0;
  each_labelling(t, c, [&](const std::vector<int>&, const Edges&) { ++n; });
  return n;
}

/// The state sum in long double straight from the definition.
inline long double state_sum(const Triangulation& t, const FusionData& c) {
  long double total = 0;
  each_labelling(t, c, [&](const std::vector<int>& lab, const Edges& e) {
    long double w = 1;
    for (int l : lab) w *= c.qdim[l].to_long_double();
    for (int a = 0; a < t.size(); ++a) {
      SixjKey k{};
      for (int s = 0; s < 6; ++s) {
        int l = lab[e.cls[a][s]];
        k[s] = e.sign[a][s] > 0 ? l : c.dual[l];
      }
      w *= c.sixj.at(k).to_long_double();
    }
    total += w;
  });
  return total / std::pow(c.K.to_long_double(), static_cast<long double>(vertex_classes(t)));
}

}  // namespace oracle
