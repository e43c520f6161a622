#include "qinv3/error.hpp"
#include "qinv3/triangulation.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace qinv3 {

namespace {

using Point = std::array<int, 3>;

// Glues faces whose vertex sets agree up to translation in the first
// `periodic` coordinates. Faces without a partner stay unglued.
Triangulation glue_matching(const std::vector<std::array<Point, 4>>& tets, int periodic) {
  struct Side {
    int tet, face;
    Point shift;
  };
  std::map<std::array<Point, 3>, std::vector<Side>> by_key;
  for (int a = 0; a < static_cast<int>(tets.size()); ++a)
    for (int f = 0; f < 4; ++f) {
      Point shift{0, 0, 0};
      for (int k = 0; k < periodic; ++k) {
        shift[k] = INT32_MAX;
        for (int v = 0; v < 4; ++v)
          if (v != f) shift[k] = std::min(shift[k], tets[a][v][k]);
      }
      std::array<Point, 3> key{};
      int i = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) {
          for (int k = 0; k < 3; ++k) key[i][k] = tets[a][v][k] - shift[k];
          ++i;
        }
      std::sort(key.begin(), key.end());
      by_key[key].push_back({a, f, shift});
    }
  Triangulation t(static_cast<int>(tets.size()));
  for (const auto& [key, sides] : by_key) {
    if (sides.size() > 2) throw IntegrityError("face shared by more than two tetrahedra");
    if (sides.size() < 2) continue;
    const Side &x = sides[0], &y = sides[1];
    Perm4 perm{};
    perm[x.face] = y.face;
    for (int u = 0; u < 4; ++u) {
      if (u == x.face) continue;
      for (int v = 0; v < 4; ++v) {
        if (v == y.face) continue;
        bool same = true;
        for (int k = 0; k < 3; ++k)
          same = same && tets[x.tet][u][k] - x.shift[k] == tets[y.tet][v][k] - y.shift[k];
        if (same) perm[u] = v;
      }
    }
    t.glue(x.tet, x.face, y.tet, perm);
  }
  return t;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

Triangulation s3_two_tet() {
  Triangulation t(2);
  t.glue(0, 0, 0, {1, 0, 2, 3});
  t.glue(0, 2, 1, {1, 2, 0, 3});
  t.glue(0, 3, 1, {0, 2, 3, 1});
  t.glue(1, 2, 1, {0, 1, 3, 2});
  return t;
}

Triangulation s3_pentachoron() {
  std::vector<std::array<Point, 4>> tets;
  for (int omit = 0; omit < 5; ++omit) {
    std::array<Point, 4> tet{};
    int i = 0;
    for (int v = 0; v < 5; ++v)
      if (v != omit) tet[i++] = {v, 0, 0};
    tets.push_back(tet);
  }
  return glue_matching(tets, 0);
}

Triangulation lens_space(int p, int q) {
  if (p < 1) throw SpecError("lens space needs p >= 1");
  if (p == 1) return s3_two_tet();
  if (q <= 0 || q >= p) throw SpecError("lens space needs 0 < q < p (got p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
  if (gcd_ll(p, q) != 1) throw SpecError("lens space needs gcd(p, q) = 1 (got p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
  // tetrahedron i = (N, S, v_i, v_{i+1})
  Triangulation t(p);
  for (int i = 0; i < p; ++i) {
    t.glue(i, 2, (i + 1) % p, {0, 1, 3, 2});  // (N, S, v_{i+1}) shared with the next tetrahedron
    t.glue(i, 1, (i + q) % p, {1, 0, 2, 3});  // (N, v_i, v_{i+1}) onto (S, v_{i+q}, v_{i+q+1})
  }
  return t;
}

Triangulation t3() {
  std::vector<std::array<Point, 4>> tets;
  std::array<int, 3> axes{0, 1, 2};
  do {
    std::array<Point, 4> tet{};
    Point p{0, 0, 0};
    tet[0] = p;
    for (int k = 0; k < 3; ++k) {
      ++p[axes[k]];
      tet[k + 1] = p;
    }
    tets.push_back(tet);
  } while (std::next_permutation(axes.begin(), axes.end()));
  return glue_matching(tets, 3);
}

RLWord::RLWord(std::string w) : letters(std::move(w)) {
  for (char c : letters)
    if (c != 'R' && c != 'L') throw SpecError("RL word may only contain R and L: '" + letters + "'");
  if (letters.find('R') == std::string::npos || letters.find('L') == std::string::npos)
    throw SpecError("RL word needs at least one R and one L: '" + letters + "'");
}

Mat2 RLWord::matrix() const {
  Mat2 m;
  for (char c : letters) m = m * (c == 'R' ? Mat2::R() : Mat2::L());
  return m;
}

Triangulation torus_bundle(const RLWord& w) {
  RLWord checked(w.letters);
  // Product layer: prisms over the triangles (0, e1, e1+e2) and (0, e2, e1+e2),
  // each cut into three tetrahedra by the staircase a0a1a2b2, a0a1b1b2, a0b0b1b2.
  std::vector<std::array<Point, 4>> tets;
  for (const auto& tri : {std::array<Point, 3>{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}},
                          std::array<Point, 3>{{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}}}}) {
    auto lo = [&](int i) { return Point{tri[i][0], tri[i][1], 0}; };
    auto hi = [&](int i) { return Point{tri[i][0], tri[i][1], 1}; };
    tets.push_back({lo(0), lo(1), lo(2), hi(2)});
    tets.push_back({lo(0), lo(1), hi(1), hi(2)});
    tets.push_back({lo(0), hi(0), hi(1), hi(2)});
  }
  Triangulation t = glue_matching(tets, 2);

  // A boundary triangle (q, q+u, q+u+w) or (q, q+w, q+u+w) as a tetrahedron
  // face with its corners in that order.
  struct Corner {
    int tet;
    std::array<int, 3> v;
    int opposite() const { return 6 - v[0] - v[1] - v[2]; }
  };
  Corner bottom1{0, {0, 1, 2}}, bottom2{3, {0, 1, 2}};
  Corner top1{2, {1, 2, 3}}, top2{5, {1, 2, 3}};

  auto attach = [&](int tet, std::array<int, 3> face, const Corner& c) {
    Perm4 perm{};
    int free_vertex = 6 - face[0] - face[1] - face[2];
    for (int k = 0; k < 3; ++k) perm[face[k]] = c.v[k];
    perm[free_vertex] = c.opposite();
    t.glue(tet, free_vertex, c.tet, perm);
  };

  for (char letter : checked.letters) {
    int x = t.add_tet();
    if (letter == 'R') {
      attach(x, {0, 1, 2}, top1);
      attach(x, {1, 2, 3}, top2);
      top1 = {x, {0, 1, 3}};
      top2 = {x, {0, 2, 3}};
    } else {
      attach(x, {0, 1, 2}, top2);
      attach(x, {1, 2, 3}, top1);
      top1 = {x, {0, 2, 3}};
      top2 = {x, {0, 1, 3}};
    }
  }
  attach(top1.tet, top1.v, bottom1);
  attach(top2.tet, top2.v, bottom2);
  return t;
}

RLFactorization matrix_to_rl(const Mat2& a) {
  if (a.det() != 1) throw SpecError("matrix " + a.to_string() + " has determinant " + std::to_string(a.det()) + ", not 1");
  if (a.trace() < 3)
    throw UnsupportedError("matrix " + a.to_string() + " has trace " + std::to_string(a.trace()) +
                           "; only hyperbolic classes with trace >= 3 have an RL word (use the presentation route)");
  auto size = [](const Mat2& m) { return std::llabs(m.a) + std::llabs(m.b) + std::llabs(m.c) + std::llabs(m.d); };
  auto nonnegative = [](const Mat2& m) { return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0; };

  // best-first search over conjugation by R^{+-1}, L^{+-1}
  using Node = std::tuple<long long, Mat2, Mat2>;  // size, matrix, conjugator
  std::priority_queue<Node, std::vector<Node>, std::greater<>> open;
  std::set<Mat2> seen{a};
  open.push({size(a), a, Mat2::identity()});
  const Mat2 steps[4] = {Mat2::R(), Mat2::R().inverse(), Mat2::L(), Mat2::L().inverse()};
  std::optional<std::pair<Mat2, Mat2>> found;
  while (!open.empty() && seen.size() < 2000000) {
    auto [s, m, p] = open.top();
    open.pop();
    if (nonnegative(m)) {
      found = {m, p};
      break;
    }
    for (const Mat2& x : steps) {
      Mat2 next = x * m * x.inverse();
      if (seen.insert(next).second) open.push({size(next), next, x * p});
    }
  }
  if (!found) throw UnsupportedError("no nonnegative conjugate of " + a.to_string() + " found");

  auto [m, p] = *found;
  std::string word;
  Mat2 rest = m;
  while (rest != Mat2::identity()) {
    if (rest.a >= rest.c && rest.b >= rest.d) {
      word += 'R';
      rest = Mat2::R().inverse() * rest;
    } else if (rest.c >= rest.a && rest.d >= rest.b) {
      word += 'L';
      rest = Mat2::L().inverse() * rest;
    } else {
      throw IntegrityError("nonnegative matrix " + m.to_string() + " does not peel");
    }
  }
  RLFactorization out{RLWord(word), p};
  if (out.conjugator * a * out.conjugator.inverse() != out.word.matrix())
    throw IntegrityError("RL factorization certificate failed for " + a.to_string());
  return out;
}

Presentation torus_bundle_presentation(const Mat2& a) {
  if (a.det() != 1) throw SpecError("monodromy " + a.to_string() + " is not in SL(2,Z)");
  return mapping_torus_presentation(surface_presentation(1), torus_images(a.a, a.b, a.c, a.d));
}

namespace {

std::pair<int, int> parse_lens(std::string_view spec) {
  std::string rest(spec.substr(5));
  auto comma = rest.find(',');
  if (comma == std::string::npos) throw SpecError("expected lens:p,q");
  try {
    std::size_t u1 = 0, u2 = 0;
    int p = std::stoi(rest.substr(0, comma), &u1);
    int q = std::stoi(rest.substr(comma + 1), &u2);
    if (u1 != comma || u2 != rest.size() - comma - 1) throw SpecError("expected lens:p,q");
    return {p, q};
  } catch (const std::logic_error&) {
    throw SpecError("expected lens:p,q, got '" + std::string(spec) + "'");
  }
}

}  // namespace

Triangulation make_manifold(std::string_view spec) {
  if (spec == "s3") return s3_two_tet();
  if (spec == "s3_5") return s3_pentachoron();
  if (spec == "rp3") return lens_space(2, 1);
  if (spec == "t3") return t3();
  if (spec.substr(0, 5) == "lens:") {
    auto [p, q] = parse_lens(spec);
    return lens_space(p, q);
  }
  if (spec.substr(0, 7) == "bundle:") return torus_bundle(RLWord(std::string(spec.substr(7))));
  throw SpecError("unknown manifold '" + std::string(spec) + "' (expected s3, s3_5, rp3, t3, lens:p,q, bundle:<RL word>)");
}

Presentation manifold_presentation(std::string_view spec) {
  if (spec == "s3" || spec == "s3_5") return parse_presentation("gens:\n");
  if (spec == "rp3") return parse_presentation("gens: a\nrel: a^2\n");
  if (spec == "t3") return parse_presentation("gens: a b c\nrel: a b a^-1 b^-1\nrel: a c a^-1 c^-1\nrel: b c b^-1 c^-1\n");
  if (spec.substr(0, 5) == "lens:") {
    auto [p, q] = parse_lens(spec);
    lens_space(p, q);  // same argument checks
    return parse_presentation("gens: a\nrel: a^" + std::to_string(p) + "\n");
  }
  if (spec.substr(0, 7) == "bundle:") return torus_bundle_presentation(RLWord(std::string(spec.substr(7))).matrix());
  throw SpecError("unknown manifold '" + std::string(spec) + "'");
}

}  // namespace qinv3
