#include "qinv3/error.hpp"
#include "qinv3/triangulation.hpp"

#include <map>

namespace qinv3 {

std::vector<int> eligible_23_faces(const Triangulation& t) {
  Skeleton s = compute_skeleton(t);
  std::vector<int> out;
  for (int f = 0; f < s.num_faces; ++f) {
    auto [a, face] = s.face_rep[f];
    if (t.gluing(a, face).tet != a) out.push_back(f);
  }
  return out;
}

Triangulation pachner_14(const Triangulation& t, int tet) {
  const int n = t.size();
  if (tet < 0 || tet >= n) throw SpecError("pachner_14: no tetrahedron " + std::to_string(tet));
  compute_skeleton(t);  // closed and consistent
  // new tetrahedron j replaces the cone on face j; its vertex j is the new vertex
  const std::array<int, 4> idx{tet, n, n + 1, n + 2};
  auto moved = [&](int a, int face) { return a == tet ? idx[face] : a; };
  Triangulation out(n + 3);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      out.set_gluing_raw(moved(a, f), f, {moved(g.tet, g.perm[f]), g.perm});
    }
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      if (i == j) continue;
      Perm4 swap = identity_perm();
      std::swap(swap[i], swap[j]);
      out.set_gluing_raw(idx[j], i, {idx[i], swap});
    }
  return out;
}

Triangulation pachner_23(const Triangulation& t, int face_class) {
  Skeleton s = compute_skeleton(t);
  if (face_class < 0 || face_class >= s.num_faces)
    throw SpecError("pachner_23: no face class " + std::to_string(face_class));
  const int n = t.size();
  auto [t0, f0] = s.face_rep[face_class];
  const Gluing shared = t.gluing(t0, f0);
  const int t1 = shared.tet, f1 = shared.perm[f0];
  if (t1 == t0)
    throw SpecError("pachner_23: face class " + std::to_string(face_class) + " has the same tetrahedron on both sides");
  const Perm4 pinv = inverse(shared.perm);

  // Labels: vertices of t0 keep their local numbers (f0 is the apex on the t0
  // side), 4 is the apex on the t1 side. New tetrahedron k sits opposite
  // triangle vertex tri[k] and has vertices (f0, 4, y, z).
  std::array<int, 3> tri{};
  for (int v = 0, k = 0; v < 4; ++v)
    if (v != f0) tri[k++] = v;
  const std::array<int, 3> idx{t0, t1, n};
  std::array<std::array<int, 4>, 3> labels{};
  for (int k = 0; k < 3; ++k) {
    labels[k] = {f0, 4, -1, -1};
    for (int v : tri)
      if (v != tri[k]) (labels[k][2] < 0 ? labels[k][2] : labels[k][3]) = v;
  }
  auto slot_of = [&](int k, int label) {
    for (int i = 0; i < 4; ++i)
      if (labels[k][i] == label) return i;
    return -1;
  };
  auto tri_index = [&](int v) {
    for (int k = 0; k < 3; ++k)
      if (tri[k] == v) return k;
    return -1;
  };

  // where each old face of t0 / t1 lands: new tet, new face, old local -> new local
  struct Landing {
    int tet, face;
    Perm4 map;
  };
  auto landing = [&](int a, int f) -> std::optional<Landing> {
    if (a == t0 && f != f0) {
      int k = tri_index(f);
      Perm4 m{};
      for (int v = 0; v < 4; ++v) m[v] = v == f ? 1 : slot_of(k, v);
      return Landing{idx[k], 1, m};
    }
    if (a == t1 && f != f1) {
      int k = tri_index(pinv[f]);
      Perm4 m{};
      for (int w = 0; w < 4; ++w) {
        int label = w == f1 ? 4 : pinv[w];
        m[w] = label == tri[k] ? 0 : slot_of(k, label);
      }
      return Landing{idx[k], 0, m};
    }
    return std::nullopt;
  };

  Triangulation out(n + 1);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      if ((a == t0 && f == f0) || (a == t1 && f == f1)) continue;
      const Gluing& g = t.gluing(a, f);
      int target_face = g.perm[f];
      auto src = landing(a, f);
      auto dst = landing(g.tet, target_face);
      Perm4 perm = g.perm;
      if (src) perm = compose(perm, inverse(src->map));
      if (dst) perm = compose(dst->map, perm);
      out.set_gluing_raw(src ? src->tet : a, src ? src->face : f, {dst ? dst->tet : g.tet, perm});
    }
  // the three new faces around the new edge
  for (int k = 0; k < 3; ++k)
    for (int i = 2; i < 4; ++i) {
      int y = labels[k][i];
      int other = tri_index(y);
      Perm4 perm{};
      for (int j = 0; j < 4; ++j) perm[j] = j == i ? slot_of(other, tri[k]) : slot_of(other, labels[k][j]);
      out.set_gluing_raw(idx[k], i, {idx[other], perm});
    }
  return out;
}

}  // namespace qinv3
