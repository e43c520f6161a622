#pragma once

#include "qinv3/fpgroup.hpp"
#include "qinv3/mat2.hpp"
#include "qinv3/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qinv3 {

/// Permutation of {0,1,2,3}; perm[i] is the image of vertex i.
using Perm4 = std::array<int, 4>;

Perm4 identity_perm();
Perm4 inverse(const Perm4& p);
/// (p * q)[i] = p[q[i]]
Perm4 compose(const Perm4& p, const Perm4& q);
int sign(const Perm4& p);
bool is_perm(const Perm4& p);

/// Face `face` of a tetrahedron (the face opposite vertex `face`) glued to
/// face perm[face] of tetrahedron `tet`, vertex i going to vertex perm[i].
struct Gluing {
  int tet = -1;
  Perm4 perm{0, 1, 2, 3};
  bool glued() const { return tet >= 0; }
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// Tetrahedra with face gluings. glue() keeps the two directions of a gluing
/// consistent; validate() reports on everything else.
class Triangulation {
 public:
  explicit Triangulation(int tets = 0) : gluings_(static_cast<std::size_t>(tets)) {}

  int size() const { return static_cast<int>(gluings_.size()); }
  int add_tet();
  const Gluing& gluing(int tet, int face) const { return gluings_.at(static_cast<std::size_t>(tet))[face]; }

  /// Glues (tet, face) to (other, perm[face]) and the reverse. Throws
  /// SpecError if either face is already glued or the request is malformed.
  void glue(int tet, int face, int other, const Perm4& perm);
  void unglue(int tet, int face);

  /// Raw write of one direction, for building deliberately broken inputs.
  void set_gluing_raw(int tet, int face, const Gluing& g) { gluings_.at(static_cast<std::size_t>(tet))[face] = g; }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<std::array<Gluing, 4>> gluings_;
};

/// Tetrahedron edge slots in the order 01, 02, 03, 12, 13, 23.
inline constexpr int kEdgeEnds[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
int edge_slot(int u, int v);

/// Identification classes of vertices, edges and faces. Classes are numbered
/// in order of their least (tet, slot) representative, and each edge class
/// is oriented like its representative.
struct Skeleton {
  int num_tets = 0;
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  std::vector<std::array<int, 4>> tet_vertex;
  std::vector<std::array<int, 6>> tet_edge;
  /// +1 if the tetrahedron's low-to-high reading of the edge matches the
  /// class orientation, -1 otherwise.
  std::vector<std::array<int, 6>> tet_edge_sign;
  std::vector<std::array<int, 4>> tet_face;
  std::vector<std::pair<int, int>> edge_rep;  ///< (tet, slot)
  std::vector<std::pair<int, int>> face_rep;  ///< (tet, face)
  std::vector<int> edge_degree;               ///< tetrahedron-edge incidences per class

  long long euler_characteristic() const {
    return static_cast<long long>(num_vertices) - num_edges + num_faces - num_tets;
  }
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Throws IntegrityError on an unglued face, an inconsistent gluing, or an
/// edge identified with itself in reverse.
Skeleton compute_skeleton(const Triangulation& t);

/// Checks: gluing-involution, closed, edge-links, orientable, euler.
ValidationReport validate(const Triangulation& t);

/// Fundamental group of the 2-skeleton: one generator per edge class off a
/// spanning tree of the 1-skeleton, one relator per face class.
Presentation fundamental_group(const Triangulation& t);

/// Renumbers the vertices of every tetrahedron: new vertex i of tet k is old
/// vertex relabel[k][i].
Triangulation relabel(const Triangulation& t, const std::vector<Perm4>& relabel);
/// Reverses the orientation of every tetrahedron (swap vertices 0 and 1).
Triangulation mirror(const Triangulation& t);

/// `tets: n`, then `i: g0 g1 g2 g3` with gj = `tet/p0p1p2p3` (or `-` for an
/// unglued face).
Triangulation parse_triangulation(std::string_view text);
std::string format_triangulation(const Triangulation& t);
Triangulation read_triangulation_file(const std::string& path);

// ---------------------------------------------------------------------------
// Builders

/// One-vertex two-tetrahedron 3-sphere.
Triangulation s3_two_tet();
/// Boundary of the 4-simplex.
Triangulation s3_pentachoron();
/// L(p, q) as p tetrahedra around the axis of a bipyramid, the upper faces
/// glued to the lower faces after a rotation by q steps. p = 1 gives S^3.
Triangulation lens_space(int p, int q);
/// Six tetrahedra of the cube x < y < z ordering (Kuhn), opposite faces
/// identified.
Triangulation t3();

/// Word over {R, L} with both letters present; R = [[1,1],[0,1]], L = [[1,0],[1,1]].
struct RLWord {
  std::string letters;

  RLWord() = default;
  explicit RLWord(std::string w);
  Mat2 matrix() const;
  friend bool operator==(const RLWord&, const RLWord&) = default;
};

/// Torus bundle with monodromy word: a six-tetrahedron product layer over
/// the two-triangle torus, one layered tetrahedron per letter, top glued
/// back to bottom. Yields 6 + n tetrahedra, one vertex.
Triangulation torus_bundle(const RLWord& w);

struct RLFactorization {
  RLWord word;
  Mat2 conjugator;  ///< conjugator * A * conjugator^-1 = word.matrix()
};

/// RL word of a hyperbolic positive-trace matrix. Throws SpecError for
/// det != 1, UnsupportedError for trace < 3.
RLFactorization matrix_to_rl(const Mat2& a);

/// Presentation of the fundamental group of the mapping torus of a torus
/// homeomorphism acting by A on H1.
Presentation torus_bundle_presentation(const Mat2& a);

/// Named manifolds: s3, s3_5, rp3, lens:p,q, t3, bundle:<RL word>.
Triangulation make_manifold(std::string_view spec);
/// Standard presentation for the same names.
Presentation manifold_presentation(std::string_view spec);

// ---------------------------------------------------------------------------
// Pachner moves

/// Least (tet, face) representative of each face class on two distinct
/// tetrahedra, i.e. the faces eligible for a 2-3 move.
std::vector<int> eligible_23_faces(const Triangulation& t);
/// Replaces the two tetrahedra on either side of a face class by three
/// around a new edge. Throws SpecError if both sides are the same tetrahedron.
Triangulation pachner_23(const Triangulation& t, int face_class);
/// Replaces a tetrahedron by four around a new interior vertex.
Triangulation pachner_14(const Triangulation& t, int tet);

}  // namespace qinv3
