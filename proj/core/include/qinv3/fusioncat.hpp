#pragma once

#include "qinv3/fingroup.hpp"
#include "qinv3/report.hpp"
#include "qinv3/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qinv3 {

/// Edge labels of a tetrahedron with vertices 0..3, in the slot order
/// (01, 02, 03, 12, 13, 23). Each edge is read from its lower to its higher
/// vertex; reading it the other way replaces the label by its dual.
using SixjKey = std::array<int, 6>;

/// Multiplicity-free spherical fusion category as numerical data.
///
/// fusion(a, b, c) = 1 iff c occurs in a (x) b. The four faces of a tetrahedron
/// are the triples (l01, l12, l02), (l01, l13, l03), (l02, l23, l03) and
/// (l12, l23, l13); a labelling is admissible when all four are fusion triples.
/// sixj stores the tetrahedrally symmetric 6j symbol for every admissible key
/// and nothing else.
struct FusionData {
  std::string name;
  int rank = 0;
  std::vector<int> dual;
  std::vector<Scalar> qdim;
  std::vector<std::uint8_t> fusion_rules;  ///< rank^3, index (a*rank + b)*rank + c
  std::map<SixjKey, Scalar> sixj;
  Scalar K;

  bool fusion(int a, int b, int c) const {
    return fusion_rules[(static_cast<std::size_t>(a) * rank + b) * rank + c] != 0;
  }
  void set_fusion(int a, int b, int c, bool v = true) {
    fusion_rules[(static_cast<std::size_t>(a) * rank + b) * rank + c] = v ? 1 : 0;
  }
  bool admissible(const SixjKey& l) const;
  /// Throws IntegrityError when an admissible key has no stored value.
  const Scalar& sixj_at(const SixjKey& l) const;
  /// True when every qdim, 6j value and K is rational.
  bool is_rational() const;
};

FusionData vec_g(const GroupTable& g);
FusionData trivial_category();
FusionData fibonacci();
FusionData ising();
/// Kauffman-Lins recoupling at q = exp(i*pi/r); labels are twice the spin.
FusionData quantum_sl2(int r);

/// Built-in by name: trivial, fib (or fibonacci), ising, sl2:<r>, vecg:<group spec>.
FusionData make_category(std::string_view name);

using CategoryReport = ValidationReport;

/// Checks, in order: dual-involution, unit-dual, fusion-unit, fusion-duality,
/// qdim-duality, qdim-unit, dimension-homomorphism, K-consistency,
/// sixj-support, tetrahedral-symmetry, pentagon, orthogonality.
CategoryReport validate_category(const FusionData& c, long double tol = kTolerance);

/// Sum of squared quantum dimensions; throws IntegrityError if it disagrees
/// with the stored K.
Scalar global_dimension(const FusionData& c);

/// Relabels a tetrahedron by a vertex permutation: new vertex i is old vertex
/// perm[i].
SixjKey permute_key(const SixjKey& l, const std::array<int, 4>& perm, const std::vector<int>& dual);

/// Line-based text format: `labels: k`, `dual: ...`, `qdim: ...`,
/// `fusion: a b c`, `sixj: a b c d e f value`, plus optional `name:` and `K:`.
/// Values are written so that parse(format(c)) reproduces c exactly.
FusionData parse_category(std::string_view text);
std::string format_category(const FusionData& c);
FusionData read_category_file(const std::string& path);

}  // namespace qinv3
