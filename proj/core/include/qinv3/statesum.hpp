#pragma once

#include "qinv3/fusioncat.hpp"
#include "qinv3/triangulation.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qinv3 {

/// One label per edge class.
using Labelling = std::vector<int>;

/// Order in which edge classes are assigned: each step takes the edge that
/// completes the most tetrahedron faces, then the one touching the most
/// partially labelled faces, then the lowest index.
std::vector<int> edge_assignment_order(const Skeleton& s);

/// Calls visit for every admissible labelling, in lexicographic order of the
/// labels taken along edge_assignment_order. A face of a tetrahedron is
/// admissible when its edges, read low to high in the tetrahedron and
/// dualized where that disagrees with the edge class orientation, form a
/// fusion triple (l_ab, l_bc, l_ac).
void for_each_admissible_labelling(const Triangulation& t, const FusionData& c,
                                   const std::function<void(const Labelling&)>& visit);

/// All admissible labellings, sorted lexicographically by edge-class index.
std::vector<Labelling> admissible_labellings(const Triangulation& t, const FusionData& c);

struct StateSumOptions {
  int threads = 0;  ///< 0: QINV3_THREADS or 1
};

struct TVValue {
  Scalar value;
  std::uint64_t labellings = 0;  ///< admissible labellings summed over
  int vertices = 0;
};

/// Z = K^-v * sum over admissible labellings of prod_edges qdim(l) * prod_tets 6j.
/// The 6j argument of a tetrahedron is its six edge labels in slot order
/// 01, 02, 03, 12, 13, 23. Exact when the category is exact, long double
/// otherwise; partial sums are combined by the label of the first assigned
/// edge, so the result does not depend on the thread count.
TVValue tv_state_sum(const Triangulation& t, const FusionData& c, const StateSumOptions& opts = {});

}  // namespace qinv3
