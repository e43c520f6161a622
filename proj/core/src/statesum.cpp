#include "qinv3/statesum.hpp"

#include "qinv3/error.hpp"
#include "qinv3/parallel.hpp"

#include <algorithm>

namespace qinv3 {

std::vector<int> edge_assignment_order(const Skeleton& s) {
  // each tetrahedron face as the edge classes on it
  std::vector<std::array<int, 3>> faces;
  for (int a = 0; a < s.num_tets; ++a)
    for (int f = 0; f < 4; ++f) {
      std::array<int, 3> cls{};
      int k = 0;
      for (int e = 0; e < 6; ++e)
        if (kEdgeEnds[e][0] != f && kEdgeEnds[e][1] != f) cls[k++] = s.tet_edge[a][e];
      faces.push_back(cls);
    }
  std::vector<bool> assigned(static_cast<std::size_t>(s.num_edges), false);
  std::vector<int> order;
  while (static_cast<int>(order.size()) < s.num_edges) {
    int best = -1;
    std::pair<int, int> best_score{-1, -1};
    for (int e = 0; e < s.num_edges; ++e) {
      if (assigned[e]) continue;
      int completes = 0, touches = 0;
      for (const auto& f : faces) {
        bool has = false, other_open = false, some_assigned = false;
        for (int x : f) {
          if (x == e)
            has = true;
          else if (!assigned[x])
            other_open = true;
          else
            some_assigned = true;
        }
        if (!has) continue;
        if (!other_open) ++completes;
        if (some_assigned) ++touches;
      }
      std::pair<int, int> score{completes, touches};
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    assigned[best] = true;
    order.push_back(best);
  }
  return order;
}

namespace {

struct FaceCheck {
  int tet;
  int slots[3];  // ab, bc, ac
};

struct Plan {
  Skeleton s;
  int rank = 0;
  std::vector<int> order;
  std::vector<std::vector<FaceCheck>> faces_at;  // by depth at which the face is fully labelled
  std::vector<std::vector<int>> tets_at;

  Plan(const Triangulation& t, const FusionData& c) : s(compute_skeleton(t)), rank(c.rank) {
    if (c.rank < 1) throw IntegrityError("category has no labels");
    order = edge_assignment_order(s);
    std::vector<int> depth_of(static_cast<std::size_t>(s.num_edges));
    for (int d = 0; d < s.num_edges; ++d) depth_of[order[d]] = d;
    faces_at.resize(static_cast<std::size_t>(s.num_edges));
    tets_at.resize(static_cast<std::size_t>(s.num_edges));
    for (int a = 0; a < s.num_tets; ++a) {
      int tet_ready = 0;
      for (int e = 0; e < 6; ++e) tet_ready = std::max(tet_ready, depth_of[s.tet_edge[a][e]]);
      tets_at[tet_ready].push_back(a);
      for (int f = 0; f < 4; ++f) {
        int v[3], k = 0;
        for (int x = 0; x < 4; ++x)
          if (x != f) v[k++] = x;
        FaceCheck fc{a, {edge_slot(v[0], v[1]), edge_slot(v[1], v[2]), edge_slot(v[0], v[2])}};
        int ready = 0;
        for (int slot : fc.slots) ready = std::max(ready, depth_of[s.tet_edge[a][slot]]);
        faces_at[ready].push_back(fc);
      }
    }
  }
};

// Walks admissible labellings; Leaf decides what to do with each one.
class Walker {
 public:
  Walker(const Plan& plan, const FusionData& c)
      : plan_(plan), c_(c), label_(static_cast<std::size_t>(plan.s.num_edges), 0) {}

  int tet_label(int tet, int slot) const {
    int l = label_[plan_.s.tet_edge[tet][slot]];
    return plan_.s.tet_edge_sign[tet][slot] > 0 ? l : c_.dual[l];
  }
  SixjKey tet_key(int tet) const {
    SixjKey k{};
    for (int e = 0; e < 6; ++e) k[e] = tet_label(tet, e);
    return k;
  }
  bool faces_ok(int depth) const {
    for (const auto& f : plan_.faces_at[depth])
      if (!c_.fusion(tet_label(f.tet, f.slots[0]), tet_label(f.tet, f.slots[1]), tet_label(f.tet, f.slots[2])))
        return false;
    return true;
  }
  void set(int depth, int x) { label_[plan_.order[depth]] = x; }
  const Labelling& labels() const { return label_; }

 private:
  const Plan& plan_;
  const FusionData& c_;
  Labelling label_;
};

void walk_labels(const Plan& plan, Walker& w, int depth, const std::function<void(const Labelling&)>& visit) {
  if (depth == plan.s.num_edges) {
    visit(w.labels());
    return;
  }
  for (int x = 0; x < plan.rank; ++x) {
    w.set(depth, x);
    if (w.faces_ok(depth)) walk_labels(plan, w, depth + 1, visit);
  }
}

template <typename Num>
Num convert(const Scalar& x);
template <>
Rational convert<Rational>(const Scalar& x) {
  return x.as_rational();
}
template <>
Scalar convert<Scalar>(const Scalar& x) {
  return x;
}
template <>
long double convert<long double>(const Scalar& x) {
  return x.to_long_double();
}

template <typename Num>
class WeightTable {
 public:
  explicit WeightTable(const FusionData& c) : c_(c), rank_(c.rank) {
    for (const auto& d : c.qdim) qdim.push_back(convert<Num>(d));
    long long cells = 1;
    for (int i = 0; i < 6 && cells <= (1 << 22); ++i) cells *= rank_;
    dense_ = cells <= (1 << 22);
    if (dense_) {
      values_.assign(static_cast<std::size_t>(cells), Num(0));
      present_.assign(static_cast<std::size_t>(cells), 0);
      for (const auto& [k, v] : c.sixj) {
        std::size_t i = index(k);
        values_[i] = convert<Num>(v);
        present_[i] = 1;
      }
    } else {
      for (const auto& [k, v] : c.sixj) sparse_.emplace(k, convert<Num>(v));
    }
  }

  const Num& operator()(const SixjKey& k) const {
    if (dense_) {
      std::size_t i = index(k);
      if (!present_[i]) c_.sixj_at(k);  // throws the integrity error
      return values_[i];
    }
    auto it = sparse_.find(k);
    if (it == sparse_.end()) c_.sixj_at(k);
    return it->second;
  }

  std::vector<Num> qdim;

 private:
  std::size_t index(const SixjKey& k) const {
    std::size_t i = 0;
    for (int x : k) i = i * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(x);
    return i;
  }
  const FusionData& c_;
  int rank_;
  bool dense_ = false;
  std::vector<Num> values_;
  std::vector<char> present_;
  std::map<SixjKey, Num> sparse_;
};

template <typename Num>
struct Partial {
  Num sum = Num(0);
  std::uint64_t count = 0;
};

template <typename Num>
void accumulate(const Plan& plan, const WeightTable<Num>& wt, Walker& w, int depth, const Num& acc,
                Partial<Num>& out) {
  if (depth == plan.s.num_edges) {
    out.sum += acc;
    ++out.count;
    return;
  }
  for (int x = 0; x < plan.rank; ++x) {
    w.set(depth, x);
    if (!w.faces_ok(depth)) continue;
    Num next = acc * wt.qdim[x];
    for (int tet : plan.tets_at[depth]) next = next * wt(w.tet_key(tet));
    accumulate(plan, wt, w, depth + 1, next, out);
  }
}

template <typename Num>
Partial<Num> state_sum(const Plan& plan, const FusionData& c, int threads) {
  WeightTable<Num> wt(c);
  std::vector<Partial<Num>> parts(static_cast<std::size_t>(plan.rank));
  parallel_for(plan.rank, threads, [&](int x) {
    Walker w(plan, c);
    w.set(0, x);
    if (!w.faces_ok(0)) return;
    Num acc = wt.qdim[x];
    for (int tet : plan.tets_at[0]) acc = acc * wt(w.tet_key(tet));
    accumulate(plan, wt, w, 1, acc, parts[x]);
  });
  Partial<Num> total;
  for (const auto& p : parts) {
    total.sum += p.sum;
    total.count += p.count;
  }
  return total;
}

bool all_exact(const FusionData& c) {
  if (!c.K.is_exact()) return false;
  for (const auto& d : c.qdim)
    if (!d.is_exact()) return false;
  for (const auto& [k, v] : c.sixj)
    if (!v.is_exact()) return false;
  return true;
}

}  // namespace

void for_each_admissible_labelling(const Triangulation& t, const FusionData& c,
                                   const std::function<void(const Labelling&)>& visit) {
  Plan plan(t, c);
  Walker w(plan, c);
  walk_labels(plan, w, 0, visit);
}

std::vector<Labelling> admissible_labellings(const Triangulation& t, const FusionData& c) {
  std::vector<Labelling> out;
  for_each_admissible_labelling(t, c, [&](const Labelling& l) { out.push_back(l); });
  std::sort(out.begin(), out.end());
  return out;
}

TVValue tv_state_sum(const Triangulation& t, const FusionData& c, const StateSumOptions& opts) {
  Plan plan(t, c);
  const int threads = resolve_threads(opts.threads);
  TVValue out;
  out.vertices = plan.s.num_vertices;
  if (c.is_rational()) {
    auto p = state_sum<Rational>(plan, c, threads);
    Rational k = c.K.as_rational();
    Rational norm = 1;
    for (int i = 0; i < plan.s.num_vertices; ++i) norm *= k;
    out.value = Scalar(p.sum / norm);
    out.labellings = p.count;
  } else if (all_exact(c)) {
    auto p = state_sum<Scalar>(plan, c, threads);
    Scalar norm = 1;
    for (int i = 0; i < plan.s.num_vertices; ++i) norm *= c.K;
    out.value = p.sum / norm;
    out.labellings = p.count;
  } else {
    auto p = state_sum<long double>(plan, c, threads);
    long double k = c.K.to_long_double();
    long double v = p.sum;
    for (int i = 0; i < plan.s.num_vertices; ++i) v /= k;
    out.value = Scalar::real(v);
    out.labellings = p.count;
  }
  return out;
}

}  // namespace qinv3
