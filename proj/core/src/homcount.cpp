#include "qinv3/homcount.hpp"

#include "qinv3/error.hpp"
#include "qinv3/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace qinv3 {

namespace {

using Letters = std::vector<std::pair<int, int>>;  // (position, +-1)
__extension__ typedef unsigned __int128 u128;

struct Solver {
  int relator = -1;
  Letters prefix;  // relator = prefix x^eps suffix
  Letters suffix;
  int eps = 1;
};

struct SearchPlan {
  int group_order = 0;
  int depth = 0;       // constrained generators
  int free_count = 0;  // generators in no relator
  std::vector<Letters> relators;
  std::vector<std::vector<int>> checks_at;  // relators whose last generator sits at this depth
  std::vector<std::optional<Solver>> solver_at;
};

SearchPlan make_plan(const Presentation& p, const GroupTable& g) {
  p.validate();
  const int k = p.num_generators();
  std::vector<int> occupancy(static_cast<std::size_t>(k), 0);
  std::vector<long long> letter_count(static_cast<std::size_t>(k), 0);
  for (const auto& r : p.relators) {
    std::set<int> seen;
    for (const auto& l : r.letters()) {
      seen.insert(l.generator);
      letter_count[l.generator] += std::abs(l.exponent);
    }
    for (int x : seen) ++occupancy[x];
  }
  std::vector<int> gens(static_cast<std::size_t>(k));
  std::iota(gens.begin(), gens.end(), 0);
  std::stable_sort(gens.begin(), gens.end(), [&](int a, int b) {
    if (occupancy[a] != occupancy[b]) return occupancy[a] > occupancy[b];
    return letter_count[a] > letter_count[b];
  });

  SearchPlan plan;
  plan.group_order = g.order();
  std::vector<int> position(static_cast<std::size_t>(k), -1);
  for (int x : gens) {
    if (occupancy[x] == 0) {
      ++plan.free_count;
      continue;
    }
    position[x] = plan.depth++;
  }
  plan.checks_at.resize(static_cast<std::size_t>(plan.depth));
  plan.solver_at.resize(static_cast<std::size_t>(plan.depth));
  for (const auto& r : p.relators) {
    Letters letters;
    for (const auto& l : r.expanded()) letters.push_back({position[l.generator], l.exponent});
    if (letters.empty()) continue;
    int ready = 0;
    for (auto [pos, e] : letters) ready = std::max(ready, pos);
    int id = static_cast<int>(plan.relators.size());
    plan.relators.push_back(std::move(letters));
    plan.checks_at[ready].push_back(id);
  }
  // a generator occurring exactly once (exponent +-1) in a relator that
  // becomes ready at its depth can be solved for
  for (int d = 0; d < plan.depth; ++d)
    for (int id : plan.checks_at[d]) {
      const Letters& r = plan.relators[id];
      int hits = 0;
      std::size_t where = 0;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].first == d) {
          ++hits;
          where = i;
        }
      if (hits != 1) continue;
      Solver s;
      s.relator = id;
      s.prefix.assign(r.begin(), r.begin() + static_cast<long>(where));
      s.suffix.assign(r.begin() + static_cast<long>(where) + 1, r.end());
      s.eps = r[where].second;
      plan.solver_at[d] = std::move(s);
      break;
    }
  return plan;
}

BigInt to_bigint(u128 v) {
  BigInt hi = static_cast<unsigned long long>(v >> 64);
  BigInt lo = static_cast<unsigned long long>(v);
  return (hi << 64) + lo;
}

template <typename Count>
class Search {
 public:
  Search(const SearchPlan& plan, const GroupTable& g)
      : plan_(plan), g_(g), value_(static_cast<std::size_t>(plan.depth), 0) {}

  Count count_from(int depth) {
    if (depth == plan_.depth) return Count(1);
    if (const auto& s = plan_.solver_at[depth]) {
      // prefix x^eps suffix = 1  =>  x = (suffix prefix)^-1, or suffix prefix if eps = -1
      int sp = g_.mul(eval(s->suffix), eval(s->prefix));
      value_[depth] = s->eps > 0 ? g_.inv(sp) : sp;
      if (!checks_pass(depth, s->relator)) return Count(0);
      return count_from(depth + 1);
    }
    Count total(0);
    for (int v = 0; v < plan_.group_order; ++v) {
      value_[depth] = v;
      if (checks_pass(depth, -1)) total += count_from(depth + 1);
    }
    return total;
  }

  Count count_with_first(int v) {
    value_[0] = v;
    if (!checks_pass(0, -1)) return Count(0);
    return count_from(1);
  }

 private:
  int eval(const Letters& letters) const {
    int x = 0;
    for (auto [pos, e] : letters) {
      int v = value_[pos];
      x = g_.mul(x, e > 0 ? v : g_.inv(v));
    }
    return x;
  }

  bool checks_pass(int depth, int skip) const {
    for (int id : plan_.checks_at[depth])
      if (id != skip && eval(plan_.relators[id]) != 0) return false;
    return true;
  }

  const SearchPlan& plan_;
  const GroupTable& g_;
  std::vector<int> value_;
};

template <typename Count>
BigInt run(const SearchPlan& plan, const GroupTable& g, const HomCountOptions& opts) {
  auto widen = [](const Count& c) {
    if constexpr (std::is_same_v<Count, BigInt>)
      return c;
    else
      return to_bigint(c);
  };
  if (plan.depth == 0) return BigInt(1);
  if (plan.solver_at[0]) return widen(Search<Count>(plan, g).count_from(0));

  std::vector<int> firsts;
  std::vector<int> weights;
  if (opts.symmetry_reduction) {
    ConjClasses cc = conjugacy_classes(g);
    firsts = cc.representatives;
    weights = cc.sizes;
  } else {
    firsts.resize(static_cast<std::size_t>(g.order()));
    std::iota(firsts.begin(), firsts.end(), 0);
    weights.assign(firsts.size(), 1);
  }
  std::vector<BigInt> partial(firsts.size());
  parallel_for(static_cast<int>(firsts.size()), resolve_threads(opts.threads), [&](int i) {
    Search<Count> search(plan, g);
    partial[i] = widen(search.count_with_first(firsts[i])) * weights[i];
  });
  BigInt total = 0;
  for (const auto& c : partial) total += c;
  return total;
}

}  // namespace

BigInt count_homs(const Presentation& p, const GroupTable& g, const HomCountOptions& opts) {
  SearchPlan plan = make_plan(p, g);
  // subtree counts are bounded by |G|^(depth-1); stay in 128 bits when that fits
  double bits = std::log2(static_cast<double>(g.order())) * std::max(0, plan.depth - 1);
  BigInt constrained = bits < 120 ? run<u128>(plan, g, opts) : run<BigInt>(plan, g, opts);
  BigInt free_factor = boost::multiprecision::pow(BigInt(g.order()), static_cast<unsigned>(plan.free_count));
  return constrained * free_factor;
}

Rational dw_invariant(const Presentation& p, const GroupTable& g, const HomCountOptions& opts) {
  return Rational(count_homs(p, g, opts), BigInt(g.order()));
}

std::vector<std::string> canonical_catalog(std::vector<std::string> specs) {
  std::vector<std::pair<long long, std::string>> keyed;
  for (auto& s : specs) keyed.emplace_back(group_spec_order(s), std::move(s));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  std::vector<std::string> out;
  for (auto& [o, s] : keyed) out.push_back(std::move(s));
  return out;
}

Fingerprint fingerprint(const Presentation& p, const std::vector<std::string>& catalog, const HomCountOptions& opts) {
  Fingerprint fp;
  for (const auto& spec : canonical_catalog(catalog)) {
    GroupTable g = make_group(spec);
    fp.entries.push_back({spec, g.order(), count_homs(p, g, opts)});
  }
  return fp;
}

namespace {

std::string describe_catalog(const std::vector<std::string>& canon) {
  long long max_order = 0;
  for (const auto& s : canon) max_order = std::max(max_order, group_spec_order(s));
  return "catalog <= " + std::to_string(max_order) + ", " + std::to_string(canon.size()) + " groups";
}

}  // namespace

std::string FingerprintComparison::verdict() const {
  if (indistinguishable) return "indistinguishable (" + catalog_bound + ")";
  return "distinguished by " + first_difference_p->spec + " (" + first_difference_p->count.str() + " vs " +
         first_difference_q->count.str() + ")";
}

FingerprintComparison compare_fingerprints(const Presentation& p, const Presentation& q,
                                           const std::vector<std::string>& catalog, const HomCountOptions& opts) {
  FingerprintComparison out;
  auto canon = canonical_catalog(catalog);
  out.catalog_bound = describe_catalog(canon);
  for (const auto& spec : canon) {
    GroupTable g = make_group(spec);
    BigInt cp = count_homs(p, g, opts);
    BigInt cq = count_homs(q, g, opts);
    ++out.groups_checked;
    if (cp != cq) {
      out.indistinguishable = false;
      out.first_difference_p = FingerprintEntry{spec, g.order(), cp};
      out.first_difference_q = FingerprintEntry{spec, g.order(), cq};
      break;
    }
  }
  return out;
}

}  // namespace qinv3
