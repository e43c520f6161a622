#include "qinv3/error.hpp"
#include "qinv3/parallel.hpp"
#include "qinv3/sl2z.hpp"
#include "qinv3/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace qinv3 {

namespace {

long long md(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

std::optional<Mat2> conjugator_mod_m(const Mat2& a, const Mat2& b, int m) {
  if (m < 2) throw SpecError("conjugate_mod_m: modulus must be at least 2");
  const Mat2 x = a.mod(m), y = b.mod(m);
  if (md(x.trace() - y.trace(), m) != 0) return std::nullopt;
  // P A = B P with P = [[p, q], [r, s]]; the (0,0) entry does not involve s
  for (long long p = 0; p < m; ++p)
    for (long long q = 0; q < m; ++q)
      for (long long r = 0; r < m; ++r) {
        if (md(p * x.a + q * x.c - y.a * p - y.b * r, m) != 0) continue;
        for (long long s = 0; s < m; ++s) {
          if (md(p * s - q * r, m) != 1) continue;
          Mat2 pm{p, q, r, s};
          if ((pm * x).mod(m) == (y * pm).mod(m)) return pm;
        }
      }
  return std::nullopt;
}

bool conjugate_mod_m(const Mat2& a, const Mat2& b, int m) { return conjugator_mod_m(a, b, m).has_value(); }

std::optional<Mat2> z_conjugate_bounded(const Mat2& a, const Mat2& b, int bound) {
  if (a.trace() != b.trace()) return std::nullopt;
  auto ok = [&](const Mat2& p) { return p.det() == 1 && p * a == b * p; };
  auto fits = [&](long long v) { return v >= -bound && v <= bound; };
  // prefer small conjugators: scan by height
  for (long long h = 0; h <= bound; ++h) {
    for (long long p = -h; p <= h; ++p)
      for (long long q = -h; q <= h; ++q) {
        if (std::max(std::llabs(p), std::llabs(q)) != h && b.b != 0) continue;
        if (b.b != 0) {
          // (0,0) and (0,1) entries of P A = B P determine r and s
          long long nr = p * (a.a - b.a) + q * a.c;
          long long ns = p * a.b + q * (a.d - b.a);
          if (nr % b.b != 0 || ns % b.b != 0) continue;
          Mat2 pm{p, q, nr / b.b, ns / b.b};
          if (fits(pm.c) && fits(pm.d) && ok(pm)) return pm;
        } else {
          for (long long r = -bound; r <= bound; ++r)
            for (long long s = -bound; s <= bound; ++s) {
              Mat2 pm{p, q, r, s};
              if (std::max({std::llabs(p), std::llabs(q), std::llabs(r), std::llabs(s)}) != h) continue;
              if (ok(pm)) return pm;
            }
        }
      }
  }
  return std::nullopt;
}

std::vector<Mat2> hyperbolic_class_representatives(int trace_bound) {
  // cyclic words in R, L with both letters; entries only grow along a word,
  // so the trace of a prefix bounds every extension from below
  std::vector<std::string> words;
  std::string w;
  std::function<void(const Mat2&)> grow = [&](const Mat2& m) {
    if (m.trace() > trace_bound) return;
    // R^k or L^k stays at trace 2, but any extension has trace >= 2 + k
    if (w.size() >= 1 && w.find_first_not_of(w[0]) == std::string::npos &&
        2 + static_cast<long long>(w.size()) > trace_bound)
      return;
    if (w.find('R') != std::string::npos && w.find('L') != std::string::npos && m.trace() >= 3) {
      bool least = true;
      for (std::size_t i = 1; i < w.size() && least; ++i)
        if (w.substr(i) + w.substr(0, i) < w) least = false;
      if (least) words.push_back(w);
    }
    for (char c : {'L', 'R'}) {
      w.push_back(c);
      grow(m * (c == 'R' ? Mat2::R() : Mat2::L()));
      w.pop_back();
    }
  };
  grow(Mat2::identity());
  std::vector<Mat2> reps;
  for (const auto& word : words) reps.push_back(RLWord(word).matrix());
  std::sort(reps.begin(), reps.end(), [](const Mat2& x, const Mat2& y) {
    if (x.trace() != y.trace()) return x.trace() < y.trace();
    return x < y;
  });
  return reps;
}

std::vector<CongruencePair> search_congruence_pairs(int trace_bound, int m_bound, int conj_bound, int threads) {
  if (trace_bound < 1 || m_bound < 1 || conj_bound < 1)
    throw SpecError("search_congruence_pairs: bounds must be positive");
  const std::vector<Mat2> reps = hyperbolic_class_representatives(trace_bound);
  std::vector<std::pair<Mat2, Mat2>> candidates;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size() && reps[j].trace() == reps[i].trace(); ++j)
      candidates.emplace_back(reps[i], reps[j]);

  const Mat2 J{1, 0, 0, -1};
  std::vector<std::optional<CongruencePair>> found(candidates.size());
  parallel_for(static_cast<int>(candidates.size()), resolve_threads(threads), [&](int k) {
    const auto& [a, b] = candidates[static_cast<std::size_t>(k)];
    PairEvidence ev;
    ev.conj_bound = conj_bound;
    // cheap congruence checks first: most pairs fail at a small modulus
    for (int m = 2; m <= m_bound; ++m) {
      auto p = conjugator_mod_m(a, b, m);
      if (!p) return;
      ev.congruence_conjugators.emplace_back(m, *p);
    }
    ev.checks.push_back("conjugate mod m for every 2 <= m <= " + std::to_string(m_bound));
    const std::pair<const char*, Mat2> variants[] = {
        {"B", b}, {"B^-1", b.inverse()}, {"B^T", b.transpose()}, {"JBJ", J * b * J}, {"JB^-1J", J * b.inverse() * J}};
    for (const auto& [name, v] : variants) {
      if (z_conjugate_bounded(a, v, conj_bound)) return;
      ev.checks.push_back(std::string("A to ") + name + ": no SL(2,Z) conjugator found up to entry bound " +
                          std::to_string(conj_bound));
    }
    found[static_cast<std::size_t>(k)] = CongruencePair{a, b, std::move(ev)};
  });
  std::vector<CongruencePair> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

std::string format_pairs(const std::vector<CongruencePair>& pairs) {
  std::string out;
  for (const auto& p : pairs) out += p.a.to_string() + " | " + p.b.to_string() + "\n";
  return out;
}

std::vector<std::pair<Mat2, Mat2>> parse_pairs(std::string_view text) {
  std::vector<std::pair<Mat2, Mat2>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bar = line.find('|');
    if (bar == std::string::npos) throw ParseError("pairs line " + std::to_string(lineno) + ": expected 'A | B'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    out.emplace_back(Mat2::parse(trim(line.substr(0, bar))), Mat2::parse(trim(line.substr(bar + 1))));
  }
  return out;
}

}  // namespace qinv3
