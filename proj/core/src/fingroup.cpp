#include "qinv3/fingroup.hpp"

#include "qinv3/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace qinv3 {

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

TableReport validate_table(const RawTable& t) {
  TableReport rep;
  const int n = t.order;
  constexpr std::size_t kMaxViolations = 8;
  auto fail = [&](std::string msg) {
    rep.passed = false;
    if (rep.violations.size() < kMaxViolations) rep.violations.push_back(std::move(msg));
  };
  if (n < 1) {
    fail("order must be positive");
    return rep;
  }
  if (t.entries.size() != static_cast<std::size_t>(n) * n) {
    fail("table has " + std::to_string(t.entries.size()) + " entries, expected " + std::to_string(n * n));
    return rep;
  }
  for (int v : t.entries)
    if (v < 0 || v >= n) {
      fail("entry " + std::to_string(v) + " out of range");
      return rep;
    }
  auto mul = [&](int a, int b) { return t.entries[static_cast<std::size_t>(a) * n + b]; };

  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) fail("element 0 is not an identity for " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[mul(a, b)] = 1;
      col[mul(b, a)] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != n) fail("row " + std::to_string(a) + " is not a permutation");
    if (std::count(col.begin(), col.end(), 1) != n) fail("column " + std::to_string(a) + " is not a permutation");
    int right_inv = -1;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) right_inv = b;
    if (right_inv < 0 || mul(right_inv, a) != 0) fail("element " + std::to_string(a) + " has no two-sided inverse");
  }
  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      fail("associativity fails at (a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")");
  };
  if (n <= 128) {
    for (int a = 0; a < n && rep.violations.size() < kMaxViolations; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 1'000'000 && rep.violations.size() < kMaxViolations; ++k) check(pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

GroupTable::GroupTable(RawTable table, std::string name) : n_(table.order), name_(std::move(name)) {
  TableReport rep = validate_table(table);
  if (!rep.passed) throw SpecError("invalid group table '" + name_ + "': " + rep.violations.front());
  product_ = std::move(table.entries);
  inverse_.assign(static_cast<std::size_t>(n_), 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int GroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int GroupTable::exponent() const {
  int e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

RawTable from_elements(int n, const auto& multiply) {
  RawTable t{n, std::vector<int>(static_cast<std::size_t>(n) * n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.entries[static_cast<std::size_t>(a) * n + b] = multiply(a, b);
  return t;
}

RawTable cyclic(int n) {
  return from_elements(n, [n](int a, int b) { return (a + b) % n; });
}

RawTable dihedral(int n) {
  // index i < n: r^i; n + i: s r^i.  (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
  return from_elements(2 * n, [n](int x, int y) {
    int a = x / n, i = x % n, b = y / n, j = y % n;
    int rot = ((b ? -i : i) + j) % n;
    if (rot < 0) rot += n;
    return ((a + b) % 2) * n + rot;
  });
}

RawTable permutation_group(int degree, bool even_only) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < degree; ++i)
        for (int j = i + 1; j < degree; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  return from_elements(static_cast<int>(perms.size()), [&](int a, int b) {
    // (a*b)(x) = a(b(x))
    std::vector<int> c(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) c[x] = perms[a][perms[b][x]];
    return index.at(c);
  });
}

RawTable quaternion8() {
  // index = 2*unit + negative, unit 0..3 = 1,i,j,k
  // unit products: sign and unit of u*v
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnit{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  return from_elements(8, [](int x, int y) {
    auto [s, u] = kUnit[x / 2][y / 2];
    int neg = ((x % 2) + (y % 2) + (s < 0 ? 1 : 0)) % 2;
    return 2 * u + neg;
  });
}

RawTable dicyclic(int n) {
  // index = e*2n + i for a^i x^e
  const int m = 2 * n;
  return from_elements(2 * m, [n, m](int x, int y) {
    int e = x / m, i = x % m, f = y / m, j = y % m;
    if (e == 0) return f * m + (i + j) % m;
    int k = ((i - j) % m + m) % m;
    if (f == 0) return m + k;
    return (k + n) % m;
  });
}

RawTable special_linear2(int p) {
  std::vector<std::array<int, 4>> mats;
  mats.push_back({1, 0, 0, 1});
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (((a * d - b * c) % p + p) % p != 1) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          mats.push_back({a, b, c, d});
        }
  std::map<std::array<int, 4>, int> index;
  for (std::size_t i = 0; i < mats.size(); ++i) index[mats[i]] = static_cast<int>(i);
  return from_elements(static_cast<int>(mats.size()), [&](int x, int y) {
    const auto& u = mats[x];
    const auto& v = mats[y];
    std::array<int, 4> w{(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p,
                         (u[2] * v[0] + u[3] * v[2]) % p, (u[2] * v[1] + u[3] * v[3]) % p};
    return index.at(w);
  });
}

RawTable direct_product(const RawTable& g, const RawTable& h) {
  const int m = h.order;
  return from_elements(g.order * m, [&](int x, int y) {
    int a = g.entries[static_cast<std::size_t>(x / m) * g.order + y / m];
    int b = h.entries[static_cast<std::size_t>(x % m) * m + y % m];
    return a * m + b;
  });
}

std::vector<std::string> split_factors(std::string_view spec) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_param(const std::string& factor, std::size_t prefix_len) {
  std::string digits = factor.substr(prefix_len);
  if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw SpecError("bad group spec '" + factor + "'");
  return std::stoi(digits);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Quaternion, Dicyclic, SL2 };

std::pair<Family, int> classify(const std::string& f) {
  if (f == "Q8") return {Family::Quaternion, 8};
  if (f.rfind("SL2_", 0) == 0) {
    int p = parse_param(f, 4);
    if (!is_prime(p) || p > 7) throw SpecError("SL2_p needs a prime p <= 7, got '" + f + "'");
    return {Family::SL2, p};
  }
  if (f.rfind("Dic", 0) == 0) {
    int n = parse_param(f, 3);
    if (n < 2 || n > 64) throw SpecError("Dic<n> needs 2 <= n <= 64, got '" + f + "'");
    return {Family::Dicyclic, n};
  }
  if (f.empty()) throw SpecError("empty group spec factor");
  int n = parse_param(f, 1);
  switch (f[0]) {
    case 'Z':
      if (n < 1 || n > 4096) throw SpecError("Z<n> needs 1 <= n <= 4096, got '" + f + "'");
      return {Family::Cyclic, n};
    case 'D':
      if (n < 1 || n > 2048) throw SpecError("D<n> needs 1 <= n <= 2048, got '" + f + "'");
      return {Family::Dihedral, n};
    case 'S':
      if (n < 1 || n > 6) throw SpecError("S<n> needs 1 <= n <= 6, got '" + f + "'");
      return {Family::Symmetric, n};
    case 'A':
      if (n < 1 || n > 6) throw SpecError("A<n> needs 1 <= n <= 6, got '" + f + "'");
      return {Family::Alternating, n};
    default: throw SpecError("unknown group family in '" + f + "'");
  }
}

long long family_order(Family fam, int n) {
  switch (fam) {
    case Family::Cyclic: return n;
    case Family::Dihedral: return 2LL * n;
    case Family::Symmetric: return factorial(n);
    case Family::Alternating: return n <= 1 ? 1 : factorial(n) / 2;
    case Family::Quaternion: return 8;
    case Family::Dicyclic: return 4LL * n;
    case Family::SL2: return static_cast<long long>(n) * (static_cast<long long>(n) * n - 1);
  }
  return 0;
}

RawTable build_factor(Family fam, int n) {
  switch (fam) {
    case Family::Cyclic: return cyclic(n);
    case Family::Dihedral: return dihedral(n);
    case Family::Symmetric: return permutation_group(n, false);
    case Family::Alternating: return permutation_group(n, true);
    case Family::Quaternion: return quaternion8();
    case Family::Dicyclic: return dicyclic(n);
    case Family::SL2: return special_linear2(n);
  }
  throw SpecError("unreachable group family");
}

constexpr long long kMaxOrder = 5000;

}  // namespace

long long group_spec_order(std::string_view spec) {
  long long order = 1;
  for (const auto& f : split_factors(spec)) {
    auto [fam, n] = classify(f);
    order *= family_order(fam, n);
    if (order > kMaxOrder) throw SpecError("group spec '" + std::string(spec) + "' exceeds order " + std::to_string(kMaxOrder));
  }
  return order;
}

GroupTable make_group(std::string_view spec) {
  group_spec_order(spec);  // bounds check
  RawTable acc = cyclic(1);
  bool first = true;
  for (const auto& f : split_factors(spec)) {
    auto [fam, n] = classify(f);
    RawTable t = build_factor(fam, n);
    acc = first ? std::move(t) : direct_product(acc, t);
    first = false;
  }
  return GroupTable(std::move(acc), std::string(spec));
}

std::vector<std::string> full_catalog() {
  std::vector<std::string> specs = {
      "Z1",  "Z2",   "Z3",  "Z4",   "Z2xZ2", "Z5",  "Z6",   "S3",       "Z7",  "Z8",   "Z2xZ4",
      "Z2xZ2xZ2",   "D4",  "Q8",   "Z9",    "Z3xZ3", "Z10", "D5",     "Z11", "Z12", "Z2xZ6",
      "A4",  "D6",   "Dic3", "Z13", "Z14",  "D7",    "Z15", "S4",   "SL2_3",    "A5",  "SL2_5", "S5"};
  std::sort(specs.begin(), specs.end(), [](const std::string& a, const std::string& b) {
    auto oa = group_spec_order(a), ob = group_spec_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  return specs;
}

std::vector<std::string> catalog_up_to(int max_order) {
  std::vector<std::string> out;
  for (auto& s : full_catalog())
    if (group_spec_order(s) <= max_order) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy classes and characters
// ---------------------------------------------------------------------------

ConjClasses conjugacy_classes(const GroupTable& g) {
  const int n = g.order();
  ConjClasses cc;
  cc.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (cc.class_of[x] >= 0) continue;
    int id = cc.count();
    cc.representatives.push_back(x);
    int size = 0;
    for (int h = 0; h < n; ++h) {
      int y = g.mul(g.mul(h, x), g.inv(h));
      if (cc.class_of[y] < 0) {
        cc.class_of[y] = id;
        ++size;
      }
    }
    cc.sizes.push_back(size);
    cc.centralizer_orders.push_back(n / size);
  }
  return cc;
}

std::complex<long double> CharacterTable::approx(int chi, int g) const {
  long double angle = 2 * std::numbers::pi_v<long double> * exponent(chi, g) / root_order;
  return {std::cos(angle), std::sin(angle)};
}

CharacterTable characters_abelian(const GroupTable& g) {
  if (!g.is_abelian()) throw SpecError("characters_abelian: group '" + g.name() + "' is not abelian");
  const int n = g.order();
  const int e = g.exponent();

  // greedy generating set
  std::vector<int> gens;
  std::vector<char> in_span(static_cast<std::size_t>(n), 0);
  in_span[0] = 1;
  auto span_with = [&](int s) {
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (in_span[x]) members.push_back(x);
    for (int x : members)
      for (int y = g.mul(x, s); !in_span[y]; y = g.mul(y, s)) in_span[y] = 1;
    // close under products of the new elements
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a)
        if (in_span[a])
          for (int b = 0; b < n; ++b)
            if (in_span[b] && !in_span[g.mul(a, b)]) {
              in_span[g.mul(a, b)] = 1;
              grew = true;
            }
    }
  };
  for (int x = 0; x < n; ++x)
    if (!in_span[x]) {
      gens.push_back(x);
      span_with(x);
    }

  CharacterTable table;
  table.order = n;
  table.root_order = e;

  // enumerate generator values in lexicographic order; keep consistent ones
  std::vector<int> values(gens.size(), 0);
  auto try_extend = [&](std::vector<int>& out) {
    std::vector<int> val(static_cast<std::size_t>(n), -1);
    val[0] = 0;
    std::vector<int> known{0};
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int s = gens[k];
      std::vector<int> added;
      for (int x : known) {
        int y = x, vy = val[x];
        for (int step = 1; step < g.element_order(s); ++step) {
          y = g.mul(y, s);
          vy = (vy + values[k]) % e;
          if (val[y] < 0) {
            val[y] = vy;
            added.push_back(y);
          } else if (val[y] != vy) {
            return false;
          }
        }
      }
      known.insert(known.end(), added.begin(), added.end());
    }
    // homomorphism check over the full table
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((val[a] + val[b]) % e != val[g.mul(a, b)]) return false;
    out = std::move(val);
    return true;
  };
  long long total = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) total *= e;
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (std::size_t k = gens.size(); k-- > 0;) {
      values[k] = static_cast<int>(rest % e);
      rest /= e;
    }
    std::vector<int> row;
    if (try_extend(row)) table.exponents.insert(table.exponents.end(), row.begin(), row.end());
  }
  if (table.exponents.size() != static_cast<std::size_t>(n) * n)
    throw IntegrityError("character enumeration found " + std::to_string(table.exponents.size() / n) +
                         " characters for an abelian group of order " + std::to_string(n));
  return table;
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

GroupTable parse_group_table(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  RawTable t;
  bool have_order = false;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_order) {
      if (tok != "order:") throw ParseError("expected 'order: n'");
      if (!(ls >> t.order) || t.order < 1) throw ParseError("bad order");
      have_order = true;
      continue;
    }
    do {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw ParseError("bad table entry '" + tok + "'");
        t.entries.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad table entry '" + tok + "'");
      }
    } while (ls >> tok);
  }
  if (!have_order) throw ParseError("missing 'order:' line");
  if (t.entries.size() != static_cast<std::size_t>(t.order) * t.order)
    throw ParseError("group table needs " + std::to_string(t.order * t.order) + " entries");
  TableReport rep = validate_table(t);
  if (!rep.passed) throw SpecError("group table invalid: " + rep.violations.front());
  return GroupTable(std::move(t), std::move(name));
}

std::string format_group_table(const GroupTable& g) {
  std::ostringstream out;
  out << "order: " << g.order() << '\n';
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

}  // namespace qinv3
