#include "qinv3/error.hpp"
#include "qinv3/fpgroup.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qinv3 {

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!is_valid_generator_name(g)) throw SpecError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw SpecError("duplicate generator name '" + g + "'");
  }
  for (const auto& r : relators)
    for (const auto& l : r.letters()) {
      if (l.generator < 0 || l.generator >= num_generators())
        throw SpecError("relator uses generator index out of range");
      if (l.exponent == 0) throw SpecError("relator has a zero exponent");
    }
}

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return {};
  auto hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

bool take_prefix(std::string& s, std::string_view key) {
  if (s.compare(0, key.size(), key) != 0) return false;
  s.erase(0, key.size());
  return true;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  Presentation p;
  bool have_gens = false;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (!have_gens) {
      if (!take_prefix(line, "gens:"))
        throw ParseError("line " + std::to_string(line_no) + ": expected 'gens:'");
      std::istringstream names(line);
      std::string name;
      while (names >> name) p.generators.push_back(name);
      have_gens = true;
      try {
        p.validate();
      } catch (const SpecError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
      continue;
    }
    if (!take_prefix(line, "rel:"))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'rel:'");
    try {
      p.relators.push_back(parse_word(line, p.generators));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line");
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += '\n';
  for (const auto& r : p.relators) {
    out += "rel:";
    std::string w = format_word(r, p.generators);
    if (!w.empty()) out += " " + w;
    out += '\n';
  }
  return out;
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open presentation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Presentation surface_presentation(int genus) {
  if (genus < 1) throw SpecError("surface genus must be >= 1");
  Presentation p;
  Word relator;
  for (int i = 0; i < genus; ++i) {
    p.generators.push_back("a" + std::to_string(i + 1));
    p.generators.push_back("b" + std::to_string(i + 1));
    relator = relator * Word::commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
  }
  p.relators.push_back(relator);
  return p;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace

Presentation mapping_torus_presentation(const Presentation& base, const std::vector<Word>& images) {
  base.validate();
  if (static_cast<int>(images.size()) != base.num_generators())
    throw SpecError("mapping torus needs one image per generator (got " + std::to_string(images.size()) +
                    ", expected " + std::to_string(base.num_generators()) + ")");
  for (const auto& w : images)
    if (w.max_generator() >= base.num_generators())
      throw SpecError("monodromy image uses an unknown generator");
  Presentation out = base;
  std::set<std::string> taken(base.generators.begin(), base.generators.end());
  out.generators.push_back(fresh_name("t", taken));
  Word t = Word::generator(base.num_generators());
  for (int i = 0; i < base.num_generators(); ++i)
    out.relators.push_back(free_reduce(t * Word::generator(i) * t.inverse() * images[i].inverse()));
  return out;
}

Presentation free_product(const Presentation& p, const Presentation& q) {
  Presentation out = p;
  std::set<std::string> taken(p.generators.begin(), p.generators.end());
  taken.insert(q.generators.begin(), q.generators.end());
  std::set<std::string> used(p.generators.begin(), p.generators.end());
  for (const auto& g : q.generators) {
    std::string name = g;
    if (used.count(g)) {
      name = fresh_name(g, taken);
      taken.insert(name);
    }
    used.insert(name);
    out.generators.push_back(name);
  }
  int shift = p.num_generators();
  for (const auto& r : q.relators) {
    std::vector<Letter> letters = r.letters();
    for (auto& l : letters) l.generator += shift;
    out.relators.emplace_back(std::move(letters));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const auto& l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(l.generator)];
    Word piece = l.exponent > 0 ? img : img.inverse();
    for (int k = 0; k < std::abs(l.exponent); ++k) out = out * piece;
  }
  return out;
}

}  // namespace

bool surface_word_is_trivial(int genus, const Word& w) {
  if (genus < 2) throw SpecError("Dehn's algorithm here needs genus >= 2");
  std::vector<Letter> rel = surface_presentation(genus).relators[0].expanded();
  const std::size_t n = rel.size();  // 4g
  std::vector<std::vector<Letter>> cyclic;
  for (const auto& base : {rel, Word(rel).inverse().expanded()})
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Letter> c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = base[(s + k) % n];
      cyclic.push_back(std::move(c));
    }
  std::vector<Letter> cur = free_reduce(w).expanded();
  const std::size_t half = n / 2;
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (const auto& c : cyclic) {
        std::size_t len = 0;
        while (len < n && i + len < cur.size() && cur[i + len] == c[len]) ++len;
        if (len <= half) continue;
        // replace c[0..len) by the inverse of c[len..n)
        std::vector<Letter> repl;
        for (std::size_t k = n; k-- > len;) repl.push_back({c[k].generator, -c[k].exponent});
        std::vector<Letter> next(cur.begin(), cur.begin() + static_cast<long>(i));
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), cur.begin() + static_cast<long>(i + len), cur.end());
        cur = free_reduce(Word(std::move(next))).expanded();
        changed = true;
        break;
      }
    }
  }
  return cur.empty();
}

MonodromyReport validate_monodromy(int genus, const std::vector<Word>& images) {
  if (genus < 1) throw SpecError("surface genus must be >= 1");
  const int n = 2 * genus;
  if (static_cast<int>(images.size()) != n)
    throw SpecError("expected " + std::to_string(n) + " generator images");
  for (const auto& w : images)
    if (w.max_generator() >= n) throw SpecError("monodromy image uses an unknown generator");

  MonodromyReport report;
  report.h1_matrix = IntegerMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    auto sums = exponent_sums(images[static_cast<std::size_t>(i)], n);
    for (int j = 0; j < n; ++j) report.h1_matrix.at(j, i) = sums[static_cast<std::size_t>(j)];
  }
  report.determinant = determinant(report.h1_matrix);
  report.invertible_on_h1 = report.determinant == 1 || report.determinant == -1;

  Word image_of_relator = substitute(surface_presentation(genus).relators[0], images);
  if (genus == 1) {
    auto sums = exponent_sums(image_of_relator, n);
    report.relator_preserved = std::all_of(sums.begin(), sums.end(), [](const BigInt& s) { return s == 0; });
  } else {
    report.relator_preserved = surface_word_is_trivial(genus, image_of_relator);
  }

  std::ostringstream detail;
  detail << "relator " << (report.relator_preserved ? "preserved" : "NOT preserved") << "; det(H1 action) = "
         << report.determinant.str();
  if (!report.invertible_on_h1) detail << " (not in GL(" << n << ",Z))";
  report.detail = detail.str();
  return report;
}

std::vector<Word> torus_images(long long m00, long long m01, long long m10, long long m11) {
  auto image = [](long long ea, long long eb) {
    std::vector<Letter> letters;
    if (ea != 0) letters.push_back({0, static_cast<int>(ea)});
    if (eb != 0) letters.push_back({1, static_cast<int>(eb)});
    return Word(std::move(letters));
  };
  return {image(m00, m10), image(m01, m11)};
}

}  // namespace qinv3
