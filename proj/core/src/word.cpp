#include "qinv3/error.hpp"
#include "qinv3/fpgroup.hpp"

#include <cstdlib>
#include <sstream>

namespace qinv3 {

Word Word::commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

long long Word::length() const {
  long long n = 0;
  for (const auto& l : letters_) n += std::llabs(l.exponent);
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::vector<Letter> Word::expanded() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const auto& l : letters_) {
    int step = l.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exponent); ++k) out.push_back({l.generator, step});
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (l.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == l.generator) {
      stack.back().exponent += l.exponent;
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

std::vector<BigInt> exponent_sums(const Word& w, int num_generators) {
  std::vector<BigInt> sums(static_cast<std::size_t>(num_generators), BigInt(0));
  for (const auto& l : w.letters()) {
    if (l.generator < 0 || l.generator >= num_generators)
      throw SpecError("generator index out of range in word");
    sums[static_cast<std::size_t>(l.generator)] += l.exponent;
  }
  return sums;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (l.generator < 0 || l.generator >= static_cast<int>(names.size()))
      throw SpecError("generator index out of range in word");
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(l.generator)];
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<Letter> letters;
  while (in >> tok) {
    std::string name = tok;
    int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      char* end = nullptr;
      long v = std::strtol(e.c_str(), &end, 10);
      if (e.empty() || end != e.c_str() + e.size() || v == 0 || v > (1 << 30) || v < -(1 << 30))
        throw ParseError("bad exponent in token '" + tok + "'");
      exponent = static_cast<int>(v);
    }
    int index = -1;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) index = static_cast<int>(i);
    if (index < 0) throw ParseError("unknown generator '" + name + "'");
    letters.push_back({index, exponent});
  }
  return Word(std::move(letters));
}

}  // namespace qinv3
