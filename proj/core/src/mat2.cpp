#include "qinv3/mat2.hpp"

#include "qinv3/error.hpp"

#include <sstream>
#include <vector>

namespace qinv3 {

Mat2 Mat2::mod(long long m) const {
  auto r = [m](long long x) { return ((x % m) + m) % m; };
  return {r(a), r(b), r(c), r(d)};
}

std::string Mat2::to_string() const {
  return std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d);
}

Mat2 Mat2::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ' ' || ch == '\t') continue;
    s += ch == ';' ? ',' : ch;
  }
  std::vector<long long> v;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError("bad matrix entry '" + item + "' in '" + std::string(text) + "'");
    v.push_back(x);
  }
  if (v.size() != 4) throw ParseError("matrix needs four entries (a,b;c,d), got '" + std::string(text) + "'");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace qinv3
