#include "qinv3/error.hpp"
#include "qinv3/fusioncat.hpp"

#include <fstream>
#include <sstream>

namespace qinv3 {

namespace {

std::string strip(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return {};
  auto hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

FusionData parse_category(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  FusionData c;
  c.name = "custom";
  bool have_labels = false, have_dual = false, have_qdim = false, have_k = false;
  int line_no = 0;
  auto err = [&](const std::string& msg) { return ParseError("line " + std::to_string(line_no) + ": " + msg); };
  auto label = [&](const std::string& tok) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= c.rank) throw err("bad label '" + tok + "'");
    return v;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw err("expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::vector<std::string> args = tokens(line.substr(colon + 1));

    if (key == "name") {
      c.name = strip(line.substr(colon + 1));
      continue;
    }
    if (key == "labels") {
      if (have_labels) throw err("duplicate 'labels:'");
      if (args.size() != 1) throw err("'labels:' takes one count");
      try {
        c.rank = std::stoi(args[0]);
      } catch (const std::exception&) {
        throw err("bad label count");
      }
      if (c.rank < 1) throw err("label count must be >= 1");
      c.fusion_rules.assign(static_cast<std::size_t>(c.rank) * c.rank * c.rank, 0);
      have_labels = true;
      continue;
    }
    if (!have_labels) throw err("'labels:' must come first");
    try {
      if (key == "dual") {
        if (static_cast<int>(args.size()) != c.rank) throw err("'dual:' needs one entry per label");
        c.dual.clear();
        for (const auto& a : args) c.dual.push_back(label(a));
        have_dual = true;
      } else if (key == "qdim") {
        if (static_cast<int>(args.size()) != c.rank) throw err("'qdim:' needs one entry per label");
        c.qdim.clear();
        for (const auto& a : args) c.qdim.push_back(Scalar::parse(a));
        have_qdim = true;
      } else if (key == "K") {
        if (args.size() != 1) throw err("'K:' takes one value");
        c.K = Scalar::parse(args[0]);
        have_k = true;
      } else if (key == "fusion") {
        if (args.size() != 3) throw err("'fusion:' takes three labels");
        int a = label(args[0]), b = label(args[1]), x = label(args[2]);
        if (c.fusion(a, b, x))
          throw SpecError("line " + std::to_string(line_no) + ": fusion multiplicity > 1 is not supported");
        c.set_fusion(a, b, x);
      } else if (key == "sixj") {
        if (args.size() != 7) throw err("'sixj:' takes six labels and a value");
        SixjKey k;
        for (int i = 0; i < 6; ++i) k[i] = label(args[i]);
        if (!c.sixj.emplace(k, Scalar::parse(args[6])).second) throw err("duplicate 6j entry");
      } else {
        throw err("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw err(what);
    }
  }
  if (!have_labels) throw ParseError("missing 'labels:'");
  if (!have_dual) throw ParseError("missing 'dual:'");
  if (!have_qdim) throw ParseError("missing 'qdim:'");
  if (!have_k) {
    c.K = 0;
    for (const auto& d : c.qdim) c.K += d * d;
  }
  return c;
}

std::string format_category(const FusionData& c) {
  std::ostringstream out;
  out << "name: " << c.name << '\n';
  out << "labels: " << c.rank << '\n';
  out << "dual:";
  for (int d : c.dual) out << ' ' << d;
  out << "\nqdim:";
  for (const auto& q : c.qdim) out << ' ' << q.to_string();
  out << "\nK: " << c.K.to_string() << '\n';
  for (int a = 0; a < c.rank; ++a)
    for (int b = 0; b < c.rank; ++b)
      for (int x = 0; x < c.rank; ++x)
        if (c.fusion(a, b, x)) out << "fusion: " << a << ' ' << b << ' ' << x << '\n';
  for (const auto& [k, v] : c.sixj) {
    out << "sixj:";
    for (int l : k) out << ' ' << l;
    out << ' ' << v.to_string() << '\n';
  }
  return out.str();
}

FusionData read_category_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open category file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_category(buf.str());
}

}  // namespace qinv3
