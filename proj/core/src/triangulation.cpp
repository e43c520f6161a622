#include "qinv3/triangulation.hpp"

#include "qinv3/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qinv3 {

Perm4 identity_perm() { return {0, 1, 2, 3}; }

Perm4 inverse(const Perm4& p) {
  Perm4 q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}

Perm4 compose(const Perm4& p, const Perm4& q) { return {p[q[0]], p[q[1]], p[q[2]], p[q[3]]}; }

int sign(const Perm4& p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

bool is_perm(const Perm4& p) {
  int seen = 0;
  for (int x : p) {
    if (x < 0 || x > 3) return false;
    seen |= 1 << x;
  }
  return seen == 15;
}

int edge_slot(int u, int v) {
  static constexpr int slot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return slot[u][v];
}

int Triangulation::add_tet() {
  gluings_.emplace_back();
  return size() - 1;
}

void Triangulation::glue(int tet, int face, int other, const Perm4& perm) {
  if (tet < 0 || tet >= size() || other < 0 || other >= size() || face < 0 || face > 3)
    throw SpecError("gluing refers to a missing tetrahedron or face");
  if (!is_perm(perm)) throw SpecError("gluing map is not a permutation");
  int target = perm[face];
  if (tet == other && target == face) throw SpecError("a face cannot be glued to itself");
  if (gluing(tet, face).glued() || gluing(other, target).glued())
    throw SpecError("face " + std::to_string(tet) + "/" + std::to_string(face) + " or its target is already glued");
  gluings_[tet][face] = {other, perm};
  gluings_[other][target] = {tet, inverse(perm)};
}

void Triangulation::unglue(int tet, int face) {
  const Gluing g = gluing(tet, face);
  if (!g.glued()) return;
  gluings_[tet][face] = {};
  gluings_[g.tet][g.perm[face]] = {};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> parity;  // parity relative to parent

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), parity(static_cast<std::size_t>(n), 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    int p = 0;
    int root = x;
    while (parent[root] != root) {
      p ^= parity[root];
      root = parent[root];
    }
    // path compression keeping parities
    int cur = x, acc = p;
    while (parent[cur] != root && parent[cur] != cur) {
      int next = parent[cur], np = parity[cur];
      parent[cur] = root;
      parity[cur] = acc;
      acc ^= np;
      cur = next;
    }
    return {root, p};
  }
  /// Records x ~ y with relative parity; false on contradiction.
  bool unite(int x, int y, int rel = 0) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rel;
    if (rx < ry) std::swap(rx, ry);  // smaller index becomes root
    parent[rx] = ry;
    parity[rx] = px ^ py ^ rel;
    return true;
  }
};

std::string face_name(int t, int f) { return std::to_string(t) + "/" + std::to_string(f); }

// Shared analysis for compute_skeleton and validate. Fills `report` when
// given, otherwise throws on the first problem.
std::optional<Skeleton> analyze(const Triangulation& t, ValidationReport* report) {
  const int n = t.size();
  auto problem = [&](const std::string& check, const std::string& what) {
    if (!report) throw IntegrityError(what);
    for (auto& c : report->checks)
      if (c.name == check && c.passed) {
        c.passed = false;
        c.witness = what;
      }
  };
  if (report)
    for (const char* name : {"gluing-involution", "closed", "edge-links", "orientable", "euler"})
      report->checks.push_back({name, true, {}});

  if (n == 0) problem("closed", "no tetrahedra");
  bool involution_ok = true, closed_ok = n > 0;
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      if (!g.glued()) {
        problem("closed", "face " + face_name(a, f) + " is not glued");
        closed_ok = false;
        continue;
      }
      if (g.tet >= n || !is_perm(g.perm)) {
        problem("gluing-involution", "face " + face_name(a, f) + " has a malformed gluing");
        involution_ok = false;
        continue;
      }
      int back_face = g.perm[f];
      const Gluing& back = t.gluing(g.tet, back_face);
      if (g.tet == a && back_face == f) {
        problem("gluing-involution", "face " + face_name(a, f) + " is glued to itself");
        involution_ok = false;
      } else if (back.tet != a || back.perm != inverse(g.perm)) {
        problem("gluing-involution", "face " + face_name(a, f) + " -> " + face_name(g.tet, back_face) +
                                         " is not returned by the inverse map");
        involution_ok = false;
      }
    }
  auto skip = [&](const char* why) {
    if (report)
      for (auto& c : report->checks)
        if (c.passed && (c.name == "edge-links" || c.name == "orientable" || c.name == "euler")) {
          c.passed = false;
          c.witness = std::string("not evaluated: ") + why;
        }
  };
  if (!involution_ok) {
    skip("gluing is not an involution");
    return std::nullopt;
  }
  if (!closed_ok) {
    skip("triangulation is not closed");
    return std::nullopt;
  }

  UnionFind verts(4 * n), edges(6 * n), faces(4 * n);
  bool edges_ok = true;
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      faces.unite(4 * a + f, 4 * g.tet + g.perm[f]);
      for (int u = 0; u < 4; ++u) {
        if (u == f) continue;
        verts.unite(4 * a + u, 4 * g.tet + g.perm[u]);
        for (int v = u + 1; v < 4; ++v) {
          if (v == f) continue;
          int pu = g.perm[u], pv = g.perm[v];
          int rel = pu > pv ? 1 : 0;
          if (!edges.unite(6 * a + edge_slot(u, v), 6 * g.tet + edge_slot(std::min(pu, pv), std::max(pu, pv)),
                           rel) &&
              edges_ok) {
            problem("edge-links", "edge " + std::to_string(a) + ":" + std::to_string(u) + std::to_string(v) +
                                      " is identified with itself reversed");
            edges_ok = false;
          }
        }
      }
    }

  // orientation: adjacent tetrahedra must induce opposite orientations on the shared face
  std::vector<int> orient(static_cast<std::size_t>(n), 0);
  bool orientable = true;
  for (int start = 0; start < n && orientable; ++start) {
    if (orient[start]) continue;
    orient[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty() && orientable) {
      int a = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const Gluing& g = t.gluing(a, f);
        int want = -orient[a] * sign(g.perm);
        if (!orient[g.tet]) {
          orient[g.tet] = want;
          stack.push_back(g.tet);
        } else if (orient[g.tet] != want) {
          problem("orientable", "orientation conflict across face " + face_name(a, f));
          orientable = false;
          break;
        }
      }
    }
  }

  Skeleton s;
  s.num_tets = n;
  s.tet_vertex.resize(static_cast<std::size_t>(n));
  s.tet_edge.resize(static_cast<std::size_t>(n));
  s.tet_edge_sign.resize(static_cast<std::size_t>(n));
  s.tet_face.resize(static_cast<std::size_t>(n));
  std::vector<int> vclass(static_cast<std::size_t>(4 * n), -1), eclass(static_cast<std::size_t>(6 * n), -1),
      fclass(static_cast<std::size_t>(4 * n), -1);
  for (int a = 0; a < n; ++a) {
    for (int v = 0; v < 4; ++v) {
      int root = verts.find(4 * a + v).first;
      if (vclass[root] < 0) vclass[root] = s.num_vertices++;
      s.tet_vertex[a][v] = vclass[root];
    }
    for (int e = 0; e < 6; ++e) {
      auto [root, parity] = edges.find(6 * a + e);
      if (eclass[root] < 0) {
        eclass[root] = s.num_edges++;
        s.edge_rep.push_back({a, e});
        s.edge_degree.push_back(0);
      }
      s.tet_edge[a][e] = eclass[root];
      // the root is the least representative, so it carries parity 0
      s.tet_edge_sign[a][e] = parity ? -1 : 1;
      ++s.edge_degree[eclass[root]];
    }
    for (int f = 0; f < 4; ++f) {
      int root = faces.find(4 * a + f).first;
      if (fclass[root] < 0) {
        fclass[root] = s.num_faces++;
        s.face_rep.push_back({a, f});
      }
      s.tet_face[a][f] = fclass[root];
    }
  }
  if (s.euler_characteristic() != 0)
    problem("euler", "V - E + F - T = " + std::to_string(s.euler_characteristic()) + " (V=" +
                         std::to_string(s.num_vertices) + ", E=" + std::to_string(s.num_edges) +
                         ", F=" + std::to_string(s.num_faces) + ", T=" + std::to_string(n) + ")");
  if (!edges_ok) return std::nullopt;
  return s;
}

}  // namespace

Skeleton compute_skeleton(const Triangulation& t) { return *analyze(t, nullptr); }

ValidationReport validate(const Triangulation& t) {
  ValidationReport r;
  analyze(t, &r);
  return r;
}

Presentation fundamental_group(const Triangulation& t) {
  Skeleton s = compute_skeleton(t);
  UnionFind tree(s.num_vertices);
  std::vector<int> generator(static_cast<std::size_t>(s.num_edges), -1);
  Presentation p;
  for (int e = 0; e < s.num_edges; ++e) {
    auto [a, slot] = s.edge_rep[e];
    int tail = s.tet_vertex[a][kEdgeEnds[slot][0]], head = s.tet_vertex[a][kEdgeEnds[slot][1]];
    if (tree.find(tail).first != tree.find(head).first) {
      tree.unite(tail, head);
      continue;
    }
    generator[e] = p.num_generators();
    p.generators.push_back("e" + std::to_string(e));
  }
  for (int f = 0; f < s.num_faces; ++f) {
    auto [a, opp] = s.face_rep[f];
    int v[3], k = 0;
    for (int x = 0; x < 4; ++x)
      if (x != opp) v[k++] = x;
    std::vector<Letter> letters;
    auto push = [&](int u, int w, int dir) {
      int slot = edge_slot(u, w);
      int g = generator[s.tet_edge[a][slot]];
      if (g >= 0) letters.push_back({g, dir * s.tet_edge_sign[a][slot]});
    };
    push(v[0], v[1], 1);
    push(v[1], v[2], 1);
    push(v[0], v[2], -1);
    Word w = free_reduce(Word(std::move(letters)));
    if (w.length() > 0) p.relators.push_back(std::move(w));
  }
  return p;
}

Triangulation relabel(const Triangulation& t, const std::vector<Perm4>& r) {
  if (static_cast<int>(r.size()) != t.size()) throw SpecError("relabel needs one permutation per tetrahedron");
  for (const auto& p : r)
    if (!is_perm(p)) throw SpecError("relabel entry is not a permutation");
  Triangulation out(t.size());
  for (int a = 0; a < t.size(); ++a) {
    Perm4 rinv = inverse(r[a]);
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      if (!g.glued()) continue;
      out.set_gluing_raw(a, rinv[f], {g.tet, compose(inverse(r[g.tet]), compose(g.perm, r[a]))});
    }
  }
  return out;
}

Triangulation mirror(const Triangulation& t) {
  return relabel(t, std::vector<Perm4>(static_cast<std::size_t>(t.size()), Perm4{1, 0, 2, 3}));
}

// ---------------------------------------------------------------------------
// Text format

Triangulation parse_triangulation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0, n = -1;
  std::optional<Triangulation> t;
  std::vector<bool> seen;
  auto err = [&](const std::string& msg) { return ParseError("line " + std::to_string(line_no) + ": " + msg); };
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || v < 0) throw err("bad number '" + s + "'");
    return v;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!t) {
      std::string count;
      if (head != "tets:" || !(ls >> count)) throw err("expected 'tets: n'");
      n = parse_int(count);
      std::string extra;
      if (ls >> extra) throw err("trailing text after tetrahedron count");
      t.emplace(n);
      seen.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    if (head.size() < 2 || head.back() != ':') throw err("expected 'i: g0 g1 g2 g3'");
    int a = parse_int(head.substr(0, head.size() - 1));
    if (a >= n) throw err("tetrahedron index out of range");
    if (seen[a]) throw err("tetrahedron " + std::to_string(a) + " listed twice");
    seen[a] = true;
    for (int f = 0; f < 4; ++f) {
      std::string g;
      if (!(ls >> g)) throw err("expected four gluings");
      if (g == "-") continue;
      auto slash = g.find('/');
      if (slash == std::string::npos || g.size() != slash + 5) throw err("bad gluing '" + g + "'");
      int target = parse_int(g.substr(0, slash));
      if (target >= n) throw err("gluing target out of range in '" + g + "'");
      Perm4 p{};
      for (int i = 0; i < 4; ++i) {
        char c = g[slash + 1 + i];
        if (c < '0' || c > '3') throw err("bad permutation in '" + g + "'");
        p[i] = c - '0';
      }
      if (!is_perm(p)) throw err("not a permutation in '" + g + "'");
      t->set_gluing_raw(a, f, {target, p});
    }
    std::string extra;
    if (ls >> extra) throw err("trailing text after gluings");
  }
  if (!t) throw ParseError("missing 'tets:' line");
  for (int a = 0; a < n; ++a)
    if (!seen[a]) throw ParseError("tetrahedron " + std::to_string(a) + " has no gluing line");
  return *t;
}

std::string format_triangulation(const Triangulation& t) {
  std::ostringstream out;
  out << "tets: " << t.size() << '\n';
  for (int a = 0; a < t.size(); ++a) {
    out << a << ':';
    for (int f = 0; f < 4; ++f) {
      const Gluing& g = t.gluing(a, f);
      if (!g.glued()) {
        out << " -";
        continue;
      }
      out << ' ' << g.tet << '/';
      for (int x : g.perm) out << x;
    }
    out << '\n';
  }
  return out.str();
}

Triangulation read_triangulation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open triangulation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

}  // namespace qinv3
