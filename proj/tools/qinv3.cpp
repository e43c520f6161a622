// qinv3: command-line front end. Reports are one `key: value` per line,
// exact values before their decimals.

#include "qinv3/error.hpp"
#include "qinv3/fpgroup.hpp"
#include "qinv3/fusioncat.hpp"
#include "qinv3/homcount.hpp"
#include "qinv3/sl2z.hpp"
#include "qinv3/statesum.hpp"
#include "qinv3/triangulation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace qinv3;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSpec = 3;
constexpr int kExitUnsupported = 4;

class RunReport {
 public:
  explicit RunReport(std::string subcommand) { add("subcommand", std::move(subcommand)); }
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  void add_scalar(const std::string& key, const Scalar& v) {
    add(key, v.to_string());
    add(key + "_decimal", v.to_decimal(12));
  }
  void print(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Common {
  int threads = 0;
  bool timing = false;
};

using Clock = std::chrono::steady_clock;

void finish(RunReport& r, const Common& c, Clock::time_point start) {
  if (c.timing)
    r.add("time_ms", std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count()));
  r.print(std::cout);
}

void write_output(const std::string& path, const std::string& text, RunReport& r) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot write '" + path + "'");
  out << text;
  r.add("written", path);
}

FusionData load_category(const std::string& spec, const std::string& file) {
  if (!file.empty()) return read_category_file(file);
  if (spec.empty()) throw SpecError("give --cat or --cat-file");
  return make_category(spec);
}

std::vector<Word> parse_images(const std::string& text, const std::vector<std::string>& names) {
  std::vector<Word> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) out.push_back(parse_word(part, names));
  return out;
}

int cmd_dw(const std::string& file, const std::string& group, const Common& c) {
  auto start = Clock::now();
  Presentation p = read_presentation_file(file);
  GroupTable g = make_group(group);
  HomCountOptions opts;
  opts.threads = c.threads;
  BigInt hom = count_homs(p, g, opts);
  RunReport r("dw");
  r.add("presentation", file);
  r.add("group", group);
  r.add("group_order", std::to_string(g.order()));
  r.add("hom", hom.str());
  r.add_scalar("dw", Scalar(Rational(hom, g.order())));
  finish(r, c, start);
  return 0;
}

int cmd_tv(const std::string& file, const std::string& cat, const std::string& cat_file, const Common& c) {
  auto start = Clock::now();
  Triangulation t = read_triangulation_file(file);
  FusionData cd = load_category(cat, cat_file);
  Skeleton s = compute_skeleton(t);
  StateSumOptions opts;
  opts.threads = c.threads;
  TVValue v = tv_state_sum(t, cd, opts);
  RunReport r("tv");
  r.add("triangulation", file);
  r.add("category", cat_file.empty() ? cat : cat_file);
  r.add("tetrahedra", std::to_string(s.num_tets));
  r.add("vertices", std::to_string(s.num_vertices));
  r.add("edges", std::to_string(s.num_edges));
  r.add("labellings", std::to_string(v.labellings));
  r.add_scalar("tv", v.value);
  finish(r, c, start);
  return 0;
}

int cmd_fingerprint(const std::string& f1, const std::string& f2, int max_order, const Common& c) {
  auto start = Clock::now();
  Presentation p = read_presentation_file(f1), q = read_presentation_file(f2);
  std::vector<std::string> catalog = max_order > 0 ? catalog_up_to(max_order) : full_catalog();
  HomCountOptions opts;
  opts.threads = c.threads;
  FingerprintComparison cmp = compare_fingerprints(p, q, catalog, opts);
  RunReport r("fingerprint");
  r.add("presentation_1", f1);
  r.add("presentation_2", f2);
  r.add("catalog", cmp.catalog_bound);
  r.add("groups_checked", std::to_string(cmp.groups_checked));
  r.add("verdict", cmp.verdict());
  finish(r, c, start);
  return 0;
}

int cmd_mapping_torus(int genus, const std::string& images, const std::string& matrix, const std::string& emit,
                      const std::string& output, const Common& c) {
  auto start = Clock::now();
  if (images.empty() == matrix.empty()) throw SpecError("give exactly one of --images or --matrix");
  if (emit != "pres" && emit != "tri") throw SpecError("--emit must be pres or tri");
  RunReport r("mapping-torus");
  std::optional<Mat2> a;
  Presentation base;
  std::vector<Word> imgs;
  if (!matrix.empty()) {
    if (genus != 1) throw SpecError("--matrix describes a genus-1 monodromy");
    a = Mat2::parse(matrix);
    if (a->det() != 1) throw SpecError("monodromy matrix " + a->to_string() + " must have determinant 1");
    r.add("matrix", a->to_string());
  } else {
    base = surface_presentation(genus);
    imgs = parse_images(images, base.generators);
    if (static_cast<int>(imgs.size()) != base.num_generators())
      throw SpecError("expected " + std::to_string(base.num_generators()) + " images, got " +
                      std::to_string(imgs.size()));
    MonodromyReport mr = validate_monodromy(genus, imgs);
    if (!mr.passed()) throw SpecError("images do not define a surface automorphism: " + mr.detail);
    r.add("genus", std::to_string(genus));
    if (genus == 1) {
      const auto& h = mr.h1_matrix;
      a = Mat2{static_cast<long long>(h.at(0, 0)), static_cast<long long>(h.at(0, 1)),
               static_cast<long long>(h.at(1, 0)), static_cast<long long>(h.at(1, 1))};
      r.add("matrix", a->to_string());
    }
  }
  r.add("emit", emit);
  std::string text;
  if (emit == "pres") {
    Presentation p = imgs.empty() ? torus_bundle_presentation(*a) : mapping_torus_presentation(base, imgs);
    text = format_presentation(p);
  } else {
    if (!a)
      throw UnsupportedError("triangulations are built for genus-1 monodromies only; use --emit pres");
    if (a->trace() < 3)
      throw UnsupportedError("matrix " + a->to_string() + " has trace " + std::to_string(a->trace()) +
                             ": no layered triangulation is built for elliptic, parabolic or negative-trace "
                             "monodromies; use --emit pres");
    RLFactorization f = matrix_to_rl(*a);
    Triangulation t = torus_bundle(f.word);
    r.add("rl_word", f.word.letters);
    r.add("conjugator", f.conjugator.to_string());
    r.add("tetrahedra", std::to_string(t.size()));
    text = format_triangulation(t);
  }
  write_output(output, text, r);
  if (output.empty() || output == "-") return 0;  // the file itself went to stdout
  finish(r, c, start);
  return 0;
}

int cmd_trace(const std::string& matrix, const std::string& group, const Common& c) {
  auto start = Clock::now();
  Mat2 a = Mat2::parse(matrix);
  GroupTable g = make_group(group);
  STWord w = st_decompose(a);
  Scalar v = tv_trace(a, g);
  RunReport r("trace");
  r.add("matrix", a.to_string());
  r.add("group", group);
  r.add("st_word", w.to_string());
  r.add_scalar("trace", v);
  finish(r, c, start);
  return 0;
}

int cmd_profpairs(int trace_bound, int m_bound, int conj_bound, const std::string& output, const Common& c) {
  auto start = Clock::now();
  auto pairs = search_congruence_pairs(trace_bound, m_bound, conj_bound, c.threads);
  RunReport r("profpairs");
  r.add("trace_bound", std::to_string(trace_bound));
  r.add("m_bound", std::to_string(m_bound));
  r.add("conj_bound", std::to_string(conj_bound));
  r.add("pairs", std::to_string(pairs.size()));
  for (const auto& p : pairs) {
    r.add("pair", p.a.to_string() + " | " + p.b.to_string());
    r.add("evidence", "conjugate mod every m <= " + std::to_string(m_bound) +
                          "; not Z-conjugate up to bound " + std::to_string(conj_bound) +
                          " (also to inverse, transpose and J-conjugates)");
  }
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw SpecError("cannot write '" + output + "'");
    out << format_pairs(pairs);
    r.add("written", output);
  }
  finish(r, c, start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qinv3: quantum invariants and finite-quotient fingerprints of 3-manifolds"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker threads (default: QINV3_THREADS or 1)");
  app.add_flag("--timing", common.timing, "append wall time to the report");

  std::string file, file2, group, cat, cat_file, images, matrix, emit = "pres", output;
  int max_order = 0, genus = 1, trace_bound = 20, m_bound = 30, conj_bound = 50;
  std::function<int()> run;

  auto* dw = app.add_subcommand("dw", "Dijkgraaf-Witten invariant by homomorphism counting");
  dw->add_option("presentation", file, "presentation file")->required();
  dw->add_option("--group", group, "group spec, e.g. S3, Z2xZ4, Q8")->required();
  dw->callback([&] { run = [&] { return cmd_dw(file, group, common); }; });

  auto* tv = app.add_subcommand("tv", "Turaev-Viro state sum");
  tv->add_option("triangulation", file, "triangulation file")->required();
  tv->add_option("--cat", cat, "category spec: vecg:<group>, fib, ising, sl2:<r>, trivial");
  tv->add_option("--cat-file", cat_file, "category data file");
  tv->callback([&] { run = [&] { return cmd_tv(file, cat, cat_file, common); }; });

  auto* fp = app.add_subcommand("fingerprint", "compare hom-count fingerprints of two presentations");
  fp->add_option("presentation1", file, "first presentation file")->required();
  fp->add_option("presentation2", file2, "second presentation file")->required();
  fp->add_option("--max-order", max_order, "catalog of groups up to this order (default: full catalog)");
  fp->callback([&] { run = [&] { return cmd_fingerprint(file, file2, max_order, common); }; });

  auto* mt = app.add_subcommand("mapping-torus", "emit a mapping torus as a presentation or triangulation");
  mt->add_option("--genus", genus, "surface genus (default 1)");
  mt->add_option("--images", images, "generator images a1 b1 ... separated by ';'");
  mt->add_option("--matrix", matrix, "genus-1 monodromy as a,b;c,d");
  mt->add_option("--emit", emit, "pres or tri (default pres)");
  mt->add_option("-o,--output", output, "output file (default: standard output)");
  mt->callback([&] { run = [&] { return cmd_mapping_torus(genus, images, matrix, emit, output, common); }; });

  auto* tr = app.add_subcommand("trace", "torus-bundle invariant as a trace of Drinfeld-double data");
  tr->add_option("matrix", matrix, "monodromy as a,b;c,d")->required();
  tr->add_option("--group", group, "abelian group spec")->required();
  tr->callback([&] { run = [&] { return cmd_trace(matrix, group, common); }; });

  auto* pp = app.add_subcommand("profpairs", "search for congruence-conjugate, non-conjugate monodromy pairs");
  pp->add_option("--trace-bound", trace_bound, "largest trace (default 20)");
  pp->add_option("--m-bound", m_bound, "check conjugacy mod every m up to this (default 30)");
  pp->add_option("--conj-bound", conj_bound, "entry bound of the integral conjugator search (default 50)");
  pp->add_option("-o,--output", output, "write the pairs as a fixture file");
  pp->callback([&] { run = [&] { return cmd_profpairs(trace_bound, m_bound, conj_bound, output, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitSpec;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
