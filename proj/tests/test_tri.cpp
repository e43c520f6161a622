#include "oracles.hpp"

#include "qinv3/error.hpp"
#include "qinv3/homcount.hpp"
#include "qinv3/triangulation.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace qinv3;

namespace {

const char* kManifolds[] = {"s3",      "s3_5",    "rp3",      "lens:5,2", "lens:7,1",    "lens:7,2",
                            "lens:8,3", "t3",     "bundle:RL", "bundle:RRL", "bundle:RLRL", "bundle:RRLL"};

std::pair<int, std::vector<long long>> h1(const Presentation& p) {
  H1Invariants h = h1_invariants(p);
  std::vector<long long> t;
  for (const auto& x : h.torsion) t.push_back(static_cast<long long>(x));
  return {h.free_rank, t};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("permutation helpers") {
  Perm4 p{1, 2, 3, 0};
  CHECK(compose(p, inverse(p)) == identity_perm());
  CHECK(sign(p) == -1);
  CHECK(sign(identity_perm()) == 1);
  CHECK(is_perm(p));
  CHECK_FALSE(is_perm({0, 0, 1, 2}));
}

TEST_CASE("every builder validates and matches the union-find oracle") {
  for (const char* m : kManifolds) {
    CAPTURE(m);
    Triangulation t = make_manifold(m);
    ValidationReport r = validate(t);
    CHECK_MESSAGE(r.passed(), r.to_string());
    Skeleton s = compute_skeleton(t);
    CHECK(s.euler_characteristic() == 0);
    oracle::Edges e = oracle::edge_classes(t);
    CHECK(s.num_edges == e.count);
    CHECK(static_cast<std::size_t>(s.num_vertices) == oracle::vertex_classes(t));
    for (int a = 0; a < t.size(); ++a) {
      CHECK(s.tet_edge[a] == e.cls[a]);
      CHECK(s.tet_edge_sign[a] == e.sign[a]);
    }
    CHECK(compute_skeleton(t) == s);
  }
}

TEST_CASE("standard counts") {
  Skeleton two = compute_skeleton(s3_two_tet());
  CHECK(two.num_tets == 2);
  CHECK(two.num_vertices - two.num_edges + two.num_faces - two.num_tets == 0);
  Skeleton five = compute_skeleton(s3_pentachoron());
  CHECK(five.num_tets == 5);
  CHECK(five.num_faces == 10);
  CHECK(five.num_edges == 10);
  CHECK(five.num_vertices == 5);
  CHECK(compute_skeleton(t3()).num_tets == 6);
  CHECK_THROWS_AS(compute_skeleton(Triangulation(1)), IntegrityError);
}

TEST_CASE("validate reports broken inputs") {
  Triangulation t = s3_two_tet();
  Gluing g = t.gluing(0, 0);
  g.perm = compose(g.perm, Perm4{1, 0, 2, 3});
  t.set_gluing_raw(0, 0, g);
  CHECK_FALSE(validate(t).check("gluing-involution").passed);
  Triangulation open = s3_two_tet();
  open.unglue(0, 0);
  CHECK_FALSE(validate(open).check("closed").passed);
  // an even face permutation reverses orientation
  Triangulation bad(1);
  bad.glue(0, 0, 0, {1, 2, 0, 3});
  bad.glue(0, 2, 0, {0, 1, 3, 2});
  CHECK_FALSE(validate(bad).check("orientable").passed);
  CHECK_THROWS_AS(bad.glue(0, 0, 0, {1, 0, 2, 3}), SpecError);
}

TEST_CASE("fundamental groups agree with the standard presentations") {
  for (const char* m : kManifolds) {
    CAPTURE(m);
    Presentation from_tri = fundamental_group(make_manifold(m));
    Presentation standard = manifold_presentation(m);
    CHECK(h1(from_tri) == h1(standard));
    for (const char* g : {"Z2", "Z3", "S3", "Q8"})
      CHECK(count_homs(from_tri, make_group(g)) == count_homs(standard, make_group(g)));
  }
}

TEST_CASE("lens spaces") {
  Triangulation rp3 = lens_space(2, 1);
  CHECK(validate(rp3).passed());
  CHECK(dw_invariant(fundamental_group(rp3), make_group("Z2")) == 1);
  for (int q : {1, 2, 3}) {
    Presentation p = fundamental_group(lens_space(7, q));
    CHECK(h1(p) == std::pair<int, std::vector<long long>>{0, {7}});
    for (int n = 2; n <= 8; ++n) CHECK(dw_invariant(p, make_group("Z" + std::to_string(n))) == Rational(std::gcd(7, n), n));
  }
  CHECK_THROWS_AS(lens_space(4, 2), SpecError);
  CHECK_THROWS_AS(lens_space(5, 0), SpecError);
}

TEST_CASE("torus bundles") {
  CHECK(RLWord("RL").matrix() == Mat2{2, 1, 1, 1});
  CHECK_THROWS_AS(RLWord("RR"), SpecError);
  CHECK_THROWS_AS(RLWord("RXL"), SpecError);
  for (const char* w : {"RL", "RRL", "RLL", "RLRL", "RRLL", "RLLLL", "RRRLRL"}) {
    CAPTURE(w);
    RLWord word(w);
    Triangulation t = torus_bundle(word);
    CHECK(validate(t).passed());
    CHECK(t.size() == 6 + static_cast<int>(word.letters.size()));
    Presentation p = fundamental_group(t);
    CHECK(h1(p) == oracle::torus_bundle_h1(word.matrix()));
    Presentation q = torus_bundle_presentation(word.matrix());
    for (const auto& g : catalog_up_to(8)) CHECK(count_homs(p, make_group(g)) == count_homs(q, make_group(g)));
  }
}

TEST_CASE("matrix_to_rl") {
  CHECK(matrix_to_rl({2, 1, 1, 1}).word.letters == "RL");
  RLFactorization f = matrix_to_rl({3, 2, 1, 1});
  CHECK(f.word.matrix() == RLWord("RRL").matrix());
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> e(-2, 2);
  for (Mat2 a : {Mat2{3, 2, 1, 1}, Mat2{5, 2, 2, 1}, Mat2{1, 2, 9, 19}, Mat2{4, 1, -1, 0}, Mat2{2, 3, 1, 2}}) {
    for (int k = 0; k < 10; ++k) {
      Mat2 p = Mat2::identity();
      for (int s = 0; s < 4; ++s) p = p * (e(rng) > 0 ? Mat2::R() : Mat2::L().inverse()) * (e(rng) > 0 ? Mat2::S() : Mat2::identity());
      Mat2 b = p * a * p.inverse();
      RLFactorization fb = matrix_to_rl(b);
      CHECK(fb.conjugator * b * fb.conjugator.inverse() == fb.word.matrix());
      CHECK(fb.conjugator.det() == 1);
    }
  }
  CHECK_THROWS_AS(matrix_to_rl({1, 1, 0, 1}), UnsupportedError);
  CHECK_THROWS_AS(matrix_to_rl({0, -1, 1, 0}), UnsupportedError);
  CHECK_THROWS_AS(matrix_to_rl({2, 1, 1, 2}), SpecError);
}

TEST_CASE("pachner moves keep the manifold") {
  std::mt19937 rng(12);
  for (const char* m : {"s3", "rp3", "lens:5,2", "t3", "bundle:RRL"}) {
    CAPTURE(m);
    Triangulation t = make_manifold(m);
    auto reference = h1(manifold_presentation(m));
    for (int step = 0; step < 4; ++step) {
      if (step % 2 == 0) {
        auto faces = eligible_23_faces(t);
        REQUIRE_FALSE(faces.empty());
        int n = t.size();
        t = pachner_23(t, faces[rng() % faces.size()]);
        CHECK(t.size() == n + 1);
      } else {
        int n = t.size();
        t = pachner_14(t, static_cast<int>(rng() % static_cast<unsigned>(n)));
        CHECK(t.size() == n + 3);
      }
      CHECK(validate(t).passed());
      CHECK(compute_skeleton(t).euler_characteristic() == 0);
      CHECK(h1(fundamental_group(t)) == reference);
    }
  }
  Triangulation one = pachner_14(s3_two_tet(), 0);
  CHECK(one.size() == 5);
  CHECK(validate(one).passed());
}

TEST_CASE("ineligible 2-3 faces are rejected") {
  // a face class whose two sides lie in the same tetrahedron
  Triangulation t = s3_two_tet();
  Skeleton s = compute_skeleton(t);
  bool found = false;
  for (int f = 0; f < s.num_faces; ++f) {
    auto [a, face] = s.face_rep[f];
    if (t.gluing(a, face).tet == a) {
      CHECK_THROWS_AS(pachner_23(t, f), SpecError);
      found = true;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(pachner_23(t, 99), SpecError);
}

TEST_CASE("relabel and mirror keep validity") {
  Triangulation t = t3();
  std::vector<Perm4> perms(static_cast<std::size_t>(t.size()), Perm4{2, 0, 3, 1});
  CHECK(validate(relabel(t, perms)).passed());
  CHECK(validate(mirror(t)).passed());
  CHECK(h1(fundamental_group(mirror(t))) == h1(fundamental_group(t)));
}

TEST_CASE("triangulation files") {
  for (const char* m : kManifolds) {
    Triangulation t = make_manifold(m);
    CHECK(parse_triangulation(format_triangulation(t)) == t);
  }
  CHECK(parse_triangulation(slurp(QINV3_TEST_DATA "/s3_2tet.tri")) == s3_two_tet());
  CHECK(read_triangulation_file(QINV3_TEST_DATA "/l7_2.tri") == lens_space(7, 2));
  CHECK_THROWS_AS(parse_triangulation("tets: 1\n0: 0/1023\n"), ParseError);
  CHECK_THROWS_AS(parse_triangulation("tets: x\n"), ParseError);
  CHECK_THROWS_AS(read_triangulation_file("/nonexistent.tri"), ParseError);
}
