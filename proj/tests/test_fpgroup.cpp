#include "oracles.hpp"

#include "qinv3/error.hpp"
#include "qinv3/fpgroup.hpp"

#include <doctest.h>

#include <random>

using namespace qinv3;

namespace {

Word w(std::initializer_list<Letter> l) { return Word(l); }

// reduces with an explicit stack of +-1 letters
Word stack_reduce(const Word& x) {
  std::vector<Letter> st;
  for (const auto& l : x.expanded()) {
    if (!st.empty() && st.back().generator == l.generator && st.back().exponent == -l.exponent)
      st.pop_back();
    else
      st.push_back(l);
  }
  std::vector<Letter> merged;
  for (const auto& l : st) {
    if (!merged.empty() && merged.back().generator == l.generator)
      merged.back().exponent += l.exponent;
    else
      merged.push_back(l);
  }
  return Word(merged);
}

Word random_word(std::mt19937& rng, int gens, int len) {
  std::vector<Letter> l;
  std::uniform_int_distribution<int> g(0, gens - 1), e(-3, 3);
  for (int i = 0; i < len; ++i) {
    int x = e(rng);
    l.push_back({g(rng), x == 0 ? 1 : x});
  }
  return Word(l);
}

std::vector<std::vector<long long>> to_rows(const IntegerMatrix& m) {
  std::vector<std::vector<long long>> r(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i].push_back(static_cast<long long>(m.at(i, j)));
  return r;
}

std::vector<long long> to_ll(const std::vector<BigInt>& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(static_cast<long long>(x));
  return out;
}

}  // namespace

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(w({{0, 1}, {0, -1}})).empty());
  CHECK(free_reduce(w({{0, 2}, {1, 1}, {1, 2}})) == w({{0, 2}, {1, 3}}));
  CHECK(free_reduce(w({{0, 1}, {1, 1}, {1, -1}, {0, 1}})) == w({{0, 2}}));
}

TEST_CASE("free_reduce matches stack reduction, idempotent, never longer") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Word x = random_word(rng, 3, 12);
    Word r = free_reduce(x);
    CHECK(r == stack_reduce(x));
    CHECK(free_reduce(r) == r);
    CHECK(r.length() <= x.length());
    for (std::size_t k = 1; k < r.size(); ++k) CHECK(r.letters()[k].generator != r.letters()[k - 1].generator);
  }
}

TEST_CASE("surface presentations") {
  Presentation p1 = surface_presentation(1);
  CHECK(p1.generators == std::vector<std::string>{"a1", "b1"});
  CHECK(format_presentation(p1) == "gens: a1 b1\nrel: a1 b1 a1^-1 b1^-1\n");
  Presentation p2 = surface_presentation(2);
  CHECK(p2.num_generators() == 4);
  REQUIRE(p2.relators.size() == 1);
  CHECK(format_word(p2.relators[0], p2.generators) == "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1");
  CHECK_THROWS_AS(surface_presentation(0), SpecError);
}

TEST_CASE("mapping torus presentations") {
  Presentation base = surface_presentation(1);
  Presentation id = mapping_torus_presentation(base, {Word::generator(0), Word::generator(1)});
  CHECK(format_presentation(id) ==
        "gens: a1 b1 t\nrel: a1 b1 a1^-1 b1^-1\nrel: t a1 t^-1 a1^-1\nrel: t b1 t^-1 b1^-1\n");
  Presentation cat = mapping_torus_presentation(base, torus_images(2, 1, 1, 1));
  CHECK(cat.num_generators() == 3);
  CHECK(cat.relators.size() == 3);
  CHECK_THROWS_AS(mapping_torus_presentation(base, {Word::generator(0)}), SpecError);
  CHECK_THROWS_AS(mapping_torus_presentation(base, {Word::generator(0), Word::generator(5)}), SpecError);
}

TEST_CASE("validate_monodromy") {
  auto r = validate_monodromy(1, torus_images(2, 1, 1, 1));
  CHECK(r.passed());
  CHECK(r.determinant == 1);
  CHECK(r.h1_matrix == IntegerMatrix(2, 2, {2, 1, 1, 1}));
  CHECK_FALSE(validate_monodromy(1, {Word::generator(0, 2), Word::generator(1)}).passed());
  std::vector<Word> id2;
  for (int i = 0; i < 4; ++i) id2.push_back(Word::generator(i));
  auto r2 = validate_monodromy(2, id2);
  CHECK(r2.passed());
  CHECK(r2.h1_matrix == IntegerMatrix::identity(4));
  // a1 -> a1^2 on a genus-2 surface breaks the relator
  std::vector<Word> bad = id2;
  bad[0] = Word::generator(0, 2);
  CHECK_FALSE(validate_monodromy(2, bad).relator_preserved);
}

TEST_CASE("free products") {
  Presentation a = parse_presentation("gens: a\nrel: a^2\n");
  Presentation b = parse_presentation("gens: b\nrel: b^3\n");
  CHECK(format_presentation(free_product(a, b)) == "gens: a b\nrel: a^2\nrel: b^3\n");
  Presentation fa = parse_presentation("gens: a\n");
  Presentation ff = free_product(fa, fa);
  CHECK(ff.num_generators() == 2);
  CHECK(ff.generators[0] != ff.generators[1]);
  CHECK(ff.relators.empty());
  Presentation triv = parse_presentation("gens:\n");
  CHECK(free_product(a, triv) == a);
}

TEST_CASE("abelianization matrices") {
  CHECK(abelianization_matrix(surface_presentation(1)) == IntegerMatrix(1, 2, {0, 0}));
  CHECK(abelianization_matrix(parse_presentation("gens: a\nrel: a^7\n")) == IntegerMatrix(1, 1, {7}));
  // rows of the stable-letter relators are (I - A^T) up to sign, t column zero
  Presentation p = mapping_torus_presentation(surface_presentation(1), torus_images(2, 1, 1, 1));
  IntegerMatrix m = abelianization_matrix(p);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  for (int i = 0; i < 3; ++i) CHECK(m.at(i, 2) == 0);
  CHECK(m.at(1, 0) == -1);
  CHECK(m.at(1, 1) == -1);
  CHECK(m.at(2, 0) == -1);
  CHECK(m.at(2, 1) == 0);
}

TEST_CASE("smith normal form examples") {
  CHECK(to_ll(smith_normal_form(IntegerMatrix(2, 2, {2, 0, 0, 6})).factors) == std::vector<long long>{2, 6});
  CHECK(to_ll(smith_normal_form(IntegerMatrix(2, 2, {1, 1, 1, 0})).factors) == std::vector<long long>{1, 1});
  SmithForm z = smith_normal_form(IntegerMatrix(2, 3));
  CHECK(z.factors.empty());
  CHECK(z.cokernel_free_rank() == 3);
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 4), val(-9, 9);
  for (int it = 0; it < 200; ++it) {
    int r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = val(rng);
    SmithForm s = smith_normal_form(m, true);
    CHECK(to_ll(s.factors) == oracle::invariant_factors(to_rows(m)));
    for (std::size_t k = 1; k < s.factors.size(); ++k) CHECK(s.factors[k] % s.factors[k - 1] == 0);
    REQUIRE(s.left.has_value());
    IntegerMatrix d = *s.left * m * *s.right;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) CHECK(d.at(i, j) == (i == j && i < s.rank ? s.factors[i] : BigInt(0)));
  }
}

TEST_CASE("smith factors invariant under unimodular change of basis") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-6, 6), pick(0, 2);
  auto elementary = [&](int n) {
    IntegerMatrix u = IntegerMatrix::identity(n);
    for (int k = 0; k < 6; ++k) {
      int i = pick(rng) % n, j = pick(rng) % n;
      if (i == j) continue;
      IntegerMatrix e = IntegerMatrix::identity(n);
      e.at(i, j) = val(rng);
      u = u * e;
    }
    return u;
  };
  for (int it = 0; it < 100; ++it) {
    IntegerMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = val(rng);
    auto f = smith_normal_form(m).factors;
    CHECK(smith_normal_form(elementary(3) * m * elementary(3)).factors == f);
  }
}

TEST_CASE("h1 examples") {
  H1Invariants t3 = h1_invariants(parse_presentation("gens: x y z\nrel: x y x^-1 y^-1\nrel: x z x^-1 z^-1\nrel: y z y^-1 z^-1\n"));
  CHECK(t3.free_rank == 3);
  CHECK(t3.torsion.empty());
  H1Invariants cat = h1_invariants(torus_bundle_presentation({2, 1, 1, 1}));
  CHECK(cat.free_rank == 1);
  CHECK(cat.torsion.empty());
  H1Invariants l7 = h1_invariants(parse_presentation("gens: a\nrel: a^7\n"));
  CHECK(l7.free_rank == 0);
  CHECK(l7.torsion == std::vector<BigInt>{7});
  CHECK(l7.to_string() == "Z/7");
}

TEST_CASE("h1 of torus-bundle presentations is coker(A - I) + Z") {
  for (Mat2 a : {Mat2{2, 1, 1, 1}, Mat2{3, 2, 1, 1}, Mat2{1, 0, 0, 1}, Mat2{1, 3, 0, 1}, Mat2{0, -1, 1, 0},
                 Mat2{0, -1, 1, 1}, Mat2{-1, 0, 0, -1}, Mat2{5, 2, 2, 1}}) {
    CAPTURE(a.to_string());
    H1Invariants h = h1_invariants(mapping_torus_presentation(surface_presentation(1), torus_images(a.a, a.b, a.c, a.d)));
    auto [rank, torsion] = oracle::torus_bundle_h1(a);
    CHECK(h.free_rank == rank);
    CHECK(to_ll(h.torsion) == torsion);
  }
}

TEST_CASE("abelianization of a free product is the union of factors") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> nrel(1, 3), len(1, 5);
  for (int it = 0; it < 20; ++it) {
    auto random_pres = [&](const char* prefix, int gens) {
      Presentation p;
      for (int i = 0; i < gens; ++i) p.generators.push_back(std::string(prefix) + std::to_string(i));
      for (int r = nrel(rng); r > 0; --r) p.relators.push_back(random_word(rng, gens, len(rng)));
      return p;
    };
    Presentation p = random_pres("x", 2), q = random_pres("y", 2);
    H1Invariants hp = h1_invariants(p), hq = h1_invariants(q), hpq = h1_invariants(free_product(p, q));
    CHECK(hpq.free_rank == hp.free_rank + hq.free_rank);
    // compare via the block-diagonal oracle
    auto mp = to_rows(abelianization_matrix(p)), mq = to_rows(abelianization_matrix(q));
    std::vector<std::vector<long long>> block;
    for (auto row : mp) {
      row.resize(4, 0);
      block.push_back(row);
    }
    for (const auto& row : mq) block.push_back({0, 0, row[0], row[1]});
    CHECK(to_ll(hpq.torsion) == oracle::cokernel(block, 4).second);
  }
}

TEST_CASE("presentation text round trip and errors") {
  const std::string text = "gens: a b t\nrel: a^3 b^-2\nrel: t a t^-1 b^-1\n";
  CHECK(format_presentation(parse_presentation(text)) == text);
  CHECK(parse_presentation("# comment\ngens: a\n\nrel: a^2 # trailing\n") == parse_presentation("gens: a\nrel: a^2\n"));
  CHECK_THROWS_AS(parse_presentation("rel: a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a^0\n"), ParseError);
  CHECK_THROWS_AS(read_presentation_file("/nonexistent/x.pres"), ParseError);
}
