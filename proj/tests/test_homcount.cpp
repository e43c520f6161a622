#include "oracles.hpp"

#include "qinv3/homcount.hpp"
#include "qinv3/triangulation.hpp"

#include <doctest.h>

#include <random>

using namespace qinv3;

namespace {

Presentation pres(const char* text) { return parse_presentation(text); }

Presentation random_presentation(std::mt19937& rng, const std::string& prefix) {
  std::uniform_int_distribution<int> gens(1, 3), rels(0, 2), len(1, 4), e(-3, 3);
  Presentation p;
  int n = gens(rng);
  for (int i = 0; i < n; ++i) p.generators.push_back(prefix + std::to_string(i));
  std::uniform_int_distribution<int> g(0, n - 1);
  for (int r = rels(rng); r > 0; --r) {
    std::vector<Letter> l;
    for (int k = len(rng); k > 0; --k) {
      int x = e(rng);
      l.push_back({g(rng), x == 0 ? 2 : x});
    }
    p.relators.push_back(Word(l));
  }
  return p;
}

}  // namespace

TEST_CASE("count_homs examples") {
  for (const char* g : {"Z1", "Z5", "S3", "Q8"}) CHECK(count_homs(pres("gens: a\n"), make_group(g)) == make_group(g).order());
  CHECK(count_homs(pres("gens: a b\nrel: a b a^-1 b^-1\n"), make_group("S3")) == 18);
  CHECK(count_homs(pres("gens: a\nrel: a^7\n"), make_group("Z3")) == 1);
}

TEST_CASE("dw_invariant examples") {
  CHECK(dw_invariant(pres("gens: a\nrel: a\n"), make_group("S3")) == Rational(1, 6));
  Presentation t3 = pres("gens: x y z\nrel: x y x^-1 y^-1\nrel: x z x^-1 z^-1\nrel: y z y^-1 z^-1\n");
  CHECK(count_homs(t3, make_group("S3")) == oracle::hom_count(t3, make_group("S3")));
  CHECK(dw_invariant(t3, make_group("S3")) == 8);
  CHECK(dw_invariant(pres("gens: a\nrel: a^7\n"), make_group("Z7")) == 1);
}

TEST_CASE("reduced and unreduced counts match brute force on small groups") {
  std::mt19937 rng(42);
  std::vector<std::string> groups;
  for (const auto& s : full_catalog())
    if (group_spec_order(s) <= 12) groups.push_back(s);
  for (int it = 0; it < 60; ++it) {
    Presentation p = random_presentation(rng, "g");
    const auto& spec = groups[static_cast<std::size_t>(it) % groups.size()];
    CAPTURE(format_presentation(p));
    CAPTURE(spec);
    GroupTable g = make_group(spec);
    long long expected = oracle::hom_count(p, g);
    HomCountOptions plain;
    plain.symmetry_reduction = false;
    CHECK(count_homs(p, g) == expected);
    CHECK(count_homs(p, g, plain) == expected);
  }
}

TEST_CASE("counts into the trivial group are 1") {
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) CHECK(count_homs(random_presentation(rng, "x"), make_group("Z1")) == 1);
}

TEST_CASE("free products multiply counts") {
  std::mt19937 rng(9);
  auto cat = catalog_up_to(12);
  for (int i = 0; i < 20; ++i) {
    Presentation p = random_presentation(rng, "p"), q = random_presentation(rng, "q");
    GroupTable g = make_group(cat[static_cast<std::size_t>(i * 7) % cat.size()]);
    CHECK(count_homs(free_product(p, q), g) == count_homs(p, g) * count_homs(q, g));
  }
}

TEST_CASE("thread count does not change results") {
  Presentation p = torus_bundle_presentation({3, 2, 1, 1});
  for (const char* g : {"S4", "SL2_3", "A5"}) {
    HomCountOptions one, many;
    one.threads = 1;
    many.threads = 4;
    CHECK(count_homs(p, make_group(g), one) == count_homs(p, make_group(g), many));
  }
}

TEST_CASE("fingerprints") {
  Fingerprint f = fingerprint(pres("gens: a\nrel: a^7\n"), {"Z2", "Z3", "Z4", "Z5", "Z6"});
  REQUIRE(f.entries.size() == 5);
  for (const auto& e : f.entries) CHECK(e.count == 1);
  Fingerprint g = fingerprint(pres("gens: a\n"), {"Z3", "Z2"});
  REQUIRE(g.entries.size() == 2);
  CHECK(g.entries[0].spec == "Z2");
  CHECK(g.entries[0].count == 2);
  CHECK(g.entries[1].count == 3);
  Presentation t3 = pres("gens: x y z\nrel: x y x^-1 y^-1\nrel: x z x^-1 z^-1\nrel: y z y^-1 z^-1\n");
  CHECK(fingerprint(t3, {"S3"}).entries[0].count == 48);
  CHECK(fingerprint(t3, catalog_up_to(8)) == fingerprint(t3, catalog_up_to(8)));
  CHECK(canonical_catalog({"S3", "Z2", "Z7", "Z2", "Z6"}) == std::vector<std::string>{"Z2", "S3", "Z6", "Z7"});
}

TEST_CASE("compare_fingerprints") {
  Presentation l7 = pres("gens: a\nrel: a^7\n");
  auto same = compare_fingerprints(l7, l7, full_catalog());
  CHECK(same.indistinguishable);
  CHECK(same.verdict().rfind("indistinguishable (catalog <= 120", 0) == 0);
  auto diff = compare_fingerprints(pres("gens: a\nrel: a^2\n"), pres("gens: a\nrel: a^3\n"), full_catalog());
  CHECK_FALSE(diff.indistinguishable);
  CHECK(diff.verdict() == "distinguished by Z2 (2 vs 1)");
}
