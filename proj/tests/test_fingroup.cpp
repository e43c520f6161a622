#include "qinv3/error.hpp"
#include "qinv3/fingroup.hpp"

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <set>

using namespace qinv3;

TEST_CASE("make_group examples") {
  CHECK(make_group("Z1").order() == 1);
  CHECK(make_group("S3").order() == 6);
  GroupTable v4 = make_group("Z2xZ2");
  CHECK(v4.order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(v4.mul(x, x) == 0);
  CHECK(make_group("D4").order() == 8);
  CHECK(make_group("Q8").order() == 8);
  CHECK(make_group("A4").order() == 12);
  CHECK(make_group("Dic3").order() == 12);
  CHECK(make_group("SL2_3").order() == 24);
  CHECK(make_group("SL2_5").order() == 120);
  CHECK(make_group("S5").order() == 120);
  CHECK(group_spec_order("Z2xZ4xS3") == 48);
  CHECK_THROWS_AS(make_group("S7"), SpecError);
  CHECK_THROWS_AS(make_group("SL2_4"), SpecError);
  CHECK_THROWS_AS(make_group("Z0"), SpecError);
  CHECK_THROWS_AS(make_group("bogus"), SpecError);
}

TEST_CASE("make_group is deterministic and symmetric groups are lexicographic") {
  CHECK(make_group("S4") == make_group("S4"));
  CHECK(make_group("Z3xD4").table() == make_group("Z3xD4").table());
  // S3 in one-line order 012, 021, 102, 120, 201, 210: (01)(12) composed
  GroupTable s3 = make_group("S3");
  CHECK(s3.element_order(1) == 2);
  CHECK(s3.element_order(3) == 3);
}

TEST_CASE("every catalog group validates, classes partition, orbit-stabilizer holds") {
  for (const auto& spec : full_catalog()) {
    CAPTURE(spec);
    GroupTable g = make_group(spec);
    CHECK(validate_table(g.raw()).passed);
    ConjClasses c = conjugacy_classes(g);
    long long total = 0;
    for (int k = 0; k < c.count(); ++k) {
      total += c.sizes[k];
      CHECK(c.sizes[k] * c.centralizer_orders[k] == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("catalog covers each order up to 15 with the right number of classes") {
  // number of isomorphism classes of groups of order n
  const int expected[16] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  auto cat = full_catalog();
  for (int n = 1; n <= 15; ++n) {
    int count = 0;
    for (const auto& s : cat) count += group_spec_order(s) == n;
    CHECK_MESSAGE(count == expected[n], "order " << n);
  }
  CHECK(std::is_sorted(cat.begin(), cat.end(), [](const std::string& a, const std::string& b) {
    return std::pair(group_spec_order(a), a) < std::pair(group_spec_order(b), b);
  }));
}

TEST_CASE("validate_table detects broken tables") {
  RawTable t = make_group("S3").raw();
  std::swap(t.entries[1 * 6 + 2], t.entries[1 * 6 + 3]);
  TableReport r = validate_table(t);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.violations.empty());
  CHECK(validate_table({1, {0}}).passed);
  CHECK_THROWS_AS(GroupTable(t, "broken"), SpecError);
}

TEST_CASE("conjugacy classes against brute force") {
  for (const char* spec : {"S3", "Q8", "D4", "A4", "Z6", "Dic3", "S4"}) {
    CAPTURE(spec);
    GroupTable g = make_group(spec);
    ConjClasses c = conjugacy_classes(g);
    for (int x = 0; x < g.order(); ++x) {
      std::set<int> orbit;
      for (int h = 0; h < g.order(); ++h) orbit.insert(g.mul(g.mul(h, x), g.inv(h)));
      CHECK(c.sizes[c.class_of[x]] == static_cast<int>(orbit.size()));
      for (int y : orbit) CHECK(c.class_of[y] == c.class_of[x]);
      CHECK(c.representatives[c.class_of[x]] == *orbit.begin());
    }
  }
  auto sizes = [](const char* spec) {
    auto s = conjugacy_classes(make_group(spec)).sizes;
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes("S3") == std::vector<int>{1, 2, 3});
  CHECK(sizes("Q8") == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(conjugacy_classes(make_group("Z7")).count() == 7);
}

TEST_CASE("abelian characters") {
  CharacterTable z2 = characters_abelian(make_group("Z2"));
  CHECK(z2.approx(0, 1).real() == doctest::Approx(1.0));
  CHECK(z2.approx(1, 1).real() == doctest::Approx(-1.0));
  CharacterTable z1 = characters_abelian(make_group("Z1"));
  CHECK(z1.order == 1);
  CHECK_THROWS_AS(characters_abelian(make_group("S3")), SpecError);

  for (const char* spec : {"Z2xZ2", "Z6", "Z2xZ4", "Z3xZ3", "Z2xZ6", "Z5"}) {
    CAPTURE(spec);
    GroupTable g = make_group(spec);
    CharacterTable ch = characters_abelian(g);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      CHECK(ch.exponent(a, 0) == 0);
      CHECK(ch.exponent(0, a) == 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          CHECK((ch.exponent(a, g.mul(x, y)) - ch.exponent(a, x) - ch.exponent(a, y)) % ch.root_order == 0);
      for (int b = 0; b < n; ++b) {
        // exact orthogonality in Q(zeta)
        Cyclotomic s(ch.root_order);
        for (int x = 0; x < n; ++x) s += ch.value(a, x) * ch.value(b, x).conj();
        CHECK(s == Cyclotomic(ch.root_order, Rational(a == b ? n : 0)));
      }
    }
  }
}

TEST_CASE("group table text round trip") {
  GroupTable g = make_group("D4");
  GroupTable h = parse_group_table(format_group_table(g), "D4");
  CHECK(g == h);
  CHECK_THROWS(parse_group_table("order: 2\n0 1\n1 1\n"));
}
