#include "qinv3/error.hpp"
#include "qinv3/fusioncat.hpp"

#include <doctest.h>

#include <cmath>

using namespace qinv3;

namespace {

long double ld(const Scalar& s) { return s.to_long_double(); }

}  // namespace

TEST_CASE("vec_g builders") {
  FusionData t = vec_g(make_group("Z1"));
  CHECK(t.rank == 1);
  CHECK(t.K == Scalar(1));
  FusionData z2 = vec_g(make_group("Z2"));
  CHECK(z2.rank == 2);
  CHECK(z2.K == Scalar(2));
  CHECK(z2.fusion(1, 1, 0));
  CHECK_FALSE(z2.fusion(1, 1, 1));
  GroupTable s3 = make_group("S3");
  FusionData c = vec_g(s3);
  CHECK(c.K == Scalar(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int x = 0; x < 6; ++x) CHECK(c.fusion(a, b, x) == (s3.mul(a, b) == x));
  for (const auto& [k, v] : c.sixj) CHECK(v == Scalar(1));
  CHECK(c.is_rational());
}

TEST_CASE("fibonacci data") {
  FusionData f = fibonacci();
  CHECK(f.rank == 2);
  const Scalar& phi = f.qdim[1];
  CHECK(phi * phi == phi + Scalar(1));
  CHECK(f.K == Scalar(Quadratic{Rational(5, 2), Rational(1, 2), 5}));
  CHECK(ld(f.K) == doctest::Approx(3.618033988749895));
  CHECK(f.fusion(1, 1, 0));
  CHECK(f.fusion(1, 1, 1));
  CHECK(validate_category(f).passed());
}

TEST_CASE("ising data") {
  FusionData i = ising();
  CHECK(i.rank == 3);
  CHECK(i.K == Scalar(4));
  CHECK(i.qdim[1] * i.qdim[1] == Scalar(2));
  CHECK(i.fusion(1, 1, 0));
  CHECK(i.fusion(1, 1, 2));
  CHECK_FALSE(i.fusion(1, 1, 1));
  CHECK(validate_category(i).passed());
}

TEST_CASE("quantum_sl2 data") {
  FusionData r3 = quantum_sl2(3);
  CHECK(r3.rank == 2);
  CHECK(ld(r3.qdim[1]) == doctest::Approx(1.0));
  CHECK(ld(r3.K) == doctest::Approx(2.0));
  FusionData r4 = quantum_sl2(4);
  CHECK(r4.rank == 3);
  CHECK(ld(r4.qdim[1]) == doctest::Approx(std::sqrt(2.0L)));
  CHECK(ld(r4.K) == doctest::Approx(4.0));
  for (int r = 3; r <= 7; ++r) {
    FusionData c = quantum_sl2(r);
    long double k = 0;
    for (int j = 0; j < c.rank; ++j) {
      long double q = std::sin((j + 1) * M_PIl / r) / std::sin(M_PIl / r);
      CHECK(ld(c.qdim[j]) == doctest::Approx(q).epsilon(1e-12));
      k += q * q;
    }
    CHECK(ld(c.K) == doctest::Approx(k).epsilon(1e-12));
    CHECK_MESSAGE(validate_category(c).passed(), validate_category(c).to_string());
  }
  CHECK_THROWS_AS(quantum_sl2(2), SpecError);
}

TEST_CASE("every built-in validates") {
  for (const char* name : {"trivial", "fib", "ising", "sl2:5", "vecg:Z2", "vecg:S3", "vecg:Q8", "vecg:D4", "vecg:Z2xZ2"}) {
    CAPTURE(name);
    CategoryReport r = validate_category(make_category(name));
    CHECK_MESSAGE(r.passed(), r.to_string());
    for (const char* check : {"pentagon", "K-consistency", "dual-involution", "fusion-duality", "orthogonality"})
      CHECK(r.check(check).passed);
  }
}

TEST_CASE("negated fibonacci entry fails the pentagon with a nine-label witness") {
  FusionData f = fibonacci();
  SixjKey k{1, 1, 1, 1, 1, 1};
  f.sixj[k] = -f.sixj[k];
  CategoryReport r = validate_category(f);
  CHECK_FALSE(r.check("pentagon").passed);
  const std::string& w = r.check("pentagon").witness;
  int labels = 0;
  for (char ch : w) labels += ch == '0' || ch == '1';
  CHECK(labels >= 9);
}

TEST_CASE("a 10 percent change to any nonzero fibonacci entry breaks the pentagon") {
  const FusionData base = fibonacci();
  for (const auto& [k, v] : base.sixj) {
    if (v.is_zero()) continue;
    FusionData f = base;
    f.sixj[k] = v * Scalar::real(1.1L);
    CHECK_FALSE(validate_category(f).check("pentagon").passed);
  }
}

TEST_CASE("broken structural data is reported") {
  FusionData z3 = vec_g(make_group("Z3"));
  FusionData d = z3;
  d.dual = {0, 1, 2};
  CHECK_FALSE(validate_category(d).check("fusion-unit").passed);
  FusionData nd = z3;
  nd.set_fusion(1, 2, 1);  // breaks N(a,b,c) = N(dual b, dual a, dual c)
  CHECK_FALSE(validate_category(nd).check("fusion-duality").passed);
  FusionData q = z3;
  q.qdim[1] = Scalar(2);
  CHECK_FALSE(validate_category(q).check("dimension-homomorphism").passed);
  FusionData k = z3;
  k.K = Scalar(4);
  CHECK_FALSE(validate_category(k).check("K-consistency").passed);
  CHECK_THROWS_AS(global_dimension(k), IntegrityError);
  FusionData m = z3;
  m.sixj.erase(m.sixj.begin());
  CHECK_FALSE(validate_category(m).check("sixj-support").passed);
  CHECK_THROWS_AS(m.sixj_at(z3.sixj.begin()->first), IntegrityError);
}

TEST_CASE("global dimensions") {
  CHECK(global_dimension(vec_g(make_group("S4"))) == Scalar(24));
  CHECK(global_dimension(fibonacci()) == Scalar(Quadratic{Rational(5, 2), Rational(1, 2), 5}));
  CHECK(global_dimension(trivial_category()) == Scalar(1));
}

TEST_CASE("tetrahedral symmetry of stored values") {
  const std::array<int, 4> perms[] = {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}, {3, 2, 1, 0}, {1, 2, 3, 0}};
  for (const char* name : {"fib", "ising", "sl2:5"}) {
    FusionData c = make_category(name);
    for (const auto& [k, v] : c.sixj)
      for (const auto& p : perms) {
        SixjKey pk = permute_key(k, p, c.dual);
        REQUIRE(c.sixj.count(pk));
        CHECK(c.sixj.at(pk).approx_equal(v));
      }
  }
}

TEST_CASE("category text round trip") {
  for (const char* name : {"trivial", "fib", "ising", "sl2:5", "vecg:S3"}) {
    CAPTURE(name);
    FusionData c = make_category(name);
    std::string text = format_category(c);
    FusionData back = parse_category(text);
    CHECK(format_category(back) == text);
    CHECK(back.rank == c.rank);
    CHECK(back.dual == c.dual);
    CHECK(back.fusion_rules == c.fusion_rules);
    CHECK(back.sixj.size() == c.sixj.size());
    for (const auto& [k, v] : c.sixj) CHECK(back.sixj.at(k) == v);
    CHECK(back.K == c.K);
  }
  CHECK_THROWS_AS(parse_category("dual: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_category("labels: 2\ndual: 0 1\nqdim: 1 1\nfusion: 0 1 1\nfusion: 0 1 1\n"), SpecError);
  CHECK_THROWS_AS(make_category("sl2:x"), SpecError);
  CHECK_THROWS_AS(make_category("nope"), SpecError);
}
