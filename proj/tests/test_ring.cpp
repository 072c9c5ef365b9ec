#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ebring/error.hpp"
#include "ebring/poly.hpp"
#include "ebring/ring.hpp"
#include "oracle.hpp"

using namespace ebring;

namespace {

std::vector<FiniteRing> sample_rings() {
  std::vector<FiniteRing> out;
  for (std::uint64_t n : {2, 3, 4, 6, 8, 12, 16})
    out.push_back(make_zmod(n));
  for (std::uint64_t q : {2, 3, 4, 8, 9, 16, 25})
    out.push_back(make_gf(q));
  const auto f2 = make_gf(2);
  const auto f3 = make_gf(3);
  for (std::vector<Elem> f : {std::vector<Elem>{0, 0, 1}, {0, 1, 1}, {0, 0, 0, 1}, {0, 0, 1, 1}})
    out.push_back(make_poly_quotient(f2, f));
  out.push_back(make_poly_quotient(f3, std::vector<Elem>{0, 0, 1}));
  out.push_back(make_poly_quotient(f3, std::vector<Elem>{0, 0, 0, 1}));
  std::vector<FiniteRing> parts{make_zmod(4), make_gf(3)};
  out.push_back(make_product(parts));
  std::vector<FiniteRing> parts2{make_zmod(4), make_zmod(4)};
  out.push_back(make_product(parts2));
  return out;
}

std::vector<Elem> as_vector(const ElementSet &s) { return members_of(s); }

} // namespace

TEST_CASE("Z/n arithmetic and naming") {
  const auto z2 = make_zmod(2);
  CHECK(z2.order() == 2);
  CHECK(z2.add(1, 1) == 0);

  const auto z12 = make_zmod(12);
  CHECK(z12.order() == 12);
  CHECK(z12.mul(4, 4) == 4);
  CHECK(z12.mul(9, 9) == 9);
  CHECK(z12.name(7) == "7");
  CHECK(z12.find("11") == Elem{11});
  CHECK_FALSE(z12.find("12").has_value());
  CHECK(z12.neg(5) == 7);
  CHECK(z12.sub(3, 5) == 10);

  CHECK_THROWS_AS(make_zmod(1), InvalidSpec);
  CHECK_THROWS_AS(make_zmod(0), InvalidSpec);
}

TEST_CASE("GF(q) is a field of the right order") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27, 25, 49}) {
    CAPTURE(q);
    const auto f = make_gf(q);
    CHECK(f.order() == q);
    CHECK(is_field(f));
    CHECK(units(f).count() == q - 1);
  }
  // GF(4): every nonzero element invertible and U cyclic of order 3.
  const auto f4 = make_gf(4);
  bool cyclic = false;
  for (Elem x = 1; x < 4; ++x) {
    REQUIRE(inverse(f4, x).has_value());
    CHECK(f4.mul(x, *inverse(f4, x)) == f4.one());
    cyclic = cyclic || (mul_power(f4, x, 1) != 1 && mul_power(f4, x, 3) == 1 &&
                        mul_power(f4, x, 1) != mul_power(f4, x, 2));
  }
  CHECK(cyclic);
  CHECK(f4.name(2) == "a");

  CHECK_THROWS_AS(make_gf(6), InvalidSpec);
  CHECK_THROWS_AS(make_gf(1), InvalidSpec);
  CHECK_THROWS_AS(make_gf(12), InvalidSpec);
}

TEST_CASE("polynomial quotient rings") {
  const auto f2 = make_gf(2);
  SUBCASE("x^2 over GF(2): (1+x)^2 = 1") {
    const auto r = make_poly_quotient(f2, std::vector<Elem>{0, 0, 1});
    CHECK(r.order() == 4);
    const Elem x1 = *r.find("x+1");
    CHECK(r.mul(x1, x1) == r.one());
    CHECK(as_vector(units(r)) == std::vector<Elem>{1, x1});
  }
  SUBCASE("x^2+x over GF(2): everything idempotent") {
    const auto r = make_poly_quotient(f2, std::vector<Elem>{0, 1, 1});
    CHECK(idempotents(r).count() == 4);
    CHECK(r.names(as_vector(idempotents(r))) == "0,1,x,x+1");
  }
  SUBCASE("x^3 over GF(3) is local of order 27") {
    const auto r = make_poly_quotient(make_gf(3), std::vector<Elem>{0, 0, 0, 1});
    CHECK(r.order() == 27);
    // Non-units are exactly the multiples of x: constant term zero.
    for (Elem a = 0; a < 27; ++a)
      CHECK(units(r)[a] == (a % 3 != 0));
  }
  SUBCASE("over GF(4) coefficients") {
    const auto r = make_poly_quotient(make_gf(4), std::vector<Elem>{0, 0, 1});
    CHECK(r.order() == 16);
    CHECK(validate_axioms(r));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(make_poly_quotient(make_zmod(4), std::vector<Elem>{0, 1}), InvalidSpec);
    CHECK_THROWS_AS(make_poly_quotient(f2, std::vector<Elem>{1}), InvalidSpec);
    const auto f3 = make_gf(3);
    CHECK_THROWS_AS(make_poly_quotient(f3, std::vector<Elem>{0, 0, 2}), InvalidSpec);
  }
}

TEST_CASE("product rings") {
  std::vector<FiniteRing> one{make_zmod(5)};
  const auto single = make_product(one);
  CHECK(single.order() == 5);
  CHECK(single.mul(2, 3) == 1);

  std::vector<FiniteRing> parts{make_zmod(4), make_gf(3)};
  const auto r = make_product(parts);
  CHECK(r.order() == 12);
  CHECK(units(r).count() == 4);
  CHECK(idempotents(r).count() == 4);

  std::vector<FiniteRing> none;
  CHECK_THROWS_AS(make_product(none), InvalidSpec);
}

TEST_CASE("units and idempotents examples") {
  CHECK(as_vector(units(make_zmod(12))) == std::vector<Elem>{1, 5, 7, 11});
  CHECK(as_vector(idempotents(make_zmod(12))) == std::vector<Elem>{0, 1, 4, 9});
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9})
    CHECK(as_vector(idempotents(make_gf(q))) == std::vector<Elem>{0, 1});
}

TEST_CASE("property: axioms, unit closure, idempotent set") {
  for (const auto &r : sample_rings()) {
    CAPTURE(r.label());
    CHECK(validate_axioms(r));
    const auto u = units(r);
    for (auto a = u.find_first(); a != ElementSet::npos; a = u.find_next(a))
      for (auto b = u.find_first(); b != ElementSet::npos; b = u.find_next(b))
        CHECK(u[r.mul(static_cast<Elem>(a), static_cast<Elem>(b))]);
    const auto e = idempotents(r);
    for (Elem a = 0; a < r.order(); ++a)
      CHECK(e[a] == (r.mul(a, a) == a));
    CHECK(e[r.zero()]);
    CHECK(e[r.one()]);
  }
}

TEST_CASE("property: units of a product multiply") {
  std::vector<FiniteRing> parts{make_zmod(9), make_gf(4), make_zmod(10)};
  const auto r = make_product(parts);
  std::size_t expected = 1;
  for (const auto &p : parts)
    expected *= units(p).count();
  CHECK(units(r).count() == expected);
}

TEST_CASE("table rings and axiom violations") {
  // Z/3 as a table.
  std::vector<Elem> add(9), mul(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      add[a * 3 + b] = (a + b) % 3;
      mul[a * 3 + b] = (a * b) % 3;
    }
  const auto r = make_from_table(3, add, mul, {"o", "e", "f"}, "t3");
  CHECK(r.label() == "t3");
  CHECK(r.name(2) == "f");
  CHECK(is_field(r));

  SUBCASE("non-distributive") {
    auto bad = mul;
    bad[2 * 3 + 2] = 2; // 2*2 = 2 breaks distributivity
    CHECK_THROWS_AS(make_from_table(3, add, bad), AxiomViolation);
  }
  SUBCASE("non-commutative") {
    auto bad = mul;
    bad[1 * 3 + 2] = 1;
    CHECK_THROWS_AS(make_from_table(3, add, bad), AxiomViolation);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(make_from_table(3, std::vector<Elem>(8), mul), InvalidSpec);
    auto bad = mul;
    bad[0] = 7;
    CHECK_THROWS_AS(make_from_table(3, add, bad), InvalidSpec);
    CHECK_THROWS_AS(make_from_table(3, add, mul, {"a"}), InvalidSpec);
  }
  SUBCASE("missing identity") {
    std::vector<Elem> zero_mul(9, 0);
    CHECK_THROWS_AS(make_from_table(3, add, zero_mul), AxiomViolation);
  }
}

TEST_CASE("property: random relabelling gives a valid table ring") {
  std::mt19937 rng(7);
  const auto base = make_zmod(12);
  std::vector<Elem> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Elem> add(144), mul(144);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b) {
      add[perm[a] * 12 + perm[b]] = perm[base.add(a, b)];
      mul[perm[a] * 12 + perm[b]] = perm[base.mul(a, b)];
    }
  const auto r = make_from_table(12, add, mul);
  CHECK(r.zero() == perm[0]);
  CHECK(r.one() == perm[1]);
  CHECK(units(r).count() == 4);
  CHECK(idempotents(r).count() == 4);
}

TEST_CASE("integer helpers agree with trial division") {
  for (std::uint64_t n = 2; n < 500; ++n) {
    CAPTURE(n);
    CHECK(factor_integer(n) == oracle::factor(n));
    CHECK(is_prime(n) == (oracle::factor(n).size() == 1 && oracle::factor(n)[0].second == 1));
    const auto pp = prime_power(n);
    CHECK(pp.has_value() == (oracle::factor(n).size() == 1));
  }
  CHECK_FALSE(prime_power(1).has_value());
  CHECK(*prime_power(81) == std::pair<std::uint64_t, unsigned>{3, 4});
}

TEST_CASE("polynomial utilities over GF(2) and GF(3)") {
  const auto f2 = make_gf(2);
  using poly::Poly;
  CHECK(poly::is_irreducible(f2, Poly{1, 1, 1}));
  CHECK_FALSE(poly::is_irreducible(f2, Poly{1, 0, 1})); // (x+1)^2
  CHECK(poly::to_string(f2, Poly{1, 1, 0, 1}, "x") == "x^3+x+1");
  const auto fac = poly::factor(f2, Poly{0, 0, 1, 1}); // x^2 (x+1)
  REQUIRE(fac.size() == 2);
  unsigned total = 0;
  for (const auto &[p, k] : fac)
    total += k;
  CHECK(total == 3);
  // Irreducible count of degree 2 over GF(3) is (9-3)/2 = 3.
  const auto f3 = make_gf(3);
  std::size_t irreducible = 0;
  for (std::size_t i = 0; i < poly::count_monic_of_degree(f3, 2); ++i)
    irreducible += poly::is_irreducible(f3, poly::monic_of_degree(f3, 2, i));
  CHECK(irreducible == 3);
  const auto [qt, rem] = poly::divmod(f3, Poly{2, 0, 1}, Poly{1, 1}); // x^2+2 by x+1
  CHECK(poly::degree(rem) <= 0);
  CHECK(poly::add(f3, poly::mul(f3, qt, Poly{1, 1}), rem) == Poly{2, 0, 1});
}
