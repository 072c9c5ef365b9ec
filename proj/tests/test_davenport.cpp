#include <doctest.h>

#include "ebring/davenport.hpp"
#include "ebring/error.hpp"
#include "oracle.hpp"

using namespace ebring;

namespace {

using Factors = std::vector<std::size_t>;

AbelianGroupView group(Factors f) { return synthetic_group(f); }

std::size_t oracle_davenport(const AbelianGroupView &g) {
  std::vector<bool> bad(g.order(), false);
  bad[g.one()] = true;
  const oracle::Op op = [&g](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); };
  return oracle::longest_free(g.order(), op, bad).length + 1;
}

} // namespace

TEST_CASE("invariant factors") {
  CHECK(group({}).invariant_factors().empty());
  CHECK(unit_group_view(make_zmod(12)).invariant_factors() == Factors{2, 2});
  CHECK(unit_group_view(make_zmod(4)).invariant_factors() == Factors{2});
  CHECK(unit_group_view(make_zmod(16)).invariant_factors() == Factors{2, 4});
  CHECK(unit_group_view(make_zmod(2)).invariant_factors().empty());
  for (std::uint64_t q : {3, 4, 5, 8, 9, 16})
    CHECK(unit_group_view(make_gf(q)).invariant_factors() == Factors{q - 1});
  CHECK(group({6, 4}).invariant_factors() == Factors{2, 12});
  CHECK(group({2, 3}).invariant_factors() == Factors{6});
  CHECK(group({4, 2, 2}).invariant_factors() == Factors{2, 2, 4});
}

TEST_CASE("group views") {
  const auto g = group({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.name(5) == "(1,1)");
  CHECK(g.element_order(5) == 4);
  CHECK(g.mul(g.inverse(5), 5) == g.one());
  CHECK(validate_group(g));

  const auto z = make_zmod(12);
  const auto u = unit_group_view(z);
  CHECK(u.is_unit_group());
  CHECK(u.order() == 4);
  CHECK(u.to_ring(u.one()) == z.one());
  CHECK(u.from_ring(7).has_value());
  CHECK_FALSE(u.from_ring(6).has_value());
  CHECK(u.name(*u.from_ring(11)) == "11");
  CHECK(validate_group(u));

  CHECK_THROWS_AS(group({1}), InvalidSpec);
}

TEST_CASE("Davenport constants by search") {
  CHECK(davenport(group({})).value == 1);
  CHECK(davenport(group({})).witness.empty());
  for (std::size_t n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const auto d = davenport(group({n}));
    CHECK(d.value == n);
    CHECK_FALSE(d.formula_derived);
  }
  CHECK(davenport(group({2, 2})).value == 3);
  CHECK(davenport(group({3, 3})).value == 5);
  CHECK(davenport(group({2, 4})).value == 5);
  CHECK(davenport(group({2, 2, 2})).value == 4);
}

TEST_CASE("cyclic fast path only on request") {
  DavenportOptions trust;
  trust.trust_formulas = true;
  const auto g = group({100});
  const auto d = davenport(g, trust);
  CHECK(d.value == 100);
  CHECK(d.formula_derived);
  CHECK(d.witness.size() == 99);
  CHECK(is_zero_sum_free(g, d.witness));
  CHECK_THROWS_AS(davenport(g), ResourceExhausted);
}

TEST_CASE("property: bounds, witness and oracle agreement") {
  const std::vector<Factors> fam = {{},     {2},    {3},       {4},    {5},    {6},
                                    {7},    {8},    {9},       {10},   {12},   {2, 2},
                                    {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}, {4, 4}, {2, 2, 4}};
  for (const auto &f : fam) {
    const auto g = group(f);
    CAPTURE(g.order());
    const auto d = davenport(g);
    std::size_t classical = 1;
    for (std::size_t di : g.invariant_factors())
      classical += di - 1;
    CHECK(d.value >= classical);
    CHECK(d.value <= g.order());
    CHECK(d.witness.size() == d.value - 1);
    CHECK(is_zero_sum_free(g, d.witness));
    if (g.invariant_factors().size() <= 1)
      CHECK(d.value == g.order());
    CHECK(d.value == oracle_davenport(g));
  }
}

TEST_CASE("isomorphic groups give equal constants") {
  CHECK(davenport(group({2, 2})).value == davenport(unit_group_view(make_zmod(12))).value);
  CHECK(davenport(group({2, 4})).value == davenport(unit_group_view(make_zmod(16))).value);
  CHECK(davenport(group({6})).value == davenport(unit_group_view(make_gf(7))).value);
}

TEST_CASE("search cap") {
  DavenportOptions small;
  small.cap = 8;
  CHECK(davenport(group({2, 4}), small).value == 5);
  CHECK_THROWS_AS(davenport(group({3, 3}), small), ResourceExhausted);
}
