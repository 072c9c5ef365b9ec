#include <doctest.h>

#include <algorithm>
#include <random>

#include "ebring/error.hpp"
#include "ebring/search.hpp"
#include "ebring/sequence.hpp"
#include "oracle.hpp"

using namespace ebring;

namespace {

oracle::Op op_of(const FiniteRing &r) {
  return [&r](std::uint32_t a, std::uint32_t b) { return r.mul(a, b); };
}

std::vector<Elem> members(const ElementSet &s) { return members_of(s); }

std::uint64_t mask_of(const ElementSet &s) {
  std::uint64_t m = 0;
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
    m |= std::uint64_t{1} << x;
  return m;
}

} // namespace

TEST_CASE("sequences are multisets in canonical order") {
  const Sequence a{3, 1, 2, 1};
  CHECK(std::vector<Elem>(a.terms().begin(), a.terms().end()) ==
        std::vector<Elem>{1, 1, 2, 3});
  CHECK(a == Sequence{1, 2, 3, 1});
  CHECK(concat(Sequence{2}, Sequence{1}) == Sequence{1, 2});
  CHECK(Sequence{1, 2} < Sequence{1, 3});
  CHECK(Sequence().empty());
}

TEST_CASE("product set examples") {
  const auto z5 = make_zmod(5);
  CHECK(product_set(z5, Sequence{}).none());
  CHECK(pi(z5, Sequence{}) == z5.one());
  CHECK(members(product_set(z5, Sequence{2, 2, 2})) == std::vector<Elem>{2, 3, 4});
  const auto z4 = make_zmod(4);
  CHECK(members(product_set(z4, Sequence{3, 2})) == std::vector<Elem>{2, 3});
  CHECK(render(z4, Sequence{3, 2}) == "2,3");
}

TEST_CASE("idempotent-product freeness") {
  const auto z4 = make_zmod(4);
  CHECK(is_idempotent_product_free(z4, Sequence{3, 2}));
  CHECK_FALSE(is_idempotent_product_free(z4, Sequence{3, 0}));
  const auto z5 = make_zmod(5);
  CHECK(is_idempotent_product_free(z5, Sequence{2, 2, 2}));
  CHECK_FALSE(is_idempotent_product_free(z5, Sequence{2, 2, 2, 2}));
  CHECK(is_idempotent_product_free(z5, Sequence{}));
}

TEST_CASE("subsequence enumeration") {
  std::size_t count = 0;
  for_each_subsequence(Sequence{1, 2, 2, 3}, [&](const Sequence &s) {
    CHECK(!s.empty());
    ++count;
  });
  CHECK(count == 15);
  CHECK_THROWS_AS(for_each_subsequence(Sequence(std::vector<Elem>(21, 1)), [](const Sequence &) {}),
                  PreconditionError);
}

TEST_CASE("property: incremental product set matches the subset oracle") {
  const auto z12 = make_zmod(12);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Elem> t(rng() % 9);
    for (auto &x : t)
      x = rng() % 12;
    const auto want = oracle::product_set(12, op_of(z12), t);
    const auto got = product_set(z12, Sequence(t));
    for (Elem x = 0; x < 12; ++x)
      CHECK(got[x] == want[x]);

    // Permutation invariance and monotonicity under extension.
    auto shuffled = t;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(oracle::product_set(12, op_of(z12), shuffled) == want);
    auto longer = t;
    longer.push_back(rng() % 12);
    CHECK(got.is_subset_of(product_set(z12, Sequence(longer))));
  }
}

TEST_CASE("find_subsequence_with_product returns a genuine witness") {
  const auto z12 = make_zmod(12);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Elem> t(1 + rng() % 7);
    for (auto &x : t)
      x = rng() % 12;
    ElementSet target = z12.empty_set();
    target.set(rng() % 12);
    const auto hit = find_subsequence_with_product(z12, t, target);
    const auto all = product_set(z12, Sequence(t));
    CHECK(hit.has_value() == all.intersects(target));
    if (hit) {
      REQUIRE(!hit->empty());
      CHECK(std::is_sorted(hit->begin(), hit->end()));
      Elem acc = z12.one();
      for (std::size_t i : *hit)
        acc = z12.mul(acc, t[i]);
      CHECK(target[acc]);
    }
  }
}

TEST_CASE("search engine agrees with the brute-force oracle") {
  std::vector<FiniteRing> rings;
  for (std::uint64_t n : {2, 3, 4, 5, 6, 8, 9, 10, 12})
    rings.push_back(make_zmod(n));
  rings.push_back(make_gf(8));
  rings.push_back(make_poly_quotient(make_gf(2), std::vector<Elem>{0, 0, 0, 1}));
  for (const auto &r : rings) {
    CAPTURE(r.label());
    const auto e = idempotents(r);
    std::vector<bool> bad(r.order());
    for (Elem x = 0; x < r.order(); ++x)
      bad[x] = e[x];
    const auto want = oracle::longest_free(r.order(), op_of(r), bad);
    const auto got = search::longest_free_sequence(search::MulTable::of(r), mask_of(e), {});
    CHECK(got.max_length == want.length);
    CHECK(got.witness.size() == got.max_length);
    CHECK(is_idempotent_product_free(r, got.witness));
    // Witness is the lexicographically least maximal multiset; the oracle
    // visits multisets in lexicographic order and keeps the first maximum.
    CHECK(got.witness == Sequence(want.witness));
  }
}

TEST_CASE("search engine: threads, memo cap and budget") {
  const auto r = make_zmod(16);
  const auto e = idempotents(r);
  const auto table = search::MulTable::of(r);
  const auto base = search::longest_free_sequence(table, mask_of(e), {});

  search::Limits par;
  par.threads = 4;
  const auto threaded = search::longest_free_sequence(table, mask_of(e), par);
  CHECK(threaded.max_length == base.max_length);
  CHECK(threaded.witness == base.witness);

  search::Limits tiny_memo;
  tiny_memo.memo_cap = 4;
  CHECK(search::longest_free_sequence(table, mask_of(e), tiny_memo).max_length ==
        base.max_length);

  search::Limits starved;
  starved.max_nodes = 3;
  try {
    search::longest_free_sequence(table, mask_of(e), starved);
    FAIL("expected the node budget to run out");
  } catch (const ResourceExhausted &ex) {
    REQUIRE(ex.best_lower_bound().has_value());
    CHECK(*ex.best_lower_bound() <= base.max_length);
  }

  CHECK_THROWS_AS(search::MulTable::of(make_zmod(65)), PreconditionError);
}
