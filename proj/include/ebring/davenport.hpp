#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebring/ring.hpp"
#include "ebring/search.hpp"
#include "ebring/sequence.hpp"

namespace ebring {

// A finite abelian group written multiplicatively, on elements 0..order-1.
// Either the unit group of a ring (elements are the units in ascending ring
// index, the operation is ring multiplication) or a synthetic direct product
// of cyclic groups (mixed-radix tuples, componentwise addition).
class AbelianGroupView {
public:
  std::size_t order() const { return order_; }
  Elem one() const { return identity_; }
  Elem mul(Elem a, Elem b) const;
  Elem inverse(Elem a) const;
  std::size_t element_order(Elem a) const;
  std::string name(Elem a) const;
  std::string names(std::span<const Elem> elems) const;

  // d_1 | d_2 | ... | d_r, each >= 2; empty for the trivial group.
  const std::vector<std::size_t> &invariant_factors() const { return factors_; }

  // Ring element of a unit-group element; identity for synthetic groups.
  Elem to_ring(Elem a) const { return ring_ ? embedding_[a] : a; }
  std::optional<Elem> from_ring(Elem x) const;
  bool is_unit_group() const { return ring_.has_value(); }

  friend AbelianGroupView unit_group_view(const FiniteRing &r);
  friend AbelianGroupView synthetic_group(std::span<const std::size_t> orders);

private:
  AbelianGroupView() = default;
  void finish();

  std::size_t order_ = 1;
  Elem identity_ = 0;
  std::optional<FiniteRing> ring_;
  std::vector<Elem> embedding_;
  std::vector<Elem> local_; // ring index -> group index, or ~0
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> factors_;
};

AbelianGroupView unit_group_view(const FiniteRing &r);

// Z_{d_1} x ... x Z_{d_k}; each d_i >= 2, the empty list is the trivial group.
AbelianGroupView synthetic_group(std::span<const std::size_t> orders);

// Invariant factors by repeatedly splitting off a cyclic subgroup generated
// by an element of maximal order in the current quotient (ties: least index).
std::vector<std::size_t> invariant_factors(const AbelianGroupView &g);

// Exhaustive group-axiom check: identity, inverses and commutativity up to
// 4096 elements, associativity up to assoc_cap. Returns false if skipped.
bool validate_group(const AbelianGroupView &g, std::size_t assoc_cap = 512);

struct DavenportOptions {
  std::size_t cap = 64;
  // Allow closed formulas (cyclic groups: D = n) instead of search.
  bool trust_formulas = false;
  search::Limits limits{};
};

struct DavenportResult {
  std::size_t value = 1;
  // Zero-sum free, length value - 1, over the group's own indices.
  Sequence witness;
  bool formula_derived = false;
};

DavenportResult davenport(const AbelianGroupView &g, const DavenportOptions &opts = {});

bool is_zero_sum_free(const AbelianGroupView &g, const Sequence &t);

} // namespace ebring
