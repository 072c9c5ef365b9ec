#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "ebring/sequence.hpp"

namespace ebring::search {

// Hard ceiling on carrier size: product sets are held as 64-bit masks.
inline constexpr std::size_t kMaxCarrier = 64;

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct Limits {
  std::uint64_t max_nodes = kDefaultNodeBudget;
  std::chrono::milliseconds max_time{std::chrono::minutes(10)};
  unsigned threads = 1;
  std::size_t memo_cap = std::size_t{1} << 20;
};

// Reads EBRING_BUDGET (a node count) if set, else kDefaultNodeBudget.
std::uint64_t default_node_budget();

// Multiplication table of a carrier with at most kMaxCarrier elements.
class MulTable {
public:
  template <MulCarrier C> static MulTable of(const C &c) {
    if (c.order() > kMaxCarrier)
      throw PreconditionError("search carrier has " + std::to_string(c.order()) +
                              " elements; the product-set search handles at most " +
                              std::to_string(kMaxCarrier));
    MulTable t(c.order());
    for (Elem a = 0; a < c.order(); ++a)
      for (Elem b = 0; b < c.order(); ++b)
        t.table_[a * t.n_ + b] = static_cast<std::uint8_t>(c.mul(a, b));
    return t;
  }

  std::size_t size() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }

private:
  explicit MulTable(std::size_t n) : n_(n), table_(n * n) {}
  std::size_t n_;
  std::vector<std::uint8_t> table_;
};

struct Result {
  // Length of the longest sequence whose product set avoids the forbidden set.
  std::size_t max_length = 0;
  // The lexicographically least such sequence of maximal length.
  Sequence witness;
  std::uint64_t nodes = 0;
};

// Exact longest sequence over the carrier none of whose nonempty
// subsequence products is forbidden. Depth-first over product-set states;
// the best extension length of a state depends only on its product set, so
// it is memoised by that set. Throws ResourceExhausted (carrying the longest
// free sequence length seen) when the node or time budget runs out.
Result longest_free_sequence(const MulTable &table, std::uint64_t forbidden,
                             const Limits &limits);

} // namespace ebring::search
