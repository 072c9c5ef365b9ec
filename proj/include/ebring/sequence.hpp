#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebring/error.hpp"
#include "ebring/ring.hpp"

namespace ebring {

// A finite multiset of element indices. Terms are kept sorted, so any two
// orderings of the same terms compare equal.
class Sequence {
public:
  Sequence() = default;
  explicit Sequence(std::vector<Elem> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
  }
  Sequence(std::initializer_list<Elem> terms) : Sequence(std::vector<Elem>(terms)) {}

  std::span<const Elem> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Elem operator[](std::size_t i) const { return terms_[i]; }

  friend bool operator==(const Sequence &, const Sequence &) = default;
  friend auto operator<=>(const Sequence &, const Sequence &) = default;

private:
  std::vector<Elem> terms_;
};

Sequence concat(const Sequence &a, const Sequence &b);

// Any carrier with order(), one() and a commutative associative mul(): a
// FiniteRing under multiplication, or an AbelianGroupView.
template <class C>
concept MulCarrier = requires(const C &c, Elem a) {
  { c.order() } -> std::convertible_to<std::size_t>;
  { c.one() } -> std::convertible_to<Elem>;
  { c.mul(a, a) } -> std::convertible_to<Elem>;
};

// Product of all terms; the empty product is one().
template <MulCarrier C> Elem pi(const C &c, const Sequence &t) {
  Elem acc = c.one();
  for (Elem a : t.terms())
    acc = c.mul(acc, a);
  return acc;
}

// Products of nonempty subsequences, grown term by term as
// S' = S u {a} u S*a. The empty sequence yields the empty set.
template <MulCarrier C> ElementSet product_set(const C &c, const Sequence &t) {
  ElementSet s(c.order());
  for (Elem a : t.terms()) {
    ElementSet next = s;
    next.set(a);
    for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
      next.set(c.mul(static_cast<Elem>(x), a));
    s = std::move(next);
  }
  return s;
}

bool is_idempotent_product_free(const FiniteRing &r, const Sequence &t);

inline constexpr std::size_t kSubsequenceCap = 20;

// Calls f(sub) for each of the 2^|t| - 1 nonempty subsequences (by position,
// so repeated terms give repeated subsequences). |t| <= kSubsequenceCap.
template <class F> void for_each_subsequence(const Sequence &t, F &&f) {
  if (t.size() > kSubsequenceCap)
    throw PreconditionError("subsequence enumeration is capped at " +
                            std::to_string(kSubsequenceCap) + " terms");
  const std::uint32_t total = std::uint32_t{1} << t.size();
  std::vector<Elem> buf;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    buf.clear();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mask & (std::uint32_t{1} << i))
        buf.push_back(t[i]);
    f(Sequence(buf));
  }
}

// Positions (ascending) of a nonempty subsequence of terms whose product
// lies in targets, or nullopt. Deterministic: terms are absorbed in order and
// each reachable product keeps the first subsequence that reached it.
template <MulCarrier C>
std::optional<std::vector<std::size_t>>
find_subsequence_with_product(const C &c, std::span<const Elem> terms,
                              const ElementSet &targets) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  // link[x] = (previous product or none, position of the last term used)
  std::vector<std::pair<std::size_t, std::size_t>> link(c.order(), {none, none});
  std::vector<Elem> reached;
  auto unwind = [&](Elem x) {
    std::vector<std::size_t> pos;
    for (std::size_t cur = x; cur != none; cur = link[cur].first)
      pos.push_back(link[cur].second);
    std::reverse(pos.begin(), pos.end());
    return pos;
  };
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Elem a = terms[i];
    std::vector<std::pair<Elem, std::size_t>> fresh;
    if (link[a].second == none)
      fresh.emplace_back(a, none);
    for (Elem x : reached) {
      const Elem y = c.mul(x, a);
      if (link[y].second == none)
        fresh.emplace_back(y, x);
    }
    for (const auto &[y, prev] : fresh) {
      if (link[y].second != none)
        continue;
      link[y] = {prev, i};
      reached.push_back(y);
      if (targets[y])
        return unwind(y);
    }
  }
  return std::nullopt;
}

// Comma-separated element names in canonical order.
std::string render(const FiniteRing &r, const Sequence &t);

} // namespace ebring
