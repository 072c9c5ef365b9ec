#include "ebring/davenport.hpp"

#include <algorithm>

#include "ebring/error.hpp"

namespace ebring {

namespace {
constexpr Elem kNotInGroup = ~Elem{0};
}

Elem AbelianGroupView::mul(Elem a, Elem b) const {
  if (ring_)
    return local_[ring_->mul(embedding_[a], embedding_[b])];
  Elem out = 0;
  std::size_t place = 1;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    const std::size_t d = radices_[i];
    out += static_cast<Elem>(((a % d + b % d) % d) * place);
    a /= static_cast<Elem>(d);
    b /= static_cast<Elem>(d);
    place *= d;
  }
  return out;
}

Elem AbelianGroupView::inverse(Elem a) const {
  Elem p = a;
  while (mul(p, a) != identity_)
    p = mul(p, a);
  return p;
}

std::size_t AbelianGroupView::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem p = a; p != identity_; p = mul(p, a))
    ++k;
  return k;
}

std::string AbelianGroupView::name(Elem a) const {
  if (ring_)
    return ring_->name(embedding_[a]);
  if (radices_.size() == 1)
    return std::to_string(a);
  std::vector<std::size_t> digits(radices_.size());
  for (std::size_t i = radices_.size(); i-- > 0;) {
    digits[i] = a % radices_[i];
    a /= static_cast<Elem>(radices_[i]);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < digits.size(); ++i)
    out += (i ? "," : "") + std::to_string(digits[i]);
  return out + ")";
}

std::string AbelianGroupView::names(std::span<const Elem> elems) const {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    out += (i ? "," : "") + name(elems[i]);
  return out;
}

std::optional<Elem> AbelianGroupView::from_ring(Elem x) const {
  if (!ring_)
    return x < order_ ? std::optional<Elem>(x) : std::nullopt;
  if (x >= local_.size() || local_[x] == kNotInGroup)
    return std::nullopt;
  return local_[x];
}

void AbelianGroupView::finish() { factors_ = ebring::invariant_factors(*this); }

AbelianGroupView unit_group_view(const FiniteRing &r) {
  AbelianGroupView g;
  g.ring_ = r;
  g.embedding_ = members_of(units(r));
  g.local_.assign(r.order(), kNotInGroup);
  for (std::size_t i = 0; i < g.embedding_.size(); ++i)
    g.local_[g.embedding_[i]] = static_cast<Elem>(i);
  g.order_ = g.embedding_.size();
  g.identity_ = g.local_[r.one()];
  g.finish();
  return g;
}

AbelianGroupView synthetic_group(std::span<const std::size_t> orders) {
  AbelianGroupView g;
  std::size_t n = 1;
  for (std::size_t d : orders) {
    if (d < 2)
      throw InvalidSpec("cyclic factor orders must be >= 2, got " + std::to_string(d));
    n *= d;
    if (n > kMaxOrder)
      throw InvalidSpec("group order exceeds the supported maximum");
  }
  g.radices_.assign(orders.begin(), orders.end());
  g.order_ = n;
  g.identity_ = 0;
  g.finish();
  return g;
}

std::vector<std::size_t> invariant_factors(const AbelianGroupView &g) {
  const std::size_t m = g.order();
  ElementSet sub(m);
  sub.set(g.one());
  std::vector<std::size_t> found;
  while (sub.count() < m) {
    Elem best = g.one();
    std::size_t best_order = 1;
    for (Elem x = 0; x < m; ++x) {
      std::size_t k = 1;
      for (Elem p = x; !sub[p]; p = g.mul(p, x))
        ++k;
      if (k > best_order) {
        best_order = k;
        best = x;
      }
    }
    ElementSet grown(m);
    for (auto h = sub.find_first(); h != ElementSet::npos; h = sub.find_next(h)) {
      Elem p = static_cast<Elem>(h);
      for (std::size_t j = 0; j < best_order; ++j, p = g.mul(p, best))
        grown.set(p);
    }
    sub = std::move(grown);
    found.push_back(best_order);
  }
  std::reverse(found.begin(), found.end());
  std::size_t product = 1;
  for (std::size_t i = 0; i < found.size(); ++i) {
    product *= found[i];
    if (i + 1 < found.size() && found[i + 1] % found[i] != 0)
      throw InternalConsistencyError("invariant factors fail the divisibility chain");
  }
  if (product != m)
    throw InternalConsistencyError("invariant factors do not multiply to the group order");
  return found;
}

bool validate_group(const AbelianGroupView &g, std::size_t assoc_cap) {
  const std::size_t m = g.order();
  if (m > 4096)
    return false;
  for (Elem a = 0; a < m; ++a) {
    if (g.mul(a, g.one()) != a)
      throw PreconditionError("group identity fails at " + g.name(a));
    bool has_inverse = false;
    for (Elem b = 0; b < m; ++b) {
      if (g.mul(a, b) != g.mul(b, a))
        throw PreconditionError("group is not abelian at " + g.name(a) + ", " + g.name(b));
      has_inverse = has_inverse || g.mul(a, b) == g.one();
    }
    if (!has_inverse)
      throw PreconditionError("no inverse for " + g.name(a));
  }
  if (m > assoc_cap)
    return false;
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw PreconditionError("group operation is not associative");
  return true;
}

DavenportResult davenport(const AbelianGroupView &g, const DavenportOptions &opts) {
  const auto &f = g.invariant_factors();
  if (opts.trust_formulas && f.size() <= 1) {
    // Cyclic: n - 1 copies of a generator is zero-sum free and maximal.
    DavenportResult r;
    r.value = g.order();
    r.formula_derived = true;
    Elem gen = g.one();
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.order()) {
        gen = x;
        break;
      }
    r.witness = Sequence(std::vector<Elem>(g.order() - 1, gen));
    return r;
  }
  if (g.order() > opts.cap)
    throw ResourceExhausted("group of order " + std::to_string(g.order()) +
                            " exceeds the Davenport search cap " +
                            std::to_string(opts.cap) +
                            "; raise the cap or allow the cyclic formula fast path");
  const auto table = search::MulTable::of(g);
  const auto found =
      search::longest_free_sequence(table, std::uint64_t{1} << g.one(), opts.limits);
  DavenportResult r;
  r.value = found.max_length + 1;
  r.witness = found.witness;
  return r;
}

bool is_zero_sum_free(const AbelianGroupView &g, const Sequence &t) {
  return !product_set(g, t)[g.one()];
}

} // namespace ebring
