#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ebring {

// Elements of a finite ring are the indices 0..order-1.
using Elem = std::uint32_t;

// Membership set over element indices of one ring.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

// Exhaustive axiom checks run up to this order; table rings above it are
// rejected.
inline constexpr std::size_t kValidationCap = 512;

// Structured rings at or below this order keep materialised add/mul tables.
inline constexpr std::size_t kTableCap = 4096;

// Hard ceiling on the order of any constructed ring.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 22;

namespace detail {

struct RingBackend {
  virtual ~RingBackend() = default;
  virtual std::size_t order() const = 0;
  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual std::string name(Elem a) const = 0;
};

} // namespace detail

// A finite commutative unitary ring. Immutable after construction and cheap
// to copy (the arithmetic backend is shared).
class FiniteRing {
public:
  FiniteRing(std::shared_ptr<const detail::RingBackend> backend, std::string label);

  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    return add_.empty() ? backend_->add(a, b) : add_[a * order_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_.empty() ? backend_->mul(a, b) : mul_[a * order_ + b];
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  const std::string &label() const { return label_; }
  std::string name(Elem a) const { return backend_->name(a); }

  // Renders a list of elements as comma-separated names.
  std::string names(std::span<const Elem> elems) const;

  // Reverse lookup of name(); linear scan.
  std::optional<Elem> find(const std::string &name) const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const { return ~ElementSet(order_); }

  // Same ring, different display label.
  FiniteRing relabeled(std::string label) const;

  const detail::RingBackend &backend() const { return *backend_; }

private:
  std::shared_ptr<const detail::RingBackend> backend_;
  std::string label_;
  std::size_t order_;
  Elem zero_;
  Elem one_;
  std::shared_ptr<const std::vector<std::uint16_t>> tables_;
  std::span<const std::uint16_t> add_;
  std::span<const std::uint16_t> mul_;
  std::shared_ptr<const std::vector<Elem>> neg_table_;
  std::span<const Elem> neg_;
};

// Z/nZ with elements named by their decimal residue.
FiniteRing make_zmod(std::uint64_t n);

// GF(q) for a prime power q = p^k, realised as GF(p)[a]/(f) with f the least
// monic irreducible of degree k (coefficient tuples compared from the
// highest non-leading coefficient down, i.e. by the residue encoding).
FiniteRing make_gf(std::uint64_t q);

// base[x]/(f). base must be a field, f monic of degree >= 1 with
// coefficients listed lowest degree first. The residue sum c_i x^i has
// element index sum c_i * |base|^i.
FiniteRing make_poly_quotient(const FiniteRing &base, std::span<const Elem> f,
                              const std::string &var = "x");

// Cartesian product; element index is mixed radix with the first factor most
// significant, names are tuples.
FiniteRing make_product(std::span<const FiniteRing> factors);

// Ring from explicit n x n row-major tables. Runs the full axiom check and
// throws AxiomViolation naming the failed axiom. Rejects n > kValidationCap.
FiniteRing make_from_table(std::size_t n, std::span<const Elem> add,
                           std::span<const Elem> mul,
                           std::vector<std::string> names = {},
                           std::string label = "table");

// Exhaustive check of commutativity, associativity, distributivity,
// identities and additive inverses. Throws AxiomViolation. Rings larger than
// cap are skipped and reported as unchecked (returns false).
bool validate_axioms(const FiniteRing &r, std::size_t cap = kValidationCap);

ElementSet units(const FiniteRing &r);
ElementSet idempotents(const FiniteRing &r);
bool is_field(const FiniteRing &r);
Elem mul_power(const FiniteRing &r, Elem x, std::uint64_t k);
std::optional<Elem> inverse(const FiniteRing &r, Elem x);

// Indices of set members in ascending order.
std::vector<Elem> members_of(const ElementSet &s);

// Prime-power decomposition helpers shared by the constructors and the
// factorisation cross-checks. Returns (p, k) with q = p^k, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);
// Trial-division factorisation, primes ascending with multiplicities.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);

} // namespace ebring
