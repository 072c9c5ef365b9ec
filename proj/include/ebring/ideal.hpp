#pragma once

#include <span>
#include <string>
#include <vector>

#include "ebring/ring.hpp"

namespace ebring {

// An ideal of a finite ring, stored as a membership set. The generator list
// is informational: a small generating set found while building the ideal.
class Ideal {
public:
  Ideal(FiniteRing ring, ElementSet members, std::vector<Elem> generators);

  const FiniteRing &ring() const { return ring_; }
  const ElementSet &members() const { return members_; }
  const std::vector<Elem> &generators() const { return generators_; }

  std::size_t size() const { return members_.count(); }
  bool contains(Elem a) const { return members_[a]; }
  bool is_proper() const { return !members_[ring_.one()]; }
  bool is_zero() const { return size() == 1; }
  bool is_subset_of(const Ideal &other) const {
    return members_.is_subset_of(other.members_);
  }

  // "(g1,g2)" rendering of the generator list.
  std::string describe() const;

  friend bool operator==(const Ideal &a, const Ideal &b) {
    return a.members_ == b.members_;
  }

private:
  FiniteRing ring_;
  ElementSet members_;
  std::vector<Elem> generators_;
};

Ideal zero_ideal(const FiniteRing &r);
Ideal unit_ideal(const FiniteRing &r);

// Smallest ideal containing gens; the zero ideal when gens is empty.
Ideal ideal_generated_by(const FiniteRing &r, std::span<const Elem> gens);

// Wraps a membership set that is already known to be an ideal, attaching a
// small generating set.
Ideal ideal_from_members(const FiniteRing &r, ElementSet members);

// Exhaustive check that a set contains 0 and is closed under + and under
// multiplication by ring elements.
bool is_ideal(const FiniteRing &r, const ElementSet &members);

Ideal ideal_sum(const Ideal &a, const Ideal &b);
Ideal ideal_product(const Ideal &a, const Ideal &b);
Ideal ideal_intersection(const Ideal &a, const Ideal &b);
Ideal ideal_power(const Ideal &n, unsigned i);

// Least k >= 0 with N^k = N^{k+1}, where N^0 = R.
unsigned ideal_index(const Ideal &n);

bool coprime(const Ideal &a, const Ideal &b);

// The set of nilpotent elements.
Ideal nilradical(const FiniteRing &r);

struct Quotient {
  FiniteRing ring;
  // Coset index of every element of the parent ring (the canonical map).
  std::vector<Elem> map;
  // Least parent element of each coset.
  std::vector<Elem> representatives;
};

// R/I for a proper ideal I. Cosets are numbered by their least element.
Quotient quotient_ring(const Ideal &i);

// Maximal ideals, each certified by R/M being a field. Sorted by decreasing
// size, then by member list.
std::vector<Ideal> maximal_ideals(const FiniteRing &r);

struct CrtConstraint {
  Ideal modulus;
  Elem residue;
};

// Least element x with x - a_i in Q_i for every constraint. The Q_i must be
// pairwise coprime (PreconditionError otherwise).
Elem crt_solve(const FiniteRing &r, std::span<const CrtConstraint> constraints);

} // namespace ebring
