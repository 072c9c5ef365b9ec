#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebring/davenport.hpp"
#include "ebring/ideal.hpp"
#include "ebring/poly.hpp"
#include "ebring/ring.hpp"
#include "ebring/search.hpp"
#include "ebring/sequence.hpp"

namespace ebring {

struct MaximalIdeal {
  Ideal ideal;
  unsigned index;
};

// Maximal ideals (as ordered by maximal_ideals) with their indices.
std::vector<MaximalIdeal> maximal_ideals_with_index(const FiniteRing &r);

// D(U(R)) + sum over maximal ideals of (Ind(M) - 1).
std::size_t lower_bound(std::size_t davenport_of_units,
                        const std::vector<MaximalIdeal> &ideals);

// |R \ E(R)| + 1.
std::size_t ghw_upper_bound(const FiniteRing &r);

struct DepthCertificate {
  std::size_t ideal;  // position in ConstructionTrace::ideals
  unsigned depth;     // j: the product of the first j chosen elements
  Elem product;
  bool in_power;      // product in M^j
  bool outside_next;  // product not in M^{j+1}

  bool holds() const { return in_power && outside_next; }
};

// Every step of the extremal construction, for auditing.
struct ConstructionTrace {
  std::vector<MaximalIdeal> ideals;
  // chosen[i] = y_{i,1..k_i-1} in M_i; lifted[i] the matching CRT lifts.
  std::vector<std::vector<Elem>> chosen;
  std::vector<std::vector<Elem>> lifted;
  std::size_t davenport_of_units = 1;
  // Zero-sum free sequence over U(R), as ring elements.
  Sequence davenport_witness;
  Sequence sequence;
  std::vector<DepthCertificate> certificates;
  bool idempotent_product_free = false;
};

// Builds the idempotent-product free sequence of length
// D(U(R)) - 1 + sum (Ind(M_i) - 1): a maximal zero-sum free unit sequence
// followed, for each maximal ideal, by Ind(M_i) - 1 elements of M_i whose
// prefix products fall exactly one power deeper each step, each lifted by
// CRT to be 1 modulo the other M_t^{k_t}. Throws InternalConsistencyError if
// the element search or the final verification fails.
ConstructionTrace construct_extremal(const FiniteRing &r,
                                     const DavenportOptions &dav = {});

struct ExactOptions {
  std::size_t cap = 24;
  search::Limits limits{};
  DavenportOptions davenport{};
};

struct ExactResult {
  std::size_t value = 1;
  // A longest idempotent-product free sequence (lexicographically least).
  Sequence witness;
  std::uint64_t nodes = 0;
};

// Exact Erdos-Burgess constant of the multiplicative semigroup: one more than
// the longest idempotent-product free sequence. ResourceExhausted when the
// ring exceeds the cap (or 64) or the budget runs out; its bound is then a
// lower bound on the constant, never an exact value.
ExactResult exact_eb(const FiniteRing &r, const ExactOptions &opts = {});

struct LocalCertificate {
  enum class Branch { UnitProductOne, IdealProductZero };
  Sequence unit_terms;   // L_1
  Sequence ideal_terms;  // L_2
  Branch branch;
  Sequence subsequence;  // nonempty, with idempotent product
  Elem product;
};

// For a local ring and a sequence L with |L| >= D(U(R)) + Ind(M) - 1, splits
// L into units and members of M and exhibits a subsequence with product 1
// (enough units) or 0 (enough members of M).
LocalCertificate local_case_certificate(const FiniteRing &r, const Sequence &l,
                                        const DavenportOptions &dav = {});

struct SquarefreeCertificate {
  std::vector<Elem> terms;  // L in canonical order
  std::vector<Elem> lifts;  // a' for each term, same order
  Sequence subsequence;     // W, taken from L
  Elem product;             // pi(W), an idempotent
};

// For a ring whose maximal ideals all have index 1 and |L| >= D(U(R)):
// replaces each term a by the unit a' that is 1 mod every M_i containing a
// and a mod the others, finds a subsequence whose lifts multiply to 1, and
// checks that the original terms multiply to an idempotent.
SquarefreeCertificate squarefree_case_certificate(const FiniteRing &r,
                                                  const Sequence &l,
                                                  const DavenportOptions &dav = {});

enum class EqualityCase { Local, AllIndicesOne, Both, Unknown };
std::string to_string(EqualityCase c);

struct ReportOptions {
  bool exact = false;
  ExactOptions exact_options{};
};

struct InvariantReport {
  std::string ring_label;
  std::size_t ring_order = 0;
  std::size_t units_order = 0;
  std::vector<std::size_t> unit_group;
  std::size_t davenport_of_units = 0;
  std::vector<MaximalIdeal> maximal_ideals;
  std::size_t lower_bound = 0;
  std::optional<std::size_t> exact_I;
  bool exact_is_formula_derived = false;
  std::size_t ghw_upper = 0;
  EqualityCase equality_case = EqualityCase::Unknown;
  std::optional<Sequence> witness_T;
  // Set when an exact search was requested but could not finish.
  std::optional<std::string> search_failure;
  std::optional<std::size_t> search_lower_bound;
};

InvariantReport report(const FiniteRing &r, const ReportOptions &opts = {});

struct FactorCheck {
  std::string factor;     // p or the irreducible polynomial
  unsigned multiplicity;  // k_i
  std::string image;      // generator of the image ideal in the quotient
  unsigned index;         // Ind(theta(P_i))
  bool maximal;           // image is one of the quotient's maximal ideals
};

struct CoincidenceRecord {
  std::string ring_label;
  std::vector<FactorCheck> factors;
  unsigned big_omega = 0;    // with multiplicity
  unsigned small_omega = 0;  // distinct
  unsigned index_excess = 0; // sum over maximal ideals of (Ind - 1)
  std::size_t maximal_ideal_count = 0;
};

// Z/n: factors n by trial division and checks, for each p^k || n, that (p)
// is maximal in Z/n with index k, and that the index excess equals
// Omega(n) - omega(n). Throws InternalConsistencyError on any mismatch.
CoincidenceRecord dedekind_crosscheck_int(std::uint64_t n);

// GF(q)[x]/(f), same checks against the factorisation of f into monic
// irreducibles. f is over GF(q)'s element indices, lowest degree first.
CoincidenceRecord dedekind_crosscheck_poly(std::uint64_t q, const poly::Poly &f);

} // namespace ebring
