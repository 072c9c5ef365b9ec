#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ebring/ring.hpp"

namespace ebring::poly {

// Univariate polynomial over a finite field, coefficients lowest degree
// first. The zero polynomial is the empty vector; trailing zeros are trimmed
// by every operation here.
using Poly = std::vector<Elem>;

void trim(const FiniteRing &field, Poly &p);
int degree(const Poly &p); // -1 for the zero polynomial

Poly add(const FiniteRing &field, const Poly &a, const Poly &b);
Poly sub(const FiniteRing &field, const Poly &a, const Poly &b);
Poly mul(const FiniteRing &field, const Poly &a, const Poly &b);

// Division by a monic divisor: returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const FiniteRing &field, const Poly &a,
                             const Poly &monic);

bool is_monic(const FiniteRing &field, const Poly &p);

// The i-th monic polynomial of the given degree: the non-leading
// coefficients are the base-|field| digits of i, lowest degree first.
Poly monic_of_degree(const FiniteRing &field, int deg, std::size_t i);
std::size_t count_monic_of_degree(const FiniteRing &field, int deg);

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const FiniteRing &field, const Poly &f);

// Monic irreducible factors with multiplicities, in the order they are found
// (ascending degree, then ascending encoding). f must be monic, deg >= 1.
std::vector<std::pair<Poly, unsigned>> factor(const FiniteRing &field,
                                              const Poly &f);

// Sparse rendering in descending degree, e.g. "x^3+2x+1". Coefficients whose
// names are not plain integers are parenthesised.
std::string to_string(const FiniteRing &field, const Poly &p,
                      const std::string &var = "x");

} // namespace ebring::poly
