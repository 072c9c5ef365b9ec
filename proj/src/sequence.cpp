#include "ebring/sequence.hpp"

namespace ebring {

Sequence concat(const Sequence &a, const Sequence &b) {
  std::vector<Elem> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Sequence(std::move(terms));
}

bool is_idempotent_product_free(const FiniteRing &r, const Sequence &t) {
  return !product_set(r, t).intersects(idempotents(r));
}

std::string render(const FiniteRing &r, const Sequence &t) { return r.names(t.terms()); }

} // namespace ebring
