#include "ebring/erdos_burgess.hpp"

#include <algorithm>
#include <numeric>

#include "ebring/error.hpp"

namespace ebring {

namespace {

std::vector<Elem> units_in(std::span<const Elem> terms,
                           const ElementSet &unit_set, bool want_units) {
  std::vector<Elem> out;
  for (Elem a : terms)
    if (unit_set[a] == want_units)
      out.push_back(a);
  return out;
}

// Chooses y_1..y_{k-1} in M (nondecreasing index) with the product of the
// first j in M^j \ M^{j+1} for every j. A prefix that falls into M^{j+1}
// forces the full product into M^k, so pruning on prefixes is exact.
bool choose_depth_elements(const FiniteRing &r, const std::vector<Ideal> &powers,
                           const std::vector<Elem> &candidates, std::size_t start,
                           Elem prefix, std::vector<Elem> &chosen, unsigned target) {
  if (chosen.size() == target)
    return true;
  const std::size_t j = chosen.size() + 1;
  for (std::size_t c = start; c < candidates.size(); ++c) {
    const Elem p = r.mul(prefix, candidates[c]);
    if (powers[j + 1].contains(p))
      continue;
    chosen.push_back(candidates[c]);
    if (choose_depth_elements(r, powers, candidates, c, p, chosen, target))
      return true;
    chosen.pop_back();
  }
  return false;
}

Elem encode_residue(std::size_t q, const poly::Poly &p) {
  Elem out = 0, place = 1;
  for (Elem c : p) {
    out += c * place;
    place *= static_cast<Elem>(q);
  }
  return out;
}

void check_coincidence(CoincidenceRecord &rec, const FiniteRing &r,
                       const std::vector<MaximalIdeal> &ideals) {
  rec.ring_label = r.label();
  rec.maximal_ideal_count = ideals.size();
  rec.index_excess = 0;
  for (const auto &m : ideals)
    rec.index_excess += m.index - 1;
  rec.small_omega = static_cast<unsigned>(rec.factors.size());
  rec.big_omega = 0;
  for (const auto &f : rec.factors) {
    rec.big_omega += f.multiplicity;
    if (!f.maximal || f.index != f.multiplicity)
      throw InternalConsistencyError(
          r.label() + ": image of prime factor " + f.factor + " has index " +
          std::to_string(f.index) + " (expected " + std::to_string(f.multiplicity) +
          ")" + (f.maximal ? "" : " and is not maximal"));
  }
  if (ideals.size() != rec.factors.size())
    throw InternalConsistencyError(r.label() + ": " + std::to_string(ideals.size()) +
                                   " maximal ideals but " +
                                   std::to_string(rec.factors.size()) +
                                   " distinct prime factors");
  if (rec.index_excess != rec.big_omega - rec.small_omega)
    throw InternalConsistencyError(r.label() + ": index excess " +
                                   std::to_string(rec.index_excess) +
                                   " differs from Omega - omega = " +
                                   std::to_string(rec.big_omega - rec.small_omega));
}

FactorCheck check_factor(const FiniteRing &r, const std::vector<MaximalIdeal> &ideals,
                         std::string factor, unsigned multiplicity, Elem image) {
  const Elem gens[] = {image};
  Ideal im = ideal_generated_by(r, gens);
  const bool maximal = std::any_of(ideals.begin(), ideals.end(),
                                   [&](const MaximalIdeal &m) { return m.ideal == im; });
  return {std::move(factor), multiplicity, r.name(image), ideal_index(im), maximal};
}

} // namespace

std::vector<MaximalIdeal> maximal_ideals_with_index(const FiniteRing &r) {
  std::vector<MaximalIdeal> out;
  for (auto &m : maximal_ideals(r)) {
    const unsigned k = ideal_index(m);
    out.push_back({std::move(m), k});
  }
  return out;
}

std::size_t lower_bound(std::size_t davenport_of_units,
                        const std::vector<MaximalIdeal> &ideals) {
  std::size_t b = davenport_of_units;
  for (const auto &m : ideals)
    b += m.index - 1;
  return b;
}

std::size_t ghw_upper_bound(const FiniteRing &r) {
  return r.order() - idempotents(r).count() + 1;
}

ConstructionTrace construct_extremal(const FiniteRing &r, const DavenportOptions &dav) {
  ConstructionTrace trace;
  trace.ideals = maximal_ideals_with_index(r);
  const std::size_t count = trace.ideals.size();

  // M_i^j for j = 0..k_i+1.
  std::vector<std::vector<Ideal>> powers(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto &m = trace.ideals[i];
    powers[i].push_back(unit_ideal(r));
    for (unsigned j = 1; j <= m.index + 1; ++j)
      powers[i].push_back(ideal_product(powers[i].back(), m.ideal));
  }

  trace.chosen.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned k = trace.ideals[i].index;
    if (k < 2)
      continue;
    const auto candidates = members_of(trace.ideals[i].ideal.members());
    if (!choose_depth_elements(r, powers[i], candidates, 0, r.one(), trace.chosen[i],
                               k - 1))
      throw InternalConsistencyError("no depth sequence of length " +
                                     std::to_string(k - 1) + " in " +
                                     trace.ideals[i].ideal.describe());
    Elem prefix = r.one();
    for (unsigned j = 1; j < k; ++j) {
      prefix = r.mul(prefix, trace.chosen[i][j - 1]);
      trace.certificates.push_back({i, j, prefix, powers[i][j].contains(prefix),
                                    !powers[i][j + 1].contains(prefix)});
    }
  }

  trace.lifted.resize(count);
  std::vector<Elem> terms;
  for (std::size_t i = 0; i < count; ++i)
    for (Elem y : trace.chosen[i]) {
      std::vector<CrtConstraint> cs;
      for (std::size_t t = 0; t < count; ++t)
        cs.push_back({powers[t][trace.ideals[t].index], t == i ? y : r.one()});
      const Elem lift = crt_solve(r, cs);
      trace.lifted[i].push_back(lift);
      terms.push_back(lift);
    }

  const auto group = unit_group_view(r);
  const auto d = davenport(group, dav);
  trace.davenport_of_units = d.value;
  std::vector<Elem> v;
  for (Elem g : d.witness.terms())
    v.push_back(group.to_ring(g));
  trace.davenport_witness = Sequence(v);
  terms.insert(terms.end(), v.begin(), v.end());
  trace.sequence = Sequence(std::move(terms));

  trace.idempotent_product_free = is_idempotent_product_free(r, trace.sequence);
  const bool certified = std::all_of(trace.certificates.begin(), trace.certificates.end(),
                                     [](const DepthCertificate &c) { return c.holds(); });
  if (!trace.idempotent_product_free || !certified ||
      trace.sequence.size() + 1 != lower_bound(d.value, trace.ideals))
    throw InternalConsistencyError("extremal construction for " + r.label() +
                                   " failed verification");
  return trace;
}

ExactResult exact_eb(const FiniteRing &r, const ExactOptions &opts) {
  const std::size_t cap = std::min(opts.cap, search::kMaxCarrier);
  if (r.order() > cap)
    throw ResourceExhausted("ring of order " + std::to_string(r.order()) +
                                " exceeds the exact search cap " + std::to_string(cap),
                            std::nullopt);
  const auto table = search::MulTable::of(r);
  std::uint64_t forbidden = 0;
  for (Elem e : members_of(idempotents(r)))
    forbidden |= std::uint64_t{1} << e;
  try {
    const auto found = search::longest_free_sequence(table, forbidden, opts.limits);
    return {found.max_length + 1, found.witness, found.nodes};
  } catch (const ResourceExhausted &e) {
    // The longest free sequence seen bounds the constant from below.
    std::optional<std::size_t> bound;
    if (e.best_lower_bound())
      bound = *e.best_lower_bound() + 1;
    throw ResourceExhausted(std::string(e.what()) + " (I >= " +
                                std::to_string(bound.value_or(1)) + ", not exact)",
                            bound);
  }
}

LocalCertificate local_case_certificate(const FiniteRing &r, const Sequence &l,
                                        const DavenportOptions &dav) {
  const auto ideals = maximal_ideals_with_index(r);
  if (ideals.size() != 1)
    throw PreconditionError(r.label() + " is not local (" + std::to_string(ideals.size()) +
                            " maximal ideals)");
  const auto group = unit_group_view(r);
  const std::size_t d = davenport(group, dav).value;
  const unsigned k = ideals.front().index;
  if (l.size() < d + k - 1)
    throw PreconditionError("sequence has length " + std::to_string(l.size()) +
                            ", below the bound " + std::to_string(d + k - 1));

  const ElementSet unit_set = units(r);
  LocalCertificate cert;
  cert.unit_terms = Sequence(units_in(l.terms(), unit_set, true));
  cert.ideal_terms = Sequence(units_in(l.terms(), unit_set, false));

  if (cert.unit_terms.size() >= d) {
    std::vector<Elem> local;
    for (Elem a : cert.unit_terms.terms())
      local.push_back(*group.from_ring(a));
    ElementSet target(group.order());
    target.set(group.one());
    const auto pos = find_subsequence_with_product(group, local, target);
    if (!pos)
      throw InternalConsistencyError("no unit subsequence with product 1 among " +
                                     std::to_string(local.size()) + " units");
    std::vector<Elem> w;
    for (auto p : *pos)
      w.push_back(cert.unit_terms[p]);
    cert.branch = LocalCertificate::Branch::UnitProductOne;
    cert.subsequence = Sequence(std::move(w));
  } else {
    // |L_2| >= k, and a product of k members of M lies in M^k = 0.
    cert.branch = LocalCertificate::Branch::IdealProductZero;
    cert.subsequence = cert.ideal_terms;
  }
  cert.product = pi(r, cert.subsequence);
  if (r.mul(cert.product, cert.product) != cert.product)
    throw InternalConsistencyError("local certificate produced a non-idempotent product");
  return cert;
}

SquarefreeCertificate squarefree_case_certificate(const FiniteRing &r, const Sequence &l,
                                                  const DavenportOptions &dav) {
  const auto ideals = maximal_ideals_with_index(r);
  for (const auto &m : ideals)
    if (m.index != 1)
      throw PreconditionError(r.label() + ": maximal ideal " + m.ideal.describe() +
                              " has index " + std::to_string(m.index));
  const auto group = unit_group_view(r);
  const std::size_t d = davenport(group, dav).value;
  if (l.size() < d)
    throw PreconditionError("sequence has length " + std::to_string(l.size()) +
                            ", below D(U(R)) = " + std::to_string(d));

  SquarefreeCertificate cert;
  cert.terms.assign(l.terms().begin(), l.terms().end());
  std::vector<Elem> local;
  for (Elem a : cert.terms) {
    std::vector<CrtConstraint> cs;
    for (const auto &m : ideals)
      cs.push_back({m.ideal, m.ideal.contains(a) ? r.one() : a});
    const Elem lift = crt_solve(r, cs);
    const auto g = group.from_ring(lift);
    if (!g)
      throw InternalConsistencyError("lift " + r.name(lift) + " of " + r.name(a) +
                                     " is not a unit");
    cert.lifts.push_back(lift);
    local.push_back(*g);
  }
  ElementSet target(group.order());
  target.set(group.one());
  const auto pos = find_subsequence_with_product(group, local, target);
  if (!pos)
    throw InternalConsistencyError("no zero-sum subsequence among " +
                                   std::to_string(local.size()) + " lifted units");
  std::vector<Elem> w;
  for (auto p : *pos)
    w.push_back(cert.terms[p]);
  cert.subsequence = Sequence(std::move(w));
  cert.product = pi(r, cert.subsequence);
  if (r.mul(cert.product, cert.product) != cert.product)
    throw InternalConsistencyError("squarefree certificate produced a non-idempotent product");
  return cert;
}

std::string to_string(EqualityCase c) {
  switch (c) {
  case EqualityCase::Local:
    return "local";
  case EqualityCase::AllIndicesOne:
    return "all-indices-one";
  case EqualityCase::Both:
    return "both";
  case EqualityCase::Unknown:
    break;
  }
  return "unknown";
}

InvariantReport report(const FiniteRing &r, const ReportOptions &opts) {
  InvariantReport rep;
  rep.ring_label = r.label();
  rep.ring_order = r.order();

  const auto group = unit_group_view(r);
  rep.units_order = group.order();
  rep.unit_group = group.invariant_factors();

  ConstructionTrace trace = construct_extremal(r, opts.exact_options.davenport);
  rep.davenport_of_units = trace.davenport_of_units;
  rep.maximal_ideals = trace.ideals;
  rep.lower_bound = lower_bound(rep.davenport_of_units, rep.maximal_ideals);
  rep.ghw_upper = ghw_upper_bound(r);

  const bool local = rep.maximal_ideals.size() == 1;
  const bool all_one = std::all_of(rep.maximal_ideals.begin(), rep.maximal_ideals.end(),
                                   [](const MaximalIdeal &m) { return m.index == 1; });
  rep.equality_case = local && all_one ? EqualityCase::Both
                      : local          ? EqualityCase::Local
                      : all_one        ? EqualityCase::AllIndicesOne
                                       : EqualityCase::Unknown;

  rep.witness_T = trace.sequence;
  if (opts.exact) {
    try {
      const auto exact = exact_eb(r, opts.exact_options);
      rep.exact_I = exact.value;
      rep.witness_T = exact.witness;
    } catch (const ResourceExhausted &e) {
      rep.search_failure = e.what();
      rep.search_lower_bound = e.best_lower_bound();
    }
  }
  if (!rep.exact_I && rep.equality_case != EqualityCase::Unknown) {
    rep.exact_I = rep.lower_bound;
    rep.exact_is_formula_derived = true;
  }
  return rep;
}

CoincidenceRecord dedekind_crosscheck_int(std::uint64_t n) {
  if (n < 2)
    throw PreconditionError("crosscheck needs n >= 2");
  const FiniteRing r = make_zmod(n);
  const auto ideals = maximal_ideals_with_index(r);
  CoincidenceRecord rec;
  for (const auto &[p, k] : factor_integer(n))
    rec.factors.push_back(
        check_factor(r, ideals, std::to_string(p), k, static_cast<Elem>(p % n)));
  check_coincidence(rec, r, ideals);
  return rec;
}

CoincidenceRecord dedekind_crosscheck_poly(std::uint64_t q, const poly::Poly &f) {
  const FiniteRing field = make_gf(q);
  const FiniteRing r = make_poly_quotient(field, f);
  const auto ideals = maximal_ideals_with_index(r);
  poly::Poly modulus = f;
  poly::trim(field, modulus);
  CoincidenceRecord rec;
  for (const auto &[g, k] : poly::factor(field, modulus)) {
    const Elem image = encode_residue(q, poly::divmod(field, g, modulus).second);
    rec.factors.push_back(check_factor(r, ideals, poly::to_string(field, g), k, image));
  }
  check_coincidence(rec, r, ideals);
  return rec;
}

} // namespace ebring
