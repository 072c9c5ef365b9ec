#include "ebring/ideal.hpp"

#include <algorithm>

#include "ebring/error.hpp"

namespace ebring {

namespace {

void require_same_ring(const Ideal &a, const Ideal &b) {
  if (&a.ring().backend() != &b.ring().backend())
    throw PreconditionError("ideals belong to different rings");
}

ElementSet principal_members(const FiniteRing &r, Elem g) {
  ElementSet out = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x)
    out.set(r.mul(g, x));
  return out;
}

ElementSet sumset(const FiniteRing &r, const ElementSet &a, const ElementSet &b) {
  ElementSet out = r.empty_set();
  const auto bm = members_of(b);
  for (auto x = a.find_first(); x != ElementSet::npos; x = a.find_next(x))
    for (Elem y : bm)
      out.set(r.add(static_cast<Elem>(x), y));
  return out;
}

// Grows an ideal by the principal ideals of the candidates, in order,
// recording the candidates that enlarged it.
void absorb(const FiniteRing &r, ElementSet &members, std::vector<Elem> &gens,
            Elem candidate) {
  if (members[candidate])
    return;
  members = sumset(r, members, principal_members(r, candidate));
  gens.push_back(candidate);
}

class QuotientBackend final : public detail::RingBackend {
public:
  QuotientBackend(FiniteRing parent, std::vector<Elem> map, std::vector<Elem> reps)
      : parent_(std::move(parent)), map_(std::move(map)), reps_(std::move(reps)) {}

  std::size_t order() const override { return reps_.size(); }
  Elem zero() const override { return map_[parent_.zero()]; }
  Elem one() const override { return map_[parent_.one()]; }
  Elem add(Elem a, Elem b) const override {
    return map_[parent_.add(reps_[a], reps_[b])];
  }
  Elem mul(Elem a, Elem b) const override {
    return map_[parent_.mul(reps_[a], reps_[b])];
  }
  Elem neg(Elem a) const override { return map_[parent_.neg(reps_[a])]; }
  std::string name(Elem a) const override { return parent_.name(reps_[a]); }

private:
  FiniteRing parent_;
  std::vector<Elem> map_;
  std::vector<Elem> reps_;
};

} // namespace

Ideal::Ideal(FiniteRing ring, ElementSet members, std::vector<Elem> generators)
    : ring_(std::move(ring)), members_(std::move(members)),
      generators_(std::move(generators)) {}

std::string Ideal::describe() const {
  if (generators_.empty())
    return "(0)";
  return "(" + ring_.names(generators_) + ")";
}

Ideal zero_ideal(const FiniteRing &r) {
  ElementSet m = r.empty_set();
  m.set(r.zero());
  return Ideal(r, std::move(m), {});
}

Ideal unit_ideal(const FiniteRing &r) { return Ideal(r, r.full_set(), {r.one()}); }

Ideal ideal_generated_by(const FiniteRing &r, std::span<const Elem> gens) {
  ElementSet members = r.empty_set();
  members.set(r.zero());
  std::vector<Elem> used;
  for (Elem g : gens)
    absorb(r, members, used, g);
  return Ideal(r, std::move(members), std::move(used));
}

Ideal ideal_from_members(const FiniteRing &r, ElementSet members) {
  for (auto x = members.find_first(); x != ElementSet::npos; x = members.find_next(x))
    if (principal_members(r, static_cast<Elem>(x)) == members)
      return Ideal(r, std::move(members), {static_cast<Elem>(x)});
  ElementSet built = r.empty_set();
  built.set(r.zero());
  std::vector<Elem> gens;
  for (auto x = members.find_first(); x != ElementSet::npos; x = members.find_next(x))
    absorb(r, built, gens, static_cast<Elem>(x));
  if (built != members)
    throw InternalConsistencyError("member set is not an ideal");
  return Ideal(r, std::move(members), std::move(gens));
}

bool is_ideal(const FiniteRing &r, const ElementSet &members) {
  if (members.size() != r.order() || !members[r.zero()])
    return false;
  const auto ms = members_of(members);
  for (Elem a : ms) {
    for (Elem b : ms)
      if (!members[r.add(a, b)])
        return false;
    for (Elem x = 0; x < r.order(); ++x)
      if (!members[r.mul(a, x)])
        return false;
  }
  return true;
}

Ideal ideal_sum(const Ideal &a, const Ideal &b) {
  require_same_ring(a, b);
  const FiniteRing &r = a.ring();
  std::vector<Elem> gens = a.generators();
  for (Elem g : b.generators())
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  return Ideal(r, sumset(r, a.members(), b.members()), std::move(gens));
}

Ideal ideal_product(const Ideal &a, const Ideal &b) {
  require_same_ring(a, b);
  const FiniteRing &r = a.ring();
  // Products a*b are closed under absorption, so the additive closure is the
  // sum of the principal ideals they generate.
  ElementSet members = r.empty_set();
  members.set(r.zero());
  std::vector<Elem> gens;
  const auto bm = members_of(b.members());
  for (Elem x : members_of(a.members()))
    for (Elem y : bm)
      absorb(r, members, gens, r.mul(x, y));
  return Ideal(r, std::move(members), std::move(gens));
}

Ideal ideal_intersection(const Ideal &a, const Ideal &b) {
  require_same_ring(a, b);
  return ideal_from_members(a.ring(), a.members() & b.members());
}

Ideal ideal_power(const Ideal &n, unsigned i) {
  Ideal acc = unit_ideal(n.ring());
  for (unsigned k = 0; k < i; ++k) {
    Ideal next = ideal_product(acc, n);
    if (next == acc)
      break; // stationary from here on
    acc = std::move(next);
  }
  return acc;
}

unsigned ideal_index(const Ideal &n) {
  Ideal current = unit_ideal(n.ring());
  for (unsigned k = 0;; ++k) {
    Ideal next = ideal_product(current, n);
    if (next == current)
      return k;
    current = std::move(next);
  }
}

bool coprime(const Ideal &a, const Ideal &b) {
  require_same_ring(a, b);
  const FiniteRing &r = a.ring();
  for (auto x = a.members().find_first(); x != ElementSet::npos;
       x = a.members().find_next(x))
    if (b.contains(r.sub(r.one(), static_cast<Elem>(x))))
      return true;
  return false;
}

Ideal nilradical(const FiniteRing &r) {
  ElementSet nil = r.empty_set();
  ElementSet seen = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) {
    // Walk x, x^2, x^3, ... until a repeat; x is nilpotent iff 0 shows up.
    seen.reset();
    Elem p = x;
    while (!seen[p]) {
      if (p == r.zero()) {
        nil.set(x);
        break;
      }
      seen.set(p);
      p = r.mul(p, x);
    }
  }
  return ideal_from_members(r, std::move(nil));
}

Quotient quotient_ring(const Ideal &i) {
  if (!i.is_proper())
    throw PreconditionError("quotient by the unit ideal is the zero ring");
  const FiniteRing &r = i.ring();
  constexpr Elem unassigned = ~Elem{0};
  std::vector<Elem> map(r.order(), unassigned);
  std::vector<Elem> reps;
  const auto im = members_of(i.members());
  for (Elem x = 0; x < r.order(); ++x) {
    if (map[x] != unassigned)
      continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : im)
      map[r.add(x, y)] = c;
  }
  std::string label = r.label() + "/" + i.describe();
  FiniteRing q(std::make_shared<QuotientBackend>(r, map, reps), std::move(label));
  return {std::move(q), std::move(map), std::move(reps)};
}

std::vector<Ideal> maximal_ideals(const FiniteRing &r) {
  const Ideal nil = nilradical(r);
  const Quotient q = quotient_ring(nil);
  const auto idem = members_of(idempotents(q.ring));

  std::vector<Ideal> out;
  for (Elem e : idem) {
    if (e == q.ring.zero())
      continue;
    bool primitive = true;
    for (Elem f : idem)
      if (f != e && f != q.ring.zero() && q.ring.mul(e, f) == f) {
        primitive = false;
        break;
      }
    if (!primitive)
      continue;
    ElementSet members = r.empty_set();
    for (Elem x = 0; x < r.order(); ++x)
      if (q.ring.mul(q.map[x], e) == q.ring.zero())
        members.set(x);
    Ideal m = ideal_from_members(r, std::move(members));
    if (!m.is_proper() || !is_field(quotient_ring(m).ring))
      throw InternalConsistencyError("candidate maximal ideal " + m.describe() +
                                     " of " + r.label() + " fails the field test");
    out.push_back(std::move(m));
  }
  if (out.empty())
    throw InternalConsistencyError("no maximal ideal found in " + r.label());
  std::sort(out.begin(), out.end(), [](const Ideal &a, const Ideal &b) {
    if (a.size() != b.size())
      return a.size() > b.size();
    return members_of(a.members()) < members_of(b.members());
  });
  return out;
}

Elem crt_solve(const FiniteRing &r, std::span<const CrtConstraint> constraints) {
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t j = i + 1; j < constraints.size(); ++j)
      if (!coprime(constraints[i].modulus, constraints[j].modulus))
        throw PreconditionError("CRT moduli " + constraints[i].modulus.describe() +
                                " and " + constraints[j].modulus.describe() +
                                " are not coprime");
  for (Elem x = 0; x < r.order(); ++x) {
    bool ok = true;
    for (const auto &c : constraints)
      if (!c.modulus.contains(r.sub(x, c.residue))) {
        ok = false;
        break;
      }
    if (ok)
      return x;
  }
  throw InternalConsistencyError("CRT system over coprime ideals has no solution");
}

} // namespace ebring
