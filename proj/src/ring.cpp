#include "ebring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ebring/error.hpp"
#include "ebring/poly.hpp"

namespace ebring {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

class ZModBackend final : public detail::RingBackend {
public:
  explicit ZModBackend(std::uint64_t n) : n_(n) {}
  std::size_t order() const override { return n_; }
  Elem zero() const override { return 0; }
  Elem one() const override { return 1; }
  Elem add(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} + b) % n_);
  }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} * b) % n_);
  }
  Elem neg(Elem a) const override {
    return a == 0 ? 0 : static_cast<Elem>(n_ - a);
  }
  std::string name(Elem a) const override { return std::to_string(a); }

private:
  std::uint64_t n_;
};

class PolyQuotientBackend final : public detail::RingBackend {
public:
  PolyQuotientBackend(FiniteRing base, poly::Poly modulus, std::string var)
      : base_(std::move(base)), f_(std::move(modulus)), var_(std::move(var)),
        q_(base_.order()), d_(static_cast<std::size_t>(poly::degree(f_))) {
    n_ = 1;
    for (std::size_t i = 0; i < d_; ++i)
      n_ *= q_;
  }

  std::size_t order() const override { return n_; }
  Elem zero() const override { return 0; }
  Elem one() const override { return base_.one(); }

  Elem add(Elem a, Elem b) const override {
    Elem out = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < d_; ++i, place *= q_) {
      out += static_cast<Elem>(base_.add(a % q_, b % q_) * place);
      a /= q_;
      b /= q_;
    }
    return out;
  }

  Elem mul(Elem a, Elem b) const override {
    auto prod = poly::mul(base_, decode(a), decode(b));
    return encode(poly::divmod(base_, prod, f_).second);
  }

  Elem neg(Elem a) const override {
    Elem out = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < d_; ++i, place *= q_) {
      out += static_cast<Elem>(base_.neg(a % q_) * place);
      a /= q_;
    }
    return out;
  }

  std::string name(Elem a) const override {
    return poly::to_string(base_, decode(a), var_);
  }

private:
  poly::Poly decode(Elem a) const {
    poly::Poly p(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      p[i] = static_cast<Elem>(a % q_);
      a /= q_;
    }
    poly::trim(base_, p);
    return p;
  }

  Elem encode(const poly::Poly &p) const {
    Elem out = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < p.size(); ++i, place *= q_)
      out += static_cast<Elem>(p[i] * place);
    return out;
  }

  FiniteRing base_;
  poly::Poly f_;
  std::string var_;
  std::size_t q_;
  std::size_t d_;
  std::size_t n_;
};

class ProductBackend final : public detail::RingBackend {
public:
  explicit ProductBackend(std::vector<FiniteRing> factors)
      : factors_(std::move(factors)) {
    n_ = 1;
    for (const auto &f : factors_)
      n_ *= f.order();
  }

  std::size_t order() const override { return n_; }
  Elem zero() const override {
    return compose([](const FiniteRing &f, Elem) { return f.zero(); }, 0);
  }
  Elem one() const override {
    return compose([](const FiniteRing &f, Elem) { return f.one(); }, 0);
  }
  Elem neg(Elem a) const override {
    return compose([](const FiniteRing &f, Elem x) { return f.neg(x); }, a);
  }
  Elem add(Elem a, Elem b) const override {
    return binary(a, b, [](const FiniteRing &f, Elem x, Elem y) { return f.add(x, y); });
  }
  Elem mul(Elem a, Elem b) const override {
    return binary(a, b, [](const FiniteRing &f, Elem x, Elem y) { return f.mul(x, y); });
  }

  std::string name(Elem a) const override {
    auto parts = split(a);
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i)
        out += ',';
      out += factors_[i].name(parts[i]);
    }
    return out + ")";
  }

private:
  std::vector<Elem> split(Elem a) const {
    std::vector<Elem> parts(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      parts[i] = static_cast<Elem>(a % factors_[i].order());
      a /= static_cast<Elem>(factors_[i].order());
    }
    return parts;
  }

  template <class F> Elem compose(F f, Elem a) const {
    auto parts = split(a);
    Elem out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out = static_cast<Elem>(out * factors_[i].order() + f(factors_[i], parts[i]));
    return out;
  }

  template <class F> Elem binary(Elem a, Elem b, F f) const {
    auto pa = split(a), pb = split(b);
    Elem out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out = static_cast<Elem>(out * factors_[i].order() + f(factors_[i], pa[i], pb[i]));
    return out;
  }

  std::vector<FiniteRing> factors_;
  std::size_t n_;
};

class TableBackend final : public detail::RingBackend {
public:
  TableBackend(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
               std::vector<std::string> names)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), names_(std::move(names)) {
    zero_ = find_identity(add_);
    one_ = find_identity(mul_);
    neg_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
      bool found = false;
      for (Elem b = 0; b < n_ && !found; ++b)
        if (add_[a * n_ + b] == zero_) {
          neg_[a] = b;
          found = true;
        }
      if (!found)
        throw AxiomViolation("additive inverse", triple(a, a, zero_));
    }
  }

  std::size_t order() const override { return n_; }
  Elem zero() const override { return zero_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  std::string name(Elem a) const override {
    return names_.empty() ? std::to_string(a) : names_[a];
  }

private:
  Elem find_identity(const std::vector<Elem> &t) const {
    for (Elem e = 0; e < n_; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n_ && ok; ++a)
        ok = t[e * n_ + a] == a && t[a * n_ + e] == a;
      if (ok)
        return e;
    }
    throw AxiomViolation(&t == &add_ ? "additive identity" : "multiplicative identity",
                         "none found");
  }

  std::size_t n_;
  std::vector<Elem> add_, mul_;
  std::vector<std::string> names_;
  Elem zero_ = 0, one_ = 0;
  std::vector<Elem> neg_;
};

} // namespace

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingBackend> backend,
                       std::string label)
    : backend_(std::move(backend)), label_(std::move(label)),
      order_(backend_->order()), zero_(backend_->zero()), one_(backend_->one()) {
  if (order_ < 2)
    throw InvalidSpec("ring must have at least two elements");
  if (order_ > kMaxOrder)
    throw InvalidSpec("ring order " + std::to_string(order_) +
                      " exceeds the supported maximum " + std::to_string(kMaxOrder));
  if (zero_ == one_)
    throw AxiomViolation("unitary nonzero ring (1 != 0)", triple(zero_, one_, 0));

  auto negs = std::make_shared<std::vector<Elem>>(order_);
  for (Elem a = 0; a < order_; ++a)
    (*negs)[a] = backend_->neg(a);
  neg_table_ = negs;
  neg_ = *neg_table_;

  if (order_ <= kTableCap) {
    const std::size_t sq = order_ * order_;
    auto tables = std::make_shared<std::vector<std::uint16_t>>(2 * sq);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = a; b < order_; ++b) {
        auto s = static_cast<std::uint16_t>(backend_->add(a, b));
        auto p = static_cast<std::uint16_t>(backend_->mul(a, b));
        (*tables)[a * order_ + b] = s;
        (*tables)[sq + a * order_ + b] = p;
        if (a != b) {
          // Tables are filled from the upper triangle; table rings are
          // checked for commutativity separately before this point.
          (*tables)[b * order_ + a] = s;
          (*tables)[sq + b * order_ + a] = p;
        }
      }
    tables_ = tables;
    add_ = std::span<const std::uint16_t>(tables_->data(), sq);
    mul_ = std::span<const std::uint16_t>(tables_->data() + sq, sq);
  }
}

std::string FiniteRing::names(std::span<const Elem> elems) const {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i)
      out += ',';
    out += name(elems[i]);
  }
  return out;
}

std::optional<Elem> FiniteRing::find(const std::string &n) const {
  for (Elem a = 0; a < order_; ++a)
    if (name(a) == n)
      return a;
  return std::nullopt;
}

FiniteRing FiniteRing::relabeled(std::string label) const {
  FiniteRing copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k)
      out.emplace_back(d, k);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2)
    return std::nullopt;
  auto f = factor_integer(q);
  if (f.size() != 1)
    return std::nullopt;
  return f.front();
}

FiniteRing make_zmod(std::uint64_t n) {
  if (n < 2)
    throw InvalidSpec("Z/n requires n >= 2, got " + std::to_string(n));
  if (n > kMaxOrder)
    throw InvalidSpec("Z/" + std::to_string(n) + " exceeds the supported maximum order");
  return FiniteRing(std::make_shared<ZModBackend>(n), "Z/" + std::to_string(n));
}

FiniteRing make_gf(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp)
    throw InvalidSpec("GF(q) requires a prime power, got " + std::to_string(q));
  if (q > kMaxOrder)
    throw InvalidSpec("GF(" + std::to_string(q) + ") exceeds the supported maximum order");
  const auto [p, k] = *pp;
  const std::string label = "GF(" + std::to_string(q) + ")";
  FiniteRing prime_field = make_zmod(p);
  if (k == 1)
    return prime_field.relabeled(label);
  const std::size_t count = poly::count_monic_of_degree(prime_field, static_cast<int>(k));
  for (std::size_t i = 0; i < count; ++i) {
    poly::Poly f = poly::monic_of_degree(prime_field, static_cast<int>(k), i);
    if (poly::is_irreducible(prime_field, f))
      return make_poly_quotient(prime_field, f, "a").relabeled(label);
  }
  throw InternalConsistencyError("no irreducible polynomial of degree " +
                                 std::to_string(k) + " over GF(" +
                                 std::to_string(p) + ")");
}

FiniteRing make_poly_quotient(const FiniteRing &base, std::span<const Elem> f,
                              const std::string &var) {
  if (!is_field(base))
    throw InvalidSpec(base.label() + " is not a field");
  poly::Poly modulus(f.begin(), f.end());
  poly::trim(base, modulus);
  if (poly::degree(modulus) < 1)
    throw InvalidSpec("quotient polynomial must have degree >= 1");
  if (!poly::is_monic(base, modulus))
    throw InvalidSpec("quotient polynomial " + poly::to_string(base, modulus, var) +
                      " is not monic");
  double order = 1;
  for (int i = 0; i < poly::degree(modulus); ++i)
    order *= static_cast<double>(base.order());
  if (order > static_cast<double>(kMaxOrder))
    throw InvalidSpec("quotient ring exceeds the supported maximum order");
  std::string label =
      base.label() + "[" + var + "]/(" + poly::to_string(base, modulus, var) + ")";
  return FiniteRing(std::make_shared<PolyQuotientBackend>(base, modulus, var),
                    std::move(label));
}

FiniteRing make_product(std::span<const FiniteRing> factors) {
  if (factors.empty())
    throw InvalidSpec("product needs at least one factor");
  double order = 1;
  std::string label;
  for (const auto &f : factors) {
    order *= static_cast<double>(f.order());
    if (!label.empty())
      label += " x ";
    label += f.label();
  }
  if (order > static_cast<double>(kMaxOrder))
    throw InvalidSpec("product order exceeds the supported maximum " +
                      std::to_string(kMaxOrder));
  return FiniteRing(std::make_shared<ProductBackend>(
                        std::vector<FiniteRing>(factors.begin(), factors.end())),
                    std::move(label));
}

FiniteRing make_from_table(std::size_t n, std::span<const Elem> add,
                           std::span<const Elem> mul, std::vector<std::string> names,
                           std::string label) {
  if (n < 2)
    throw InvalidSpec("table ring needs n >= 2");
  if (n > kValidationCap)
    throw InvalidSpec("table ring of order " + std::to_string(n) +
                      " exceeds the validation cap " + std::to_string(kValidationCap));
  if (add.size() != n * n || mul.size() != n * n)
    throw InvalidSpec("add and mul tables must each have n*n = " +
                      std::to_string(n * n) + " entries");
  if (!names.empty() && names.size() != n)
    throw InvalidSpec("names must list exactly n entries");
  for (auto v : add)
    if (v >= n)
      throw InvalidSpec("add table entry " + std::to_string(v) + " out of range");
  for (auto v : mul)
    if (v >= n)
      throw InvalidSpec("mul table entry " + std::to_string(v) + " out of range");
  // Commutativity is checked on the raw tables because FiniteRing only keeps
  // the upper triangle.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (add[a * n + b] != add[b * n + a])
        throw AxiomViolation("commutativity of +", triple(a, b, 0));
      if (mul[a * n + b] != mul[b * n + a])
        throw AxiomViolation("commutativity of *", triple(a, b, 0));
    }
  auto backend = std::make_shared<TableBackend>(
      n, std::vector<Elem>(add.begin(), add.end()),
      std::vector<Elem>(mul.begin(), mul.end()), std::move(names));
  FiniteRing r(std::move(backend), std::move(label));
  validate_axioms(r);
  return r;
}

bool validate_axioms(const FiniteRing &r, std::size_t cap) {
  const std::size_t n = r.order();
  if (n > cap)
    return false;
  const auto &raw = r.backend();
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a)
      throw AxiomViolation("additive identity", triple(a, r.zero(), 0));
    if (r.mul(a, r.one()) != a)
      throw AxiomViolation("multiplicative identity", triple(a, r.one(), 0));
    if (r.add(a, r.neg(a)) != r.zero())
      throw AxiomViolation("additive inverse", triple(a, r.neg(a), 0));
    for (Elem b = a + 1; b < n; ++b) {
      if (raw.add(a, b) != raw.add(b, a))
        throw AxiomViolation("commutativity of +", triple(a, b, 0));
      if (raw.mul(a, b) != raw.mul(b, a))
        throw AxiomViolation("commutativity of *", triple(a, b, 0));
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = r.add(a, b), ab_prod = r.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c)))
          throw AxiomViolation("associativity of +", triple(a, b, c));
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)))
          throw AxiomViolation("associativity of *", triple(a, b, c));
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c)))
          throw AxiomViolation("distributivity", triple(a, b, c));
      }
    }
  return true;
}

ElementSet units(const FiniteRing &r) {
  ElementSet out = r.empty_set();
  for (Elem a = 0; a < r.order(); ++a)
    if (!out[a])
      if (auto inv = inverse(r, a)) {
        out.set(a);
        out.set(*inv);
      }
  return out;
}

ElementSet idempotents(const FiniteRing &r) {
  ElementSet out = r.empty_set();
  for (Elem a = 0; a < r.order(); ++a)
    if (r.mul(a, a) == a)
      out.set(a);
  return out;
}

bool is_field(const FiniteRing &r) { return units(r).count() == r.order() - 1; }

Elem mul_power(const FiniteRing &r, Elem x, std::uint64_t k) {
  Elem result = r.one();
  while (k) {
    if (k & 1)
      result = r.mul(result, x);
    x = r.mul(x, x);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> inverse(const FiniteRing &r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one())
      return y;
  return std::nullopt;
}

std::vector<Elem> members_of(const ElementSet &s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

} // namespace ebring
