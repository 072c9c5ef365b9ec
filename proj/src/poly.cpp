#include "ebring/poly.hpp"

#include <algorithm>
#include <cctype>

#include "ebring/error.hpp"

namespace ebring::poly {

void trim(const FiniteRing &field, Poly &p) {
  while (!p.empty() && p.back() == field.zero())
    p.pop_back();
}

int degree(const Poly &p) { return static_cast<int>(p.size()) - 1; }

Poly add(const FiniteRing &field, const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem x = i < a.size() ? a[i] : field.zero();
    Elem y = i < b.size() ? b[i] : field.zero();
    r[i] = field.add(x, y);
  }
  trim(field, r);
  return r;
}

Poly sub(const FiniteRing &field, const Poly &a, const Poly &b) {
  Poly nb(b.size());
  std::transform(b.begin(), b.end(), nb.begin(),
                 [&](Elem c) { return field.neg(c); });
  return add(field, a, nb);
}

Poly mul(const FiniteRing &field, const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == field.zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
  }
  trim(field, r);
  return r;
}

std::pair<Poly, Poly> divmod(const FiniteRing &field, const Poly &a,
                             const Poly &monic) {
  if (!is_monic(field, monic))
    throw PreconditionError("polynomial division requires a monic divisor");
  Poly rem = a;
  trim(field, rem);
  const int db = degree(monic);
  if (degree(rem) < db)
    return {Poly{}, rem};
  Poly quo(rem.size() - monic.size() + 1, field.zero());
  for (int d = degree(rem); d >= db; --d) {
    Elem c = rem[d];
    if (c == field.zero())
      continue;
    quo[d - db] = c;
    for (int j = 0; j <= db; ++j)
      rem[d - db + j] = field.sub(rem[d - db + j], field.mul(c, monic[j]));
  }
  trim(field, quo);
  trim(field, rem);
  return {quo, rem};
}

bool is_monic(const FiniteRing &field, const Poly &p) {
  return !p.empty() && p.back() == field.one();
}

Poly monic_of_degree(const FiniteRing &field, int deg, std::size_t i) {
  Poly p(deg + 1, field.zero());
  const std::size_t q = field.order();
  for (int j = 0; j < deg; ++j) {
    p[j] = static_cast<Elem>(i % q);
    i /= q;
  }
  p[deg] = field.one();
  return p;
}

std::size_t count_monic_of_degree(const FiniteRing &field, int deg) {
  std::size_t n = 1;
  for (int j = 0; j < deg; ++j)
    n *= field.order();
  return n;
}

bool is_irreducible(const FiniteRing &field, const Poly &f) {
  const int d = degree(f);
  if (d < 1)
    return false;
  for (int dd = 1; dd <= d / 2; ++dd) {
    const std::size_t count = count_monic_of_degree(field, dd);
    for (std::size_t i = 0; i < count; ++i)
      if (divmod(field, f, monic_of_degree(field, dd, i)).second.empty())
        return false;
  }
  return true;
}

std::vector<std::pair<Poly, unsigned>> factor(const FiniteRing &field,
                                              const Poly &f) {
  if (!is_monic(field, f) || degree(f) < 1)
    throw PreconditionError("factor expects a monic polynomial of degree >= 1");
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f;
  for (int dd = 1; 2 * dd <= degree(rest); ++dd) {
    const std::size_t count = count_monic_of_degree(field, dd);
    for (std::size_t i = 0; i < count && 2 * dd <= degree(rest); ++i) {
      Poly g = monic_of_degree(field, dd, i);
      unsigned mult = 0;
      for (;;) {
        auto [quo, rem] = divmod(field, rest, g);
        if (!rem.empty())
          break;
        rest = std::move(quo);
        ++mult;
      }
      // Any divisor found here is irreducible: smaller factors were removed.
      if (mult > 0)
        out.emplace_back(std::move(g), mult);
    }
  }
  if (degree(rest) >= 1) {
    auto same = std::find_if(out.begin(), out.end(),
                             [&](const auto &e) { return e.first == rest; });
    if (same != out.end())
      ++same->second;
    else
      out.emplace_back(rest, 1);
  }
  return out;
}

namespace {

bool is_plain_integer(const std::string &s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

} // namespace

std::string to_string(const FiniteRing &field, const Poly &p,
                      const std::string &var) {
  std::string out;
  for (int d = degree(p); d >= 0; --d) {
    const Elem c = p[d];
    if (c == field.zero())
      continue;
    if (!out.empty())
      out += '+';
    std::string cname = field.name(c);
    if (!is_plain_integer(cname))
      cname = "(" + cname + ")";
    if (d == 0) {
      out += cname;
      continue;
    }
    if (c != field.one())
      out += cname;
    out += var;
    if (d > 1)
      out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

} // namespace ebring::poly
