#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ebring/cli.hpp"
#include "ebring/error.hpp"
#include "ebring/poly.hpp"

namespace ebring::cli {

namespace {

constexpr std::uint64_t kMaxNat = 1'000'000'000'000ULL;
constexpr std::uint64_t kMaxDegree = 64;

class Cursor {
public:
  explicit Cursor(const std::string &s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char *what) {
    if (!accept(c))
      fail(std::string("expected ") + what + found());
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  // NAT, returning the value and the start column.
  std::pair<std::uint64_t, std::size_t> nat() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_digit())
      fail("expected a natural number" + found());
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > kMaxNat)
        throw SyntaxError("number too large", start, pos_ - start + 1);
      ++pos_;
    }
    return {v, start};
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  std::size_t raw_pos() const { return pos_; }

  [[noreturn]] void fail(const std::string &msg) { throw SyntaxError(msg, pos_); }

  std::string found() {
    return pos_ < s_.size() ? std::string(", found '") + s_[pos_] + "'"
                            : std::string(", found end of input");
  }

private:
  const std::string &s_;
  std::size_t pos_ = 0;
};

// term := NAT | NAT? "x" ( "^" NAT )?
std::map<std::uint64_t, std::uint64_t> parse_poly_terms(Cursor &c, std::uint64_t p) {
  std::map<std::uint64_t, std::uint64_t> acc;
  do {
    std::uint64_t coeff = 1;
    bool have_coeff = false;
    if (c.at_digit()) {
      coeff = c.nat().first;
      have_coeff = true;
    }
    std::uint64_t exp = 0;
    if (c.accept('x')) {
      exp = 1;
      if (c.accept('^')) {
        auto [e, at] = c.nat();
        if (e > kMaxDegree)
          throw SyntaxError("exponent exceeds " + std::to_string(kMaxDegree), at,
                            std::to_string(e).size());
        exp = e;
      }
    } else if (!have_coeff) {
      c.fail("expected a polynomial term" + c.found());
    }
    acc[exp] = (acc[exp] + coeff % p) % p;
  } while (c.accept('+'));
  return acc;
}

std::vector<std::uint64_t> dense(const std::map<std::uint64_t, std::uint64_t> &terms) {
  std::vector<std::uint64_t> out;
  for (const auto &[e, v] : terms) {
    if (v == 0)
      continue;
    if (out.size() <= e)
      out.resize(e + 1, 0);
    out[e] = v;
  }
  return out;
}

std::uint64_t parse_field_order(Cursor &c) {
  auto [q, at] = c.nat();
  if (!prime_power(q))
    throw SyntaxError("GF order " + std::to_string(q) + " is not a prime power", at,
                      std::to_string(q).size());
  return q;
}

Atom parse_atom(Cursor &c) {
  const std::size_t start = c.pos();
  if (c.accept('Z')) {
    c.expect('/', "'/' after 'Z'");
    auto [n, at] = c.nat();
    if (n < 2)
      throw SyntaxError("Z/n requires n >= 2", at, std::to_string(n).size());
    return ZModAtom{n};
  }
  if (c.accept('G')) {
    c.expect('F', "'F' after 'G'");
    c.expect('(', "'(' after 'GF'");
    const std::uint64_t q = parse_field_order(c);
    c.expect(')', "')'");
    if (c.peek() != '[')
      return GaloisAtom{q};
    c.expect('[', "'['");
    c.expect('x', "'x' as the polynomial variable");
    c.expect(']', "']'");
    c.expect('/', "'/'");
    c.expect('(', "'('");
    const std::size_t poly_at = c.pos();
    const std::uint64_t p = prime_power(q)->first;
    auto coeffs = dense(parse_poly_terms(c, p));
    const std::size_t poly_len = c.raw_pos() - poly_at;
    c.expect(')', "')' closing the polynomial");
    if (coeffs.size() < 2)
      throw SyntaxError("quotient polynomial must have degree >= 1", poly_at, poly_len);
    if (coeffs.back() != 1)
      throw SyntaxError("quotient polynomial is not monic after reduction mod " +
                            std::to_string(p),
                        poly_at, poly_len);
    return PolyQuotientAtom{q, std::move(coeffs)};
  }
  if (c.peek() == 't') {
    const std::string w = c.word();
    const std::string prefix = "table:";
    if (w.rfind(prefix, 0) != 0 || w.size() == prefix.size())
      throw SyntaxError("expected 'table:PATH'", start, w.size());
    return TableAtom{w.substr(prefix.size())};
  }
  c.fail("expected 'Z/', 'GF(' or 'table:'" + c.found());
}

std::string render_poly(const std::vector<std::uint64_t> &coeffs) {
  std::string out;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const std::uint64_t v = coeffs[d];
    if (v == 0)
      continue;
    if (!out.empty())
      out += '+';
    if (d == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1)
      out += std::to_string(v);
    out += 'x';
    if (d > 1)
      out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

std::string render_atom(const Atom &a) {
  struct Visitor {
    std::string operator()(const ZModAtom &z) const { return "Z/" + std::to_string(z.n); }
    std::string operator()(const GaloisAtom &g) const {
      return "GF(" + std::to_string(g.q) + ")";
    }
    std::string operator()(const PolyQuotientAtom &pq) const {
      return "GF(" + std::to_string(pq.q) + ")[x]/(" + render_poly(pq.modulus) + ")";
    }
    std::string operator()(const TableAtom &t) const { return "table:" + t.path; }
  };
  return std::visit(Visitor{}, a);
}

FiniteRing build_atom(const Atom &a) {
  struct Visitor {
    FiniteRing operator()(const ZModAtom &z) const { return make_zmod(z.n); }
    FiniteRing operator()(const GaloisAtom &g) const { return make_gf(g.q); }
    FiniteRing operator()(const PolyQuotientAtom &pq) const {
      const FiniteRing base = make_gf(pq.q);
      std::vector<Elem> f(pq.modulus.begin(), pq.modulus.end());
      return make_poly_quotient(base, f).relabeled(render_atom(pq));
    }
    FiniteRing operator()(const TableAtom &t) const {
      return load_table_ring(t.path).relabeled(render_atom(t));
    }
  };
  return std::visit(Visitor{}, a);
}

} // namespace

RingSpec parse_ring_spec(const std::string &text) {
  Cursor c(text);
  RingSpec spec;
  spec.source = text;
  spec.factors.push_back(parse_atom(c));
  while (!c.at_end()) {
    if (!c.accept('x'))
      c.fail("expected 'x' between factors or end of input" + c.found());
    spec.factors.push_back(parse_atom(c));
  }
  return spec;
}

std::string render(const RingSpec &spec) {
  std::string out;
  for (const auto &a : spec.factors) {
    if (!out.empty())
      out += " x ";
    out += render_atom(a);
  }
  return out;
}

std::vector<std::uint64_t> parse_polynomial(const std::string &text, std::uint64_t p) {
  Cursor c(text);
  auto coeffs = dense(parse_poly_terms(c, p));
  if (!c.at_end())
    c.fail("unexpected trailing input" + c.found());
  return coeffs;
}

std::vector<std::size_t> parse_group_spec(const std::string &text) {
  Cursor c(text);
  std::vector<std::size_t> out;
  do {
    c.expect('Z', "'Z' starting a cyclic factor");
    auto [n, at] = c.nat();
    if (n == 0)
      throw SyntaxError("cyclic factor order must be >= 1", at);
    if (n > 1)
      out.push_back(static_cast<std::size_t>(n));
  } while (c.accept('x'));
  if (!c.at_end())
    c.fail("expected 'x' between factors or end of input" + c.found());
  return out;
}

FiniteRing build_ring(const RingSpec &spec) {
  std::vector<FiniteRing> factors;
  for (const auto &a : spec.factors)
    factors.push_back(build_atom(a));
  if (factors.size() == 1)
    return factors.front();
  return make_product(factors).relabeled(render(spec));
}

FiniteRing table_ring_from_json(const std::string &document, std::string label) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception &e) {
    throw InvalidSpec(std::string("table ring document: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto add = j.at("add").get<std::vector<Elem>>();
    const auto mul = j.at("mul").get<std::vector<Elem>>();
    std::vector<std::string> names;
    if (j.contains("names"))
      names = j.at("names").get<std::vector<std::string>>();
    return make_from_table(n, add, mul, std::move(names), std::move(label));
  } catch (const nlohmann::json::exception &e) {
    throw InvalidSpec(std::string("table ring document: ") + e.what());
  }
}

FiniteRing load_table_ring(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidSpec("cannot open table ring file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return table_ring_from_json(buf.str(), "table:" + path);
}

} // namespace ebring::cli
