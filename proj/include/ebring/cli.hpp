#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ebring/davenport.hpp"
#include "ebring/erdos_burgess.hpp"
#include "ebring/ring.hpp"

namespace ebring::cli {

// Ring specification grammar (whitespace between tokens is ignored):
//
//   spec := atom ( "x" atom )*
//   atom := "Z/" NAT | "GF(" NAT ")" | "GF(" NAT ")[x]/(" poly ")" | "table:" PATH
//   poly := term ( "+" term )*
//   term := NAT | NAT? "x" ( "^" NAT )?
//
// PATH runs to the next whitespace character. Polynomial coefficients are
// reduced modulo the characteristic and like terms are combined; the result
// must be monic of degree >= 1.

struct ZModAtom {
  std::uint64_t n;
  friend bool operator==(const ZModAtom &, const ZModAtom &) = default;
};
struct GaloisAtom {
  std::uint64_t q;
  friend bool operator==(const GaloisAtom &, const GaloisAtom &) = default;
};
struct PolyQuotientAtom {
  std::uint64_t q;
  // Reduced integer coefficients in [0, p), lowest degree first, monic.
  std::vector<std::uint64_t> modulus;
  friend bool operator==(const PolyQuotientAtom &, const PolyQuotientAtom &) = default;
};
struct TableAtom {
  std::string path;
  friend bool operator==(const TableAtom &, const TableAtom &) = default;
};

using Atom = std::variant<ZModAtom, GaloisAtom, PolyQuotientAtom, TableAtom>;

struct RingSpec {
  std::vector<Atom> factors;
  std::string source;
};

RingSpec parse_ring_spec(const std::string &text);

// Canonical text: atoms joined by " x ", polynomials in descending degree.
std::string render(const RingSpec &spec);

// Integer polynomial under the poly grammar, coefficients reduced mod p,
// lowest degree first and trimmed. Not required to be monic.
std::vector<std::uint64_t> parse_polynomial(const std::string &text, std::uint64_t p);

// "Z" NAT ( "x" "Z" NAT )*; factors of order 1 are dropped.
std::vector<std::size_t> parse_group_spec(const std::string &text);

FiniteRing build_ring(const RingSpec &spec);

// Table ring document: {"n": int, "add": [n*n ints], "mul": [n*n ints],
// "names": [n strings] (optional)}, tables row-major.
FiniteRing load_table_ring(const std::string &path);
FiniteRing table_ring_from_json(const std::string &document, std::string label);

// Frozen field set, two-space indented JSON.
std::string serialize_report(const FiniteRing &r, const InvariantReport &report);
std::string serialize_trace(const FiniteRing &r, const ConstructionTrace &trace);
std::string serialize_davenport(const AbelianGroupView &g, const DavenportResult &d);
std::string serialize_coincidence(const CoincidenceRecord &rec);

enum ExitCode : int {
  kOk = 0,
  kInvariantViolation = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ebring::cli
