#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace ebring {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed ring/group specification (bad modulus, not a prime power, ...).
class InvalidSpec : public Error {
public:
  using Error::Error;
};

// A table ring failed one of the ring axioms.
class AxiomViolation : public Error {
public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error("axiom violated: " + axiom + " (witness " + witness + ")"),
        axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string &axiom() const { return axiom_; }
  const std::string &witness() const { return witness_; }

private:
  std::string axiom_;
  std::string witness_;
};

// Caller violated an operation precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A result the mathematics guarantees did not materialise; indicates a bug.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

// Search cap or budget exceeded. Carries the best bound established so far,
// which is never an exact value.
class ResourceExhausted : public Error {
public:
  explicit ResourceExhausted(std::string what,
                             std::optional<std::size_t> best_lower = std::nullopt)
      : Error(std::move(what)), best_lower_(best_lower) {}

  std::optional<std::size_t> best_lower_bound() const { return best_lower_; }

private:
  std::optional<std::size_t> best_lower_;
};

// Parse failure with a position into the source text.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string &msg, std::size_t pos, std::size_t len = 1)
      : Error("at column " + std::to_string(pos + 1) + ": " + msg), pos_(pos),
        len_(len) {}

  std::size_t position() const { return pos_; }
  std::size_t length() const { return len_; }

private:
  std::size_t pos_;
  std::size_t len_;
};

} // namespace ebring
