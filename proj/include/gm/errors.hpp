#ifndef GM_ERRORS_HPP
#define GM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gm {

// Structural defects in the input graph. Each message names the offending
// label, edge, or component.
class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    EmptyGraph,
    NotBipartite,
    Disconnected,
    DuplicateEdge,
    DuplicateLabel,
    UnknownVertex,
    GraphTooLarge,
  };

  GraphError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A cap (edge count, cycle count, assignment count, enumeration size) was
// exceeded. Caps are configurable; the tool rejects rather than approximates.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::string message)
      : std::runtime_error(std::move(message)) {}
};

class EnumerationTooLarge : public CapExceeded {
 public:
  explicit EnumerationTooLarge(std::string message)
      : CapExceeded(std::move(message)) {}
};

// The multiplicity formula's dimension gate failed: p != n_edges - m + 1,
// or m is below the supported range.
class DimensionMismatch : public std::runtime_error {
 public:
  explicit DimensionMismatch(std::string message)
      : std::runtime_error(std::move(message)) {}
};

// The exact rational intermediate of the multiplicity formula failed the
// final integrality assertion. Signals an internal error or bad input.
class NonIntegerResult : public std::logic_error {
 public:
  explicit NonIntegerResult(std::string message)
      : std::logic_error(std::move(message)) {}
};

// A rewrite ran past the bound implied by its termination certificate.
// The certificate is unsound, i.e. an internal invariant is broken.
class StepBudgetExceeded : public std::logic_error {
 public:
  explicit StepBudgetExceeded(std::string message)
      : std::logic_error(std::move(message)) {}
};

// Forward differences did not become constant over the requested window.
class NotStabilized : public std::runtime_error {
 public:
  explicit NotStabilized(std::string message)
      : std::runtime_error(std::move(message)) {}
};

// Input file could not be parsed (bad JSON, missing or mistyped field).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string message)
      : std::runtime_error(std::move(message)) {}
};

}  // namespace gm

#endif  // GM_ERRORS_HPP
