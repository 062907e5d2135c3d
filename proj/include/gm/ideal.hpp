#ifndef GM_IDEAL_HPP
#define GM_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gm/graph.hpp"
#include "gm/monomial.hpp"
#include "gm/numbers.hpp"

namespace gm {

// The quadratic binomial diag_a - diag_b attached to one 4-cycle. Choosing
// which side is the non-standard monomial z is the whole selection problem.
struct CycleBinomial {
  FourCycle cycle;
  Monomial candidate_a;  // cycle.diag_a
  Monomial candidate_b;  // cycle.diag_b
};

// A per-cycle orientation: bit 0 picks candidate_a as z_i, bit 1 picks
// candidate_b. w_i is the other side.
using Orientation = std::vector<uint8_t>;

// One fully-resolved choice of special monomials with its goodness evidence.
// Invariants: z_i != w_i, the z_i are pairwise coprime, and when the
// certificate is present every rule strictly drops certificate weight
// (weight(z_i) - weight(w_i) >= 1, all weights >= 1).
struct SpecialChoice {
  Orientation orientations;
  std::vector<Monomial> z;
  std::vector<Monomial> w;
  std::optional<std::vector<Rational>> certificate;
};

struct ProductViolation {
  std::vector<int> multiset;  // 1-based rule indices, non-decreasing
};

struct BoundedProductResult {
  bool clean = true;
  std::optional<ProductViolation> violation;
};

// Why select_special_monomials failed, with per-assignment diagnostics.
struct GoodnessFailure {
  enum class Reason { NoCoprimeChoice, CertificateNotFound };
  // Every assignment that has a product violation is definitively bad; a
  // clean-but-uncertified assignment leaves the status unknown.
  enum class Status { NotGood, Unknown };

  Reason reason = Reason::NoCoprimeChoice;
  Status status = Status::NotGood;
  bool exhaustive = true;  // false if the assignment cap cut enumeration short
  struct AssignmentDiagnostic {
    Orientation orientations;
    BoundedProductResult products;
  };
  std::vector<AssignmentDiagnostic> tried;

  std::string describe() const;
};

class NotGoodError : public std::runtime_error {
 public:
  explicit NotGoodError(GoodnessFailure failure)
      : std::runtime_error(failure.describe()), failure_(std::move(failure)) {}
  const GoodnessFailure& failure() const { return failure_; }

 private:
  GoodnessFailure failure_;
};

// One CycleBinomial per 4-cycle, candidates taken from the diagonals.
std::vector<CycleBinomial> binomials_from_cycles(
    const BipartiteGraph& g, const std::vector<FourCycle>& cycles);

// Streams orientation assignments whose chosen z_i are pairwise coprime, in
// lexicographic order of the bit vector (candidate_a = bit 0). Encoded as
// 2-SAT over one Boolean per cycle; infeasible branches are pruned with an
// implication-graph SCC check before descending.
class CoprimeChoiceEnumerator {
 public:
  explicit CoprimeChoiceEnumerator(const std::vector<CycleBinomial>& binomials,
                                   int p_cap = 30);

  // Next assignment in lex order, or nullopt when exhausted.
  std::optional<Orientation> next();

 private:
  bool satisfiable_with_prefix(const Orientation& prefix) const;

  int p_;
  // Clauses as pairs of forbidden joint picks: (cycle i, bit a, cycle j, bit b).
  struct Conflict {
    int i;
    uint8_t a;
    int j;
    uint8_t b;
  };
  std::vector<Conflict> conflicts_;
  Orientation current_;  // last yielded assignment, empty before first
  bool done_ = false;
  bool started_ = false;
};

// All coprime assignments in lex order, at most `cap` of them. `exhausted`
// (when non-null) reports whether the stream ended before the cap.
std::vector<Orientation> enumerate_coprime_choices(
    const std::vector<CycleBinomial>& binomials, int cap = 1024,
    int p_cap = 30, bool* exhausted = nullptr);

// Builds the z/w lists for one orientation assignment.
SpecialChoice apply_orientation(const std::vector<CycleBinomial>& binomials,
                                const Orientation& orientation);

// Searches for positive rational weights lam with
//   lam . exp(z_i) - lam . exp(w_i) >= 1   for every rule, and
//   lam_j >= 1                             for every edge variable,
// by exact Fourier-Motzkin elimination. A returned vector is a proof that
// the rewriting z_i -> w_i terminates (every step strictly drops weight),
// hence that no nonempty multiset has prod z = prod w. Absence is a value,
// not an error: the search is sufficient, not necessary.
std::optional<std::vector<Rational>> termination_certificate(
    int n_edges, const std::vector<Monomial>& z, const std::vector<Monomial>& w);

// Exhaustively checks all nonempty multisets of rule indices of total size
// <= t_max for prod z = prod w (as exponent vectors). Diagnostic fallback
// when no certificate was found.
BoundedProductResult bounded_product_check(const SpecialChoice& choice,
                                           int t_max = 4);

struct SelectionCaps {
  int p_cap = 30;
  int assignment_cap = 1024;
  int t_max = 4;
};

// Iterates coprime assignments in deterministic order and returns the first
// one admitting a termination certificate; the graph is "good" exactly when
// this succeeds. Throws NotGoodError with diagnostics otherwise.
SpecialChoice select_special_monomials(const BipartiteGraph& g,
                                       const std::vector<FourCycle>& cycles,
                                       const SelectionCaps& caps = {});

}  // namespace gm

#endif  // GM_IDEAL_HPP
