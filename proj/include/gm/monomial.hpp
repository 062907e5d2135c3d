#ifndef GM_MONOMIAL_HPP
#define GM_MONOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gm {

// A monomial in the edge variables x_1..x_n, stored as a sparse exponent
// vector keyed by 1-based edge index. Zero exponents are never stored.
class Monomial {
 public:
  using Term = std::pair<uint32_t, uint32_t>;  // (edge index, exponent)

  Monomial() = default;

  // From (index, exponent) pairs; merges duplicates, drops zeros.
  static Monomial from_terms(std::vector<Term> terms);

  // Product of the variables with the given 1-based indices, e.g. {1,3} -> x1*x3.
  static Monomial from_indices(std::initializer_list<uint32_t> indices);
  static Monomial from_indices(const std::vector<uint32_t>& indices);

  // From a dense exponent vector, entry j holding the exponent of x_{j+1}.
  static Monomial from_dense(const std::vector<uint32_t>& exps);

  const std::vector<Term>& terms() const { return terms_; }
  uint32_t degree() const { return degree_; }
  bool is_one() const { return terms_.empty(); }

  uint32_t exponent_of(uint32_t index) const;

  bool divides(const Monomial& m) const;
  bool coprime_with(const Monomial& other) const;

  Monomial times(const Monomial& other) const;

  // this / d, requiring d.divides(*this).
  Monomial divide_exact(const Monomial& d) const;

  std::vector<uint32_t> to_dense(uint32_t n_vars) const;

  // Graded lexicographic order: degree first, then the leftmost index where
  // the exponents differ (larger exponent there is the larger monomial).
  static int compare(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

  // "x1^2*x3" style rendering; "1" for the empty monomial.
  std::string str() const;

 private:
  std::vector<Term> terms_;  // sorted by index, exponents > 0
  uint32_t degree_ = 0;
};

}  // namespace gm

#endif  // GM_MONOMIAL_HPP
