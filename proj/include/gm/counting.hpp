#ifndef GM_COUNTING_HPP
#define GM_COUNTING_HPP

#include <vector>

#include "gm/numbers.hpp"

namespace gm {

// Exact per-degree census: all / non-standard / standard monomial counts.
// Always M == NS + S.
struct CountReport {
  int k = 0;
  BigInt M;
  BigInt NS;
  BigInt S;
  int n_edges = 0;
  int p = 0;
};

// C(a, b), exactly; 0 outside the triangle. Iterative multiplicative form,
// every division exact.
BigInt binomial(long a, long b);

// Number of degree-k monomials in n_edges variables: C(n_edges+k-1, n_edges-1).
// By convention 0 for k < 0 and 1 for k = 0 (there are no monomials of
// negative degree, and only the empty one of degree zero).
BigInt count_all_monomials(int n_edges, int k);

// Monomials of degree k divisible by at least one of p pairwise-coprime
// degree-2 monomials: sum_{r=1}^{p} (-1)^{r-1} C(p,r) M_{k-2r}.
// Pairwise coprimality of the chosen z_i is a hard precondition; the
// intersection counts are wrong without it.
BigInt count_nonstandard(int n_edges, int p, int k);

// Degree-k monomials divisible by none of the z_i:
// sum_{r=0}^{p} (-1)^r C(p,r) M_{k-2r}. Same coprimality precondition.
BigInt count_standard(int n_edges, int p, int k);

CountReport make_count_report(int n_edges, int p, int k);

// Unsigned Stirling number of the first kind via the recurrence
// [a+1, l] = [a, l-1] + a * [a, l], with [0,0] = 1. Total: out-of-range
// indices give 0.
BigInt stirling_first_unsigned(long a, long l);

// x(x+1)...(x+a-1); the empty product (a = 0) is 1.
BigInt rising_factorial_eval(const BigInt& x, long a);

// Coefficients of (1-t^2)^p * (1-t)^(-n_edges) through degree D, by series
// arithmetic alone: p shift-subtract passes for the numerator, then n_edges
// prefix-sum passes for the geometric factors. Coefficient k equals
// count_standard(n_edges, p, k); the two routes are kept independent.
std::vector<BigInt> hilbert_series_truncated(int n_edges, int p, int D);

}  // namespace gm

#endif  // GM_COUNTING_HPP
