#include "gm/counting.hpp"

#include <cassert>
#include <stdexcept>

namespace gm {

BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= (a - b + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

BigInt count_all_monomials(int n_edges, int k) {
  if (n_edges < 1) throw std::invalid_argument("n_edges must be >= 1");
  if (k < 0) return 0;
  if (k == 0) return 1;
  return binomial(static_cast<long>(n_edges) + k - 1, n_edges - 1);
}

BigInt count_nonstandard(int n_edges, int p, int k) {
  BigInt sum = 0;
  for (int r = 1; r <= p; ++r) {
    BigInt term = binomial(p, r) * count_all_monomials(n_edges, k - 2 * r);
    if (r % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

BigInt count_standard(int n_edges, int p, int k) {
  BigInt sum = 0;
  for (int r = 0; r <= p; ++r) {
    BigInt term = binomial(p, r) * count_all_monomials(n_edges, k - 2 * r);
    if (r % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

CountReport make_count_report(int n_edges, int p, int k) {
  CountReport rep;
  rep.k = k;
  rep.n_edges = n_edges;
  rep.p = p;
  rep.M = count_all_monomials(n_edges, k);
  rep.NS = count_nonstandard(n_edges, p, k);
  rep.S = count_standard(n_edges, p, k);
  assert(rep.M == rep.NS + rep.S);
  return rep;
}

BigInt stirling_first_unsigned(long a, long l) {
  if (a < 0 || l < 0 || l > a) return 0;
  // Row-by-row: row[j] = [i, j] for the current i.
  std::vector<BigInt> row(static_cast<size_t>(a) + 1, 0);
  row[0] = 1;  // [0, 0]
  for (long i = 0; i < a; ++i) {
    // [i+1, j] = [i, j-1] + i * [i, j]; sweep j downward so row still holds
    // row i to the right of the write position.
    for (long j = i + 1; j >= 1; --j) {
      row[j] = row[j - 1] + i * row[j];
    }
    row[0] = 0;  // [i+1, 0] = 0 for i+1 >= 1
  }
  return row[l];
}

BigInt rising_factorial_eval(const BigInt& x, long a) {
  if (a < 0) throw std::invalid_argument("rising factorial needs a >= 0");
  BigInt result = 1;
  for (long i = 0; i < a; ++i) result *= (x + i);
  return result;
}

std::vector<BigInt> hilbert_series_truncated(int n_edges, int p, int D) {
  if (D < 0) throw std::invalid_argument("series degree must be >= 0");
  if (p < 0 || 2 * p > n_edges)
    throw std::invalid_argument("need 0 <= p <= n_edges/2");
  std::vector<BigInt> c(static_cast<size_t>(D) + 1, 0);
  c[0] = 1;
  // Multiply by (1 - t^2), p times.
  for (int rep = 0; rep < p; ++rep) {
    for (int k = D; k >= 2; --k) c[k] -= c[k - 2];
  }
  // Multiply by 1/(1 - t) = 1 + t + t^2 + ..., n_edges times; each pass is a
  // running prefix sum.
  for (int rep = 0; rep < n_edges; ++rep) {
    for (int k = 1; k <= D; ++k) c[k] += c[k - 1];
  }
  return c;
}

}  // namespace gm
