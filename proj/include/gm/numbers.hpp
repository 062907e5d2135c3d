#ifndef GM_NUMBERS_HPP
#define GM_NUMBERS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gm {

// All counting is arbitrary-precision; 64-bit overflow is not an option
// at the degrees the verifier runs at.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt pow2(unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// floor(q), as a BigInt.
inline BigInt floor_rational(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace gm

#endif  // GM_NUMBERS_HPP
