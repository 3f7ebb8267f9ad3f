#pragma once

#include <gmpxx.h>

#include <string>

namespace sigkit {

// All counting in this library is exact. Binomial coefficients overflow
// 64-bit words near n = 68, and signatures are rationals with factorial
// denominators, so both integer and rational types are arbitrary precision.
using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

// Same, for upper indices that do not fit a machine word. n must be >= 0.
BigInt binomial(const BigInt& n, unsigned long k);

BigInt factorial(unsigned long n);

// Canonical "p/q" (or plain "p" when the denominator is 1), lowest terms,
// positive denominator.
std::string fraction_string(const BigRat& value);

inline bool is_integral(const BigRat& value) {
  return value.get_den() == 1;
}

}  // namespace sigkit
