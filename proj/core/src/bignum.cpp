#include "sigkit/bignum.hpp"

#include <stdexcept>

namespace sigkit {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt binomial(const BigInt& n, unsigned long k) {
  if (sgn(n) < 0) throw std::invalid_argument("binomial needs a non-negative upper index");
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

std::string fraction_string(const BigRat& value) {
  BigRat canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

}  // namespace sigkit
