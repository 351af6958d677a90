#pragma once

#include <gmpxx.h>

#include <string>

namespace psigma {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Zero when k < 0 or k > n.
inline BigInt binomial(long n, long k)
{
  if (k < 0 || n < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigInt power(long base, unsigned long exp)
{
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

inline bool is_integer(Rational const &q) { return q.get_den() == 1; }

inline std::string to_string(BigInt const &z) { return z.get_str(); }

} // namespace psigma
