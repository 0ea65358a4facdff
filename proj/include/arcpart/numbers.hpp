#pragma once

// Exact scalar types. Everything in this library is computed over
// arbitrary-precision integers; rationals appear only in the arc-equation
// elimination.

#include <gmpxx.h>

namespace arcpart {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace arcpart
