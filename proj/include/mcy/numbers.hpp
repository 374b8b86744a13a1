#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace mcy {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// m^j with the 0^0 = 1 convention used by theta-operator action.
inline Int ipow(long m, unsigned long j) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 1, 0);
  Int b(m);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), j);
  return r;
}

std::string to_string(const Int& v);
std::string to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

}  // namespace mcy
