#pragma once

#include <gmpxx.h>

#include <string>

namespace skein {

// Exact rational coefficients. All arithmetic in the library is exact;
// nothing is ever rounded.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Parses "p", "-p" or "p/q". Returns false on malformed input.
bool parse_rational(const std::string& text, Rat& out);

inline Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

}  // namespace skein
