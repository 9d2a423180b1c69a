#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace guarding {

// All geometry runs on arbitrary-precision rationals; no floating point
// touches a predicate anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts integers ("-3"), fractions ("7/12"), and decimal strings with an
// optional exponent ("0.1", "2.5e-3").  Decimals convert exactly: "0.1"
// becomes 1/10, never a binary float.  Throws parse_error otherwise.
Rat parse_rat(const std::string& s);

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rat& q);

double to_double(const Rat& q);

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

// 2^e for e >= 0.
Int pow2(unsigned long e);

// Smallest k with 2^k >= q; requires q > 0.  Exact (no logs).
long ceil_log2(const Rat& q);

bool is_pow2(const Int& z);

// Exact n-th power helpers used by the solver's weight-bound invariant.
Int ipow(const Int& base, unsigned long e);

}  // namespace guarding
