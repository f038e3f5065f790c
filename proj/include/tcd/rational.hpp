#pragma once

#include <gmpxx.h>

#include <string>

namespace tcd {

// All weights, probabilities, deviations and certificates are exact rationals.
using Rat = mpq_class;
using Int = mpz_class;

// Canonical "p/q" (or "p" when q == 1), matching GMP's canonical form.
std::string rat_str(const Rat& q);

// Parses "p", "p/q", or a JSON-style integer string. Throws InputError on junk.
Rat rat_parse(const std::string& s);

// q^e for e >= 0.
Rat rat_pow(const Rat& q, unsigned long e);

// n (n-1) ... (n-t+1) as an exact integer.
Int falling_factorial(unsigned long n, unsigned long t);

Int int_pow(unsigned long base, unsigned long e);

}  // namespace tcd
