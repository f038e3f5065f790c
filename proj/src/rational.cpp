#include "tcd/rational.hpp"

#include "tcd/errors.hpp"

namespace tcd {

std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();  // tolerate values built with the non-canonicalizing ctor
  return c.get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& q, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

Int falling_factorial(unsigned long n, unsigned long t) {
  Int out = 1;
  for (unsigned long i = 0; i < t; ++i) out *= Int(n - i);
  return out;
}

Int int_pow(unsigned long base, unsigned long e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace tcd
