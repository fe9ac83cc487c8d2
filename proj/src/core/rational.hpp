#pragma once

#include <gmpxx.h>

#include <string>

#include "core/errors.hpp"

namespace f1an {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// base^e for integer e (negative allowed, base != 0).
inline Rat rpow(const Rat& base, long e) {
  if (base == 0 && e <= 0) throw F1Error(Errc::DivisionByZero, "0 raised to nonpositive power");
  Rat b = base;
  unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

// exact p-adic valuation of m != 0
inline long p_valuation(Int m, unsigned long p) {
  if (m == 0) throw F1Error(Errc::InternalError, "valuation of zero");
  long v = 0;
  Int q, r, pp(p);
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
    if (r != 0) break;
    m = q;
    ++v;
  }
  return v;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_str(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw F1Error(Errc::ParseError, "bad rational: " + s);
  }
}

inline double rat_double(const Rat& q) { return q.get_d(); }

inline bool fits_long(const Rat& q) { return q.get_den() == 1 && q.get_num().fits_slong_p(); }

}  // namespace f1an
