#pragma once

#include <map>

#include "core/errors.hpp"
#include "core/norm_value.hpp"
#include "core/rational.hpp"

namespace f1an {

// Finite Puiseux polynomial over F_p: a tilted-field element at finite support.
// Exponents live in a declared lattice; anything that would leave it throws
// LatticeOverflow instead of silently widening.
struct ExponentLattice {
  enum class Kind { OverN, PPower } kind = Kind::PPower;
  unsigned long param = 8;  // OverN: exponents in (1/param)Z; PPower: den | p^param

  bool admits(const Rat& q, unsigned long p) const;
};

struct PuiseuxPoly {
  unsigned long p = 2;
  ExponentLattice lattice;
  std::map<Rat, unsigned long> terms;  // exponent -> coefficient in [1, p)

  bool is_zero() const { return terms.empty(); }
};

PuiseuxPoly pp_make(unsigned long p, ExponentLattice lat,
                    const std::map<Rat, long>& raw_terms);
PuiseuxPoly pp_zero(unsigned long p, ExponentLattice lat = {});
PuiseuxPoly pp_const(unsigned long p, long c, ExponentLattice lat = {});
PuiseuxPoly pp_monomial(unsigned long p, const Rat& exp, long c, ExponentLattice lat = {});

PuiseuxPoly pp_add(const PuiseuxPoly& f, const PuiseuxPoly& g);
PuiseuxPoly pp_neg(const PuiseuxPoly& f);
PuiseuxPoly pp_mul(const PuiseuxPoly& f, const PuiseuxPoly& g);
PuiseuxPoly pp_pow(const PuiseuxPoly& f, unsigned long e);
// Exponent-wise /p; Frobenius inverse (coefficients are F_p-fixed).
PuiseuxPoly pp_root(const PuiseuxPoly& f, unsigned long p);

NormValue pp_sup_norm(const PuiseuxPoly& f, const Rat& r);
NormValue pp_l1_norm(const PuiseuxPoly& f, const Rat& r);  // not multiplicative

bool pp_eq(const PuiseuxPoly& f, const PuiseuxPoly& g);

}  // namespace f1an
