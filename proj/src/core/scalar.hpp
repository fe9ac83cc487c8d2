#pragma once

#include <complex>
#include <vector>

#include "core/errors.hpp"
#include "core/norm_value.hpp"
#include "core/rational.hpp"

namespace f1an {

// Concrete ground Banach rings. One tagged value type keeps the C API and the
// JSON layer simple; arithmetic is exact everywhere except Real/Complex.
struct GroundScalar {
  enum class Tag { Fp, Padic, ArchInt, TrivQ, Real, Complex };
  Tag tag = Tag::TrivQ;

  unsigned long p = 0;  // Fp, Padic
  unsigned N = 0;       // Padic: absolute precision in digits

  // Padic value = p^val * unit with unit a residue mod p^N, unit % p != 0
  // unless the residue vanished.  exact_zero marks a literal zero (norm 0)
  // as opposed to "all N digits cancelled" (norm undetermined).
  Int ival = 0;  // Fp residue / Padic unit / ArchInt value
  long val = 0;
  bool exact_zero = false;

  Rat rval = 0;                    // TrivQ
  std::complex<double> cval = 0.;  // Real (imag 0) / Complex

  bool is_zero() const;
};

struct NormSpec {
  enum class Kind { Plain, Exponent, TwoSided };
  Kind kind = Kind::Plain;
  Rat s = 1;        // Exponent
  Rat s1 = 1, s2 = 1;  // TwoSided, s1 < s2
};

GroundScalar fp_make(unsigned long p, const Int& value);
GroundScalar padic_from_integer(const Int& m, unsigned long p, unsigned N);
GroundScalar padic_from_rational(const Rat& q, unsigned long p, unsigned N);
GroundScalar archint_make(const Int& value);
GroundScalar trivq_make(const Rat& value);
GroundScalar real_make(double value);
GroundScalar complex_make(std::complex<double> value);

GroundScalar scalar_add(const GroundScalar& x, const GroundScalar& y);
GroundScalar scalar_mul(const GroundScalar& x, const GroundScalar& y);
GroundScalar scalar_neg(const GroundScalar& x);
GroundScalar scalar_inv(const GroundScalar& x);

// |x| with the exponent / two-sided decoration applied in log domain.
// beta/eps exponents for ArchInt/Real/Complex ride on the spec.
NormValue scalar_norm(const GroundScalar& x, const NormSpec& spec = {});

// Absolute digit expansion of a p-adic with val >= 0 (value mod p^N).
std::vector<unsigned long> padic_digits(const GroundScalar& x);

bool scalar_eq(const GroundScalar& x, const GroundScalar& y);

}  // namespace f1an
