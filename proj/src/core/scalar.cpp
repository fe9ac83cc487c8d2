#include "core/scalar.hpp"

#include <cmath>

namespace f1an {

namespace {

Int pmod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

void check_tags(const GroundScalar& x, const GroundScalar& y) {
  if (x.tag != y.tag || x.p != y.p || x.N != y.N)
    throw F1Error(Errc::TagMismatch, "scalars live in different rings");
}

// Put a p-adic back in canonical p^val * unit form.
GroundScalar padic_canon(unsigned long p, unsigned N, long val, Int residue, bool exact_zero) {
  GroundScalar z;
  z.tag = GroundScalar::Tag::Padic;
  z.p = p;
  z.N = N;
  Int pN = ipow(Int(static_cast<long>(p)), N);
  residue = pmod(residue, pN);
  if (residue == 0) {
    z.ival = 0;
    z.val = 0;
    z.exact_zero = exact_zero;
    return z;
  }
  unsigned long shift = p_valuation(residue, p);
  z.ival = residue / ipow(Int(static_cast<long>(p)), shift);
  z.val = val + static_cast<long>(shift);
  z.exact_zero = false;
  return z;
}

}  // namespace

bool GroundScalar::is_zero() const {
  switch (tag) {
    case Tag::Fp: return ival == 0;
    case Tag::Padic: return ival == 0;  // exact or exhausted; callers check exact_zero
    case Tag::ArchInt: return ival == 0;
    case Tag::TrivQ: return rval == 0;
    case Tag::Real:
    case Tag::Complex: return cval == std::complex<double>(0.);
  }
  return false;
}

GroundScalar fp_make(unsigned long p, const Int& value) {
  GroundScalar z;
  z.tag = GroundScalar::Tag::Fp;
  z.p = p;
  z.ival = pmod(value, Int(static_cast<long>(p)));
  return z;
}

GroundScalar padic_from_integer(const Int& m, unsigned long p, unsigned N) {
  if (m == 0) return padic_canon(p, N, 0, 0, true);
  unsigned long v = p_valuation(m, p);
  Int unit = m / ipow(Int(static_cast<long>(p)), v);
  return padic_canon(p, N, static_cast<long>(v), unit, false);
}

GroundScalar padic_from_rational(const Rat& q, unsigned long p, unsigned N) {
  if (q == 0) return padic_canon(p, N, 0, 0, true);
  Int num = q.get_num(), den = q.get_den();
  long v = static_cast<long>(p_valuation(num, p)) - static_cast<long>(p_valuation(den, p));
  Int pv_num = ipow(Int(static_cast<long>(p)), p_valuation(num, p));
  Int pv_den = ipow(Int(static_cast<long>(p)), p_valuation(den, p));
  Int unum = num / pv_num, uden = den / pv_den;
  Int pN = ipow(Int(static_cast<long>(p)), N);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), uden.get_mpz_t(), pN.get_mpz_t()) == 0)
    throw F1Error(Errc::InternalError, "unit denominator not invertible mod p^N");
  return padic_canon(p, N, v, unum * inv, false);
}

GroundScalar archint_make(const Int& value) {
  GroundScalar z;
  z.tag = GroundScalar::Tag::ArchInt;
  z.ival = value;
  return z;
}

GroundScalar trivq_make(const Rat& value) {
  GroundScalar z;
  z.tag = GroundScalar::Tag::TrivQ;
  z.rval = value;
  return z;
}

GroundScalar real_make(double value) {
  GroundScalar z;
  z.tag = GroundScalar::Tag::Real;
  z.cval = value;
  return z;
}

GroundScalar complex_make(std::complex<double> value) {
  GroundScalar z;
  z.tag = GroundScalar::Tag::Complex;
  z.cval = value;
  return z;
}

GroundScalar scalar_add(const GroundScalar& x, const GroundScalar& y) {
  check_tags(x, y);
  GroundScalar z = x;
  switch (x.tag) {
    case GroundScalar::Tag::Fp:
      z.ival = pmod(x.ival + y.ival, Int(static_cast<long>(x.p)));
      return z;
    case GroundScalar::Tag::Padic: {
      if (x.exact_zero || (x.ival == 0 && x.exact_zero)) return y;
      if (y.exact_zero) return x;
      if (x.ival == 0) return y;  // exhausted zero absorbs like zero at this precision
      if (y.ival == 0) return x;
      long v = std::min(x.val, y.val);
      Int P(static_cast<long>(x.p));
      Int rx = x.ival * ipow(P, static_cast<unsigned long>(x.val - v));
      Int ry = y.ival * ipow(P, static_cast<unsigned long>(y.val - v));
      return padic_canon(x.p, x.N, v, rx + ry, false);
    }
    case GroundScalar::Tag::ArchInt:
      z.ival = x.ival + y.ival;
      return z;
    case GroundScalar::Tag::TrivQ:
      z.rval = x.rval + y.rval;
      return z;
    case GroundScalar::Tag::Real:
    case GroundScalar::Tag::Complex:
      z.cval = x.cval + y.cval;
      return z;
  }
  throw F1Error(Errc::InternalError, "bad tag");
}

GroundScalar scalar_mul(const GroundScalar& x, const GroundScalar& y) {
  check_tags(x, y);
  GroundScalar z = x;
  switch (x.tag) {
    case GroundScalar::Tag::Fp:
      z.ival = pmod(x.ival * y.ival, Int(static_cast<long>(x.p)));
      return z;
    case GroundScalar::Tag::Padic: {
      if (x.exact_zero || y.exact_zero) return padic_canon(x.p, x.N, 0, 0, true);
      if (x.ival == 0 || y.ival == 0) return padic_canon(x.p, x.N, 0, 0, false);
      return padic_canon(x.p, x.N, x.val + y.val, x.ival * y.ival, false);
    }
    case GroundScalar::Tag::ArchInt:
      z.ival = x.ival * y.ival;
      return z;
    case GroundScalar::Tag::TrivQ:
      z.rval = x.rval * y.rval;
      return z;
    case GroundScalar::Tag::Real:
    case GroundScalar::Tag::Complex:
      z.cval = x.cval * y.cval;
      return z;
  }
  throw F1Error(Errc::InternalError, "bad tag");
}

GroundScalar scalar_neg(const GroundScalar& x) {
  GroundScalar z = x;
  switch (x.tag) {
    case GroundScalar::Tag::Fp:
      z.ival = pmod(-x.ival, Int(static_cast<long>(x.p)));
      return z;
    case GroundScalar::Tag::Padic: {
      if (x.exact_zero || x.ival == 0) return x;
      Int pN = ipow(Int(static_cast<long>(x.p)), x.N);
      return padic_canon(x.p, x.N, x.val, pN - x.ival, false);
    }
    case GroundScalar::Tag::ArchInt:
      z.ival = -x.ival;
      return z;
    case GroundScalar::Tag::TrivQ:
      z.rval = -x.rval;
      return z;
    case GroundScalar::Tag::Real:
    case GroundScalar::Tag::Complex:
      z.cval = -x.cval;
      return z;
  }
  throw F1Error(Errc::InternalError, "bad tag");
}

GroundScalar scalar_inv(const GroundScalar& x) {
  GroundScalar z = x;
  switch (x.tag) {
    case GroundScalar::Tag::Fp: {
      if (x.ival == 0) throw F1Error(Errc::DivisionByZero, "inverse of 0 in F_p");
      Int inv, P(static_cast<long>(x.p));
      mpz_invert(inv.get_mpz_t(), x.ival.get_mpz_t(), P.get_mpz_t());
      z.ival = inv;
      return z;
    }
    case GroundScalar::Tag::Padic: {
      if (x.exact_zero) throw F1Error(Errc::DivisionByZero, "inverse of 0 in Q_p");
      if (x.ival == 0)
        throw F1Error(Errc::PrecisionExhausted, "inverse of an element with no surviving digits");
      Int inv, pN = ipow(Int(static_cast<long>(x.p)), x.N);
      mpz_invert(inv.get_mpz_t(), x.ival.get_mpz_t(), pN.get_mpz_t());
      return padic_canon(x.p, x.N, -x.val, inv, false);
    }
    case GroundScalar::Tag::ArchInt: {
      if (x.ival != 1 && x.ival != -1)
        throw F1Error(Errc::DivisionByZero, "non-unit integer has no inverse");
      return x;
    }
    case GroundScalar::Tag::TrivQ:
      if (x.rval == 0) throw F1Error(Errc::DivisionByZero, "inverse of 0");
      z.rval = 1 / x.rval;
      return z;
    case GroundScalar::Tag::Real:
    case GroundScalar::Tag::Complex:
      if (x.cval == std::complex<double>(0.))
        throw F1Error(Errc::DivisionByZero, "inverse of 0");
      z.cval = 1. / x.cval;
      return z;
  }
  throw F1Error(Errc::InternalError, "bad tag");
}

NormValue scalar_norm(const GroundScalar& x, const NormSpec& spec) {
  auto apply = [&](const NormValue& plain) {
    switch (spec.kind) {
      case NormSpec::Kind::Plain: return plain;
      case NormSpec::Kind::Exponent: return plain.pow(spec.s);
      case NormSpec::Kind::TwoSided:
        return nv_max(plain.pow(spec.s1), plain.pow(spec.s2));
    }
    return plain;
  };
  switch (x.tag) {
    case GroundScalar::Tag::Fp:
    case GroundScalar::Tag::TrivQ:
      return x.is_zero() ? NormValue::zero() : apply(NormValue::one());
    case GroundScalar::Tag::Padic: {
      if (x.exact_zero) return NormValue::zero();
      if (x.ival == 0)
        throw F1Error(Errc::PrecisionExhausted,
                      "all digits cancelled; valuation is not determined at this precision");
      return apply(NormValue::pow_rat(Rat(static_cast<long>(x.p)), Rat(-x.val)));
    }
    case GroundScalar::Tag::ArchInt: {
      if (x.ival == 0) return NormValue::zero();
      return apply(NormValue::from_rat(Rat(abs(x.ival))));
    }
    case GroundScalar::Tag::Real:
    case GroundScalar::Tag::Complex: {
      double a = std::abs(x.cval);
      if (a == 0.) return NormValue::zero();
      return apply(NormValue::from_double(a));
    }
  }
  throw F1Error(Errc::InternalError, "bad tag");
}

std::vector<unsigned long> padic_digits(const GroundScalar& x) {
  if (x.tag != GroundScalar::Tag::Padic)
    throw F1Error(Errc::TagMismatch, "digit expansion needs a p-adic");
  if (x.val < 0) throw F1Error(Errc::InvalidElement, "negative valuation has no N-digit expansion");
  Int P(static_cast<long>(x.p));
  Int r = pmod(x.ival * ipow(P, static_cast<unsigned long>(x.val)), ipow(P, x.N));
  std::vector<unsigned long> out(x.N, 0);
  for (unsigned i = 0; i < x.N && r != 0; ++i) {
    Int d = r % P;
    out[i] = d.get_ui();
    r /= P;
  }
  return out;
}

bool scalar_eq(const GroundScalar& x, const GroundScalar& y) {
  if (x.tag != y.tag) return false;
  switch (x.tag) {
    case GroundScalar::Tag::Fp: return x.p == y.p && x.ival == y.ival;
    case GroundScalar::Tag::Padic:
      return x.p == y.p && x.N == y.N && x.ival == y.ival &&
             (x.ival == 0 ? x.exact_zero == y.exact_zero : x.val == y.val);
    case GroundScalar::Tag::ArchInt: return x.ival == y.ival;
    case GroundScalar::Tag::TrivQ: return x.rval == y.rval;
    case GroundScalar::Tag::Real:
    case GroundScalar::Tag::Complex: return x.cval == y.cval;
  }
  return false;
}

}  // namespace f1an
