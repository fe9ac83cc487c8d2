#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace f1an {

// Relative comparison tolerance in the linear domain.
inline constexpr double kTau = 1e-9;

// A nonnegative norm magnitude kept in log domain, with an exact-zero
// sentinel.  Values built from rational bases raised to rational exponents
// keep an exact factorization alongside the float log, so products of such
// values compare exactly; everything else degrades to double log2.
class NormValue {
 public:
  NormValue() : zero_(true), log2_(-std::numeric_limits<double>::infinity()) {}

  static NormValue zero() { return NormValue(); }
  static NormValue one();
  // base^exp, base > 0 rational, exp rational; exact.
  static NormValue pow_rat(const Rat& base, const Rat& exp);
  static NormValue from_rat(const Rat& v);  // v >= 0, exact
  static NormValue from_double(double v);   // v >= 0, inexact

  bool is_zero() const { return zero_; }
  bool is_exact() const { return zero_ || exact_; }
  double log2_magnitude() const { return log2_; }
  double value() const { return zero_ ? 0.0 : std::exp2(log2_); }

  NormValue operator*(const NormValue& o) const;
  NormValue pow(const Rat& e) const;  // zero^e = zero (e > 0)
  NormValue inverse() const;          // throws on zero

  // Total-order comparison: -1/0/1.  Exact when both sides carry exact
  // factorizations whose ratio can be resolved in integer arithmetic;
  // double log2 otherwise.
  int compare(const NormValue& o) const;
  bool operator<(const NormValue& o) const { return compare(o) < 0; }
  bool operator==(const NormValue& o) const { return compare(o) == 0; }

  // Relative-tolerance equality / ordering in the linear domain.
  bool approx_eq(const NormValue& o, double tau = kTau) const;
  // this <= o * (1 + tau)
  bool leq(const NormValue& o, double tau = kTau) const;

  // Compensated linear-domain accumulation; exact passthrough when at most
  // one summand is nonzero.
  static NormValue sum(std::span<const NormValue> vals);

  std::string str() const;

  // The exact rational value, when the factorization resolves to one of
  // manageable size; nullopt otherwise.
  std::optional<Rat> exact_rational() const;

 private:
  struct Factor {
    Rat base;  // > 0, != 1
    Rat exp;   // != 0
  };

  bool zero_;
  bool exact_ = false;
  double log2_;
  std::vector<Factor> factors_;  // meaningful only when exact_

  void recompute_log2();
  friend NormValue nv_max(const NormValue&, const NormValue&);
  friend NormValue nv_min(const NormValue&, const NormValue&);
};

NormValue nv_max(const NormValue& a, const NormValue& b);
NormValue nv_min(const NormValue& a, const NormValue& b);

}  // namespace f1an
