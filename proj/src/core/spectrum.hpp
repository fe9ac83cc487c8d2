#pragma once

#include <complex>
#include <string>
#include <vector>

#include "core/f1elem.hpp"
#include "core/norm_value.hpp"

namespace f1an {

// A point of the spectrum of Z: one bounded multiplicative seminorm.
struct SpectrumPoint {
  enum class Branch { Trivial, Prime, Arch };
  Branch branch = Branch::Trivial;
  unsigned long p = 0;      // Prime
  Rat eps = 1;              // Prime: (0,inf); Arch: (0,1]
  bool residue_tip = false; // Prime with eps = inf: 0 if p|n else 1
};

SpectrumPoint trivial_point();
SpectrumPoint prime_point(unsigned long p, const Rat& eps);
SpectrumPoint prime_residue_point(unsigned long p);
SpectrumPoint arch_point(const Rat& eps);

NormValue eval_point(const SpectrumPoint& pt, const Int& n);

struct ValidationReport {
  bool ok = true;
  std::string witness;
};
ValidationReport validate_point(const SpectrumPoint& pt, const std::vector<Int>& samples);

struct IntervalRingSpec {
  enum class Kind { Padic, Real };
  Kind kind = Kind::Padic;
  unsigned long p = 2;  // Padic
  Rat r1 = 0, r2 = 1;   // r1 < r2
  bool integral = false;  // integral subring: membership ignores r1
};

bool interval_contains(const IntervalRingSpec& spec, const SpectrumPoint& pt);

struct ExportOptions {
  unsigned long max_prime = 7;
  unsigned samples_per_branch = 9;
  std::vector<IntervalRingSpec> overlays;
  enum class Format { Json, Svg } format = Format::Json;
};

std::string export_tree(const ExportOptions& opt);

// Σ a_q e^{qz} for complex-coefficient f over a Q-monoid; checks the bound
// |f(z)| <= L1 norm at radius e^{Re z}.
std::complex<double> complex_eval(const F1Element& f, std::complex<double> z);

}  // namespace f1an
