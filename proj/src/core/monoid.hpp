#pragma once

#include <optional>
#include <vector>

#include "core/norm_value.hpp"

namespace f1an {

// A radius held as an exact rational power base^exp, so that p-th roots of
// rational radii stay exact.
struct Radius {
  Rat base;      // in (0, 1) for geometric norms, > 0 generally
  Rat exp = 1;   // > 0

  NormValue pow(const Rat& q) const { return NormValue::pow_rat(base, exp * q); }
  double value() const { return NormValue::pow_rat(base, exp).value(); }
  Radius root(unsigned long p) const { return Radius{base, exp / Rat(static_cast<long>(p))}; }
  Radius power(unsigned long p) const { return Radius{base, exp * Rat(static_cast<long>(p))}; }
};

enum class Carrier { N, Z, FracN, FracZ, Q };

// N_r, Z_r, (1/n)N_r, (1/n)Z_r, Q_r and their two-radius variants.
// Single radius: |q| = r^q.  Two radii r1 < r2: |q| = r1^q (q < 0), r2^q (q > 0).
struct GeometricMonoid {
  Carrier carrier = Carrier::N;
  unsigned long frac_den = 1;  // for FracN / FracZ
  bool two_sided = false;
  Radius r1, r2;  // r1 doubles as the single radius

  bool contains(const Rat& q) const;
  NormValue norm_of(const Rat& q) const;  // throws InvalidElement off-carrier
  bool divisible() const { return carrier == Carrier::Q; }
};

GeometricMonoid make_single(Carrier c, Radius r, unsigned long frac_den = 1);
GeometricMonoid make_two_sided(Carrier c, Radius r1, Radius r2, unsigned long frac_den = 1);

// The isometry q |-> p q into the monoid with radius r^(1/p).
struct ScaleByP {
  unsigned long p;
  GeometricMonoid source, target;
  Rat forward(const Rat& q) const { return q * Rat(static_cast<long>(p)); }
  // defined when the source is divisible
  Rat backward(const Rat& q) const { return q / Rat(static_cast<long>(p)); }
  bool invertible;
};

ScaleByP scale_by_p(const GeometricMonoid& m, unsigned long p);

// Quotient norm of the class of n in Coker(S_{r'} (x) S_{r'} (x) S_r =>
// S_{r'} (x) S_r), by exact enumeration of the n+1 representatives.
NormValue quotient_cokernel_norm(const Radius& r_prime, const Radius& r, unsigned long n);

enum class FamilyKind { Inductive, Projective };

struct NormFamily {
  FamilyKind kind = FamilyKind::Projective;
  std::vector<GeometricMonoid> members;
};

// Default probe exponents {0, +-k, +-1/k : k <= 8}.
std::vector<Rat> default_probes(unsigned max_k = 8);

struct BoundCertEntry {
  std::size_t target_member = 0;
  std::size_t source_member = 0;
  double constant = 0.0;
};

struct FamilyBoundReport {
  bool ok = false;
  std::vector<BoundCertEntry> forward;   // q -> p q
  std::vector<BoundCertEntry> backward;  // q -> q / p
  std::string witness;                   // set when !ok
};

// Probe-certified boundedness of multiplication by p and by 1/p on a
// projective family of two-radius Q-monoids.
FamilyBoundReport frobenius_family_bound(const NormFamily& family, unsigned long p,
                                         const std::vector<Rat>& probes = default_probes());

// Probe-certified boundedness of a single map q -> factor*q between two
// members; nullopt when no finite constant shows up on the probes.
std::optional<double> probe_bound(const GeometricMonoid& src, const GeometricMonoid& tgt,
                                  const Rat& factor, const std::vector<Rat>& probes);

}  // namespace f1an
