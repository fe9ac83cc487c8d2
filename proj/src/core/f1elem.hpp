#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/monoid.hpp"
#include "core/normed_set.hpp"
#include "core/scalar.hpp"

namespace f1an {

// Free normed module on a geometric monoid: finite formal sum Σ r_q · X^q.
// The monoid sits inside its pointed hull, so X^0 has weight 1 (not 0).
struct F1Element {
  GeometricMonoid base;
  std::map<Rat, GroundScalar> support;  // no exact zeros stored
};

// Same thing over a finite normed set; support excludes the basepoint.
struct F1SetElement {
  FiniteNormedSet base;
  std::map<std::string, GroundScalar> support;
};

struct GaussNormSpec {
  enum class Mode { L1, Sup };
  Mode mode = Mode::L1;
  NormSpec scalar;
  std::optional<Radius> radius;  // overrides the base radius (monoid case)
};

NormValue monoid_weight(const GeometricMonoid& m, const Rat& q,
                        const std::optional<Radius>& radius_override = std::nullopt);

F1Element f1_make(const GeometricMonoid& base,
                  const std::vector<std::pair<Rat, GroundScalar>>& terms);
F1SetElement f1s_make(const FiniteNormedSet& base,
                      const std::vector<std::pair<std::string, GroundScalar>>& terms);

NormValue bc_norm(const F1Element& e, const GaussNormSpec& spec);
NormValue bc_norm(const F1SetElement& e, const GaussNormSpec& spec);

F1Element convolve(const F1Element& f, const F1Element& g);

bool f1_eq(const F1Element& f, const F1Element& g);

// Codiagonal comparison: the smash-route norm of a finite support over X∧Y
// against the iterated route (inner sum over Y, then weighted outer sum).
struct CompatReport {
  bool ok = true;
  NormValue lhs, rhs;
  std::string witness;
};
CompatReport tensor_compat_check(
    const FiniteNormedSet& x, const FiniteNormedSet& y,
    const std::vector<std::pair<std::pair<std::string, std::string>, GroundScalar>>& probe,
    const NormSpec& ring_norm);

struct CofinalityReport {
  NormValue l1_at_rho_prime;
  NormValue sup_at_rho;
  NormValue bound;  // sup · constant
  bool ok = false;
};
CofinalityReport cofinality_check(const F1Element& a, const Rat& rho, const Rat& rho_prime);

// Per-member agreement of "norm the coefficients, then sum" under two
// summation associations; the finite shadow of base change commuting with
// projective limits of ring norms.
struct FamilyBCReport {
  bool ok = true;
  double max_log2_gap = 0.0;
  std::string witness;
};
FamilyBCReport family_base_change(const std::vector<NormSpec>& family,
                                  const std::vector<F1SetElement>& probes);

}  // namespace f1an
