#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/norm_value.hpp"

namespace f1an {

// A finite pointed set with a semi-norm vanishing at the basepoint.
struct FiniteNormedSet {
  std::vector<std::string> elements;  // basepoint first, rest sorted
  std::string basepoint;
  std::map<std::string, NormValue> norms;  // off-basepoint entries only

  bool contains(const std::string& e) const;
  NormValue norm(const std::string& e) const;  // 0 for basepoint
  // true when every off-basepoint norm is nonzero
  bool is_normed() const;
  std::size_t size() const { return elements.size(); }
};

FiniteNormedSet make_normed_set(const std::vector<std::string>& elements,
                                const std::string& basepoint,
                                const std::map<std::string, NormValue>& norms);

struct PointedMap {
  FiniteNormedSet source, target;
  std::map<std::string, std::string> assignment;  // total on source elements
};

PointedMap make_pointed_map(FiniteNormedSet source, FiniteNormedSet target,
                            std::map<std::string, std::string> assignment);

// Least C with |f(x)| <= C |x|; throws Unbounded when |x|=0, |f(x)|>0.
NormValue bound_constant(const PointedMap& f);

// Collapse the kernel of the norm to the basepoint.
FiniteNormedSet separation(const FiniteNormedSet& x);

std::string pair_name(const std::string& a, const std::string& b);

FiniteNormedSet product(const FiniteNormedSet& x, const FiniteNormedSet& y);
FiniteNormedSet coproduct(const FiniteNormedSet& x, const FiniteNormedSet& y);
FiniteNormedSet coequalizer(const PointedMap& f, const PointedMap& g, bool separated = false);
FiniteNormedSet smash_tensor(const FiniteNormedSet& x, const FiniteNormedSet& y);

// All pointed maps X -> Y with the sup operator norm.  Elements named by
// their graph; basepoint is the constant-basepoint map.
FiniteNormedSet internal_hom(const FiniteNormedSet& x, const FiniteNormedSet& y,
                             std::size_t cap = 100000);
std::string hom_elem_name(const PointedMap& f);
// Inverse of hom_elem_name against given source/target.
PointedMap hom_elem_map(const FiniteNormedSet& x, const FiniteNormedSet& y,
                        const std::string& name);

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool strict_mono = false;
  bool strict_epi = false;
  bool strict = false;
  bool iso = false;
};

MorphismClass classify_morphism(const PointedMap& f);

// (N1, N2) with |.|_1 <= N1 |.|_2 and |.|_2 <= N2 |.|_1 pointwise.
std::pair<NormValue, NormValue> equivalence_constants(const FiniteNormedSet& n1,
                                                      const FiniteNormedSet& n2);

}  // namespace f1an
