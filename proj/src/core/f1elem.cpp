#include "core/f1elem.hpp"

#include <algorithm>

namespace f1an {

NormValue monoid_weight(const GeometricMonoid& m, const Rat& q,
                        const std::optional<Radius>& radius_override) {
  if (!m.contains(q)) throw F1Error(Errc::InvalidElement, "exponent outside carrier: " + rat_str(q));
  if (radius_override) return radius_override->pow(q);
  if (!m.two_sided) return m.r1.pow(q);  // q = 0 gives 1: the monoid unit, not the basepoint
  if (q == 0) return NormValue::one();
  return q < 0 ? m.r1.pow(q) : m.r2.pow(q);
}

F1Element f1_make(const GeometricMonoid& base,
                  const std::vector<std::pair<Rat, GroundScalar>>& terms) {
  F1Element e;
  e.base = base;
  for (const auto& [q, c] : terms) {
    if (!base.contains(q))
      throw F1Error(Errc::InvalidElement, "exponent outside carrier: " + rat_str(q));
    if (c.is_zero() && (c.tag != GroundScalar::Tag::Padic || c.exact_zero)) continue;
    auto [it, fresh] = e.support.emplace(q, c);
    if (!fresh) {
      it->second = scalar_add(it->second, c);
      if (it->second.is_zero() &&
          (it->second.tag != GroundScalar::Tag::Padic || it->second.exact_zero))
        e.support.erase(it);
    }
  }
  return e;
}

F1SetElement f1s_make(const FiniteNormedSet& base,
                      const std::vector<std::pair<std::string, GroundScalar>>& terms) {
  F1SetElement e;
  e.base = base;
  for (const auto& [x, c] : terms) {
    if (!base.contains(x)) throw F1Error(Errc::InvalidElement, "unknown element: " + x);
    if (x == base.basepoint) continue;
    if (c.is_zero() && (c.tag != GroundScalar::Tag::Padic || c.exact_zero)) continue;
    auto [it, fresh] = e.support.emplace(x, c);
    if (!fresh) {
      it->second = scalar_add(it->second, c);
      if (it->second.is_zero() &&
          (it->second.tag != GroundScalar::Tag::Padic || it->second.exact_zero))
        e.support.erase(it);
    }
  }
  return e;
}

namespace {

NormValue combine(GaussNormSpec::Mode mode, const std::vector<NormValue>& parts) {
  if (parts.empty()) return NormValue::zero();
  if (mode == GaussNormSpec::Mode::L1) return NormValue::sum(parts);
  NormValue best = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) best = nv_max(best, parts[i]);
  return best;
}

}  // namespace

NormValue bc_norm(const F1Element& e, const GaussNormSpec& spec) {
  std::vector<NormValue> parts;
  parts.reserve(e.support.size());
  for (const auto& [q, c] : e.support)
    parts.push_back(scalar_norm(c, spec.scalar) * monoid_weight(e.base, q, spec.radius));
  return combine(spec.mode, parts);
}

NormValue bc_norm(const F1SetElement& e, const GaussNormSpec& spec) {
  std::vector<NormValue> parts;
  parts.reserve(e.support.size());
  for (const auto& [x, c] : e.support)
    parts.push_back(scalar_norm(c, spec.scalar) * e.base.norm(x));
  return combine(spec.mode, parts);
}

F1Element convolve(const F1Element& f, const F1Element& g) {
  if (f.base.carrier != g.base.carrier || f.base.two_sided != g.base.two_sided)
    throw F1Error(Errc::TagMismatch, "convolution needs one base monoid");
  std::vector<std::pair<Rat, GroundScalar>> terms;
  for (const auto& [qf, cf] : f.support)
    for (const auto& [qg, cg] : g.support)
      terms.emplace_back(qf + qg, scalar_mul(cf, cg));
  return f1_make(f.base, terms);
}

bool f1_eq(const F1Element& f, const F1Element& g) {
  if (f.support.size() != g.support.size()) return false;
  for (auto itf = f.support.begin(), itg = g.support.begin(); itf != f.support.end();
       ++itf, ++itg) {
    if (itf->first != itg->first || !scalar_eq(itf->second, itg->second)) return false;
  }
  return true;
}

CompatReport tensor_compat_check(
    const FiniteNormedSet& x, const FiniteNormedSet& y,
    const std::vector<std::pair<std::pair<std::string, std::string>, GroundScalar>>& probe,
    const NormSpec& ring_norm) {
  CompatReport rep;
  // Smash route: one flat sum with weight |a|·|c|.
  std::vector<NormValue> flat;
  // Iterated route: inner ℓ¹ over y per x-fiber, then weighted outer sum.
  std::map<std::string, std::vector<NormValue>> fibers;
  for (const auto& [pair, coeff] : probe) {
    const auto& [a, c] = pair;
    if (!x.contains(a) || !y.contains(c))
      throw F1Error(Errc::InvalidElement, "probe term outside the factors");
    if (a == x.basepoint || c == y.basepoint) continue;  // smashed away
    NormValue cn = scalar_norm(coeff, ring_norm);
    flat.push_back(cn * x.norm(a) * y.norm(c));
    fibers[a].push_back(cn * y.norm(c));
  }
  rep.lhs = NormValue::sum(flat);
  std::vector<NormValue> outer;
  for (const auto& [a, inner] : fibers) outer.push_back(x.norm(a) * NormValue::sum(inner));
  rep.rhs = NormValue::sum(outer);
  rep.ok = rep.lhs.approx_eq(rep.rhs);
  if (!rep.ok)
    rep.witness = "codiagonal routes differ: " + rep.lhs.str() + " vs " + rep.rhs.str();
  return rep;
}

CofinalityReport cofinality_check(const F1Element& a, const Rat& rho, const Rat& rho_prime) {
  if (!(rho_prime > 0 && rho_prime < rho))
    throw F1Error(Errc::InvalidRadii, "need 0 < rho' < rho");
  CofinalityReport rep;
  GaussNormSpec l1{GaussNormSpec::Mode::L1, {}, Radius{rho_prime}};
  GaussNormSpec sup{GaussNormSpec::Mode::Sup, {}, Radius{rho}};
  rep.l1_at_rho_prime = bc_norm(a, l1);
  rep.sup_at_rho = bc_norm(a, sup);

  bool natural_support = true;
  for (const auto& [q, c] : a.support)
    if (q.get_den() != 1 || q < 0) natural_support = false;

  Rat t = rho_prime / rho;
  NormValue constant;
  if (natural_support) {
    // geometric tail: Σ_{n≥0} t^n = (1 − t)^{-1}
    constant = NormValue::from_rat(1 / (1 - t));
  } else {
    std::vector<NormValue> parts;
    for (const auto& [q, c] : a.support) parts.push_back(NormValue::pow_rat(t, q));
    constant = NormValue::sum(parts);
  }
  rep.bound = rep.sup_at_rho * constant;
  rep.ok = rep.l1_at_rho_prime.leq(rep.bound);
  return rep;
}

FamilyBCReport family_base_change(const std::vector<NormSpec>& family,
                                  const std::vector<F1SetElement>& probes) {
  FamilyBCReport rep;
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    const auto& e = probes[pi];
    for (std::size_t mi = 0; mi < family.size(); ++mi) {
      GaussNormSpec spec{GaussNormSpec::Mode::L1, family[mi], std::nullopt};
      NormValue forward = bc_norm(e, spec);
      // Same data, reverse association.
      std::vector<NormValue> parts;
      for (auto it = e.support.rbegin(); it != e.support.rend(); ++it)
        parts.push_back(scalar_norm(it->second, family[mi]) * e.base.norm(it->first));
      NormValue backward = NormValue::sum(parts);
      double gap = std::abs(forward.log2_magnitude() - backward.log2_magnitude());
      if (!forward.is_zero() && !backward.is_zero())
        rep.max_log2_gap = std::max(rep.max_log2_gap, gap);
      if (!forward.approx_eq(backward)) {
        rep.ok = false;
        rep.witness = "probe " + std::to_string(pi) + ", member " + std::to_string(mi);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace f1an
