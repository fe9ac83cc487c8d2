#include "core/monoid.hpp"

#include <algorithm>
#include <sstream>

namespace f1an {

bool GeometricMonoid::contains(const Rat& q) const {
  switch (carrier) {
    case Carrier::N:
      return q.get_den() == 1 && q >= 0;
    case Carrier::Z:
      return q.get_den() == 1;
    case Carrier::FracN:
      return Rat(q * Rat(static_cast<long>(frac_den))).get_den() == 1 && q >= 0;
    case Carrier::FracZ:
      return Rat(q * Rat(static_cast<long>(frac_den))).get_den() == 1;
    case Carrier::Q:
      return true;
  }
  return false;
}

NormValue GeometricMonoid::norm_of(const Rat& q) const {
  if (!contains(q)) throw F1Error(Errc::InvalidElement, "exponent outside carrier: " + rat_str(q));
  if (q == 0) return NormValue::zero();
  if (!two_sided) return r1.pow(q);
  return q < 0 ? r1.pow(q) : r2.pow(q);
}

GeometricMonoid make_single(Carrier c, Radius r, unsigned long frac_den) {
  if (r.base <= 0) throw F1Error(Errc::InvalidRadii, "radius must be positive");
  GeometricMonoid m;
  m.carrier = c;
  m.frac_den = frac_den;
  m.two_sided = false;
  m.r1 = m.r2 = r;
  return m;
}

GeometricMonoid make_two_sided(Carrier c, Radius r1, Radius r2, unsigned long frac_den) {
  if (r1.base <= 0 || r2.base <= 0) throw F1Error(Errc::InvalidRadii, "radius must be positive");
  if (!(NormValue::pow_rat(r1.base, r1.exp) < NormValue::pow_rat(r2.base, r2.exp)))
    throw F1Error(Errc::InvalidRadii, "two-radius spec needs r1 < r2");
  GeometricMonoid m;
  m.carrier = c;
  m.frac_den = frac_den;
  m.two_sided = true;
  m.r1 = r1;
  m.r2 = r2;
  return m;
}

ScaleByP scale_by_p(const GeometricMonoid& m, unsigned long p) {
  if (m.two_sided)
    throw F1Error(Errc::Unsupported,
                  "two-radius specs go through frobenius_family_bound, not scale_by_p");
  GeometricMonoid tgt = m;
  tgt.r1 = tgt.r2 = m.r1.root(p);
  return ScaleByP{p, m, tgt, m.divisible()};
}

NormValue quotient_cokernel_norm(const Radius& r_prime, const Radius& r, unsigned long n) {
  if (!(NormValue::pow_rat(r_prime.base, r_prime.exp) < NormValue::pow_rat(r.base, r.exp)))
    throw F1Error(Errc::InvalidRadii, "need r' < r");
  if (n == 0) return NormValue::zero();
  NormValue best = r.pow(Rat(static_cast<long>(n)));  // (a,b) = (0,n)
  for (unsigned long a = 1; a <= n; ++a) {
    NormValue cand = r_prime.pow(Rat(static_cast<long>(a))) *
                     r.pow(Rat(static_cast<long>(n - a)));
    best = nv_min(best, cand);
  }
  NormValue expected = r_prime.pow(Rat(static_cast<long>(n)));
  if (best.compare(expected) != 0)
    throw F1Error(Errc::InternalError, "cokernel quotient norm != (r')^n");
  return best;
}

std::vector<Rat> default_probes(unsigned max_k) {
  std::vector<Rat> out{Rat(0)};
  for (unsigned k = 1; k <= max_k; ++k) {
    Rat kk(static_cast<long>(k));
    out.push_back(kk);
    out.push_back(-kk);
    if (k > 1) {
      out.push_back(1 / kk);
      out.push_back(-1 / kk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<double> probe_bound(const GeometricMonoid& src, const GeometricMonoid& tgt,
                                  const Rat& factor, const std::vector<Rat>& probes) {
  auto ratio = [&](const Rat& q) -> std::optional<double> {
    if (q == 0 || !src.contains(q)) return std::nullopt;
    Rat fq = q * factor;
    if (!tgt.contains(fq)) return std::nullopt;
    NormValue a = src.norm_of(q), b = tgt.norm_of(fq);
    return b.log2_magnitude() - a.log2_magnitude();  // log2 of the ratio
  };
  double best = -std::numeric_limits<double>::infinity();
  Rat lo(0), hi(0);
  for (const auto& q : probes) {
    if (auto r = ratio(q)) best = std::max(best, *r);
    if (q < lo) lo = q;
    if (q > hi) hi = q;
  }
  if (best == -std::numeric_limits<double>::infinity()) return std::nullopt;
  // Extend the extreme probes; monotone growth past the probe window means
  // no finite constant exists for geometric norms.
  for (const Rat& q : {Rat(lo * 2), Rat(hi * 2)}) {
    if (auto r = ratio(q)) {
      if (*r > best + 1e-12) return std::nullopt;
    }
  }
  return std::exp2(best);
}

FamilyBoundReport frobenius_family_bound(const NormFamily& family, unsigned long p,
                                         const std::vector<Rat>& probes) {
  FamilyBoundReport rep;
  rep.ok = true;
  Rat pp(static_cast<long>(p));
  // The declared probe set is the certificate domain: C is the max norm ratio
  // over those exponents, with the dominating source the member minimizing it.
  auto probe_max = [&](const GeometricMonoid& src, const GeometricMonoid& tgt,
                       const Rat& factor) -> std::optional<double> {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& q : probes) {
      if (q == 0 || !src.contains(q)) continue;
      Rat fq = q * factor;
      if (!tgt.contains(fq)) continue;
      best = std::max(best, tgt.norm_of(fq).log2_magnitude() -
                                src.norm_of(q).log2_magnitude());
    }
    if (best == -std::numeric_limits<double>::infinity()) return std::nullopt;
    return best;
  };
  for (auto dir : {0, 1}) {
    Rat factor = dir == 0 ? pp : Rat(1) / pp;
    auto& out = dir == 0 ? rep.forward : rep.backward;
    for (std::size_t j = 0; j < family.members.size(); ++j) {
      bool found = false;
      std::size_t best_i = 0;
      double best_c = 0;
      for (std::size_t i = 0; i < family.members.size(); ++i) {
        if (auto c = probe_max(family.members[i], family.members[j], factor)) {
          if (!found || *c < best_c) {
            best_i = i;
            best_c = *c;
          }
          found = true;
        }
      }
      if (found) {
        out.push_back({j, best_i, std::exp2(best_c)});
      } else {
        rep.ok = false;
        std::ostringstream os;
        os << "no family member dominates target " << j << " for factor "
           << rat_str(factor) << " (witness probe " << rat_str(probes.empty() ? Rat(0) : probes.front())
           << ")";
        rep.witness = os.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace f1an
