#include "core/puiseux.hpp"

#include <vector>

namespace f1an {

bool ExponentLattice::admits(const Rat& q, unsigned long p) const {
  Int den = q.get_den();
  if (kind == Kind::OverN) {
    return Rat(q * Rat(static_cast<long>(param))).get_den() == 1;
  }
  // PPower: denominator must divide p^param.
  Int pk = ipow(Int(static_cast<long>(p)), param);
  return pk % den == 0;
}

namespace {

void check_compat(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  if (f.p != g.p) throw F1Error(Errc::TagMismatch, "Puiseux characteristics differ");
  if (f.lattice.kind != g.lattice.kind || f.lattice.param != g.lattice.param)
    throw F1Error(Errc::TagMismatch, "Puiseux exponent lattices differ");
}

void insert_term(PuiseuxPoly& f, const Rat& q, long c) {
  long p = static_cast<long>(f.p);
  long cc = ((c % p) + p) % p;
  if (cc == 0) return;
  if (!f.lattice.admits(q, f.p))
    throw F1Error(Errc::LatticeOverflow, "exponent " + rat_str(q) + " outside the lattice");
  auto [it, fresh] = f.terms.emplace(q, static_cast<unsigned long>(cc));
  if (!fresh) {
    unsigned long s = (it->second + static_cast<unsigned long>(cc)) % f.p;
    if (s == 0)
      f.terms.erase(it);
    else
      it->second = s;
  }
}

}  // namespace

PuiseuxPoly pp_make(unsigned long p, ExponentLattice lat, const std::map<Rat, long>& raw_terms) {
  PuiseuxPoly f;
  f.p = p;
  f.lattice = lat;
  for (const auto& [q, c] : raw_terms) insert_term(f, q, c);
  return f;
}

PuiseuxPoly pp_zero(unsigned long p, ExponentLattice lat) { return pp_make(p, lat, {}); }

PuiseuxPoly pp_const(unsigned long p, long c, ExponentLattice lat) {
  return pp_make(p, lat, {{Rat(0), c}});
}

PuiseuxPoly pp_monomial(unsigned long p, const Rat& exp, long c, ExponentLattice lat) {
  return pp_make(p, lat, {{exp, c}});
}

PuiseuxPoly pp_add(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  check_compat(f, g);
  PuiseuxPoly out = f;
  for (const auto& [q, c] : g.terms) insert_term(out, q, static_cast<long>(c));
  return out;
}

PuiseuxPoly pp_neg(const PuiseuxPoly& f) {
  PuiseuxPoly out = pp_zero(f.p, f.lattice);
  for (const auto& [q, c] : f.terms) insert_term(out, q, -static_cast<long>(c));
  return out;
}

PuiseuxPoly pp_mul(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  check_compat(f, g);
  PuiseuxPoly out = pp_zero(f.p, f.lattice);
  for (const auto& [qf, cf] : f.terms)
    for (const auto& [qg, cg] : g.terms)
      insert_term(out, qf + qg, static_cast<long>(cf * cg));
  return out;
}

PuiseuxPoly pp_pow(const PuiseuxPoly& f, unsigned long e) {
  PuiseuxPoly acc = pp_const(f.p, 1, f.lattice);
  PuiseuxPoly base = f;
  while (e > 0) {
    if (e & 1) acc = pp_mul(acc, base);
    e >>= 1;
    if (e) base = pp_mul(base, base);
  }
  return acc;
}

PuiseuxPoly pp_root(const PuiseuxPoly& f, unsigned long p) {
  if (p != f.p) throw F1Error(Errc::TagMismatch, "root index must be the characteristic");
  PuiseuxPoly out = pp_zero(f.p, f.lattice);
  for (const auto& [q, c] : f.terms)
    insert_term(out, q / Rat(static_cast<long>(p)), static_cast<long>(c));
  return out;
}

NormValue pp_sup_norm(const PuiseuxPoly& f, const Rat& r) {
  if (r <= 0 || r >= 1) throw F1Error(Errc::InvalidRadii, "sup norm needs 0 < r < 1");
  if (f.terms.empty()) return NormValue::zero();
  // r < 1, so the sup is attained at the smallest exponent.
  return NormValue::pow_rat(r, f.terms.begin()->first);
}

NormValue pp_l1_norm(const PuiseuxPoly& f, const Rat& r) {
  if (r <= 0) throw F1Error(Errc::InvalidRadii, "radius must be positive");
  std::vector<NormValue> parts;
  parts.reserve(f.terms.size());
  for (const auto& [q, c] : f.terms) parts.push_back(NormValue::pow_rat(r, q));
  return NormValue::sum(parts);
}

bool pp_eq(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  return f.p == g.p && f.terms == g.terms;
}

}  // namespace f1an
