#include "core/witt.hpp"

#include <cmath>
#include <utility>

namespace f1an {

MultiPoly mp_const(const Rat& c, unsigned nvars) {
  MultiPoly out;
  if (c != 0) out.terms[std::vector<unsigned>(nvars, 0)] = c;
  return out;
}

MultiPoly mp_var(unsigned idx, unsigned nvars) {
  MultiPoly out;
  std::vector<unsigned> mono(nvars, 0);
  mono[idx] = 1;
  out.terms[std::move(mono)] = 1;
  return out;
}

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms) {
    auto [it, fresh] = out.terms.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

MultiPoly mp_scale(const MultiPoly& a, const Rat& c) {
  MultiPoly out;
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms) out.terms[m] = v * c;
  return out;
}

MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b) { return mp_add(a, mp_scale(b, -1)); }

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b, std::size_t term_guard) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      std::vector<unsigned> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, fresh] = out.terms.emplace(std::move(m), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
    if (term_guard && out.terms.size() > term_guard)
      throw F1Error(Errc::TooLarge, "polynomial blowup guard tripped");
  }
  return out;
}

MultiPoly mp_pow(const MultiPoly& a, unsigned long e, std::size_t term_guard) {
  unsigned nvars = a.terms.empty() ? 0 : static_cast<unsigned>(a.terms.begin()->first.size());
  MultiPoly acc = mp_const(1, nvars);
  MultiPoly base = a;
  while (e > 0) {
    if (e & 1) acc = mp_mul(acc, base, term_guard);
    e >>= 1;
    if (e) base = mp_mul(base, base, term_guard);
  }
  return acc;
}

bool mp_integral(const MultiPoly& a) {
  for (const auto& [m, c] : a.terms)
    if (c.get_den() != 1) return false;
  return true;
}

Int mp_eval_int(const MultiPoly& a, const std::vector<Int>& vals) {
  Rat acc = 0;
  for (const auto& [m, c] : a.terms) {
    Rat term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) term *= Rat(ipow(vals[i], m[i]));
    acc += term;
  }
  if (acc.get_den() != 1) throw F1Error(Errc::InternalError, "non-integral evaluation");
  return acc.get_num();
}

PuiseuxPoly mp_eval_pp(const MultiPoly& a, const std::vector<PuiseuxPoly>& vals,
                       unsigned long p) {
  ExponentLattice lat = vals.empty() ? ExponentLattice{} : vals.front().lattice;
  PuiseuxPoly acc = pp_zero(p, lat);
  for (const auto& [m, c] : a.terms) {
    if (c.get_den() != 1) throw F1Error(Errc::InternalError, "non-integral Witt coefficient");
    Int cc = c.get_num() % static_cast<long>(p);
    long ci = cc.get_si();
    if (ci == 0) continue;
    PuiseuxPoly term = pp_const(p, ci, lat);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) term = pp_mul(term, pp_pow(vals[i], m[i]));
    acc = pp_add(acc, term);
  }
  return acc;
}

namespace {

constexpr std::size_t kTermGuard = 500000;

// ghost_k of the polynomial vector Z = Σ_{i<=k} p^i Z_i^{p^{k-i}}
MultiPoly ghost_poly(const std::vector<MultiPoly>& z, unsigned k, unsigned long p,
                     unsigned nvars) {
  MultiPoly acc = mp_const(0, nvars);
  Rat pi = 1;
  for (unsigned i = 0; i <= k; ++i) {
    acc = mp_add(acc, mp_scale(mp_pow(z[i], ipow(Int((long)p), k - i).get_ui(), kTermGuard), pi));
    pi *= static_cast<long>(p);
  }
  return acc;
}

}  // namespace

bool witt_table_feasible(unsigned long p, unsigned n) {
  if (n <= 2) return true;
  if (p == 2) return n <= 6;
  if (p == 3) return n <= 4;
  if (p == 5) return n <= 3;
  return false;
}

WittPolyTable gen_witt_polys(unsigned long p, unsigned n) {
  if (n > 6) throw F1Error(Errc::TooLarge, "truncation depth capped at 6");
  if (!witt_table_feasible(p, n))
    throw F1Error(Errc::TooLarge, "structure polynomials too large at this (p, depth)");
  WittPolyTable tab;
  tab.p = p;
  tab.n = n;
  unsigned nv = 2 * n;
  std::vector<MultiPoly> X, Y;
  for (unsigned i = 0; i < n; ++i) {
    X.push_back(mp_var(i, nv));
    Y.push_back(mp_var(n + i, nv));
  }
  for (unsigned k = 0; k < n; ++k) {
    MultiPoly rhs_s = mp_add(ghost_poly(X, k, p, nv), ghost_poly(Y, k, p, nv));
    MultiPoly rhs_p = mp_mul(ghost_poly(X, k, p, nv), ghost_poly(Y, k, p, nv), kTermGuard);
    Rat pk = 1, pi = 1;
    for (unsigned i = 0; i < k; ++i) pk *= static_cast<long>(p);
    for (unsigned i = 0; i < k; ++i) {
      unsigned long e = ipow(Int((long)p), k - i).get_ui();
      rhs_s = mp_sub(rhs_s, mp_scale(mp_pow(tab.S[i], e, kTermGuard), pi));
      rhs_p = mp_sub(rhs_p, mp_scale(mp_pow(tab.P[i], e, kTermGuard), pi));
      pi *= static_cast<long>(p);
    }
    tab.S.push_back(mp_scale(rhs_s, 1 / pk));
    tab.P.push_back(mp_scale(rhs_p, 1 / pk));
    if (!mp_integral(tab.S.back()) || !mp_integral(tab.P.back()))
      throw F1Error(Errc::InternalError, "ghost solve produced non-integral coefficients");
  }
  return tab;
}

std::vector<Int> ghost(const WittZ& x) {
  std::vector<Int> w(x.digits.size());
  for (std::size_t k = 0; k < x.digits.size(); ++k) {
    Int acc = 0, pi = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      acc += pi * ipow(x.digits[i], ipow(Int((long)x.p), k - i).get_ui());
      pi *= static_cast<long>(x.p);
    }
    w[k] = acc;
  }
  return w;
}

WittZ wz_from_ghost(unsigned long p, const std::vector<Int>& w) {
  WittZ z;
  z.p = p;
  z.digits.resize(w.size());
  Int P((long)p);
  for (std::size_t k = 0; k < w.size(); ++k) {
    Int acc = w[k], pi = 1;
    for (std::size_t i = 0; i < k; ++i) {
      acc -= pi * ipow(z.digits[i], ipow(P, k - i).get_ui());
      pi *= P;
    }
    Int pk = ipow(P, k);
    if (acc % pk != 0)
      throw F1Error(Errc::InternalError, "ghost vector is not in the image of the ghost map");
    z.digits[k] = acc / pk;
  }
  return z;
}

WittZ wz_add(const WittZ& x, const WittZ& y) {
  if (x.p != y.p || x.digits.size() != y.digits.size())
    throw F1Error(Errc::TagMismatch, "Witt shapes differ");
  std::vector<Int> w = ghost(x), wy = ghost(y);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += wy[i];
  return wz_from_ghost(x.p, w);
}

WittZ wz_mul(const WittZ& x, const WittZ& y) {
  if (x.p != y.p || x.digits.size() != y.digits.size())
    throw F1Error(Errc::TagMismatch, "Witt shapes differ");
  std::vector<Int> w = ghost(x), wy = ghost(y);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= wy[i];
  return wz_from_ghost(x.p, w);
}

WittZ wz_from_integer(const Int& m, unsigned long p, unsigned n) {
  return wz_from_ghost(p, std::vector<Int>(n, m));
}

WittVector witt_zero(unsigned long p, unsigned n, ExponentLattice lat) {
  WittVector z;
  z.p = p;
  z.digits.assign(n, pp_zero(p, lat));
  return z;
}

WittVector teichmuller(const PuiseuxPoly& a, unsigned n) {
  WittVector z = witt_zero(a.p, n, a.lattice);
  if (n > 0) z.digits[0] = a;
  return z;
}

namespace {

std::vector<PuiseuxPoly> digit_slate(const WittVector& x, const WittVector& y) {
  std::vector<PuiseuxPoly> vals = x.digits;
  vals.insert(vals.end(), y.digits.begin(), y.digits.end());
  return vals;
}

void check_shapes(const WittVector& x, const WittVector& y, const WittPolyTable& tab) {
  if (x.p != y.p || x.p != tab.p || x.digits.size() != y.digits.size() ||
      x.digits.size() > tab.n)
    throw F1Error(Errc::TagMismatch, "Witt shapes differ");
}

}  // namespace

WittVector witt_add(const WittVector& x, const WittVector& y, const WittPolyTable& tab) {
  check_shapes(x, y, tab);
  // pad to the table's variable slate
  WittVector xx = x, yy = y;
  ExponentLattice lat = x.digits.empty() ? ExponentLattice{} : x.digits.front().lattice;
  xx.digits.resize(tab.n, pp_zero(x.p, lat));
  yy.digits.resize(tab.n, pp_zero(x.p, lat));
  auto vals = digit_slate(xx, yy);
  WittVector z = witt_zero(x.p, static_cast<unsigned>(x.digits.size()), lat);
  for (std::size_t k = 0; k < z.digits.size(); ++k) z.digits[k] = mp_eval_pp(tab.S[k], vals, x.p);
  return z;
}

WittVector witt_mul(const WittVector& x, const WittVector& y, const WittPolyTable& tab) {
  check_shapes(x, y, tab);
  WittVector xx = x, yy = y;
  ExponentLattice lat = x.digits.empty() ? ExponentLattice{} : x.digits.front().lattice;
  xx.digits.resize(tab.n, pp_zero(x.p, lat));
  yy.digits.resize(tab.n, pp_zero(x.p, lat));
  auto vals = digit_slate(xx, yy);
  WittVector z = witt_zero(x.p, static_cast<unsigned>(x.digits.size()), lat);
  for (std::size_t k = 0; k < z.digits.size(); ++k) z.digits[k] = mp_eval_pp(tab.P[k], vals, x.p);
  return z;
}

WittVector witt_frobenius(const WittVector& x, long m) {
  WittVector z = x;
  for (auto& d : z.digits) {
    if (m >= 0) {
      d = pp_pow(d, ipow(Int((long)x.p), static_cast<unsigned long>(m)).get_ui());
    } else {
      for (long i = 0; i < -m; ++i) d = pp_root(d, x.p);
    }
  }
  return z;
}

WittVector witt_mul_p(const WittVector& x) {
  WittVector z = witt_zero(x.p, static_cast<unsigned>(x.digits.size()),
                           x.digits.empty() ? ExponentLattice{} : x.digits.front().lattice);
  for (std::size_t i = 0; i + 1 < x.digits.size(); ++i)
    z.digits[i + 1] = pp_pow(x.digits[i], x.p);
  return z;
}

bool witt_eq(const WittVector& x, const WittVector& y) {
  if (x.p != y.p || x.digits.size() != y.digits.size()) return false;
  for (std::size_t i = 0; i < x.digits.size(); ++i)
    if (!pp_eq(x.digits[i], y.digits[i])) return false;
  return true;
}

NormValue witt_alpha_norm(const WittVector& x, const Rat& alpha, const Rat& kappa_radius) {
  if (alpha <= 0) throw F1Error(Errc::InvalidRadii, "alpha must be positive");
  NormValue best = NormValue::zero();
  for (std::size_t i = 0; i < x.digits.size(); ++i) {
    if (x.digits[i].is_zero()) continue;
    NormValue term = pp_sup_norm(x.digits[i], kappa_radius) *
                     NormValue::pow_rat(alpha, Rat(static_cast<long>(i)));
    best = best.is_zero() ? term : nv_max(best, term);
  }
  return best;
}

bool is_alpha_bounded(const WittVector& x, const Rat& alpha, const NormValue& bound) {
  return witt_alpha_norm(x, alpha, Rat(1, 2)).leq(bound);
}

FFElement ff_make(unsigned long p, const std::vector<std::pair<long, PuiseuxPoly>>& terms) {
  FFElement e;
  e.p = p;
  for (const auto& [n, a] : terms) {
    if (a.p != p) throw F1Error(Errc::TagMismatch, "coefficient characteristic differs");
    if (a.is_zero()) continue;
    auto [it, fresh] = e.terms.emplace(n, a);
    if (!fresh) {
      it->second = pp_add(it->second, a);
      if (it->second.is_zero()) e.terms.erase(it);
    }
  }
  return e;
}

NormValue ff_gauss_norm(const FFElement& x, const Rat& rho, const Rat& kappa_radius) {
  if (rho <= 0) throw F1Error(Errc::InvalidRadii, "gauss radius must be positive");
  NormValue best = NormValue::zero();
  for (const auto& [n, a] : x.terms) {
    NormValue term = pp_sup_norm(a, kappa_radius) *
                     NormValue::pow_rat(Rat(static_cast<long>(x.p)), -rho * Rat(n));
    best = best.is_zero() ? term : nv_max(best, term);
  }
  return best;
}

NormValue ff_two_sided_norm(const FFElement& x, const Rat& rho, const Rat& kappa_radius) {
  if (rho < 1) throw F1Error(Errc::InvalidRadii, "two-sided norm needs rho >= 1");
  return nv_max(ff_gauss_norm(x, rho, kappa_radius), ff_gauss_norm(x, 1 / rho, kappa_radius));
}

FFElement ff_frobenius(const FFElement& x, long m) {
  FFElement z;
  z.p = x.p;
  for (const auto& [n, a] : x.terms) {
    PuiseuxPoly c = a;
    if (m >= 0) {
      c = pp_pow(c, ipow(Int((long)x.p), static_cast<unsigned long>(m)).get_ui());
    } else {
      for (long i = 0; i < -m; ++i) c = pp_root(c, x.p);
    }
    if (!c.is_zero()) z.terms[n] = c;
  }
  return z;
}

WittVector ff_to_witt(const FFElement& x, unsigned len, long& offset_out) {
  // Σ_n a_n p^n = Σ_n V^n [a_n^{p^n}] after shifting the lowest index to 0.
  offset_out = x.terms.empty() ? 0 : x.terms.begin()->first;
  ExponentLattice lat = x.terms.empty() ? ExponentLattice{} : x.terms.begin()->second.lattice;
  WittVector w = witt_zero(x.p, len, lat);
  for (const auto& [n, a] : x.terms) {
    long k = n - offset_out;
    if (k < 0 || static_cast<unsigned long>(k) >= len)
      throw F1Error(Errc::TooLarge, "support does not fit the digit window");
    w.digits[static_cast<std::size_t>(k)] =
        pp_pow(a, ipow(Int((long)x.p), static_cast<unsigned long>(k)).get_ui());
  }
  return w;
}

FFElement ff_from_witt(const WittVector& w, long offset) {
  std::vector<std::pair<long, PuiseuxPoly>> terms;
  for (std::size_t k = 0; k < w.digits.size(); ++k) {
    PuiseuxPoly c = w.digits[k];
    for (std::size_t i = 0; i < k; ++i) c = pp_root(c, w.p);
    if (!c.is_zero()) terms.emplace_back(static_cast<long>(k) + offset, c);
  }
  return ff_make(w.p, terms);
}

FFElement ff_convolve(const FFElement& x, const FFElement& y, unsigned len) {
  if (x.p != y.p) throw F1Error(Errc::TagMismatch, "characteristics differ");
  if (x.terms.empty() || y.terms.empty()) return FFElement{x.p, {}};
  WittPolyTable tab = gen_witt_polys(x.p, len);
  long ox = 0, oy = 0;
  WittVector wx = ff_to_witt(x, len, ox), wy = ff_to_witt(y, len, oy);
  WittVector wz = witt_mul(wx, wy, tab);
  return ff_from_witt(wz, ox + oy);
}

bool ff_eq(const FFElement& x, const FFElement& y) {
  if (x.p != y.p || x.terms.size() != y.terms.size()) return false;
  for (auto itx = x.terms.begin(), ity = y.terms.begin(); itx != x.terms.end(); ++itx, ++ity)
    if (itx->first != ity->first || !pp_eq(itx->second, ity->second)) return false;
  return true;
}

double key_exponent_transform(double s, const Rat& R, const Rat& r) {
  if (R <= 0 || R >= 1 || r <= 0 || r >= 1)
    throw F1Error(Errc::InvalidRadii, "need R, r in (0,1)");
  if (s <= 0) throw F1Error(Errc::InvalidElement, "need s > 0");
  double logRr = std::log(rat_double(r)) / std::log(rat_double(R));
  return s / logRr;
}

KeyReport key_inequality_check(const std::vector<std::pair<Rat, GroundScalar>>& a, double s,
                               const Rat& R, const Rat& r1, const Rat& r2) {
  if (!(r1 < R && R < r2)) throw F1Error(Errc::InvalidRadii, "need r1 < R < r2");
  double s1 = key_exponent_transform(s, R, r1);
  double s2 = key_exponent_transform(s, R, r2);
  double lR = std::log2(rat_double(R));
  double lr1 = std::log2(rat_double(r1));
  double lr2 = std::log2(rat_double(r2));
  KeyReport rep;
  auto fold = [](KeyCase& kc, double lhs, double rhs) {
    if (!kc.applicable) {
      kc.applicable = true;
      kc.lhs_log2 = lhs;
      kc.rhs_log2 = rhs;
    } else {
      kc.lhs_log2 = std::max(kc.lhs_log2, lhs);
      kc.rhs_log2 = std::max(kc.rhs_log2, rhs);
    }
  };
  for (const auto& [q, c] : a) {
    NormValue cn = scalar_norm(c);
    if (cn.is_zero()) continue;
    double la = cn.log2_magnitude();
    double qd = rat_double(q);
    bool pos = q >= 0;
    bool small = la <= 0;
    double lr = pos ? lr2 : lr1;
    double si = small ? s2 : s1;  // small parts take the s2 bound, large the s1 bound
    double lhs = si * la + qd * lR;
    double rhs = s * la + qd * lr;
    KeyCase& kc = pos ? (small ? rep.pos_small : rep.pos_large)
                      : (small ? rep.neg_small : rep.neg_large);
    fold(kc, lhs, rhs);
  }
  for (KeyCase* kc : {&rep.pos_small, &rep.pos_large, &rep.neg_small, &rep.neg_large}) {
    if (!kc->applicable) continue;
    kc->holds = kc->lhs_log2 <= kc->rhs_log2 + 1e-9;
    rep.ok = rep.ok && kc->holds;
  }
  return rep;
}

}  // namespace f1an
