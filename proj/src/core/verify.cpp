#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "core/f1elem.hpp"
#include "core/monoid.hpp"
#include "core/normed_set.hpp"
#include "core/puiseux.hpp"
#include "core/scalar.hpp"
#include "core/spectrum.hpp"
#include "core/witt.hpp"

namespace f1an {

namespace {

using Rng = std::mt19937_64;

long rnd_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rat rnd_rat(Rng& rng, long num_lo, long num_hi, long den_hi) {
  Rat q(rnd_int(rng, num_lo, num_hi), rnd_int(rng, 1, den_hi));
  q.canonicalize();
  return q;
}

VerifyCase fail_case(const std::string& id, const std::string& detail) {
  return {id, false, detail};
}
VerifyCase pass_case(const std::string& id, const std::string& detail = "") {
  return {id, true, detail};
}

const WittPolyTable& cached_table(unsigned long p, unsigned n) {
  static std::map<std::pair<unsigned long, unsigned>, WittPolyTable> cache;
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gen_witt_polys(p, n)).first;
  return it->second;
}

// ---- criterion 1: ghost homomorphism -------------------------------------

VerifyCase crit_witt_ghost(std::uint64_t seed) {
  Rng rng(seed ^ 0x01);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (unsigned n = 1; n <= 5; ++n) {
      bool tab_ok = witt_table_feasible(p, n);
      for (int it = 0; it < 200; ++it) {
        WittZ x{p, {}}, y{p, {}};
        for (unsigned i = 0; i < n; ++i) {
          x.digits.push_back(rnd_int(rng, -9, 9));
          y.digits.push_back(rnd_int(rng, -9, 9));
        }
        WittZ s = wz_add(x, y), m = wz_mul(x, y);
        auto gx = ghost(x), gy = ghost(y), gs = ghost(s), gm = ghost(m);
        for (unsigned k = 0; k < n; ++k) {
          if (gs[k] != gx[k] + gy[k] || gm[k] != gx[k] * gy[k])
            return fail_case("01", "ghost identity broken at p=" + std::to_string(p) +
                                       " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        if (tab_ok && it < 25) {
          // independent oracle: the symbolic structure polynomials
          const WittPolyTable& tab = cached_table(p, n);
          std::vector<Int> vals = x.digits;
          vals.insert(vals.end(), y.digits.begin(), y.digits.end());
          for (unsigned k = 0; k < n; ++k) {
            if (mp_eval_int(tab.S[k], vals) != s.digits[k] ||
                mp_eval_int(tab.P[k], vals) != m.digits[k])
              return fail_case("01", "symbolic table disagrees with the ghost solve at p=" +
                                         std::to_string(p) + " n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return pass_case("01", "ghost additivity/multiplicativity exact, p in {2,3,5}, n <= 5");
}

// ---- criterion 2: Z_p isometry -------------------------------------------

VerifyCase crit_zp_isometry() {
  for (unsigned long p : {2ul, 3ul}) {
    for (long m = 1; m <= 1000; ++m) {
      unsigned n = static_cast<unsigned>(p_valuation(Int(m), p)) + 2;
      WittZ wz = wz_from_integer(m, p, n);
      WittVector wv = witt_zero(p, n);
      for (std::size_t i = 0; i < wz.digits.size(); ++i) {
        long d = mpz_fdiv_ui(wz.digits[i].get_mpz_t(), p);
        wv.digits[i] = pp_const(p, d);
      }
      NormValue lhs = witt_alpha_norm(wv, Rat(1, static_cast<long>(p)), Rat(1, 2));
      NormValue rhs =
          NormValue::pow_rat(Rat(static_cast<long>(p)), Rat(-p_valuation(Int(m), p)));
      if (lhs.compare(rhs) != 0)
        return fail_case("02", "alpha norm != p^{-v_p(m)} at p=" + std::to_string(p) +
                                   " m=" + std::to_string(m));
    }
  }
  return pass_case("02", "alpha=1/p Witt norm matches the p-adic norm for m <= 1000");
}

// ---- criterion 3: rescaling isometry -------------------------------------

VerifyCase crit_action_isometry(std::uint64_t seed) {
  Rng rng(seed ^ 0x03);
  const Rat radii[] = {Rat(1, 4), Rat(1, 2), Rat(9, 10)};
  for (const Rat& r : radii) {
    for (unsigned long p : {2ul, 3ul}) {
      GeometricMonoid m = make_single(Carrier::Q, Radius{r});
      ScaleByP act = scale_by_p(m, p);
      for (int it = 0; it < 1000; ++it) {
        Rat q = rnd_rat(rng, -100, 100, 20);
        if (q == 0) continue;
        double lhs = m.norm_of(q).log2_magnitude();
        double rhs = act.target.norm_of(act.forward(q)).log2_magnitude();
        if (std::abs(lhs - rhs) > 1e-12)
          return fail_case("03", "forward isometry off at q=" + rat_str(q));
        if (act.invertible) {
          double back = m.norm_of(act.backward(act.forward(q))).log2_magnitude();
          if (std::abs(back - lhs) > 1e-12)
            return fail_case("03", "inverse direction off at q=" + rat_str(q));
        }
      }
    }
  }
  return pass_case("03", "|pq| at r^{1/p} matches |q| at r within 1e-12 (log domain)");
}

// ---- criterion 4: cofinality bound ---------------------------------------

VerifyCase crit_cofinality(std::uint64_t seed) {
  Rng rng(seed ^ 0x04);
  const Rat grid[] = {Rat(1, 8), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(9, 10)};
  for (int it = 0; it < 1000; ++it) {
    std::size_t i = static_cast<std::size_t>(rnd_int(rng, 0, 3));
    std::size_t j = static_cast<std::size_t>(rnd_int(rng, static_cast<long>(i) + 1, 4));
    GeometricMonoid base = make_single(Carrier::N, Radius{grid[j]});
    std::vector<std::pair<Rat, GroundScalar>> terms;
    int len = static_cast<int>(rnd_int(rng, 1, 10));
    for (int t = 0; t < len; ++t) {
      long c = rnd_int(rng, -100, 100);
      if (c == 0) c = 1;
      terms.emplace_back(Rat(rnd_int(rng, 0, 40)), archint_make(c));
    }
    F1Element a = f1_make(base, terms);
    CofinalityReport rep = cofinality_check(a, grid[j], grid[i]);
    if (!rep.ok)
      return fail_case("04", "l1 at rho' exceeded sup bound, rho'=" + rat_str(grid[i]) +
                                 " rho=" + rat_str(grid[j]));
  }
  return pass_case("04", "l1 at rho' <= sup at rho / (1 - rho'/rho) on 1000 samples");
}

// ---- criterion 5: codiagonal base-change compatibility -------------------

VerifyCase crit_codiagonal(std::uint64_t seed) {
  Rng rng(seed ^ 0x05);
  const Rat vals[] = {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  auto rnd_set = [&](const std::string& pfx) {
    std::map<std::string, NormValue> norms;
    std::vector<std::string> elems = {"*"};
    for (int k = 0; k < 3; ++k) {
      std::string e = pfx + std::to_string(k);
      elems.push_back(e);
      norms[e] = NormValue::from_rat(vals[rnd_int(rng, 0, 4)]);
    }
    return make_normed_set(elems, "*", norms);
  };
  for (int it = 0; it < 500; ++it) {
    FiniteNormedSet x = rnd_set("a"), y = rnd_set("c");
    bool use_fp = it % 2 == 0;
    std::vector<std::pair<std::pair<std::string, std::string>, GroundScalar>> probe;
    int len = static_cast<int>(rnd_int(rng, 1, 6));
    for (int t = 0; t < len; ++t) {
      std::string a = "a" + std::to_string(rnd_int(rng, 0, 2));
      std::string c = "c" + std::to_string(rnd_int(rng, 0, 2));
      GroundScalar coeff = use_fp ? fp_make(2, rnd_int(rng, 1, 1))
                                  : padic_from_rational(rnd_rat(rng, 1, 40, 8), 2, 32);
      probe.push_back({{a, c}, coeff});
    }
    NormSpec spec;
    if (!use_fp) spec.kind = NormSpec::Kind::Exponent;
    CompatReport rep = tensor_compat_check(x, y, probe, spec);
    if (!rep.ok) return fail_case("05", rep.witness);
  }
  return pass_case("05", "both codiagonal routes agree on 500 random supports over F_2 and Q_2");
}

// shared random Puiseux generator, p-power lattice
PuiseuxPoly rnd_puiseux(Rng& rng, unsigned long p, int max_terms, bool nonneg) {
  ExponentLattice lat;  // p-power, bound 8
  std::map<Rat, long> terms;
  int len = static_cast<int>(rnd_int(rng, 1, max_terms));
  for (int t = 0; t < len; ++t) {
    long den = 1l << rnd_int(rng, 0, 4);
    long num = nonneg ? rnd_int(rng, 0, 24) : rnd_int(rng, -16, 24);
    Rat q(num, den);
    q.canonicalize();
    terms[q] += rnd_int(rng, 1, static_cast<long>(p) - 1);
  }
  return pp_make(p, lat, terms);
}

// ---- criterion 6: Frobenius norm law -------------------------------------

VerifyCase crit_frobenius_law(std::uint64_t seed) {
  Rng rng(seed ^ 0x06);
  const Rat rhos[] = {Rat(1, 2), Rat(1), Rat(2)};
  const Rat r(1, 2);
  for (int it = 0; it < 500; ++it) {
    std::vector<std::pair<long, PuiseuxPoly>> terms;
    int len = static_cast<int>(rnd_int(rng, 1, 4));
    for (int t = 0; t < len; ++t)
      terms.emplace_back(rnd_int(rng, -3, 3), rnd_puiseux(rng, 2, 3, false));
    FFElement x = ff_make(2, terms);
    FFElement fx = ff_frobenius(x, 1);
    for (const Rat& rho : rhos) {
      NormValue lhs = ff_gauss_norm(fx, Rat(2) * rho, r);
      NormValue rhs = ff_gauss_norm(x, rho, r).pow(Rat(2));
      bool match = (lhs.is_zero() && rhs.is_zero()) || lhs.approx_eq(rhs);
      if (!match) return fail_case("06", "norm law broken at rho=" + rat_str(rho));
    }
  }
  return pass_case("06", "|phi(x)| at p rho equals |x|^p at rho on 500 random elements");
}

// ---- criterion 7: key-lemma case bounds ----------------------------------

VerifyCase crit_key_lemma(std::uint64_t seed) {
  Rng rng(seed ^ 0x07);
  struct Tup {
    double s;
    Rat R, r1, r2;
  };
  const Tup grid[] = {
      {1.0, Rat(1, 2), Rat(1, 4), Rat(3, 4)}, {1.0, Rat(1, 2), Rat(1, 3), Rat(2, 3)},
      {2.0, Rat(1, 3), Rat(1, 5), Rat(1, 2)}, {0.5, Rat(1, 2), Rat(1, 4), Rat(2, 3)},
      {1.0, Rat(2, 5), Rat(1, 4), Rat(3, 5)}, {1.5, Rat(1, 2), Rat(3, 8), Rat(3, 4)},
  };
  for (int it = 0; it < 500; ++it) {
    std::vector<std::pair<Rat, GroundScalar>> a;
    int len = static_cast<int>(rnd_int(rng, 1, 6));
    for (int t = 0; t < len; ++t) {
      GroundScalar c = padic_from_integer(rnd_int(rng, 1, 100), 2, 32);
      c.val += rnd_int(rng, -5, 5);
      a.emplace_back(rnd_rat(rng, -20, 20, 4), c);
    }
    for (const Tup& g : grid) {
      KeyReport rep = key_inequality_check(a, g.s, g.R, g.r1, g.r2);
      if (!rep.ok)
        return fail_case("07", "case bound broken at s=" + std::to_string(g.s) +
                                   " R=" + rat_str(g.R) + " r1=" + rat_str(g.r1) +
                                   " r2=" + rat_str(g.r2));
    }
  }
  return pass_case("07", "all four split case bounds hold on 500 samples x 6-tuple grid");
}

// ---- criterion 8: cokernel quotient norm ---------------------------------

VerifyCase crit_cokernel() {
  const std::pair<Rat, Rat> pairs[] = {{Rat(1, 4), Rat(1, 2)}, {Rat(1, 3), Rat(2, 3)}};
  for (const auto& [rp, r] : pairs) {
    for (unsigned long n = 0; n <= 200; ++n) {
      NormValue got = quotient_cokernel_norm(Radius{rp}, Radius{r}, n);
      NormValue want =
          n == 0 ? NormValue::zero() : NormValue::pow_rat(rp, Rat(static_cast<long>(n)));
      if (got.compare(want) != 0)
        return fail_case("08", "quotient norm != (r')^n at n=" + std::to_string(n));
    }
  }
  return pass_case("08", "N^2/Delta(N) class norms equal (r')^n exactly for n <= 200");
}

// ---- criterion 9: perfectoid multiplicativity ----------------------------

VerifyCase crit_perfectoid(std::uint64_t seed) {
  Rng rng(seed ^ 0x09);
  const Rat r(1, 2);
  for (int it = 0; it < 10000; ++it) {
    PuiseuxPoly f = rnd_puiseux(rng, 2, 4, true), g = rnd_puiseux(rng, 2, 4, true);
    if (f.is_zero() || g.is_zero()) continue;
    NormValue lhs = pp_sup_norm(pp_mul(f, g), r);
    NormValue rhs = pp_sup_norm(f, r) * pp_sup_norm(g, r);
    if (lhs.compare(rhs) != 0) return fail_case("09", "sup norm not multiplicative");
  }
  return pass_case("09", "|fg| = |f||g| exactly on 10^4 random Puiseux pairs");
}

// ---- criterion 10: spectrum validity + export determinism ----------------

VerifyCase crit_spectrum() {
  std::vector<Int> samples;
  for (long n = -50; n <= 50; ++n) samples.push_back(n);
  std::vector<SpectrumPoint> pts = {trivial_point()};
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (const Rat& e : {Rat(1, 2), Rat(1), Rat(3, 2)}) pts.push_back(prime_point(p, e));
    pts.push_back(prime_residue_point(p));
  }
  for (const Rat& e : {Rat(1, 4), Rat(1, 2), Rat(1)}) pts.push_back(arch_point(e));
  for (const auto& pt : pts) {
    ValidationReport rep = validate_point(pt, samples);
    if (!rep.ok) return fail_case("10", rep.witness);
  }
  ExportOptions opt;
  opt.overlays.push_back({IntervalRingSpec::Kind::Padic, 3, Rat(1, 2), Rat(2), false});
  for (auto fmt : {ExportOptions::Format::Json, ExportOptions::Format::Svg}) {
    opt.format = fmt;
    if (export_tree(opt) != export_tree(opt)) return fail_case("10", "export not deterministic");
  }
  return pass_case("10", "all sampled points multiplicative and bounded; export byte-stable");
}

// ---- criterion 11: currying preserves bound constants --------------------

VerifyCase crit_currying() {
  // all multisets of size 0..3 with log2 norms in {-1,0,1}
  std::vector<std::vector<double>> shapes;
  const double vals[] = {-1.0, 0.0, 1.0};
  for (int sz = 0; sz <= 3; ++sz) {
    std::vector<int> idx(static_cast<std::size_t>(sz), 0);
    for (;;) {
      std::vector<double> shape;
      bool sorted = true;
      for (int k = 0; k + 1 < sz; ++k) sorted = sorted && idx[static_cast<std::size_t>(k)] <= idx[static_cast<std::size_t>(k) + 1];
      if (sorted) {
        for (int k = 0; k < sz; ++k) shape.push_back(vals[idx[static_cast<std::size_t>(k)]]);
        shapes.push_back(shape);
      }
      int k = sz - 1;
      while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == 3) idx[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
    }
  }
  constexpr double ninf = -1e300;
  for (const auto& X : shapes)
    for (const auto& Y : shapes)
      for (const auto& Z : shapes) {
        std::size_t nx = X.size(), ny = Y.size(), nz = Z.size();
        std::size_t cells = nx * ny;
        if (cells == 0) continue;
        std::vector<int> f(cells, 0);  // 0 = basepoint, i >= 1 = Z[i-1]
        for (;;) {
          double c_flat = ninf;
          for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny; ++j) {
              int v = f[i * ny + j];
              if (v > 0)
                c_flat = std::max(c_flat, Z[static_cast<std::size_t>(v - 1)] - X[i] - Y[j]);
            }
          double c_curry = ninf;
          for (std::size_t i = 0; i < nx; ++i) {
            double fiber = ninf;
            for (std::size_t j = 0; j < ny; ++j) {
              int v = f[i * ny + j];
              if (v > 0) fiber = std::max(fiber, Z[static_cast<std::size_t>(v - 1)] - Y[j]);
            }
            if (fiber > ninf) c_curry = std::max(c_curry, fiber - X[i]);
          }
          bool both_empty = c_flat == ninf && c_curry == ninf;
          if (!both_empty && std::abs(c_flat - c_curry) > 1e-9)
            return fail_case("11", "bound constants differ under currying");
          std::size_t k = 0;
          while (k < cells && ++f[k] == static_cast<int>(nz) + 1) f[k++] = 0;
          if (k == cells) break;
        }
      }
  return pass_case("11", "adjunction preserves bound constants, exhaustive to 3 elements");
}

// ---- criterion 12: L1 route vs FF sup route sandwich ---------------------

VerifyCase crit_main_sandwich(std::uint64_t seed) {
  Rng rng(seed ^ 0x0c);
  const Rat r(1, 2);
  const Rat rhos[] = {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2)};
  ExponentLattice lat{ExponentLattice::Kind::OverN, 12};
  for (int it = 0; it < 500; ++it) {
    std::size_t i = static_cast<std::size_t>(rnd_int(rng, 0, 2));
    std::size_t j = static_cast<std::size_t>(rnd_int(rng, static_cast<long>(i) + 1, 3));
    Rat rho_prime = rhos[i], rho = rhos[j];
    int len = static_cast<int>(rnd_int(rng, 1, 8));
    std::vector<long> ns;
    std::vector<Rat> qs;
    while (static_cast<int>(ns.size()) < len) {
      long n = rnd_int(rng, -6, 6);
      Rat q = rnd_rat(rng, 0, 24, 4);
      if (std::find(ns.begin(), ns.end(), n) != ns.end()) continue;
      if (std::find(qs.begin(), qs.end(), q) != qs.end()) continue;
      ns.push_back(n);
      qs.push_back(q);
    }
    // base-change route: coefficient p^n at monoid exponent q
    GeometricMonoid base = make_single(Carrier::Q, Radius{r});
    std::vector<std::pair<Rat, GroundScalar>> terms;
    // FF route: coefficient t^q at index n
    std::vector<std::pair<long, PuiseuxPoly>> ffterms;
    for (int t = 0; t < len; ++t) {
      GroundScalar c = padic_from_integer(1, 2, 32);
      c.val = ns[static_cast<std::size_t>(t)];
      terms.emplace_back(qs[static_cast<std::size_t>(t)], c);
      ffterms.emplace_back(ns[static_cast<std::size_t>(t)],
                           pp_monomial(2, qs[static_cast<std::size_t>(t)], 1, lat));
    }
    F1Element e = f1_make(base, terms);
    FFElement ff = ff_make(2, ffterms);

    GaussNormSpec l1spec{GaussNormSpec::Mode::L1,
                         NormSpec{NormSpec::Kind::Exponent, rho_prime, 1, 1}, std::nullopt};
    NormValue l1 = bc_norm(e, l1spec);
    NormValue sup_lo = ff_gauss_norm(ff, rho_prime, r);
    NormValue sup_hi = ff_gauss_norm(ff, rho, r);
    // termwise cofinality constant: sum of weight ratios between rho' and rho
    std::vector<NormValue> ratios;
    for (long n : ns)
      ratios.push_back(NormValue::pow_rat(Rat(2), (rho - rho_prime) * Rat(n)));
    NormValue bound = sup_hi * NormValue::sum(ratios);
    if (!sup_lo.leq(l1)) return fail_case("12", "sup route exceeded the L1 route");
    if (!l1.leq(bound)) return fail_case("12", "L1 route exceeded the certified bound");
  }
  return pass_case("12", "L1 and FF sup routes sandwich within cofinality constants, 500 samples");
}

// ---- suite extras --------------------------------------------------------

void add(VerifyReport& rep, VerifyCase c) {
  rep.ok = rep.ok && c.pass;
  rep.cases.push_back(std::move(c));
}

VerifyCase check(const std::string& id, bool cond, const std::string& detail) {
  return cond ? pass_case(id, detail) : fail_case(id, detail);
}

VerifyReport suite_normcore(std::uint64_t seed) {
  VerifyReport rep{"normcore"};
  Rng rng(seed ^ 0xa0);
  add(rep, crit_currying());
  // smash symmetry on random sets
  bool sym = true;
  const Rat vals[] = {Rat(1, 2), Rat(1), Rat(2), Rat(3)};
  for (int it = 0; it < 50 && sym; ++it) {
    std::map<std::string, NormValue> nx, ny;
    std::vector<std::string> ex = {"*"}, ey = {"*"};
    for (int k = 0; k < 3; ++k) {
      ex.push_back("a" + std::to_string(k));
      ey.push_back("b" + std::to_string(k));
      nx[ex.back()] = NormValue::from_rat(vals[rnd_int(rng, 0, 3)]);
      ny[ey.back()] = NormValue::from_rat(vals[rnd_int(rng, 0, 3)]);
    }
    FiniteNormedSet x = make_normed_set(ex, "*", nx), y = make_normed_set(ey, "*", ny);
    FiniteNormedSet xy = smash_tensor(x, y), yx = smash_tensor(y, x);
    for (int i = 0; i < 3 && sym; ++i)
      for (int j = 0; j < 3; ++j) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(j);
        if (xy.norm(pair_name(a, b)).compare(yx.norm(pair_name(b, a))) != 0) {
          sym = false;
          break;
        }
      }
  }
  add(rep, check("smash-symmetry", sym, "smash norms symmetric on random sets"));
  // bijective norm-equivalent map is an iso
  FiniteNormedSet s1 = make_normed_set({"*", "a"}, "*", {{"a", NormValue::from_rat(Rat(2))}});
  FiniteNormedSet s2 = make_normed_set({"*", "a'"}, "*", {{"a'", NormValue::one()}});
  MorphismClass cls = classify_morphism(make_pointed_map(s1, s2, {{"*", "*"}, {"a", "a'"}}));
  add(rep, check("strict-iso", cls.iso, "norm-equivalent bijection classifies as iso"));
  return rep;
}

VerifyReport suite_monoids(std::uint64_t seed) {
  VerifyReport rep{"monoids"};
  add(rep, crit_action_isometry(seed));
  add(rep, crit_cokernel());
  // frobenius family certificates
  NormFamily fam;
  fam.members.push_back(make_single(Carrier::Q, Radius{Rat(1, 2)}));
  fam.members.push_back(make_two_sided(Carrier::Q, Radius{Rat(1, 4)}, Radius{Rat(3, 4)}));
  FamilyBoundReport fb = frobenius_family_bound(fam, 2);
  add(rep, check("family-cert", fb.ok, "both directions certified on {Q_{1/2}, Q_{1/4,3/4}}"));
  NormFamily bad;
  bad.members.push_back(make_single(Carrier::Q, Radius{Rat(1, 2)}));
  auto div2 = probe_bound(bad.members[0], bad.members[0], Rat(1, 2), default_probes());
  add(rep, check("family-witness", !div2.has_value(),
                 "q -> q/2 on the singleton family is flagged unbounded"));
  return rep;
}

VerifyReport suite_basechange(std::uint64_t seed) {
  VerifyReport rep{"basechange"};
  add(rep, crit_codiagonal(seed));
  add(rep, crit_main_sandwich(seed));
  // (1+X)^2 over N_{1/2}, F_2 coefficients
  GeometricMonoid nr = make_single(Carrier::N, Radius{Rat(1, 2)});
  F1Element one_plus_x =
      f1_make(nr, {{Rat(0), fp_make(2, 1)}, {Rat(1), fp_make(2, 1)}});
  F1Element sq = convolve(one_plus_x, one_plus_x);
  F1Element want = f1_make(nr, {{Rat(0), fp_make(2, 1)}, {Rat(2), fp_make(2, 1)}});
  bool conv_ok = f1_eq(sq, want);
  NormValue l1 = bc_norm(sq, GaussNormSpec{});
  conv_ok = conv_ok && l1.approx_eq(NormValue::from_rat(Rat(5, 4)));
  add(rep, check("char2-square", conv_ok, "(1+X)^2 = 1+X^2 with L1 norm 5/4"));
  F1Element unit = f1_make(nr, {{Rat(0), fp_make(2, 1)}});
  add(rep, check("unit", f1_eq(convolve(sq, unit), sq), "unit delta is neutral"));
  return rep;
}

VerifyReport suite_witt_ghost(std::uint64_t seed) {
  VerifyReport rep{"witt-ghost"};
  add(rep, crit_witt_ghost(seed));
  const WittPolyTable& t2 = cached_table(2, 2);
  // S_1 = X_1 + Y_1 - X_0 Y_0; P_1 = X_0^2 Y_1 + X_1 Y_0^2 + 2 X_1 Y_1
  MultiPoly s1_want = mp_sub(mp_add(mp_var(1, 4), mp_var(3, 4)),
                             mp_mul(mp_var(0, 4), mp_var(2, 4)));
  MultiPoly p1_want = mp_add(
      mp_add(mp_mul(mp_pow(mp_var(0, 4), 2), mp_var(3, 4)),
             mp_mul(mp_var(1, 4), mp_pow(mp_var(2, 4), 2))),
      mp_scale(mp_mul(mp_var(1, 4), mp_var(3, 4)), 2));
  add(rep, check("s1-p2", mp_sub(t2.S[1], s1_want).is_zero(), "S_1 matches at p=2"));
  add(rep, check("p1-p2", mp_sub(t2.P[1], p1_want).is_zero(), "P_1 matches at p=2"));
  // (1,0) + (1,0) = (0,1) in W_2(F_2)
  WittVector one = teichmuller(pp_const(2, 1), 2);
  WittVector two = witt_add(one, one, t2);
  bool ok2 = pp_eq(two.digits[0], pp_zero(2)) && pp_eq(two.digits[1], pp_const(2, 1));
  add(rep, check("one-plus-one", ok2, "1 + 1 = (0,1) in W_2(F_2)"));
  // [t^{1/2}] + [t^{1/2}] = (0, t)
  WittVector th = teichmuller(pp_monomial(2, Rat(1, 2), 1), 2);
  WittVector tt = witt_add(th, th, t2);
  bool ok3 = pp_eq(tt.digits[0], pp_zero(2)) && pp_eq(tt.digits[1], pp_monomial(2, Rat(1), 1));
  add(rep, check("half-teich", ok3, "[t^{1/2}] + [t^{1/2}] = (0, t)"));
  return rep;
}

VerifyReport suite_zp(std::uint64_t) {
  VerifyReport rep{"witt-zp-isometry"};
  add(rep, crit_zp_isometry());
  return rep;
}

VerifyReport suite_ff(std::uint64_t seed) {
  VerifyReport rep{"ff-frobenius"};
  add(rep, crit_frobenius_law(seed));
  return rep;
}

VerifyReport suite_key(std::uint64_t seed) {
  VerifyReport rep{"key-lemma"};
  add(rep, crit_key_lemma(seed));
  double a = key_exponent_transform(1.0, Rat(1, 2), Rat(1, 4));
  add(rep, check("transform", std::abs(a - 0.5) < 1e-12, "s/log_R r at (1, 1/2, 1/4) is 1/2"));
  double b = key_exponent_transform(1.0, Rat(1, 2), Rat(1, 2));
  add(rep, check("transform-id", std::abs(b - 1.0) < 1e-12, "r = R gives s"));
  return rep;
}

VerifyReport suite_cofinality(std::uint64_t seed) {
  VerifyReport rep{"cofinality"};
  add(rep, crit_cofinality(seed));
  return rep;
}

VerifyReport suite_perfectoid(std::uint64_t seed) {
  VerifyReport rep{"perfectoid"};
  add(rep, crit_perfectoid(seed));
  Rng rng(seed ^ 0x91);
  bool root_ok = true;
  for (int it = 0; it < 200 && root_ok; ++it) {
    PuiseuxPoly f = rnd_puiseux(rng, 2, 4, true);
    root_ok = pp_eq(pp_root(pp_pow(f, 2), 2), f);
  }
  add(rep, check("root-inverse", root_ok, "p-th root undoes Frobenius"));
  return rep;
}

VerifyReport suite_spectrum(std::uint64_t) {
  VerifyReport rep{"spectrum"};
  add(rep, crit_spectrum());
  // branch dichotomy in eps
  bool mono = eval_point(prime_point(2, Rat(1, 2)), 4).compare(
                  eval_point(prime_point(2, Rat(1)), 4)) > 0 &&
              eval_point(prime_point(2, Rat(1, 2)), 3).compare(NormValue::one()) == 0 &&
              eval_point(prime_point(2, Rat(2)), 3).compare(NormValue::one()) == 0;
  add(rep, check("branch-dichotomy", mono, "p | n strictly decreasing, p coprime constant"));
  // complex strip evaluation
  GeometricMonoid q = make_single(Carrier::Q, Radius{Rat(1, 2)});
  F1Element f = f1_make(q, {{Rat(1), complex_make(1.0)}});
  auto v = complex_eval(f, std::complex<double>(-std::log(2.0), 0.0));
  bool ceval = std::abs(v - std::complex<double>(0.5, 0.0)) < 1e-12;
  F1Element g = f1_make(q, {{Rat(1, 2), complex_make(1.0)}, {Rat(1), complex_make(1.0)}});
  auto w = complex_eval(g, std::complex<double>(-2.0 * std::log(2.0), 0.0));
  ceval = ceval && std::abs(w - std::complex<double>(0.75, 0.0)) < 1e-12;
  add(rep, check("complex-strip", ceval, "exponential sums meet their L1 bounds"));
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"normcore",  "monoids",   "basechange", "witt-ghost", "witt-zp-isometry",
          "ff-frobenius", "key-lemma", "cofinality", "perfectoid", "spectrum", "all"};
}

VerifyReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "normcore") return suite_normcore(seed);
  if (name == "monoids") return suite_monoids(seed);
  if (name == "basechange") return suite_basechange(seed);
  if (name == "witt-ghost") return suite_witt_ghost(seed);
  if (name == "witt-zp-isometry") return suite_zp(seed);
  if (name == "ff-frobenius") return suite_ff(seed);
  if (name == "key-lemma") return suite_key(seed);
  if (name == "cofinality") return suite_cofinality(seed);
  if (name == "perfectoid") return suite_perfectoid(seed);
  if (name == "spectrum") return suite_spectrum(seed);
  if (name == "all") {
    VerifyReport rep{"all"};
    for (const std::string& n : suite_names()) {
      if (n == "all") continue;
      VerifyReport sub = run_suite(n, seed);
      for (auto& c : sub.cases) {
        c.id = n + "/" + c.id;
        add(rep, std::move(c));
      }
    }
    return rep;
  }
  throw F1Error(Errc::ParseError, "unknown suite: " + name);
}

std::vector<VerifyCase> acceptance_criteria(std::uint64_t seed) {
  return {crit_witt_ghost(seed), crit_zp_isometry(),       crit_action_isometry(seed),
          crit_cofinality(seed), crit_codiagonal(seed),    crit_frobenius_law(seed),
          crit_key_lemma(seed),  crit_cokernel(),          crit_perfectoid(seed),
          crit_spectrum(),       crit_currying(),          crit_main_sandwich(seed)};
}

}  // namespace f1an
