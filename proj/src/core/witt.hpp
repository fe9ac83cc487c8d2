#pragma once

#include <map>
#include <vector>

#include "core/puiseux.hpp"
#include "core/scalar.hpp"

namespace f1an {

// Sparse multivariate polynomial over Q; exponent vector indexes a fixed
// variable slate.  Only used to hold Witt structure polynomials.
struct MultiPoly {
  std::map<std::vector<unsigned>, Rat> terms;

  bool is_zero() const { return terms.empty(); }
};

MultiPoly mp_const(const Rat& c, unsigned nvars);
MultiPoly mp_var(unsigned idx, unsigned nvars);
MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b, std::size_t term_guard = 0);
MultiPoly mp_scale(const MultiPoly& a, const Rat& c);
MultiPoly mp_pow(const MultiPoly& a, unsigned long e, std::size_t term_guard = 0);
bool mp_integral(const MultiPoly& a);

Int mp_eval_int(const MultiPoly& a, const std::vector<Int>& vals);
PuiseuxPoly mp_eval_pp(const MultiPoly& a, const std::vector<PuiseuxPoly>& vals,
                       unsigned long p);

// Witt sum/product polynomials S_k, P_k in X_0..X_{n-1}, Y_0..Y_{n-1}
// (variable i is X_i, variable n+i is Y_i), solved from ghost identities.
struct WittPolyTable {
  unsigned long p = 2;
  unsigned n = 0;
  std::vector<MultiPoly> S, P;
};

WittPolyTable gen_witt_polys(unsigned long p, unsigned n);
bool witt_table_feasible(unsigned long p, unsigned n);

// Z-digit Witt vectors: the characteristic-0 lifts on which the ghost map is
// injective; arithmetic goes through ghost components and solves back with an
// integrality assertion.
struct WittZ {
  unsigned long p = 2;
  std::vector<Int> digits;
};

std::vector<Int> ghost(const WittZ& x);
WittZ wz_from_ghost(unsigned long p, const std::vector<Int>& w);
WittZ wz_add(const WittZ& x, const WittZ& y);
WittZ wz_mul(const WittZ& x, const WittZ& y);
WittZ wz_from_integer(const Int& m, unsigned long p, unsigned n);

// Truncated Witt vectors over a (perfect, characteristic-p) Puiseux algebra.
struct WittVector {
  unsigned long p = 2;
  std::vector<PuiseuxPoly> digits;
};

WittVector witt_zero(unsigned long p, unsigned n, ExponentLattice lat = {});
WittVector teichmuller(const PuiseuxPoly& a, unsigned n);
WittVector witt_add(const WittVector& x, const WittVector& y, const WittPolyTable& tab);
WittVector witt_mul(const WittVector& x, const WittVector& y, const WittPolyTable& tab);
WittVector witt_frobenius(const WittVector& x, long m);
WittVector witt_mul_p(const WittVector& x);  // (a_0,a_1,...) -> (0, a_0^p, ...)
bool witt_eq(const WittVector& x, const WittVector& y);

NormValue witt_alpha_norm(const WittVector& x, const Rat& alpha, const Rat& kappa_radius);
bool is_alpha_bounded(const WittVector& x, const Rat& alpha, const NormValue& bound);

// Finite-support Σ a_n p^n with Puiseux coefficients; negative n allowed.
struct FFElement {
  unsigned long p = 2;
  std::map<long, PuiseuxPoly> terms;
};

FFElement ff_make(unsigned long p, const std::vector<std::pair<long, PuiseuxPoly>>& terms);
NormValue ff_gauss_norm(const FFElement& x, const Rat& rho, const Rat& kappa_radius);
NormValue ff_two_sided_norm(const FFElement& x, const Rat& rho, const Rat& kappa_radius);
FFElement ff_frobenius(const FFElement& x, long m);
// Product via the Witt-vector lift; result truncated to `len` digit slots.
FFElement ff_convolve(const FFElement& x, const FFElement& y, unsigned len);
WittVector ff_to_witt(const FFElement& x, unsigned len, long& offset_out);
FFElement ff_from_witt(const WittVector& w, long offset);
bool ff_eq(const FFElement& x, const FFElement& y);

// s_i = s / log_R r_i
double key_exponent_transform(double s, const Rat& R, const Rat& r);

struct KeyCase {
  bool applicable = false;
  bool holds = true;
  double lhs_log2 = 0, rhs_log2 = 0;
};
struct KeyReport {
  // split by sign of q and by |a_q| <= 1 vs >= 1; the small parts obey the
  // s2-exponent bound, the large parts the s1-exponent bound
  KeyCase pos_small, pos_large, neg_small, neg_large;
  bool ok = true;
};
KeyReport key_inequality_check(const std::vector<std::pair<Rat, GroundScalar>>& a, double s,
                               const Rat& R, const Rat& r1, const Rat& r2);

}  // namespace f1an
