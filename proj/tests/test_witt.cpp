#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "core/witt.hpp"

using namespace f1an;

namespace {

PuiseuxPoly pp(const std::map<Rat, long>& t, unsigned long p = 2,
               ExponentLattice lat = {}) {
  return pp_make(p, lat, t);
}

}  // namespace

TEST_CASE("witt structure polynomials") {
  WittPolyTable tab = gen_witt_polys(2, 2);
  // S_0 = X_0 + Y_0
  MultiPoly s0_expected = mp_add(mp_var(0, 4), mp_var(2, 4));
  CHECK(mp_sub(tab.S[0], s0_expected).is_zero());
  // S_1 = X_1 + Y_1 - X_0 Y_0
  MultiPoly s1_expected = mp_sub(mp_add(mp_var(1, 4), mp_var(3, 4)),
                                 mp_mul(mp_var(0, 4), mp_var(2, 4)));
  CHECK(mp_sub(tab.S[1], s1_expected).is_zero());
  // P_1 = X_0^2 Y_1 + X_1 Y_0^2 + 2 X_1 Y_1
  MultiPoly p1_expected =
      mp_add(mp_add(mp_mul(mp_pow(mp_var(0, 4), 2), mp_var(3, 4)),
                    mp_mul(mp_var(1, 4), mp_pow(mp_var(2, 4), 2))),
             mp_scale(mp_mul(mp_var(1, 4), mp_var(3, 4)), 2));
  CHECK(mp_sub(tab.P[1], p1_expected).is_zero());
  for (const MultiPoly& s : tab.S) CHECK(mp_integral(s));
  for (const MultiPoly& s : tab.P) CHECK(mp_integral(s));
}

TEST_CASE("ghost map is a ring homomorphism") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-9, 9);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int it = 0; it < 50; ++it) {
      WittZ x{p, {}}, y{p, {}};
      for (int i = 0; i < 4; ++i) {
        x.digits.push_back(d(rng));
        y.digits.push_back(d(rng));
      }
      std::vector<Int> gx = ghost(x), gy = ghost(y);
      std::vector<Int> gs = ghost(wz_add(x, y)), gp = ghost(wz_mul(x, y));
      for (int i = 0; i < 4; ++i) {
        CHECK(gs[i] == gx[i] + gy[i]);
        CHECK(gp[i] == gx[i] * gy[i]);
      }
    }
  }
}

TEST_CASE("witt arithmetic over F_2") {
  WittPolyTable tab = gen_witt_polys(2, 2);
  WittVector one = teichmuller(pp_const(2, 1), 2);
  WittVector two = witt_add(one, one, tab);
  CHECK(two.digits[0].is_zero());
  CHECK(pp_eq(two.digits[1], pp_const(2, 1)));  // (1,0)+(1,0) = (0,1)

  WittVector zero = witt_zero(2, 2);
  CHECK(witt_eq(witt_add(one, zero, tab), one));

  // [t^{1/2}] + [t^{1/2}] = (0, t)
  PuiseuxPoly half = pp_monomial(2, Rat(1, 2), 1);
  WittVector sum = witt_add(teichmuller(half, 2), teichmuller(half, 2), tab);
  CHECK(sum.digits[0].is_zero());
  CHECK(pp_eq(sum.digits[1], pp_monomial(2, Rat(1), 1)));
}

TEST_CASE("teichmuller lift is multiplicative") {
  WittPolyTable tab = gen_witt_polys(2, 3);
  PuiseuxPoly one = pp_const(2, 1);
  CHECK(witt_eq(teichmuller(one, 3), witt_mul(teichmuller(one, 3), teichmuller(one, 3), tab)));
  CHECK(witt_eq(teichmuller(pp_zero(2), 3), witt_zero(2, 3)));

  PuiseuxPoly half = pp_monomial(2, Rat(1, 2), 1);
  PuiseuxPoly t = pp_monomial(2, Rat(1), 1);
  CHECK(witt_eq(witt_mul(teichmuller(half, 3), teichmuller(half, 3), tab),
                teichmuller(t, 3)));
}

TEST_CASE("ring axioms in W_3(F_2[t^{1/4}])") {
  WittPolyTable tab = gen_witt_polys(2, 3);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> e(0, 8), b(0, 1);
  auto rnd = [&] {
    WittVector v = witt_zero(2, 3);
    for (int i = 0; i < 3; ++i) {
      std::map<Rat, long> terms;
      for (int k = 0; k < 2; ++k)
        if (b(rng)) {
          Rat q(e(rng), 4);
          q.canonicalize();
          terms[q] += 1;
        }
      v.digits[i] = pp(terms, 2, v.digits[i].lattice);
    }
    return v;
  };
  for (int it = 0; it < 20; ++it) {
    WittVector x = rnd(), y = rnd(), z = rnd();
    CHECK(witt_eq(witt_add(x, y, tab), witt_add(y, x, tab)));
    CHECK(witt_eq(witt_mul(x, y, tab), witt_mul(y, x, tab)));
    CHECK(witt_eq(witt_add(witt_add(x, y, tab), z, tab),
                  witt_add(x, witt_add(y, z, tab), tab)));
    CHECK(witt_eq(witt_mul(witt_mul(x, y, tab), z, tab),
                  witt_mul(x, witt_mul(y, z, tab), tab)));
    CHECK(witt_eq(witt_mul(x, witt_add(y, z, tab), tab),
                  witt_add(witt_mul(x, y, tab), witt_mul(x, z, tab), tab)));
    // digit-0 is a ring homomorphism
    CHECK(pp_eq(witt_add(x, y, tab).digits[0], pp_add(x.digits[0], y.digits[0])));
    CHECK(pp_eq(witt_mul(x, y, tab).digits[0], pp_mul(x.digits[0], y.digits[0])));
  }
}

TEST_CASE("alpha norms") {
  WittVector v = witt_zero(2, 3);
  v.digits[1] = pp_const(2, 1);  // (0,1,0)
  CHECK(witt_alpha_norm(v, Rat(1, 2), Rat(1, 2)).compare(NormValue::from_rat(Rat(1, 2))) == 0);

  CHECK(witt_alpha_norm(witt_zero(2, 3), Rat(1, 2), Rat(1, 2)).is_zero());

  WittVector w = witt_zero(2, 3);
  w.digits[0] = pp_const(2, 1);
  w.digits[1] = pp_monomial(2, Rat(1), 1);  // (1, t, 0), |t| = 1/2 at r = 1/2
  CHECK(witt_alpha_norm(w, Rat(1, 3), Rat(1, 2)).compare(NormValue::one()) == 0);

  CHECK(is_alpha_bounded(w, Rat(1, 3), NormValue::one()));
  CHECK_FALSE(is_alpha_bounded(w, Rat(1, 3), NormValue::from_rat(Rat(1, 2))));

  // alpha > 1: the top digit dominates as alpha^i
  WittVector tall = witt_zero(2, 4);
  tall.digits[3] = pp_const(2, 1);
  CHECK(witt_alpha_norm(tall, Rat(2), Rat(1, 2)).compare(NormValue::from_rat(8)) == 0);
}

TEST_CASE("gauss norms on inverted-p elements") {
  PuiseuxPoly t2 = pp_monomial(2, Rat(2), 1);
  FFElement x = ff_make(2, {{-1, t2}, {0, pp_const(2, 1)}});
  CHECK(ff_gauss_norm(x, Rat(1), Rat(1, 2)).compare(NormValue::one()) == 0);

  FFElement unit = ff_make(2, {{0, pp_const(2, 1)}});
  for (long num : {1l, 2l, 5l})
    CHECK(ff_gauss_norm(unit, Rat(num, 2), Rat(1, 2)).compare(NormValue::one()) == 0);

  FFElement tt = ff_make(2, {{0, pp_monomial(2, Rat(1), 1)}});
  for (long num : {1l, 2l, 5l})
    CHECK(ff_gauss_norm(tt, Rat(num, 2), Rat(1, 2)).compare(NormValue::from_rat(Rat(1, 2))) == 0);
}

TEST_CASE("two-sided gauss norm") {
  FFElement p1 = ff_make(2, {{1, pp_const(2, 1)}});
  CHECK(ff_two_sided_norm(p1, Rat(2), Rat(1, 2)).compare(NormValue::pow_rat(Rat(2), Rat(-1, 2))) == 0);

  FFElement zero = ff_make(2, {});
  CHECK(ff_two_sided_norm(zero, Rat(2), Rat(1, 2)).is_zero());

  FFElement pm1 = ff_make(2, {{-1, pp_const(2, 1)}});
  CHECK(ff_two_sided_norm(pm1, Rat(2), Rat(1, 2)).compare(NormValue::from_rat(4)) == 0);

  CHECK_THROWS_AS(ff_two_sided_norm(p1, Rat(1, 2), Rat(1, 2)), F1Error);
}

TEST_CASE("frobenius") {
  FFElement x = ff_make(2, {{0, pp_monomial(2, Rat(1, 2), 1)}});
  FFElement fx = ff_frobenius(x, 1);
  CHECK(pp_eq(fx.terms.at(0), pp_monomial(2, Rat(1), 1)));
  CHECK(ff_eq(ff_frobenius(x, 0), x));
  CHECK(ff_eq(ff_frobenius(fx, -1), x));

  FFElement t = ff_make(2, {{0, pp_monomial(2, Rat(1), 1)}});
  NormValue lhs = ff_gauss_norm(ff_frobenius(t, 1), Rat(2), Rat(1, 2));
  CHECK(lhs.compare(NormValue::from_rat(Rat(1, 4))) == 0);
  CHECK(lhs.compare(ff_gauss_norm(t, Rat(1), Rat(1, 2)).pow(2)) == 0);
}

TEST_CASE("convolution is multiplicative on teichmuller support") {
  FFElement a = ff_make(2, {{0, pp_monomial(2, Rat(1, 2), 1)}});
  FFElement b = ff_make(2, {{1, pp_monomial(2, Rat(1, 4), 1)}});
  FFElement prod = ff_convolve(a, b, 4);
  REQUIRE(prod.terms.count(1) == 1);
  CHECK(pp_eq(prod.terms.at(1), pp_monomial(2, Rat(3, 4), 1)));
  for (Rat rho : {Rat(1, 2), Rat(1)})
    CHECK(ff_gauss_norm(prod, rho, Rat(1, 2))
              .approx_eq(ff_gauss_norm(a, rho, Rat(1, 2)) * ff_gauss_norm(b, rho, Rat(1, 2))));
}

TEST_CASE("key exponent transform") {
  CHECK(key_exponent_transform(1.0, Rat(1, 2), Rat(1, 4)) == doctest::Approx(0.5));
  CHECK(key_exponent_transform(3.0, Rat(1, 2), Rat(1, 2)) == doctest::Approx(3.0));
  // log_{1/4}(1/2) = 1/2, so s=2 transforms to 4
  CHECK(key_exponent_transform(2.0, Rat(1, 4), Rat(1, 2)) == doctest::Approx(4.0));
}

TEST_CASE("key inequality cases") {
  Rat R(1, 2), r1(1, 4), r2(3, 4);
  KeyReport delta = key_inequality_check({{Rat(1), padic_from_integer(1, 2, 16)}}, 1.0, R, r1, r2);
  CHECK(delta.ok);
  CHECK(delta.pos_small.applicable);
  CHECK(delta.pos_small.holds);

  KeyReport nothing = key_inequality_check({}, 1.0, R, r1, r2);
  CHECK(nothing.ok);
  CHECK_FALSE(nothing.pos_small.applicable);

  // |a_q| <= 1 supported on q > 0: only the pos_small case fires and holds
  KeyReport pos = key_inequality_check({{Rat(2), padic_from_integer(4, 2, 16)},
                                        {Rat(1, 2), padic_from_integer(6, 2, 16)}},
                                       1.0, R, r1, r2);
  CHECK(pos.ok);
  CHECK(pos.pos_small.applicable);
  CHECK_FALSE(pos.neg_small.applicable);
  CHECK_FALSE(pos.pos_large.applicable);
}
