#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/puiseux.hpp"

using namespace f1an;

TEST_CASE("multiplication") {
  PuiseuxPoly f = pp_add(pp_monomial(2, Rat(1, 2), 1), pp_monomial(2, Rat(1), 1));
  PuiseuxPoly g = pp_monomial(2, Rat(1, 2), 1);
  PuiseuxPoly expect = pp_add(pp_monomial(2, Rat(1), 1), pp_monomial(2, Rat(3, 2), 1));
  CHECK(pp_eq(pp_mul(f, g), expect));

  CHECK(pp_eq(pp_mul(f, pp_const(2, 1)), f));

  // (1 + t^{1/2})^2 = 1 + t over F_2
  PuiseuxPoly h = pp_add(pp_const(2, 1), pp_monomial(2, Rat(1, 2), 1));
  PuiseuxPoly sq = pp_mul(h, h);
  CHECK(pp_eq(sq, pp_add(pp_const(2, 1), pp_monomial(2, Rat(1), 1))));
  CHECK(pp_eq(pp_pow(h, 2), sq));

  CHECK(pp_add(f, f).is_zero());
  CHECK(pp_mul(f, pp_zero(2)).is_zero());
}

TEST_CASE("sup norm") {
  PuiseuxPoly f = pp_add(pp_monomial(2, Rat(1, 2), 1), pp_monomial(2, Rat(1), 1));
  CHECK(pp_sup_norm(f, Rat(1, 2)).compare(NormValue::pow_rat(Rat(1, 2), Rat(1, 2))) == 0);
  CHECK(pp_sup_norm(pp_zero(2), Rat(1, 2)).is_zero());
  CHECK(pp_sup_norm(pp_const(2, 1), Rat(1, 2)).compare(NormValue::one()) == 0);

  // l1 variant dominates sup
  CHECK(pp_sup_norm(f, Rat(1, 2)).leq(pp_l1_norm(f, Rat(1, 2))));
}

TEST_CASE("roots and perfection") {
  CHECK(pp_eq(pp_root(pp_monomial(2, Rat(1), 1), 2), pp_monomial(2, Rat(1, 2), 1)));
  CHECK(pp_eq(pp_root(pp_const(2, 1), 2), pp_const(2, 1)));

  PuiseuxPoly f = pp_add(pp_monomial(2, Rat(1), 1), pp_monomial(2, Rat(2), 1));
  PuiseuxPoly r = pp_root(f, 2);
  CHECK(pp_eq(r, pp_add(pp_monomial(2, Rat(1, 2), 1), pp_monomial(2, Rat(1), 1))));
  CHECK(pp_eq(pp_pow(r, 2), f));
}

TEST_CASE("lattice bounds fail loudly") {
  ExponentLattice lat{ExponentLattice::Kind::PPower, 2};  // denominators divide 4
  PuiseuxPoly f = pp_monomial(2, Rat(1, 4), 1, lat);
  CHECK_THROWS_AS(pp_root(f, 2), F1Error);
  CHECK_THROWS_AS(pp_monomial(2, Rat(1, 8), 1, lat), F1Error);
  CHECK_THROWS_AS(pp_monomial(2, Rat(1, 3), 1, lat), F1Error);

  ExponentLattice over_n{ExponentLattice::Kind::OverN, 4};
  CHECK(over_n.admits(Rat(3, 4), 2));
  CHECK_FALSE(over_n.admits(Rat(1, 8), 2));
}

TEST_CASE("value group density") {
  ExponentLattice lat{ExponentLattice::Kind::PPower, 8};
  for (unsigned k = 1; k <= 8; ++k) {
    Rat exp(1, Int(1) << k);
    PuiseuxPoly f = pp_monomial(2, exp, 1, lat);
    CHECK(pp_sup_norm(f, Rat(1, 2)).compare(NormValue::pow_rat(Rat(1, 2), exp)) == 0);
  }
}

TEST_CASE("multiplicativity and ultrametric on random pairs") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> nterms(1, 4), num(0, 40), k(0, 3), bit(0, 1);
  auto rnd = [&] {
    std::map<Rat, long> t;
    for (int i = nterms(rng); i > 0; --i) {
      Rat q(num(rng), Int(1) << k(rng));
      q.canonicalize();
      t[q] = 1;
    }
    return pp_make(2, {}, t);
  };
  for (int it = 0; it < 2000; ++it) {
    PuiseuxPoly f = rnd(), g = rnd();
    NormValue nf = pp_sup_norm(f, Rat(1, 2)), ng = pp_sup_norm(g, Rat(1, 2));
    CHECK(pp_sup_norm(pp_mul(f, g), Rat(1, 2)).compare(nf * ng) == 0);
    NormValue ns = pp_sup_norm(pp_add(f, g), Rat(1, 2));
    CHECK(ns.compare(nv_max(nf, ng)) <= 0);
    if (nf.compare(ng) != 0) CHECK(ns.compare(nv_max(nf, ng)) == 0);
    CHECK(pp_eq(pp_root(pp_pow(f, 2), 2), f));
  }
}
