#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/monoid.hpp"

using namespace f1an;

TEST_CASE("geometric norms") {
  GeometricMonoid n_half = make_single(Carrier::N, Radius{Rat(1, 2)});
  CHECK(n_half.norm_of(3).compare(NormValue::from_rat(Rat(1, 8))) == 0);
  CHECK(n_half.norm_of(0).is_zero());

  GeometricMonoid z2 = make_two_sided(Carrier::Z, Radius{Rat(1, 4)}, Radius{Rat(1, 2)});
  CHECK(z2.norm_of(-2).compare(NormValue::from_rat(16)) == 0);
  CHECK(z2.norm_of(3).compare(NormValue::from_rat(Rat(1, 8))) == 0);

  GeometricMonoid q_half = make_single(Carrier::Q, Radius{Rat(1, 2)});
  CHECK(q_half.norm_of(Rat(1, 2)).compare(NormValue::pow_rat(Rat(1, 2), Rat(1, 2))) == 0);

  CHECK_THROWS_AS(n_half.norm_of(Rat(1, 2)), F1Error);   // off-carrier
  CHECK_THROWS_AS(n_half.norm_of(-1), F1Error);

  GeometricMonoid frac = make_single(Carrier::FracZ, Radius{Rat(1, 2)}, 3);
  CHECK(frac.contains(Rat(-2, 3)));
  CHECK_FALSE(frac.contains(Rat(1, 2)));
}

TEST_CASE("single-radius norm is multiplicative") {
  GeometricMonoid q = make_single(Carrier::Q, Radius{Rat(2, 3)});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a == 0 || b == 0 || a + b == 0) continue;  // basepoint has norm 0
    CHECK(q.norm_of(a + b).compare(q.norm_of(a) * q.norm_of(b)) == 0);
  }
}

TEST_CASE("two-sided norm is submultiplicative") {
  GeometricMonoid z = make_two_sided(Carrier::Z, Radius{Rat(1, 4)}, Radius{Rat(3, 4)});
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-15, 15);
  for (int i = 0; i < 500; ++i) {
    long a = d(rng), b = d(rng);
    if (a + b == 0 || a == 0 || b == 0) continue;
    CHECK(z.norm_of(Rat(a) + Rat(b)).leq(z.norm_of(Rat(a)) * z.norm_of(Rat(b))));
  }
}

TEST_CASE("scale by p is an isometry") {
  GeometricMonoid n4 = make_single(Carrier::N, Radius{Rat(1, 4)});
  ScaleByP s = scale_by_p(n4, 2);
  CHECK(n4.norm_of(3).compare(NormValue::from_rat(Rat(1, 64))) == 0);
  CHECK(s.target.norm_of(s.forward(3)).compare(NormValue::from_rat(Rat(1, 64))) == 0);
  CHECK(s.target.norm_of(s.forward(0)).is_zero());
  CHECK_FALSE(s.invertible);

  GeometricMonoid q4 = make_single(Carrier::Q, Radius{Rat(1, 4)});
  ScaleByP sq = scale_by_p(q4, 2);
  CHECK(sq.invertible);
  NormValue half = NormValue::pow_rat(Rat(1, 4), Rat(1, 2));
  CHECK(q4.norm_of(Rat(1, 2)).compare(half) == 0);
  CHECK(sq.target.norm_of(sq.forward(Rat(1, 2))).compare(half) == 0);
  CHECK(sq.backward(sq.forward(Rat(1, 2))) == Rat(1, 2));

  GeometricMonoid two = make_two_sided(Carrier::Z, Radius{Rat(1, 4)}, Radius{Rat(1, 2)});
  CHECK_THROWS_AS(scale_by_p(two, 2), F1Error);
}

TEST_CASE("cokernel quotient norm") {
  Radius rp{Rat(1, 4)}, r{Rat(1, 2)};
  CHECK(quotient_cokernel_norm(rp, r, 2).compare(NormValue::from_rat(Rat(1, 16))) == 0);
  CHECK(quotient_cokernel_norm(rp, r, 0).is_zero());
  CHECK(quotient_cokernel_norm(rp, r, 1).compare(NormValue::from_rat(Rat(1, 4))) == 0);
  CHECK_THROWS_AS(quotient_cokernel_norm(r, rp, 1), F1Error);
  CHECK_THROWS_AS(quotient_cokernel_norm(r, r, 1), F1Error);

  Radius a{Rat(1, 3)}, b{Rat(2, 3)};
  for (unsigned long n : {1ul, 7ul, 40ul})
    CHECK(quotient_cokernel_norm(a, b, n).compare(NormValue::pow_rat(Rat(1, 3), Rat(static_cast<long>(n)))) == 0);
}

TEST_CASE("frobenius family certificates") {
  NormFamily fam;
  fam.members = {make_single(Carrier::Q, Radius{Rat(1, 2)}),
                 make_two_sided(Carrier::Q, Radius{Rat(1, 4)}, Radius{Rat(3, 4)})};
  std::vector<Rat> probes = {Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2), Rat(-2)};
  FamilyBoundReport rep = frobenius_family_bound(fam, 2, probes);
  CHECK(rep.ok);
  CHECK(rep.forward.size() == fam.members.size());
  CHECK(rep.backward.size() == fam.members.size());

  GeometricMonoid s = make_single(Carrier::Q, Radius{Rat(1, 2)});
  auto ident = probe_bound(s, s, Rat(1), probes);
  REQUIRE(ident.has_value());
  CHECK(*ident == doctest::Approx(1.0));

  // q -> q/2 into the same radius has no finite constant (q -> -inf)
  CHECK_FALSE(probe_bound(s, s, Rat(1, 2), probes).has_value());
}
