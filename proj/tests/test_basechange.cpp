#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/f1elem.hpp"

using namespace f1an;

namespace {

FiniteNormedSet mk(const std::vector<std::pair<std::string, Rat>>& elems) {
  std::vector<std::string> names = {"*"};
  std::map<std::string, NormValue> norms;
  for (const auto& [e, n] : elems) {
    names.push_back(e);
    norms[e] = NormValue::from_rat(n);
  }
  return make_normed_set(names, "*", norms);
}

}  // namespace

TEST_CASE("gauss norms over a finite set") {
  FiniteNormedSet x = mk({{"a", Rat(1, 2)}, {"b", 3}});
  F1SetElement e = f1s_make(
      x, {{"a", padic_from_integer(2, 2, 16)}, {"b", padic_from_integer(1, 2, 16)}});
  GaussNormSpec l1, sup;
  sup.mode = GaussNormSpec::Mode::Sup;
  CHECK(bc_norm(e, l1).approx_eq(NormValue::from_rat(Rat(13, 4))));
  CHECK(bc_norm(e, sup).compare(NormValue::from_rat(3)) == 0);

  F1SetElement empty = f1s_make(x, {});
  CHECK(bc_norm(empty, l1).is_zero());
  CHECK(bc_norm(empty, sup).is_zero());

  // single-term supports: L1 == Sup
  F1SetElement one = f1s_make(x, {{"b", padic_from_integer(6, 2, 16)}});
  CHECK(bc_norm(one, l1).compare(bc_norm(one, sup)) == 0);
}

TEST_CASE("convolution over a monoid") {
  GeometricMonoid n_half = make_single(Carrier::N, Radius{Rat(1, 2)});
  F1Element f = f1_make(n_half, {{0, fp_make(2, 1)}, {1, fp_make(2, 1)}});
  F1Element sq = convolve(f, f);
  CHECK(sq.support.size() == 2);  // middle term cancels in char 2
  CHECK(sq.support.count(Rat(0)) == 1);
  CHECK(sq.support.count(Rat(2)) == 1);
  GaussNormSpec l1;
  CHECK(bc_norm(sq, l1).approx_eq(NormValue::from_rat(Rat(5, 4))));

  F1Element unit = f1_make(n_half, {{0, fp_make(2, 1)}});
  CHECK(f1_eq(convolve(f, unit), f));

  GeometricMonoid q = make_single(Carrier::Q, Radius{Rat(1, 2)});
  F1Element da = f1_make(q, {{Rat(1, 2), padic_from_integer(3, 2, 16)}});
  F1Element db = f1_make(q, {{Rat(1, 3), padic_from_integer(5, 2, 16)}});
  F1Element dd = convolve(da, db);
  REQUIRE(dd.support.size() == 1);
  CHECK(dd.support.count(Rat(5, 6)) == 1);
  CHECK(scalar_eq(dd.support.at(Rat(5, 6)), padic_from_integer(15, 2, 16)));

  F1Element g = f1_make(n_half, {{1, fp_make(3, 2)}});
  CHECK_THROWS_AS(convolve(f, g), F1Error);
}

TEST_CASE("convolution algebra laws") {
  GeometricMonoid n = make_single(Carrier::N, Radius{Rat(1, 2)});
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-9, 9), e(0, 6);
  GaussNormSpec l1;
  for (int i = 0; i < 100; ++i) {
    // trivially valued Q keeps coefficient arithmetic exact under cancellation
    auto rnd = [&] {
      std::vector<std::pair<Rat, GroundScalar>> t;
      for (int k = 0; k < 3; ++k) t.emplace_back(Rat(e(rng)), trivq_make(Rat(c(rng))));
      return f1_make(n, t);
    };
    F1Element a = rnd(), b = rnd(), cc = rnd();
    CHECK(f1_eq(convolve(a, b), convolve(b, a)));
    CHECK(f1_eq(convolve(convolve(a, b), cc), convolve(a, convolve(b, cc))));
    CHECK(bc_norm(convolve(a, b), l1).leq(bc_norm(a, l1) * bc_norm(b, l1)));
  }
}

TEST_CASE("codiagonal compatibility") {
  FiniteNormedSet x = mk({{"a", 2}});
  FiniteNormedSet y = mk({{"c", 3}});
  CompatReport delta = tensor_compat_check(x, y, {{{"a", "c"}, fp_make(2, 1)}}, NormSpec{});
  CHECK(delta.ok);
  CHECK(delta.lhs.compare(NormValue::from_rat(6)) == 0);
  CHECK(delta.rhs.compare(NormValue::from_rat(6)) == 0);

  FiniteNormedSet pt = make_normed_set({"*"}, "*", {});
  CompatReport zero = tensor_compat_check(x, pt, {}, NormSpec{});
  CHECK(zero.ok);
  CHECK(zero.lhs.is_zero());

  FiniteNormedSet y3 = mk({{"c", 3}, {"d", Rat(1, 2)}});
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::pair<std::pair<std::string, std::string>, GroundScalar>> probe = {
        {{"a", "c"}, padic_from_integer(c(rng), 2, 32)},
        {{"a", "d"}, padic_from_integer(c(rng), 2, 32)}};
    CHECK(tensor_compat_check(x, y3, probe, NormSpec{}).ok);
  }
}

TEST_CASE("cofinality bounds") {
  GeometricMonoid n = make_single(Carrier::N, Radius{Rat(1, 2)});
  std::vector<std::pair<Rat, GroundScalar>> ones;
  for (long k = 0; k <= 10; ++k) ones.emplace_back(Rat(k), trivq_make(1));
  CofinalityReport rep = cofinality_check(f1_make(n, ones), Rat(1, 2), Rat(1, 4));
  CHECK(rep.ok);
  CHECK(rep.sup_at_rho.compare(NormValue::one()) == 0);
  CHECK(rep.l1_at_rho_prime.value() == doctest::Approx(1.3333301).epsilon(1e-5));
  CHECK(rep.bound.approx_eq(NormValue::from_rat(2)));

  CofinalityReport single =
      cofinality_check(f1_make(n, {{Rat(4), trivq_make(1)}}), Rat(1, 2), Rat(1, 4));
  CHECK(single.ok);
  CHECK(single.l1_at_rho_prime.compare(single.sup_at_rho) <= 0);

  std::vector<std::pair<Rat, GroundScalar>> growing;
  for (long k = 0; k <= 10; ++k) growing.emplace_back(Rat(k), archint_make(Int(1) << k));
  CofinalityReport g = cofinality_check(f1_make(n, growing), Rat(1, 2), Rat(1, 4));
  CHECK(g.ok);
  CHECK(g.sup_at_rho.compare(NormValue::one()) == 0);
  CHECK(g.l1_at_rho_prime.value() < 2.0);

  CHECK_THROWS_AS(cofinality_check(f1_make(n, ones), Rat(1, 4), Rat(1, 2)), F1Error);
}

TEST_CASE("family base change") {
  FiniteNormedSet m = mk({{"a", Rat(1, 2)}});
  std::vector<NormSpec> family = {NormSpec{NormSpec::Kind::TwoSided, 1, Rat(1, 2), Rat(2)},
                                  NormSpec{NormSpec::Kind::TwoSided, 1, Rat(1, 3), Rat(3)}};
  F1SetElement delta = f1s_make(m, {{"a", padic_from_integer(12, 2, 32)}});
  CHECK(family_base_change(family, {delta}).ok);

  FiniteNormedSet m3 = mk({{"a", Rat(1, 2)}, {"b", 1}, {"c", 4}});
  F1SetElement probe = f1s_make(m3, {{"a", padic_from_integer(3, 2, 32)},
                                     {"b", padic_from_integer(20, 2, 32)},
                                     {"c", padic_from_integer(7, 2, 32)}});
  CHECK(family_base_change(family, {probe}).ok);
  CHECK(family_base_change(family, {}).ok);
}

TEST_CASE("strict monos preserve base-change norms") {
  FiniteNormedSet x = mk({{"a", Rat(1, 2)}, {"b", 3}});
  FiniteNormedSet y = mk({{"a", Rat(1, 2)}, {"b", 3}, {"c", 7}});
  F1SetElement over_x = f1s_make(
      x, {{"a", padic_from_integer(2, 2, 16)}, {"b", padic_from_integer(1, 2, 16)}});
  F1SetElement over_y = f1s_make(
      y, {{"a", padic_from_integer(2, 2, 16)}, {"b", padic_from_integer(1, 2, 16)}});
  GaussNormSpec l1, sup;
  sup.mode = GaussNormSpec::Mode::Sup;
  CHECK(bc_norm(over_x, l1).compare(bc_norm(over_y, l1)) == 0);
  CHECK(bc_norm(over_x, sup).compare(bc_norm(over_y, sup)) == 0);
}
