#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "core/normed_set.hpp"

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

TEST_CASE("construction and validation") {
  FiniteNormedSet x = mk({{"a", 2}});
  CHECK(x.is_normed());
  CHECK(x.norm("a").compare(NormValue::from_rat(2)) == 0);
  CHECK(x.norm("*").is_zero());

  FiniteNormedSet semi = mk({{"a", 0}});
  CHECK_FALSE(semi.is_normed());

  FiniteNormedSet pt = make_normed_set({"*"}, "*", {});
  CHECK(pt.size() == 1);

  CHECK_THROWS_AS(make_normed_set({"*", "a"}, "*",
                                  {{"*", NormValue::from_rat(1)},
                                   {"a", NormValue::from_rat(1)}}),
                  F1Error);
}

TEST_CASE("bound constant") {
  FiniteNormedSet x = mk({{"a", 1}, {"b", 4}});
  FiniteNormedSet y = mk({{"a'", 3}, {"b'", 2}});
  PointedMap f = make_pointed_map(x, y, {{"*", "*"}, {"a", "a'"}, {"b", "b'"}});
  CHECK(bound_constant(f).compare(NormValue::from_rat(3)) == 0);

  PointedMap id = make_pointed_map(x, x, {{"*", "*"}, {"a", "a"}, {"b", "b"}});
  CHECK(bound_constant(id).compare(NormValue::one()) == 0);

  PointedMap cst = make_pointed_map(x, y, {{"*", "*"}, {"a", "*"}, {"b", "*"}});
  CHECK(bound_constant(cst).is_zero());

  // |x| = 0 with |f(x)| > 0 has no finite constant
  FiniteNormedSet z = mk({{"a", 0}});
  PointedMap bad = make_pointed_map(z, y, {{"*", "*"}, {"a", "a'"}});
  CHECK_THROWS_AS(bound_constant(bad), F1Error);
}

TEST_CASE("separation") {
  FiniteNormedSet x = mk({{"a", 0}, {"b", 2}});
  FiniteNormedSet s = separation(x);
  CHECK(s.size() == 2);
  CHECK(s.contains("b"));
  CHECK_FALSE(s.contains("a"));
  CHECK(separation(s).elements == s.elements);  // idempotent

  FiniteNormedSet all_zero = mk({{"a", 0}, {"b", 0}});
  CHECK(separation(all_zero).size() == 1);

  FiniteNormedSet normed = mk({{"a", 3}});
  CHECK(separation(normed).elements == normed.elements);
}

TEST_CASE("product takes the max norm") {
  FiniteNormedSet x = mk({{"a", 2}});
  CHECK(product(x, mk({{"b", 3}})).norm(pair_name("a", "b")).compare(NormValue::from_rat(3)) == 0);
  CHECK(product(x, mk({{"b", Rat(1, 8)}})).norm(pair_name("a", "b")).compare(NormValue::from_rat(2)) == 0);
  FiniteNormedSet unit = product(x, make_normed_set({"*"}, "*", {}));
  CHECK(unit.size() == 2);
  CHECK(unit.norm(pair_name("a", "*")).compare(NormValue::from_rat(2)) == 0);
}

TEST_CASE("coproduct is the wedge") {
  FiniteNormedSet w = coproduct(mk({{"a", 2}}), mk({{"b", 3}}));
  CHECK(w.size() == 3);
  CHECK(w.norm("a").compare(NormValue::from_rat(2)) == 0);
  CHECK(w.norm("b").compare(NormValue::from_rat(3)) == 0);
  CHECK(coproduct(mk({{"a", 2}}), make_normed_set({"*"}, "*", {})).size() == 2);
  CHECK(coproduct(coproduct(mk({{"a", 1}}), mk({{"b", 1}})), mk({{"c", 1}})).size() == 4);
}

TEST_CASE("coequalizer takes the fiber inf") {
  FiniteNormedSet x = mk({{"x", 1}});
  FiniteNormedSet y = mk({{"a", 1}, {"b", 3}});
  PointedMap f = make_pointed_map(x, y, {{"*", "*"}, {"x", "a"}});
  PointedMap g = make_pointed_map(x, y, {{"*", "*"}, {"x", "b"}});
  FiniteNormedSet q = coequalizer(f, g);
  CHECK(q.size() == 2);
  for (const auto& e : q.elements)
    if (e != q.basepoint) CHECK(q.norm(e).compare(NormValue::one()) == 0);

  CHECK(coequalizer(f, f).size() == y.size());

  // chain a~b~c: transitive closure, then inf
  FiniteNormedSet x2 = mk({{"u", 1}, {"v", 1}});
  FiniteNormedSet y2 = mk({{"a", 5}, {"b", 2}, {"c", 4}});
  PointedMap f2 = make_pointed_map(x2, y2, {{"*", "*"}, {"u", "a"}, {"v", "b"}});
  PointedMap g2 = make_pointed_map(x2, y2, {{"*", "*"}, {"u", "b"}, {"v", "c"}});
  FiniteNormedSet q2 = coequalizer(f2, g2);
  CHECK(q2.size() == 2);
  for (const auto& e : q2.elements)
    if (e != q2.basepoint) CHECK(q2.norm(e).compare(NormValue::from_rat(2)) == 0);
}

TEST_CASE("smash multiplies norms") {
  FiniteNormedSet s = smash_tensor(mk({{"a", 2}}), mk({{"b", 3}}));
  CHECK(s.size() == 2);
  CHECK(s.norm(pair_name("a", "b")).compare(NormValue::from_rat(6)) == 0);

  CHECK(smash_tensor(mk({{"a", 2}}), make_normed_set({"*"}, "*", {})).size() == 1);

  FiniteNormedSet t = smash_tensor(mk({{"a", Rat(1, 2)}, {"b", 1}}), mk({{"c", 4}}));
  CHECK(t.norm(pair_name("a", "c")).compare(NormValue::from_rat(2)) == 0);
  CHECK(t.norm(pair_name("b", "c")).compare(NormValue::from_rat(4)) == 0);
}

TEST_CASE("internal hom carries the operator norm") {
  FiniteNormedSet h = internal_hom(mk({{"a", 2}}), mk({{"b", 3}}));
  CHECK(h.size() == 2);
  NormValue expect = NormValue::from_rat(Rat(3, 2));
  for (const auto& e : h.elements)
    if (e != h.basepoint) CHECK(h.norm(e).compare(expect) == 0);

  CHECK(internal_hom(make_normed_set({"*"}, "*", {}), mk({{"b", 3}})).size() == 1);

  FiniteNormedSet x = mk({{"a", 2}, {"b", 3}});
  PointedMap id = make_pointed_map(x, x, {{"*", "*"}, {"a", "a"}, {"b", "b"}});
  FiniteNormedSet hxx = internal_hom(x, x);
  CHECK(hxx.norm(hom_elem_name(id)).compare(NormValue::one()) == 0);
  // name round-trip
  PointedMap back = hom_elem_map(x, x, hom_elem_name(id));
  CHECK(back.assignment == id.assignment);
}

TEST_CASE("morphism classification") {
  FiniteNormedSet x = mk({{"a", 2}});
  FiniteNormedSet y = mk({{"a", 2}, {"b", 1}});
  MorphismClass inc = classify_morphism(make_pointed_map(x, y, {{"*", "*"}, {"a", "a"}}));
  CHECK(inc.mono);
  CHECK(inc.strict_mono);
  CHECK_FALSE(inc.epi);

  FiniteNormedSet ab = mk({{"a", 1}, {"b", 1}});
  FiniteNormedSet c = mk({{"c", 1}});
  MorphismClass fold =
      classify_morphism(make_pointed_map(ab, c, {{"*", "*"}, {"a", "c"}, {"b", "c"}}));
  CHECK(fold.epi);
  CHECK(fold.strict_epi);
  CHECK_FALSE(fold.mono);

  MorphismClass bij = classify_morphism(
      make_pointed_map(mk({{"a", 2}}), mk({{"a'", 1}}), {{"*", "*"}, {"a", "a'"}}));
  CHECK(bij.iso);
  CHECK(bij.strict);
}

TEST_CASE("every mono between finite normed sets is strict") {
  FiniteNormedSet x = mk({{"a", Rat(1, 3)}, {"b", 7}});
  FiniteNormedSet y = mk({{"a", 5}, {"b", Rat(2, 9)}, {"c", 1}});
  MorphismClass m =
      classify_morphism(make_pointed_map(x, y, {{"*", "*"}, {"a", "a"}, {"b", "b"}}));
  CHECK(m.mono);
  CHECK(m.strict_mono);
  CHECK(m.strict);
}

TEST_CASE("equivalence constants") {
  auto [n1, n2] = equivalence_constants(mk({{"a", 1}, {"b", 2}}), mk({{"a", 4}, {"b", 1}}));
  CHECK(n1.compare(NormValue::from_rat(2)) == 0);
  CHECK(n2.compare(NormValue::from_rat(4)) == 0);

  auto [e1, e2] = equivalence_constants(mk({{"a", 3}}), mk({{"a", 3}}));
  CHECK(e1.compare(NormValue::one()) == 0);
  CHECK(e2.compare(NormValue::one()) == 0);

  auto [s1, s2] = equivalence_constants(mk({{"a", 1}, {"b", 2}}), mk({{"a", 3}, {"b", 6}}));
  CHECK(s1.compare(NormValue::from_rat(Rat(1, 3))) == 0);
  CHECK(s2.compare(NormValue::from_rat(3)) == 0);
}

TEST_CASE("currying agrees with the internal hom on a small instance") {
  FiniteNormedSet x = mk({{"a", 2}});
  FiniteNormedSet y = mk({{"b", Rat(1, 2)}});
  FiniteNormedSet z = mk({{"c", 3}, {"d", 1}});
  FiniteNormedSet lhs = internal_hom(smash_tensor(x, y), z);
  FiniteNormedSet rhs = internal_hom(x, internal_hom(y, z));
  REQUIRE(lhs.size() == rhs.size());
  std::multiset<double> ln, rn;
  for (const auto& e : lhs.elements)
    if (e != lhs.basepoint) ln.insert(lhs.norm(e).log2_magnitude());
  for (const auto& e : rhs.elements)
    if (e != rhs.basepoint) rn.insert(rhs.norm(e).log2_magnitude());
  auto it = rn.begin();
  for (double v : ln) CHECK(std::abs(v - *it++) < 1e-9);
}

TEST_CASE("norm value arithmetic") {
  NormValue a = NormValue::pow_rat(Rat(1, 2), Rat(1, 3));
  NormValue b = NormValue::pow_rat(Rat(1, 2), Rat(2, 3));
  CHECK((a * b).compare(NormValue::from_rat(Rat(1, 2))) == 0);
  CHECK(a.pow(3).compare(NormValue::from_rat(Rat(1, 2))) == 0);
  CHECK(a.inverse().compare(NormValue::pow_rat(Rat(2), Rat(1, 3))) == 0);
  CHECK(NormValue::zero().is_zero());
  CHECK(nv_max(a, b).compare(a) == 0);  // both < 1, smaller exponent is larger
  CHECK(nv_min(a, b).compare(b) == 0);

  std::vector<NormValue> parts = {NormValue::from_rat(1), NormValue::from_rat(Rat(1, 4))};
  CHECK(NormValue::sum(parts).approx_eq(NormValue::from_rat(Rat(5, 4))));

  auto r = (a * b).exact_rational();
  REQUIRE(r.has_value());
  CHECK(*r == Rat(1, 2));
  CHECK_FALSE(a.exact_rational().has_value());
}
