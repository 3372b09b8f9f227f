#include "tgha/checks.hpp"
#include "tgha/errors.hpp"
#include "tgha/lusztig.hpp"

#include <doctest.h>

using namespace tgha;

TEST_CASE("builtin root systems") {
  const std::pair<const char*, std::pair<std::size_t, std::size_t>> expected[] = {
      {"A1", {1, 2}}, {"A2", {3, 6}}, {"A3", {6, 24}}, {"B2", {4, 8}}};
  for (const auto& [type, counts] : expected) {
    const RootSystem R = RootSystem::builtin(type);
    CHECK(R.positive_roots().size() == counts.first);
    CHECK(weyl_group(R)->order() == counts.second);
    CHECK(R.gram().transpose() == R.gram());
  }
  CHECK_THROWS_AS(RootSystem::builtin("G2"), Error);
}

TEST_CASE("reflections") {
  for (const char* type : {"A2", "A3", "B2"}) {
    const RootSystem R = RootSystem::builtin(type);
    for (const Vector& a : R.positive_roots()) {
      const Matrix s = R.reflection(a);
      CHECK(s * s == Matrix::identity(R.rank()));
      CHECK(s * a == Matrix::identity(R.rank()).scaled(-1) * a);
      CHECK(R.inner(a, R.coroot(a)) == Cyclotomic(2));
      for (const Vector& b : R.positive_roots()) {
        // v - <v, a^vee> a with <v, a^vee> = 2(v,a)/(a,a)
        Vector expect = b;
        const Cyclotomic c = R.inner(b, R.coroot(a));
        for (int i = 0; i < R.rank(); ++i) expect[static_cast<std::size_t>(i)] -= c * a[static_cast<std::size_t>(i)];
        CHECK(s * b == expect);
        CHECK(R.inner(s * b, s * a) == R.inner(b, a));
      }
    }
  }
  const RootSystem B2 = RootSystem::builtin("B2");
  int longs = 0;
  for (const Vector& a : B2.positive_roots()) longs += B2.is_long(a) ? 1 : 0;
  CHECK(longs == 2);
}

TEST_CASE("rs forms") {
  for (const char* type : {"A1", "A2", "B2"}) {
    const RootSystem R = RootSystem::builtin(type);
    CHECK(verify_family(rs_forms(R, {1, 1})).ok());
    CHECK(verify_family(rs_forms(R, {mpq_class(1, 2), 3})).ok());
    CHECK(rs_forms(R, {0, 0}).is_zero());
  }
  // rank one: no product of two reflections moves anything nontrivially
  CHECK(rs_forms(RootSystem::builtin("A1"), {1, 1}).forms().size() <= 1);
  CHECK_FALSE(rs_forms(RootSystem::builtin("A2"), {1, 1}).is_zero());
}

TEST_CASE("Lusztig algebra relations") {
  const RootSystem R = RootSystem::builtin("A2");
  const LusztigAlgebra L(R, {1, 1});
  CHECK(L.word_independent());
  CHECK(L.lengths().size() == 6);
  const int n = L.num_vars();
  const Element s1 = L.group().generators()[0];
  // s v = (s.v) s - k <v, alpha^vee> t
  const AlgebraElement sv = L.normal_form({n + static_cast<int>(s1), 0});
  AlgebraElement expect = AlgebraElement::vector(act(L.group(), s1, unit_vector(n, 0)));
  expect = L.multiply(expect, AlgebraElement::group_element(n, s1));
  expect -= AlgebraElement::scalar(n, 2).shifted(1);
  CHECK(sv == expect);
  CHECK(L.normal_form({1, 0}) == L.normal_form({0, 1}));
  CHECK(associativity_check(L, 3).ok);
  CHECK(L.reflection_index(R.simple_roots()[0]) == s1);
}

TEST_CASE("Phi is an isomorphism") {
  const PhiReport a1 = verify_phi_isomorphism(RootSystem::builtin("A1"), {1, 1}, 2);
  CHECK(a1.ok());
  const PhiReport a2 = verify_phi_isomorphism(RootSystem::builtin("A2"), {1, 1}, 2);
  CHECK(a2.ok());
  CHECK(a2.pairs > 0);
  const PhiReport b2 = verify_phi_isomorphism(RootSystem::builtin("B2"), {1, 2}, 2);
  CHECK(b2.ok());
  CHECK(verify_phi_isomorphism(RootSystem::builtin("A3"), {1, 1}, 1).ok());
}

TEST_CASE("Phi on generators") {
  const RootSystem R = RootSystem::builtin("B2");
  const LusztigAlgebra L(R, {1, 3});
  const HeckeAlgebra D = drinfeld_algebra(L);
  CHECK(D.bracket_t_power() == 2);
  const int n = L.num_vars();
  for (int i = 0; i < n; ++i) {
    const AlgebraElement v = AlgebraElement::variable(n, i);
    CHECK(phi_t(L, D, v) == v - pairing_with_h(L, i).shifted(1));
  }
  const AlgebraElement g = AlgebraElement::group_element(n, 3);
  CHECK(phi_t(L, D, g) == g);
}
