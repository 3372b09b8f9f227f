#include "fixtures.hpp"

#include "tgha/classify.hpp"
#include "tgha/clifford.hpp"
#include "tgha/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tgha;

namespace {

const Cyclotomic q = Cyclotomic::root_of_unity(3, 1);

std::vector<Cyclotomic> random_beta(std::mt19937& rng, const FiniteMatrixGroup& G, int L) {
  std::uniform_int_distribution<int> d(0, L - 1);
  std::vector<Cyclotomic> beta;
  for (Element g = 0; g < G.order(); ++g) beta.push_back(field_root_of_unity(G.conductor(), d(rng)));
  return beta;
}

} // namespace

TEST_CASE("builtin cocycles verify") {
  const auto D = fixtures::group("diag3_l3.group");
  const auto S4 = fixtures::group("s4.group");
  CHECK(verify_cocycle(TwoCocycle::trivial(D)).ok());
  CHECK(verify_cocycle(elementary_abelian_cocycle(D)).ok());
  CHECK(verify_cocycle(elementary_abelian_cocycle(fixtures::group("diag4_l2.group"))).ok());
  CHECK(verify_cocycle(symmetric_group_cocycle(S4)).ok());
  CHECK_THROWS_AS(elementary_abelian_cocycle(S4), WrongGroupShape);
}

TEST_CASE("elementary abelian values") {
  const auto D = fixtures::group("diag3_l3.group");
  const TwoCocycle alpha = elementary_abelian_cocycle(D);
  const Element g1 = D->generators()[0];
  const Element g2 = D->generators()[1];
  CHECK(alpha(g1, g2) == q.inverse());
  CHECK(alpha(g2, g1) == Cyclotomic(1));
  CHECK(commutator_ratio(alpha, g2, g1) == q);
  CHECK(elementary_abelian_coordinates(*D, D->mul(g1, g2)) == std::vector<int>{1, 1});
  CHECK(alpha.root_order() == 6);
}

TEST_CASE("a changed entry breaks the cocycle identity") {
  const auto D = fixtures::group("diag3_l3.group");
  const TwoCocycle alpha = elementary_abelian_cocycle(D);
  std::vector<int> exps;
  for (Element g = 0; g < D->order(); ++g) {
    for (Element h = 0; h < D->order(); ++h) exps.push_back(alpha.exponent(g, h));
  }
  const Element g1 = D->generators()[0];
  const Element g2 = D->generators()[1];
  exps[g1 * D->order() + g2] += 1;
  const CocycleReport report = verify_cocycle(TwoCocycle::from_exponents(D, exps));
  CHECK(report.status == CocycleReport::Status::NotACocycle);
  CHECK_FALSE(report.describe(*D).empty());

  std::vector<int> unnormalized(D->order() * D->order(), 0);
  unnormalized[0] = 1;
  CHECK(verify_cocycle(TwoCocycle::from_exponents(D, unnormalized)).status ==
        CocycleReport::Status::NotNormalized);
  CHECK_THROWS_AS(TwoCocycle::from_table(D, std::vector<Cyclotomic>(D->order() * D->order(), Cyclotomic(2))),
                  NotRootOfUnity);
}

TEST_CASE("coboundaries") {
  std::mt19937 rng(99);
  const auto D = fixtures::group("diag3_l3.group");
  const auto S4 = fixtures::group("s4.group");
  for (int trial = 0; trial < 5; ++trial) {
    const TwoCocycle b = coboundary_from(D, random_beta(rng, *D, 6));
    CHECK(verify_cocycle(b).ok());
    for (Element g = 0; g < D->order(); ++g) {
      for (Element h = 0; h < D->order(); ++h) CHECK(b(g, h) == b(h, g));
    }
    const TwoCocycle c = coboundary_from(S4, random_beta(rng, *S4, 2));
    CHECK(verify_cocycle(c).ok());
    CHECK(verify_cocycle(symmetric_group_cocycle(S4) * c).ok());
    for (Element g = 0; g < S4->order(); ++g) {
      for (Element h : centralizer(*S4, g)) CHECK(commutator_ratio(c, h, g) == Cyclotomic(1));
    }
  }
}

TEST_CASE("symmetric group cover") {
  const auto S4 = fixtures::group("s4.group");
  const TwoCocycle alpha = symmetric_group_cocycle(S4);
  const Element t12 = fixtures::perm_element(*S4, {1, 0, 2, 3});
  const Element t34 = fixtures::perm_element(*S4, {0, 1, 3, 2});
  const Element c123 = fixtures::perm_element(*S4, {1, 2, 0, 3});
  const Element d = fixtures::perm_element(*S4, {1, 0, 3, 2});
  CHECK(commutator_ratio(alpha, t34, t12) == Cyclotomic(-1));
  CHECK(commutator_ratio(TwoCocycle::trivial(S4), t34, t12) == Cyclotomic(1));
  CHECK_FALSE(is_alpha_regular(alpha, t12));
  CHECK(is_alpha_regular(alpha, c123));
  CHECK_FALSE(is_alpha_regular(alpha, d));
  CHECK(is_alpha_regular(TwoCocycle::trivial(S4), t12));
}

TEST_CASE("inverse pairs commute") {
  for (const char* name : {"diag3_l3.group", "s4.group"}) {
    const auto G = fixtures::group(name);
    const TwoCocycle alpha =
        G->order() == 24 ? symmetric_group_cocycle(G) : elementary_abelian_cocycle(G);
    for (Element g = 0; g < G->order(); ++g) CHECK(alpha(g, G->inv(g)) == alpha(G->inv(g), g));
  }
}

TEST_CASE("clifford units") {
  const int n = 4;
  const CliffordElement one = CliffordElement::scalar(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const CliffordElement u = CliffordElement::transposition_unit(n, i, j);
      CHECK(u * u == one);
      CHECK(u * u.reversed() == one);
    }
  }
  const CliffordElement a = CliffordElement::transposition_unit(n, 0, 1);
  const CliffordElement b = CliffordElement::transposition_unit(n, 2, 3);
  CHECK(a * b + b * a == CliffordElement(n));
  const CliffordElement c = CliffordElement::transposition_unit(n, 1, 2);
  CHECK((a * c * b).reversed() == b * c * a);
  CHECK((a * c).scalar_part() == Cyclotomic(mpq_class(-1, 2)));
}
