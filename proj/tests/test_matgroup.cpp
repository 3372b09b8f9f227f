#include "fixtures.hpp"

#include "tgha/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace tgha;

namespace {

const Cyclotomic q = Cyclotomic::root_of_unity(3, 1);

/// det(h restricted to V^g), from the coordinates of h b_j in a basis b of V^g.
Cyclotomic restricted_det(const FiniteMatrixGroup& G, Element g, Element h) {
  const Subspace fixed = fixed_space(G, g);
  if (fixed.dim() == 0) return 1;
  const Matrix B = Matrix::from_columns(fixed.basis);
  Matrix M(fixed.dim(), fixed.dim());
  for (int j = 0; j < fixed.dim(); ++j) {
    const auto c = solve(B, G.element(h) * fixed.basis[static_cast<std::size_t>(j)]);
    REQUIRE(c);
    for (int i = 0; i < fixed.dim(); ++i) M(i, j) = (*c)[static_cast<std::size_t>(i)];
  }
  return determinant(M);
}

} // namespace

TEST_CASE("diagonal (Z/3)^2 on C^3") {
  const auto G = fixtures::group("diag3_l3.group");
  CHECK(G->order() == 9);
  CHECK(G->conductor() == 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(G->find(fixtures::diag({q.pow(a), q.pow(b - a), q.pow(-b)})).has_value());
    }
  }
  CHECK(G->classes().size() == 9);
  const Element g1 = G->generators()[0];
  CHECK(centralizer(*G, g1).size() == 9);
  CHECK(fixed_space(*G, g1).dim() == 1);
  CHECK(perp_basis(*G, g1).dim() == 2);
  CHECK(fixed_space(*G, G->mul(g1, g1)).dim() == 1);
  CHECK(invariant_form(*G) == Matrix::identity(3).scaled(9));
}

TEST_CASE("permutation matrices of S4") {
  const auto G = fixtures::group("s4.group");
  CHECK(G->order() == 24);
  std::vector<int> sigma{0, 1, 2, 3};
  int seen = 0;
  do {
    CHECK(G->find(fixtures::perm(sigma)).has_value());
    ++seen;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(seen == 24);
  CHECK(G->classes().size() == 5);
  CHECK(invariant_form(*G) == Matrix::identity(4).scaled(24));

  const Element transposition = fixtures::perm_element(*G, {1, 0, 2, 3});
  const Element double_transposition = fixtures::perm_element(*G, {1, 0, 3, 2});
  const Element three_cycle = fixtures::perm_element(*G, {1, 2, 0, 3});
  CHECK(centralizer(*G, double_transposition).size() == 8);
  CHECK(centralizer(*G, three_cycle).size() == 3);
  CHECK(centralizer(*G, transposition).size() == 4);
  CHECK(fixed_space(*G, transposition).dim() == 3);
  CHECK(fixed_space(*G, three_cycle).dim() == 2);
  CHECK(perp_basis(*G, double_transposition).dim() == 2);
  CHECK(G->classes()[G->class_of(three_cycle)].members.size() == 8);
}

TEST_CASE("centralizers agree with matrix commutation") {
  for (const char* name : {"diag3_l3.group", "s4.group", "pm_identity.group"}) {
    const auto G = fixtures::group(name);
    for (Element g = 0; g < G->order(); ++g) {
      std::vector<Element> brute;
      for (Element h = 0; h < G->order(); ++h) {
        if (G->element(g) * G->element(h) == G->element(h) * G->element(g)) brute.push_back(h);
      }
      CHECK(centralizer(*G, g) == brute);
    }
  }
}

TEST_CASE("multiplication table") {
  const auto G = fixtures::group("s4.group");
  for (Element a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == 0);
    for (Element b = 0; b < G->order(); ++b) {
      CHECK(G->element(G->mul(a, b)) == G->element(a) * G->element(b));
      for (Element c = 0; c < G->order(); c += 5) CHECK(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
    }
  }
  for (const auto& cls : G->classes()) {
    CHECK(cls.representative == *std::min_element(cls.members.begin(), cls.members.end()));
  }
  CHECK(G->word(0) == "1");
  CHECK(G->power(G->generators()[1], 4) == 0);
  CHECK(G->power(G->generators()[1], -1) == G->inv(G->generators()[1]));
}

TEST_CASE("fixed and perpendicular spaces are complementary") {
  for (const char* name : {"diag3_l3.group", "s4.group", "diag4_l2.group"}) {
    const auto G = fixtures::group(name);
    for (Element g = 0; g < G->order(); ++g) {
      const Subspace fixed = fixed_space(*G, g);
      const Subspace perp = perp_basis(*G, g);
      CHECK(fixed.dim() + perp.dim() == G->dim());
      for (const Vector& v : fixed.basis) CHECK(G->element(g) * v == v);
      std::vector<Vector> all = fixed.basis;
      all.insert(all.end(), perp.basis.begin(), perp.basis.end());
      CHECK(rank(Matrix::from_rows(all)) == G->dim());
    }
  }
}

TEST_CASE("perp determinant values") {
  const auto S4 = fixtures::group("s4.group");
  const Element t = fixtures::perm_element(*S4, {1, 0, 2, 3});
  CHECK(h_perp_det(*S4, t, t).value == Cyclotomic(-1));
  CHECK(h_perp_det(*S4, 0, t).degenerate);

  const auto D = fixtures::group("diag3_l3.group");
  const Element g1 = D->generators()[0];
  const Element g2 = D->generators()[1];
  CHECK(h_perp_det(*D, g1, g2).value == q);
  CHECK(h_perp_det(*D, g1, g1).value == Cyclotomic(1));
}

TEST_CASE("perp determinant against det(h)/det(h on V^g)") {
  for (const char* name : {"diag3_l3.group", "s4.group", "diag4_l2.group", "pm_identity.group"}) {
    const auto G = fixtures::group(name);
    for (Element g = 1; g < G->order(); ++g) {
      const auto C = centralizer(*G, g);
      for (Element h : C) {
        const Cyclotomic value = h_perp_det(*G, g, h).value;
        CHECK(value == determinant(G->element(h)) / restricted_det(*G, g, h));
        for (Element k : C) CHECK(h_perp_det(*G, g, G->mul(h, k)).value == value * h_perp_det(*G, g, k).value);
        for (Element c = 0; c < G->order(); ++c) {
          CHECK(h_perp_det(*G, G->conjugate_by(g, c), G->conjugate_by(h, c)).value == value);
        }
      }
    }
  }
}

TEST_CASE("group construction errors") {
  const Matrix big = fixtures::diag({Cyclotomic::root_of_unity(5, 1), 1});
  CHECK(FiniteMatrixGroup::generate(std::vector<Matrix>{big}).order() == 5);
  CHECK_THROWS_AS(FiniteMatrixGroup::generate(std::vector<Matrix>{big}, 4), GroupTooLarge);
  CHECK_THROWS_AS(FiniteMatrixGroup::generate(std::vector<Matrix>{Matrix::from_rows({{1, 1}, {1, 1}})}),
                  SingularGenerator);
  // infinite order hits the cap
  CHECK_THROWS_AS(FiniteMatrixGroup::generate(std::vector<Matrix>{Matrix::from_rows({{1, 1}, {0, 1}})}, 50),
                  GroupTooLarge);
}
