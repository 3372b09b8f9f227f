#include "fixtures.hpp"

#include "tgha/errors.hpp"

#include <doctest.h>

using namespace tgha;

namespace {

const Cyclotomic q = Cyclotomic::root_of_unity(3, 1);

struct Diag3 {
  std::shared_ptr<const FiniteMatrixGroup> G = fixtures::group("diag3_l3.group");
  std::shared_ptr<const TwoCocycle> alpha = fixtures::share(elementary_abelian_cocycle(G));
  Element g1 = G->generators()[0];
  Element g2 = G->generators()[1];

  FormFamily family() const {
    const Element last = G->mul(G->mul(g1, g1), G->mul(g2, g2));
    return propagate_family(alpha, {{g1, 1}, {g2, 2}, {last, mpq_class(-1, 3)}});
  }

  FormFamily corrupted() const {
    FormFamily f = family();
    f.set(G->mul(g1, g1), canonical_form(*G, G->mul(g1, g1)).matrix);
    return f;
  }
};

HeckeAlgebra s4_algebra(double scale_one_conjugate = 1) {
  const auto G = fixtures::group("s4.group");
  const auto alpha = fixtures::share(symmetric_group_cocycle(G));
  std::map<Element, Cyclotomic> seeds;
  for (Element r : classify_all(*alpha).admissible_representatives()) seeds[r] = 1;
  FormFamily f = propagate_family(alpha, seeds);
  if (scale_one_conjugate != 1) {
    const Element m = G->classes()[G->class_of(seeds.begin()->first)].members.back();
    f.set(m, f.matrix(m).scaled(mpq_class(scale_one_conjugate)));
    return HeckeAlgebra(f, {true});
  }
  return HeckeAlgebra(f);
}

HeckeAlgebra pm_algebra() {
  const auto G = fixtures::group("pm_identity.group");
  return HeckeAlgebra(parse_forms(read_text(fixtures::data("pm_identity.forms")),
                                  fixtures::share(TwoCocycle::trivial(G))));
}

} // namespace

TEST_CASE("normal forms in the (Z/3)^2 algebra") {
  Diag3 d;
  const HeckeAlgebra A(d.family());
  CHECK(A.normal_form({1, 0}).str(*d.G) == "v1*v2 - [g1]*t");
  const AlgebraElement prod = A.multiply(AlgebraElement::group_element(3, d.g1), AlgebraElement::group_element(3, d.g2));
  CHECK(prod == AlgebraElement::group_element(3, d.G->mul(d.g1, d.g2)).scaled(q.inverse()));
  CHECK(prod.str(*d.G) == "(-1-z^1)*[g1*g2]");
  CHECK(A.normal_form({0, 1}).str(*d.G) == "v1*v2");
  CHECK(A.normal_form({}).str(*d.G) == "1");
  CHECK(A.bracket(0, 1) == AlgebraElement::group_element(3, d.g1));
}

TEST_CASE("group elements act on variables by conjugation") {
  Diag3 d;
  const HeckeAlgebra A(d.family());
  for (Element g = 0; g < d.G->order(); ++g) {
    for (int i = 0; i < 3; ++i) {
      const AlgebraElement lhs = A.multiply(
          A.multiply(AlgebraElement::group_element(3, g), AlgebraElement::variable(3, i)),
          AlgebraElement::group_element(3, d.G->inv(g)));
      const AlgebraElement rhs =
          AlgebraElement::vector(act(*d.G, g, unit_vector(3, i))).scaled((*d.alpha)(g, d.G->inv(g)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("zero family is the crossed product") {
  Diag3 d;
  const HeckeAlgebra zero(FormFamily(d.alpha));
  const HeckeAlgebra A(d.family());
  const auto basis = basis_monomials(3, 2, {0, d.g1, d.g2, d.G->mul(d.g1, d.g2)});
  for (const Monomial& r : basis) {
    for (const Monomial& s : basis) {
      const AlgebraElement x = AlgebraElement::monomial(r);
      const AlgebraElement y = AlgebraElement::monomial(s);
      const AlgebraElement cp = crossed_multiply(d.alpha, x, y);
      CHECK(zero.multiply(x, y) == cp);
      const AlgebraElement full = A.multiply(x, y);
      CHECK(full.t_part(0) == cp);
      for (const auto& [m, c] : full.terms()) CHECK(m.degree() == r.degree() + s.degree() - 2 * m.tpow);
    }
  }
}

TEST_CASE("redex strategy does not matter for a verified family") {
  const HeckeAlgebra A = s4_algebra();
  const int n = A.num_vars();
  const Word w{3, 2, 1, 0, n + 7, 2};
  CHECK(A.normal_form(w, Strategy::Leftmost) == A.normal_form(w, Strategy::Rightmost));
  ReductionCache cache;
  CHECK(A.normal_form(w, Strategy::Leftmost, cache) == A.normal_form(w));
  CHECK(A.normal_form(w, Strategy::Leftmost, cache) == A.normal_form(w));
}

TEST_CASE("unverified families are rejected unless forced") {
  Diag3 d;
  CHECK_THROWS_AS(HeckeAlgebra(d.corrupted()), FamilyError);
  CHECK(HeckeAlgebra(d.corrupted(), {true}).forced());
}

TEST_CASE("PBW dimension counts") {
  Diag3 d;
  const PbwReport good = pbw_dimension_check(HeckeAlgebra(d.family()), 3);
  CHECK(good.ok);
  CHECK(good.levels.size() == 4);
  for (const PbwLevel& level : good.levels) CHECK(level.ok());
  CHECK(good.levels[2].filtered_expected == 10 * 9);

  CHECK(pbw_dimension_check(s4_algebra(), 3).ok);
  CHECK(pbw_dimension_check(pm_algebra(), 3).ok);

  const PbwReport bad = pbw_dimension_check(HeckeAlgebra(d.corrupted(), {true}), 3);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.collapse_weight);
  CHECK(*bad.collapse_weight <= 3);
  CHECK_FALSE(pbw_dimension_check(s4_algebra(2), 3).ok);
}

TEST_CASE("associativity") {
  Diag3 d;
  const AssociativityReport good = associativity_check(HeckeAlgebra(d.family()), 3);
  CHECK(good.ok);
  CHECK(good.triples > 0);
  CHECK(good.jacobi_triples > 0);
  CHECK(associativity_check(pm_algebra(), 3).ok);
  const AssociativityReport bad = associativity_check(HeckeAlgebra(d.corrupted(), {true}), 3);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witness.empty());
  CHECK_FALSE(associativity_check(s4_algebra(2), 3).ok);
}

TEST_CASE("deformation coefficients") {
  Diag3 d;
  const HeckeAlgebra A(d.family());
  const Monomial v3{{0, 0, 1}, 0, 0};
  const Monomial v2{{0, 1, 0}, 0, 0};
  const auto mu = deformation_mu(A, v3, v2);
  REQUIRE(mu.size() == 2);
  CHECK(mu[0] == AlgebraElement::monomial(Monomial{{0, 1, 1}, 0, 0}));
  CHECK(mu[1] == AlgebraElement::group_element(3, d.g2).scaled(-2));

  const DeformationReport report = deformation_check(A, 3);
  CHECK(report.ok());
  CHECK(report.pairs > 0);
  CHECK(deformation_check(pm_algebra(), 3).ok());
}

TEST_CASE("mu_1 satisfies the Hochschild identity") {
  Diag3 d;
  const HeckeAlgebra A(d.family());
  const auto triples = hochschild_triples(*d.G, 3);
  CHECK_FALSE(triples.empty());
  const HochschildReport report = hochschild_check(A, triples);
  CHECK(report.ok);
  CHECK(report.triples == triples.size());
  const HeckeAlgebra P = pm_algebra();
  CHECK(hochschild_check(P, hochschild_triples(P.group(), 3)).ok);
}

TEST_CASE("helpers") {
  CHECK(exponent_vectors(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(exponent_vectors(3, 0).size() == 1);
  CHECK(basis_monomials(3, 2, {0, 1}).size() == 20);
  AlgebraElement x = AlgebraElement::variable(2, 0) + AlgebraElement::scalar(2, 3).shifted(2);
  CHECK(x.max_tpow() == 2);
  CHECK_FALSE(x.is_t_free());
  CHECK((x - x).is_zero());
  CHECK(AlgebraElement().max_tpow() == 0);
}
