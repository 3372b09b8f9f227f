#include "fixtures.hpp"

#include "tgha/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tgha;

namespace {

/// dim of skew M with g^T M g = M for every generator, by direct linear algebra.
int invariant_skew_dim(const FiniteMatrixGroup& G) {
  const int n = G.dim();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<Vector> rows;
  for (Element gen : G.generators()) {
    const Matrix& g = G.element(gen);
    std::vector<Matrix> images;
    for (auto [i, j] : slots) {
      Matrix e(n, n);
      e(i, j) = 1;
      e(j, i) = -1;
      images.push_back(g.transpose() * e * g - e);
    }
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Vector row;
        for (const Matrix& m : images) row.push_back(m(r, c));
        rows.push_back(row);
      }
    }
  }
  if (slots.empty()) return 0;
  return static_cast<int>(nullspace(Matrix::from_rows(rows)).size());
}

/// Admissible when codim 2 and the canonical form is fixed by the conjugation rule on C(g).
bool admissible_by_conjugation(const TwoCocycle& alpha, Element g) {
  const FiniteMatrixGroup& G = alpha.group();
  if (G.dim() - fixed_space(G, g).dim() != 2) return false;
  const Matrix a = canonical_form(G, g).matrix;
  for (Element h : centralizer(G, g)) {
    if (!(pull_back(a, G.element(h)).scaled(conjugation_factor(alpha, g, h)) == a)) return false;
  }
  return true;
}

struct Case {
  const char* group;
  const char* cocycle;
};

TwoCocycle make(const Case& c) {
  const auto G = fixtures::group(c.group);
  const std::string name = c.cocycle;
  if (name == "elem-abelian") return elementary_abelian_cocycle(G);
  if (name == "sym-cover") return symmetric_group_cocycle(G);
  return TwoCocycle::trivial(G);
}

const Case kCases[] = {
    {"diag3_l3.group", "trivial"}, {"diag3_l3.group", "elem-abelian"}, {"diag3_l2.group", "elem-abelian"},
    {"diag4_l2.group", "elem-abelian"}, {"s4.group", "trivial"}, {"s4.group", "sym-cover"},
    {"pm_identity.group", "trivial"},
};

} // namespace

TEST_CASE("class counts") {
  const ClassReport l3 = classify_all(make({"diag3_l3.group", "elem-abelian"}));
  CHECK(l3.d == 3);
  CHECK(l3.inv2dim == 0);
  CHECK(l3.classes.size() == 8);
  CHECK(classify_all(make({"diag3_l3.group", "trivial"})).d == 0);

  const ClassReport cover = classify_all(make({"s4.group", "sym-cover"}));
  CHECK(cover.d == 2);
  CHECK(cover.total() == 2);
  const auto G = fixtures::group("s4.group");
  const Element c123 = fixtures::perm_element(*G, {1, 2, 0, 3});
  const Element d = fixtures::perm_element(*G, {1, 0, 3, 2});
  const auto reps = cover.admissible_representatives();
  CHECK(reps == std::vector<Element>{G->classes()[G->class_of(c123)].representative,
                                     G->classes()[G->class_of(d)].representative});
  CHECK(classify_all(make({"s4.group", "trivial"})).d == 1);

  const ClassReport pm = classify_all(make({"pm_identity.group", "trivial"}));
  CHECK(pm.d == 1);
  CHECK(pm.inv2dim == 1);
  CHECK(pm.total() == 2);

  CHECK(classify_all(make({"diag3_l2.group", "elem-abelian"})).d == 3);
  CHECK(classify_all(make({"diag4_l2.group", "elem-abelian"})).d == 6);
}

TEST_CASE("invariant two-forms against the nullspace of invariant skew matrices") {
  for (const Case& c : kCases) {
    const auto G = fixtures::group(c.group);
    CHECK(invariant_two_form_dim(*G) == invariant_skew_dim(*G));
  }
}

TEST_CASE("admissibility against the conjugation rule") {
  for (const Case& c : kCases) {
    const TwoCocycle alpha = make(c);
    for (const ClassEntry& e : classify_all(alpha).classes) {
      INFO(c.group << " " << c.cocycle << " " << alpha.group().word(e.representative));
      CHECK(e.result.admissible == admissible_by_conjugation(alpha, e.representative));
      // every member of a class answers the same way
      for (Element m : alpha.group().classes()[alpha.group().class_of(e.representative)].members) {
        CHECK(class_admissible(alpha, m).admissible == e.result.admissible);
      }
    }
  }
  const TwoCocycle alpha = make({"s4.group", "trivial"});
  CHECK_THROWS_AS(class_admissible(alpha, 0), IdentityElement);
}

TEST_CASE("classification is invariant under coboundaries") {
  std::mt19937 rng(42);
  for (const Case& c : kCases) {
    const TwoCocycle alpha = make(c);
    const auto G = alpha.group_ptr();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Cyclotomic> beta;
      std::uniform_int_distribution<int> d(0, alpha.root_order() - 1);
      for (Element g = 0; g < G->order(); ++g) beta.push_back(alpha.root(d(rng)));
      CHECK(classify_all(alpha) == classify_all(alpha * coboundary_from(G, beta)));
    }
  }
}

TEST_CASE("canonical form") {
  const auto G = fixtures::group("s4.group");
  for (Element g = 1; g < G->order(); ++g) {
    if (G->dim() - fixed_space(*G, g).dim() != 2) continue;
    const SkewForm a = canonical_form(*G, g);
    CHECK(a.matrix.is_skew());
    for (const Vector& v : fixed_space(*G, g).basis) CHECK(is_zero(a.matrix * v));
    const Subspace perp = perp_basis(*G, g);
    CHECK(a(perp.basis[0], perp.basis[1]) == Cyclotomic(1));
  }
}

TEST_CASE("propagated families verify") {
  const auto D = fixtures::group("diag3_l3.group");
  const auto alpha = fixtures::share(elementary_abelian_cocycle(D));
  const Element g1 = D->generators()[0];
  const Element g2 = D->generators()[1];
  const Element g1g1g2g2 = D->mul(D->mul(g1, g1), D->mul(g2, g2));

  const FormFamily family = propagate_family(alpha, {{g1, 1}, {g2, mpq_class(3, 2)}, {g1g1g2g2, -2}});
  CHECK(verify_family(family).ok());
  CHECK(family.forms().size() == 3);
  CHECK(verify_family(FormFamily(alpha)).ok());

  const Element g1sq = D->mul(g1, g1);
  const Admissibility bad = class_admissible(*alpha, g1sq);
  CHECK_FALSE(bad.admissible);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == g2);
  CHECK_THROWS_AS(propagate_family(alpha, {{g1sq, 1}}), NotAdmissible);
  const FamilyReport report = verify_family(propagate_family(alpha, {{g1sq, 1}}, std::nullopt, {true}));
  CHECK(report.failed == FamilyReport::Check::Conjugation);
  CHECK(report.g == g1sq);
  CHECK(report.h == g2);
  CHECK_FALSE(report.describe(*D).empty());
}

TEST_CASE("families over S4 and {+-I}") {
  const auto S4 = fixtures::group("s4.group");
  const auto alpha = fixtures::share(symmetric_group_cocycle(S4));
  std::map<Element, Cyclotomic> seeds;
  for (Element r : classify_all(*alpha).admissible_representatives()) seeds[r] = 1;
  const FormFamily family = propagate_family(alpha, seeds);
  CHECK(verify_family(family).ok());
  CHECK(family.forms().size() == 11);

  const auto PM = fixtures::group("pm_identity.group");
  const auto triv = fixtures::share(TwoCocycle::trivial(PM));
  const Matrix omega = Matrix::from_rows({{0, 1}, {-1, 0}});
  const FormFamily f = propagate_family(triv, {{1, 1}}, omega.scaled(mpq_class(3, 2)));
  CHECK(verify_family(f).ok());
  CHECK(f.matrix(0) == omega.scaled(mpq_class(3, 2)));
  CHECK_THROWS_AS(propagate_family(triv, {{0, 1}}), IdentityElement);

  FormFamily skewless(triv);
  skewless.set(1, Matrix::identity(2));
  CHECK(verify_family(skewless).failed == FamilyReport::Check::NotSkew);
}
