#include "tgha/lusztig.hpp"

#include "tgha/checks.hpp"
#include "tgha/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tgha {

namespace {

std::string vector_key(const Vector& v) {
  std::string out;
  for (const auto& x : v) out += x.str(true) + ";";
  return out;
}

int height_sign(const Vector& v) {
  bool pos = false;
  bool neg = false;
  for (const auto& x : v) {
    const auto r = x.as_rational();
    if (!r) throw InternalInconsistency("irrational root coordinate");
    pos |= sgn(*r) > 0;
    neg |= sgn(*r) < 0;
  }
  if (pos && neg) throw InternalInconsistency("root with mixed-sign simple-root coordinates");
  return pos ? 1 : -1;
}

mpq_class height(const Vector& v) {
  mpq_class h = 0;
  for (const auto& x : v) h += *x.as_rational();
  return h;
}

} // namespace

RootSystem RootSystem::builtin(std::string_view type) {
  std::vector<std::vector<long>> g;
  if (type == "A1") {
    g = {{2}};
  } else if (type == "A2") {
    g = {{2, -1}, {-1, 2}};
  } else if (type == "A3") {
    g = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  } else if (type == "B2") {
    // alpha_1 long, alpha_2 short
    g = {{2, -1}, {-1, 1}};
  } else {
    throw Error("unknown root system type '" + std::string(type) + "' (expected A1, A2, A3 or B2)");
  }
  RootSystem R;
  R.type_ = std::string(type);
  const int n = static_cast<int>(g.size());
  R.gram_ = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) R.gram_(i, j) = g[i][j];
  }
  for (int i = 0; i < n; ++i) R.simple_.push_back(unit_vector(n, i));

  std::vector<Matrix> refl;
  for (const auto& a : R.simple_) refl.push_back(R.reflection(a));
  std::set<std::string> seen;
  std::deque<Vector> queue(R.simple_.begin(), R.simple_.end());
  std::vector<Vector> roots;
  for (const auto& a : R.simple_) seen.insert(vector_key(a));
  while (!queue.empty()) {
    Vector v = queue.front();
    queue.pop_front();
    roots.push_back(v);
    for (const auto& s : refl) {
      Vector w = s * v;
      if (seen.insert(vector_key(w)).second) queue.push_back(std::move(w));
    }
  }
  for (auto& r : roots) {
    if (height_sign(r) > 0) R.positive_.push_back(std::move(r));
  }
  std::stable_sort(R.positive_.begin(), R.positive_.end(),
                   [](const Vector& a, const Vector& b) { return height(a) < height(b); });
  return R;
}

Vector RootSystem::coroot(const Vector& alpha) const {
  const Cyclotomic scale = Cyclotomic(2) / inner(alpha, alpha);
  Vector out = alpha;
  for (auto& x : out) x *= scale;
  return out;
}

Vector RootSystem::coroot_pairings(const Vector& alpha) const { return gram_ * coroot(alpha); }

Matrix RootSystem::reflection(const Vector& alpha) const {
  const Vector c = coroot_pairings(alpha);
  const int n = rank();
  Matrix m = Matrix::identity(n);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) m(r, i) -= alpha[r] * c[i];
  }
  return m;
}

bool RootSystem::is_long(const Vector& alpha) const {
  const Cyclotomic len = inner(alpha, alpha);
  for (const auto& b : positive_) {
    if (*inner(b, b).as_rational() > *len.as_rational()) return false;
  }
  return true;
}

std::shared_ptr<const FiniteMatrixGroup> weyl_group(const RootSystem& R) {
  std::vector<Matrix> gens;
  for (const auto& a : R.simple_roots()) gens.push_back(R.reflection(a));
  return std::make_shared<const FiniteMatrixGroup>(FiniteMatrixGroup::generate(gens));
}

LusztigAlgebra::LusztigAlgebra(const RootSystem& R, RootParameters k)
    : Rewriter(weyl_group(R)), roots_(R), k_(std::move(k)) {
  const FiniteMatrixGroup& W = group();
  const int n = num_vars();
  const auto& simple = W.generators();

  lengths_.assign(W.order(), -1);
  lengths_[0] = 0;
  std::deque<Element> queue{0};
  std::vector<Element> by_length{0};
  while (!queue.empty()) {
    const Element g = queue.front();
    queue.pop_front();
    for (Element s : simple) {
      const Element sg = W.mul(s, g);
      if (lengths_[sg] < 0) {
        lengths_[sg] = lengths_[g] + 1;
        queue.push_back(sg);
        by_length.push_back(sg);
      }
    }
  }

  std::vector<Vector> pairings;
  std::vector<Cyclotomic> kk;
  for (const auto& a : roots_.simple_roots()) {
    pairings.push_back(roots_.coroot_pairings(a));
    kk.emplace_back(k_(roots_, a));
  }

  // s_k (prev) for prev = g' v_i, where g = s_k g'.
  auto apply_simple = [&](int k, const AlgebraElement& prev) {
    const Element s = simple[k];
    const Matrix& sm = W.element(s);
    AlgebraElement out;
    for (const auto& [m, c] : prev.terms()) {
      const Element sh = W.mul(s, m.group);
      auto it = std::find(m.exps.begin(), m.exps.end(), 1);
      if (it == m.exps.end()) {
        Monomial moved = m;
        moved.group = sh;
        out.add(moved, c);
        continue;
      }
      const int j = static_cast<int>(it - m.exps.begin());
      for (int l = 0; l < n; ++l) {
        if (sm(l, j).is_zero()) continue;
        Monomial moved{std::vector<int>(static_cast<std::size_t>(n), 0), sh, m.tpow};
        moved.exps[l] = 1;
        out.add(moved, c * sm(l, j));
      }
      Monomial corr{std::vector<int>(static_cast<std::size_t>(n), 0), m.group, m.tpow + 1};
      out.add(corr, -(c * kk[k] * pairings[k][j]));
    }
    return out;
  };

  moves_.assign(W.order() * static_cast<std::size_t>(n), AlgebraElement());
  for (int i = 0; i < n; ++i) moves_[i] = AlgebraElement::variable(n, i);
  for (Element g : by_length) {
    if (g == 0) continue;
    std::vector<int> descents;
    for (int k = 0; k < static_cast<int>(simple.size()); ++k) {
      if (lengths_[W.mul(simple[k], g)] < lengths_[g]) descents.push_back(k);
    }
    const int first = descents.front();
    const int last = descents.back();
    for (int i = 0; i < n; ++i) {
      const std::size_t idx = g * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
      const Element g1 = W.mul(simple[first], g);
      moves_[idx] = apply_simple(first, moves_[g1 * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)]);
      if (last != first) {
        const Element g2 = W.mul(simple[last], g);
        const AlgebraElement other =
            apply_simple(last, moves_[g2 * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)]);
        if (!(other == moves_[idx])) word_independent_ = false;
      }
    }
  }
}

Element LusztigAlgebra::reflection_index(const Vector& alpha) const {
  const auto g = group().find(roots_.reflection(alpha));
  if (!g) throw InternalInconsistency("reflection missing from the Weyl group");
  return *g;
}

std::vector<Rewriter::Replacement> LusztigAlgebra::swap_rule(int j, int i) const { return {{1, {i, j}, 0}}; }

std::vector<Rewriter::Replacement> LusztigAlgebra::push_rule(Element g, int i) const {
  std::vector<Replacement> out;
  const int n = num_vars();
  for (const auto& [m, c] : moves_[g * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)].terms()) {
    Word tokens;
    for (int j = 0; j < n; ++j) {
      if (m.exps[j] == 1) tokens.push_back(j);
    }
    if (m.group != 0) tokens.push_back(group_token(m.group));
    out.push_back({c, std::move(tokens), m.tpow});
  }
  return out;
}

Rewriter::Replacement LusztigAlgebra::merge_rule(Element g, Element h) const {
  const Element gh = group().mul(g, h);
  Word tokens;
  if (gh != 0) tokens.push_back(group_token(gh));
  return {1, std::move(tokens), 0};
}

FormFamily rs_forms(const RootSystem& R, RootParameters k, std::shared_ptr<const FiniteMatrixGroup> W) {
  const int n = R.rank();
  auto alpha = std::make_shared<const TwoCocycle>(TwoCocycle::trivial(W));
  std::vector<Element> refl;
  std::vector<Vector> pair;
  std::vector<Cyclotomic> kk;
  for (const auto& a : R.positive_roots()) {
    const auto g = W->find(R.reflection(a));
    if (!g) throw InternalInconsistency("reflection missing from the Weyl group");
    refl.push_back(*g);
    pair.push_back(R.coroot_pairings(a));
    kk.emplace_back(k(R, a));
  }
  std::map<Element, Matrix> acc;
  const Cyclotomic quarter(mpq_class(1, 4));
  for (std::size_t a = 0; a < refl.size(); ++a) {
    for (std::size_t b = 0; b < refl.size(); ++b) {
      const Element g = W->mul(refl[a], refl[b]);
      auto [it, _] = acc.try_emplace(g, Matrix(n, n));
      const Cyclotomic scale = quarter * kk[a] * kk[b];
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          it->second(i, j) += scale * (pair[b][i] * pair[a][j] - pair[a][i] * pair[b][j]);
        }
      }
    }
  }
  FormFamily family(alpha);
  for (auto& [g, m] : acc) family.set(g, std::move(m));
  return family;
}

FormFamily rs_forms(const RootSystem& R, RootParameters k) { return rs_forms(R, std::move(k), weyl_group(R)); }

HeckeAlgebra drinfeld_algebra(const LusztigAlgebra& L, HeckeOptions options) {
  return HeckeAlgebra(rs_forms(L.roots(), L.parameters(), L.group_ptr()), options);
}

AlgebraElement pairing_with_h(const LusztigAlgebra& L, int i) {
  const RootSystem& R = L.roots();
  const int n = L.num_vars();
  AlgebraElement out;
  for (const auto& a : R.positive_roots()) {
    const Cyclotomic c = Cyclotomic(mpq_class(1, 2)) * Cyclotomic(L.parameters()(R, a)) * R.coroot_pairings(a)[i];
    out += AlgebraElement::group_element(n, L.reflection_index(a)).scaled(c);
  }
  return out;
}

AlgebraElement phi_t(const LusztigAlgebra& L, const HeckeAlgebra& D, const AlgebraElement& x, ReductionCache* cache) {
  const int n = L.num_vars();
  ReductionCache local;
  ReductionCache& rc = cache ? *cache : local;
  std::vector<AlgebraElement> images;
  for (int i = 0; i < n; ++i) images.push_back(AlgebraElement::variable(n, i) - pairing_with_h(L, i).shifted(1));
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    AlgebraElement term = AlgebraElement::scalar(n, 1);
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < m.exps[i]; ++e) term = D.multiply(term, images[i], rc);
    }
    term = D.multiply(term, AlgebraElement::group_element(n, m.group), rc);
    out += term.shifted(m.tpow).scaled(c);
  }
  return out;
}

PhiReport verify_phi_isomorphism(const RootSystem& R, RootParameters k, int bound) {
  const LusztigAlgebra L(R, k);
  const FiniteMatrixGroup& W = L.group();
  const int n = L.num_vars();
  PhiReport report;
  auto note = [&](bool& flag, const std::string& what) {
    if (flag && report.witness.empty()) report.witness = what;
    flag = false;
  };

  FormFamily forms = rs_forms(R, k, L.group_ptr());
  const FamilyReport fr = verify_family(forms);
  if (!fr.ok()) note(report.forms_verified, "Ram-Shepler forms: " + fr.describe(W));
  const HeckeAlgebra D(std::move(forms), {true, 2});
  if (!L.word_independent()) note(report.word_independent, "reduced-word choice changes g v");

  ReductionCache lc;
  ReductionCache dc;
  std::map<Monomial, AlgebraElement, MonomialOrder> images;
  auto image = [&](const Monomial& m) -> const AlgebraElement& {
    auto it = images.find(m);
    if (it == images.end()) it = images.emplace(m, phi_t(L, D, AlgebraElement::monomial(m), &dc)).first;
    return it->second;
  };

  std::vector<Element> all(W.order());
  for (Element g = 0; g < W.order(); ++g) all[g] = g;
  const std::vector<Monomial> monos = basis_monomials(n, bound, all);
  for (const auto& x : monos) {
    for (const auto& y : monos) {
      if (x.degree() + y.degree() > bound) continue;
      ++report.pairs;
      const AlgebraElement lhs =
          phi_t(L, D, L.multiply(AlgebraElement::monomial(x), AlgebraElement::monomial(y), lc), &dc);
      const AlgebraElement rhs = D.multiply(image(x), image(y), dc);
      if (!(lhs == rhs)) {
        note(report.homomorphism, "Phi(xy) != Phi(x)Phi(y) for x = " + monomial_str(x, W) + ", y = " +
                                      monomial_str(y, W));
      }
    }
  }

  std::vector<AlgebraElement> h(static_cast<std::size_t>(n));
  std::vector<AlgebraElement> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    h[i] = pairing_with_h(L, i);
    v[i] = AlgebraElement::variable(n, i);
  }
  auto comm = [&](const AlgebraElement& a, const AlgebraElement& b) {
    return D.multiply(a, b, dc) - D.multiply(b, a, dc);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string at = " at (v" + std::to_string(i + 1) + ", v" + std::to_string(j + 1) + ")";
      if (!(comm(v[i], h[j]) == comm(v[j], h[i]))) note(report.commutator_identity, "[v,<w,h>] != [w,<v,h>]" + at);
      if (!(comm(h[i], h[j]) == D.bracket(i, j).scaled(-1))) {
        note(report.bracket_identity, "[<v,h>,<w,h>] != -sum a_g(v,w) g" + at);
      }
      if (!comm(phi_t(L, D, v[i], &dc), phi_t(L, D, v[j], &dc)).is_zero()) {
        note(report.relations, "Phi([v,w]) != 0" + at);
      }
    }
  }

  const auto& simple = W.generators();
  for (std::size_t s = 0; s < simple.size(); ++s) {
    const Vector& a = R.simple_roots()[s];
    const Vector pairings = R.coroot_pairings(a);
    const Cyclotomic ks(k(R, a));
    const Matrix& sm = W.element(simple[s]);
    const auto sbar = AlgebraElement::group_element(n, simple[s]);
    for (int i = 0; i < n; ++i) {
      AlgebraElement moved;
      for (int l = 0; l < n; ++l) moved += v[l].scaled(sm(l, i));
      AlgebraElement rel = D.multiply(sbar, phi_t(L, D, v[i], &dc), dc) -
                           D.multiply(phi_t(L, D, moved, &dc), sbar, dc) +
                           AlgebraElement::scalar(n, ks * pairings[i]).shifted(1);
      if (!rel.is_zero()) {
        note(report.relations, "Phi(s v - (s.v) s + k<v,a>t) != 0 for s = s" + std::to_string(s + 1) + ", v" +
                                   std::to_string(i + 1));
      }
    }
  }

  bool any_k = false;
  for (const auto& a : R.positive_roots()) any_k |= k(R, a) != 0;
  bool odd = false;
  for (int i = 0; i < n; ++i) {
    if (!(phi_t(L, D, v[i] + h[i].shifted(1), &dc) == v[i])) note(report.surjective, "v not in the image");
    for (const auto& [m, c] : phi_t(L, D, v[i], &dc).terms()) odd |= m.tpow % 2 == 1;
  }
  for (Element g = 0; g < W.order(); ++g) {
    const auto gbar = AlgebraElement::group_element(n, g);
    if (!(phi_t(L, D, gbar, &dc) == gbar)) note(report.surjective, "Phi(g) != g");
  }
  if (any_k && !odd) note(report.odd_t_powers, "no odd power of t in the images of V");
  return report;
}

} // namespace tgha
