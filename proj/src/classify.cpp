#include "tgha/classify.hpp"

#include "tgha/errors.hpp"

namespace tgha {

void FormFamily::set(Element g, Matrix m) {
  if (m.is_zero()) {
    forms_.erase(g);
  } else {
    forms_[g] = std::move(m);
  }
}

const Matrix* FormFamily::form(Element g) const {
  auto it = forms_.find(g);
  return it == forms_.end() ? nullptr : &it->second;
}

Matrix FormFamily::matrix(Element g) const {
  if (const Matrix* m = form(g)) return *m;
  return Matrix(group().dim(), group().dim());
}

Admissibility class_admissible(const TwoCocycle& alpha, Element g) {
  if (g == 0) throw IdentityElement("admissibility is defined for g != 1; a_1 is the invariant part");
  const FiniteMatrixGroup& G = alpha.group();
  Admissibility out;
  out.codim = perp_basis(G, g).dim();
  if (out.codim != 2) return out;
  for (Element h : centralizer(G, g)) {
    if (!(h_perp_det(G, g, h).value == commutator_ratio(alpha, h, g))) {
      out.witness = h;
      return out;
    }
  }
  out.admissible = true;
  return out;
}

int invariant_two_form_dim(const FiniteMatrixGroup& G) {
  Cyclotomic sum;
  for (Element g = 0; g < G.order(); ++g) {
    const Cyclotomic tr = G.element(g).trace();
    sum += tr * tr - G.element(G.mul(g, g)).trace();
  }
  const auto avg = (sum / Cyclotomic(2 * static_cast<long>(G.order()))).as_rational();
  if (!avg || avg->get_den() != 1 || sgn(*avg) < 0) {
    throw InternalInconsistency("character average for (Lambda^2 V)^G is not a nonnegative integer");
  }
  return static_cast<int>(avg->get_num().get_si());
}

std::vector<Element> ClassReport::admissible_representatives() const {
  std::vector<Element> out;
  for (const auto& c : classes) {
    if (c.result.admissible) out.push_back(c.representative);
  }
  return out;
}

bool operator==(const ClassReport& a, const ClassReport& b) {
  if (a.d != b.d || a.inv2dim != b.inv2dim || a.classes.size() != b.classes.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const auto& x = a.classes[i];
    const auto& y = b.classes[i];
    if (x.representative != y.representative || x.size != y.size || x.result.admissible != y.result.admissible ||
        x.result.codim != y.result.codim || x.result.witness != y.result.witness) {
      return false;
    }
  }
  return true;
}

ClassReport classify_all(const TwoCocycle& alpha) {
  const FiniteMatrixGroup& G = alpha.group();
  ClassReport report;
  for (const auto& cls : G.classes()) {
    if (cls.representative == 0) continue;
    ClassEntry entry{cls.representative, cls.members.size(), class_admissible(alpha, cls.representative)};
    if (entry.result.admissible) ++report.d;
    report.classes.push_back(std::move(entry));
  }
  report.inv2dim = invariant_two_form_dim(G);
  return report;
}

SkewForm canonical_form(const FiniteMatrixGroup& G, Element g) {
  const Subspace perp = perp_basis(G, g);
  if (perp.dim() != 2) {
    throw WrongCodimension("codim V^g = " + std::to_string(perp.dim()) + " for " + G.word(g) + ", expected 2");
  }
  const Subspace fixed = fixed_space(G, g);
  std::vector<Vector> cols = perp.basis;
  cols.insert(cols.end(), fixed.basis.begin(), fixed.basis.end());
  const auto coords = inverse(Matrix::from_columns(cols));
  if (!coords) throw InternalInconsistency("V^g and Im(g-1) do not span V");
  // a(v,w) = x1 y2 - x2 y1 in coordinates x = coords v.
  Matrix J(G.dim(), G.dim());
  J(0, 1) = 1;
  J(1, 0) = -1;
  return {coords->transpose() * J * *coords};
}

Cyclotomic conjugation_factor(const TwoCocycle& alpha, Element g, Element h) {
  const FiniteMatrixGroup& G = alpha.group();
  const Element hinv = G.inv(h);
  return alpha.root(-alpha.exponent(h, hinv) + alpha.exponent(g, h) + alpha.exponent(hinv, G.mul(g, h)));
}

Matrix pull_back(const Matrix& form, const Matrix& h) { return h.transpose() * form * h; }

FormFamily propagate_family(std::shared_ptr<const TwoCocycle> alpha, const std::map<Element, Cyclotomic>& seeds,
                            const std::optional<Matrix>& invariant_part, PropagateOptions options) {
  const FiniteMatrixGroup& G = alpha->group();
  FormFamily family(alpha);
  std::vector<bool> assigned(G.order(), false);
  for (const auto& [g, scale] : seeds) {
    if (g == 0) throw IdentityElement("seed on the identity; pass a_1 as the invariant part");
    if (!options.force) {
      const Admissibility adm = class_admissible(*alpha, g);
      if (!adm.admissible) {
        throw NotAdmissible("class of " + G.word(g) + " is not admissible" +
                            (adm.witness ? " (witness h = " + G.word(*adm.witness) + ")"
                                         : " (codim " + std::to_string(adm.codim) + ")"));
      }
    }
    if (scale.is_zero()) continue;
    const Matrix base = canonical_form(G, g).matrix.scaled(scale);
    for (Element h = 0; h < G.order(); ++h) {
      const Element k = G.conjugate_by(g, h);
      Matrix value = pull_back(base, G.element(h)).scaled(conjugation_factor(*alpha, g, h));
      if (assigned[k]) {
        if (!options.force && !(family.matrix(k) == value)) {
          throw InconsistentPropagation("a_" + G.word(k) + " depends on the conjugating element");
        }
        continue;
      }
      assigned[k] = true;
      family.set(k, std::move(value));
    }
  }
  if (invariant_part) {
    const Matrix& a1 = *invariant_part;
    if (a1.rows() != G.dim() || !a1.is_skew()) throw FamilyError("a_1 must be a skew-symmetric n x n matrix");
    for (Element h = 0; h < G.order(); ++h) {
      if (!(pull_back(a1, G.element(h)) == a1)) throw FamilyError("a_1 is not invariant under " + G.word(h));
    }
    family.set(0, a1);
  }
  return family;
}

std::string FamilyReport::describe(const FiniteMatrixGroup& G) const {
  switch (failed) {
    case Check::Passed:
      return "all conditions hold";
    case Check::NotSkew:
      return "a_" + G.word(g) + " is not skew-symmetric";
    case Check::Conjugation:
      return "conjugation rule fails for g = " + G.word(g) + ", h = " + G.word(h) + " at (v" +
             std::to_string(basis[0] + 1) + ", v" + std::to_string(basis[1] + 1) + ")";
    case Check::Jacobi:
      return "Jacobi condition fails for g = " + G.word(g) + " at (v" + std::to_string(basis[0] + 1) + ", v" +
             std::to_string(basis[1] + 1) + ", v" + std::to_string(basis[2] + 1) + ")";
    case Check::Kernel:
      return "Ker a_" + G.word(g) + " != V^g";
    case Check::Codimension:
      return "a_" + G.word(g) + " != 0 but " + detail;
  }
  return {};
}

FamilyReport verify_family(const FormFamily& family) {
  const FiniteMatrixGroup& G = family.group();
  const TwoCocycle& alpha = family.cocycle();
  const int n = G.dim();
  FamilyReport report;

  for (const auto& [g, m] : family.forms()) {
    if (!m.is_skew()) {
      report.failed = FamilyReport::Check::NotSkew;
      report.g = g;
      return report;
    }
  }

  for (Element g = 0; g < G.order(); ++g) {
    const Matrix* ag = family.form(g);
    for (Element h = 0; h < G.order(); ++h) {
      const Element k = G.conjugate_by(g, h);
      const Matrix* ak = family.form(k);
      if (!ag && !ak) continue;
      const Matrix lhs = family.matrix(k);
      const Matrix rhs =
          ag ? pull_back(*ag, G.element(h)).scaled(conjugation_factor(alpha, g, h)) : Matrix(n, n);
      if (lhs == rhs) continue;
      report.failed = FamilyReport::Check::Conjugation;
      report.g = g;
      report.h = h;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (!(lhs(i, j) == rhs(i, j))) {
            report.basis = {i, j, 0};
            return report;
          }
        }
      }
      return report;
    }
  }

  const Matrix id = Matrix::identity(n);
  for (const auto& [g, m] : family.forms()) {
    const Matrix moved = G.element(g) - id;  // column w is g e_w - e_w
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
          Vector total(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) {
            total[i] = m(u, v) * moved(i, w) + m(v, w) * moved(i, u) + m(w, u) * moved(i, v);
          }
          if (!is_zero(total)) {
            report.failed = FamilyReport::Check::Jacobi;
            report.g = g;
            report.basis = {u, v, w};
            return report;
          }
        }
      }
    }
  }

  for (const auto& [g, m] : family.forms()) {
    if (g == 0) continue;
    const Subspace fixed = fixed_space(G, g);
    if (n - fixed.dim() != 2) {
      report.failed = FamilyReport::Check::Codimension;
      report.g = g;
      report.detail = "codim V^g = " + std::to_string(n - fixed.dim());
      return report;
    }
    if (nullspace(m) != fixed.basis) {
      report.failed = FamilyReport::Check::Kernel;
      report.g = g;
      return report;
    }
  }
  return report;
}

} // namespace tgha
