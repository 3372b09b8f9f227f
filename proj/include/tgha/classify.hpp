#pragma once

#include "tgha/cocycle.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tgha {

/// Skew-symmetric bilinear form a(v,w) = v^T M w on the standard basis.
struct SkewForm {
  Matrix matrix;

  Cyclotomic operator()(const Vector& v, const Vector& w) const { return bilinear(v, matrix, w); }
};

/**
 * The collection {a_g}: element index -> form. Absent entries are zero.
 * Index 0 holds a_1, the G-invariant part.
 */
class FormFamily {
public:
  explicit FormFamily(std::shared_ptr<const TwoCocycle> alpha) : alpha_(std::move(alpha)) {}

  const FiniteMatrixGroup& group() const { return alpha_->group(); }
  const TwoCocycle& cocycle() const { return *alpha_; }
  const std::shared_ptr<const TwoCocycle>& cocycle_ptr() const { return alpha_; }

  /// Stores `m`; a zero matrix erases the entry.
  void set(Element g, Matrix m);
  const Matrix* form(Element g) const;
  /// The form as a matrix, zero when absent.
  Matrix matrix(Element g) const;
  const std::map<Element, Matrix>& forms() const { return forms_; }
  bool is_zero() const { return forms_.empty(); }

private:
  std::shared_ptr<const TwoCocycle> alpha_;
  std::map<Element, Matrix> forms_;
};

struct Admissibility {
  bool admissible = false;
  int codim = 0;
  std::optional<Element> witness;  ///< h in C(g) where the determinant condition fails
};

/**
 * Whether some twisted graded Hecke algebra has a_g != 0: codim V^g = 2 and
 * det(h^perp) = alpha(h,g)/alpha(g,h) for all h in C(g). Throws IdentityElement for g = 1.
 */
Admissibility class_admissible(const TwoCocycle& alpha, Element g);

/// dim (Lambda^2 V)^G from the character average (tr(g)^2 - tr(g^2)) / 2.
int invariant_two_form_dim(const FiniteMatrixGroup& G);

struct ClassEntry {
  Element representative;
  std::size_t size;
  Admissibility result;
};

struct ClassReport {
  std::vector<ClassEntry> classes;  ///< nonidentity classes in class order
  int d = 0;
  int inv2dim = 0;
  int total() const { return d + inv2dim; }

  std::vector<Element> admissible_representatives() const;
  friend bool operator==(const ClassReport& a, const ClassReport& b);
};

ClassReport classify_all(const TwoCocycle& alpha);

/// Form with kernel V^g, scaled so a(b1,b2) = 1 on the canonical basis of Im(g-1).
SkewForm canonical_form(const FiniteMatrixGroup& G, Element g);

/// alpha(h,h^-1)^-1 alpha(g,h) alpha(h^-1,gh): the factor carrying a_g to a_(h^-1 g h).
Cyclotomic conjugation_factor(const TwoCocycle& alpha, Element g, Element h);

/// h^T M h, so that (h^T M h)(v,w) = M(hv,hw).
Matrix pull_back(const Matrix& form, const Matrix& h);

struct PropagateOptions {
  /// Skip the admissibility gate; used to build negative controls.
  bool force = false;
};

/**
 * Builds {a_g} from one scalar per admissible class representative, spreading
 * each over its class by the conjugation rule, plus an optional G-invariant a_1.
 * Throws NotAdmissible, InconsistentPropagation, or FamilyError (bad a_1).
 */
FormFamily propagate_family(std::shared_ptr<const TwoCocycle> alpha, const std::map<Element, Cyclotomic>& seeds,
                            const std::optional<Matrix>& invariant_part = std::nullopt,
                            PropagateOptions options = {});

struct FamilyReport {
  enum class Check { Passed, NotSkew, Conjugation, Jacobi, Kernel, Codimension };
  Check failed = Check::Passed;
  Element g = 0;
  Element h = 0;           ///< conjugating element for Conjugation failures
  std::array<int, 3> basis{};  ///< basis indices (i,j) or (u,v,w)
  std::string detail;

  bool ok() const { return failed == Check::Passed; }
  std::string describe(const FiniteMatrixGroup& G) const;
};

/// Checks skewness, the conjugation rule, the Jacobi-type condition, and the kernel conditions.
FamilyReport verify_family(const FormFamily& family);

} // namespace tgha
