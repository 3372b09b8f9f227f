#pragma once

#include "tgha/algebra.hpp"

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tgha {

/// Root data in simple-root coordinates: a vector x means sum_i x_i alpha_i.
class RootSystem {
public:
  /// A1, A2, A3 or B2. Throws Error for anything else.
  static RootSystem builtin(std::string_view type);

  const std::string& type() const { return type_; }
  int rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<Vector>& simple_roots() const { return simple_; }
  const std::vector<Vector>& positive_roots() const { return positive_; }

  Cyclotomic inner(const Vector& v, const Vector& w) const { return bilinear(v, gram_, w); }
  /// 2 alpha / <alpha, alpha>
  Vector coroot(const Vector& alpha) const;
  /// <e_i, alpha^vee> for each basis vector e_i.
  Vector coroot_pairings(const Vector& alpha) const;
  /// Matrix of v -> v - <v, alpha^vee> alpha.
  Matrix reflection(const Vector& alpha) const;
  bool is_long(const Vector& alpha) const;

private:
  std::string type_;
  Matrix gram_;
  std::vector<Vector> simple_;
  std::vector<Vector> positive_;
};

/// k_alpha, constant on root lengths: `k_long` for long roots (all roots when there is one length).
struct RootParameters {
  mpq_class k_long = 1;
  mpq_class k_short = 1;

  mpq_class operator()(const RootSystem& R, const Vector& alpha) const {
    return R.is_long(alpha) ? k_long : k_short;
  }
};

/// The reflection group generated by the simple reflections, in that generator order.
std::shared_ptr<const FiniteMatrixGroup> weyl_group(const RootSystem& R);

/**
 * Lusztig's graded algebra: commuting variables, and
 * s_i v = (s_i . v) s_i - k_i <v, alpha_i^vee> t for simple reflections.
 * A general group element is moved past a variable along a reduced word.
 */
class LusztigAlgebra : public Rewriter {
public:
  LusztigAlgebra(const RootSystem& R, RootParameters k);

  const RootSystem& roots() const { return roots_; }
  const RootParameters& parameters() const { return k_; }
  /// Element index of the reflection s_alpha.
  Element reflection_index(const Vector& alpha) const;
  /// Coxeter length of every element.
  const std::vector<int>& lengths() const { return lengths_; }
  /// Whether moving g past v gave the same result along two different reduced words, for every g and v.
  bool word_independent() const { return word_independent_; }

protected:
  std::vector<Replacement> swap_rule(int j, int i) const override;
  std::vector<Replacement> push_rule(Element g, int i) const override;
  Replacement merge_rule(Element g, Element h) const override;

private:
  RootSystem roots_;
  RootParameters k_;
  std::vector<int> lengths_;
  std::vector<AlgebraElement> moves_;  // moves_[g * n + i] = g v_i in normal form
  bool word_independent_ = true;
};

/**
 * a_g(v,w) = 1/4 sum_{alpha,beta > 0, g = s_alpha s_beta} k_alpha k_beta (<v,b><w,a> - <v,a><w,b>)
 * with a = alpha^vee, b = beta^vee, over the trivial cocycle of W.
 */
FormFamily rs_forms(const RootSystem& R, RootParameters k, std::shared_ptr<const FiniteMatrixGroup> W);
FormFamily rs_forms(const RootSystem& R, RootParameters k);

/// The Drinfeld-type algebra built from rs_forms on the same group as `L`, brackets carrying t^2.
HeckeAlgebra drinfeld_algebra(const LusztigAlgebra& L, HeckeOptions options = {false, 2});

/// <e_i, h> = 1/2 sum_{alpha > 0} k_alpha <e_i, alpha^vee> s_alpha, in the group algebra.
AlgebraElement pairing_with_h(const LusztigAlgebra& L, int i);

/// Phi(v) = v - t <v,h>, Phi(g) = g, extended multiplicatively along normal forms.
AlgebraElement phi_t(const LusztigAlgebra& L, const HeckeAlgebra& D, const AlgebraElement& x,
                     ReductionCache* cache = nullptr);

struct PhiReport {
  bool forms_verified = true;   ///< rs_forms passes verify_family
  bool word_independent = true;
  bool homomorphism = true;     ///< Phi(xy) = Phi(x) Phi(y) on basis pairs
  bool commutator_identity = true;  ///< [v,<w,h>] = [w,<v,h>]
  bool bracket_identity = true;     ///< [<v,h>,<w,h>] = -sum_g a_g(v,w) g
  bool relations = true;       ///< images of the defining relations of the source vanish
  bool surjective = true;      ///< Phi(v + t<v,h>) = v and Phi(g) = g
  bool odd_t_powers = true;    ///< some image has an odd power of t (when some k != 0)
  std::size_t pairs = 0;
  std::string witness;

  bool ok() const {
    return forms_verified && word_independent && homomorphism && commutator_identity && bracket_identity &&
           relations && surjective && odd_t_powers;
  }
};

/// Checks that Phi is an isomorphism on everything of total variable degree <= bound.
PhiReport verify_phi_isomorphism(const RootSystem& R, RootParameters k, int bound);

} // namespace tgha
