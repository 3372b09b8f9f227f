#pragma once

#include "tgha/classify.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tgha {

/// Normal-ordered monomial v_1^e_1 ... v_n^e_n * g * t^m.
struct Monomial {
  std::vector<int> exps;
  Element group = 0;
  int tpow = 0;

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Print order: t-power ascending, then S(V)-degree descending, then exponents, then group index.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Finite linear combination of normal-ordered monomials; zero coefficients are never stored.
class AlgebraElement {
public:
  using Terms = std::map<Monomial, Cyclotomic, MonomialOrder>;

  AlgebraElement() = default;

  static AlgebraElement monomial(Monomial m, const Cyclotomic& c = 1);
  static AlgebraElement scalar(int nvars, const Cyclotomic& c);
  static AlgebraElement variable(int nvars, int i);
  static AlgebraElement group_element(int nvars, Element g);
  /// sum_i coords[i] v_i
  static AlgebraElement vector(const Vector& coords);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, const Cyclotomic& c);
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const Cyclotomic& c) const;
  /// Multiplies by t^m.
  AlgebraElement shifted(int m) const;
  /// Coefficient of t^m, with the t-power stripped.
  AlgebraElement t_part(int m) const;
  int max_tpow() const;
  bool is_t_free() const { return max_tpow() <= 0; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  /// e.g. `v1*v2 - 1/2*[g1]*t`; group elements print as their generator words in brackets.
  std::string str(const FiniteMatrixGroup& G) const;

private:
  Terms terms_;
};

std::string monomial_str(const Monomial& m, const FiniteMatrixGroup& G);

/// Tokens: variable i is i, group element g (g != 1) is nvars + g.
using Word = std::vector<int>;

enum class Strategy { Leftmost, Rightmost };

/// Memo of word normal forms for one rewriter; reuse only with the rewriter that filled it.
class ReductionCache {
public:
  std::map<Word, AlgebraElement>& memo(Strategy s) { return memo_[s == Strategy::Leftmost ? 0 : 1]; }

private:
  std::map<Word, AlgebraElement> memo_[2];
};

/**
 * Reduces words in variables and group elements to normal form using three
 * local rules: a group element meeting a group element, a group element
 * moving right past a variable, and an out-of-order variable pair. Concrete
 * algebras supply the rules; the engine fixes the normal order and the
 * choice of redex.
 */
class Rewriter {
public:
  struct Replacement {
    Cyclotomic coeff;
    Word tokens;
    int tpow = 0;
  };

  explicit Rewriter(std::shared_ptr<const FiniteMatrixGroup> G);
  virtual ~Rewriter() = default;

  const FiniteMatrixGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteMatrixGroup>& group_ptr() const { return group_; }
  int num_vars() const { return group_->dim(); }

  Word word_of(const Monomial& m) const;

  AlgebraElement normal_form(const Word& w, Strategy s = Strategy::Leftmost) const;
  AlgebraElement normal_form(const Word& w, Strategy s, ReductionCache& cache) const;

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, ReductionCache& cache) const;

protected:
  /// v_j v_i with j > i.
  virtual std::vector<Replacement> swap_rule(int j, int i) const = 0;
  /// g v_i, g != 1.
  virtual std::vector<Replacement> push_rule(Element g, int i) const = 0;
  /// g h, both != 1.
  virtual Replacement merge_rule(Element g, Element h) const = 0;

  int group_token(Element g) const { return num_vars() + static_cast<int>(g); }

private:
  std::shared_ptr<const FiniteMatrixGroup> group_;
};

struct HeckeOptions {
  /// Build even if verify_family fails (negative controls).
  bool force = false;
  /// Power of t carried by each bracket; 2 gives the algebra over C[t^2].
  int bracket_t_power = 1;
};

/**
 * Quotient of T(V) #_alpha G [t] by [v,w] = sum_g a_g(v,w) t^p g, in the
 * normal order v_1^e_1 ... v_n^e_n g t^m. A zero family gives the crossed
 * product S(V) #_alpha G [t].
 */
class HeckeAlgebra : public Rewriter {
public:
  /// Throws FamilyError when the family fails verify_family, unless options.force.
  explicit HeckeAlgebra(FormFamily family, HeckeOptions options = {});

  /// The crossed product for `alpha` (zero family).
  static HeckeAlgebra crossed_product(std::shared_ptr<const TwoCocycle> alpha);

  const FormFamily& family() const { return family_; }
  const TwoCocycle& cocycle() const { return family_.cocycle(); }
  int bracket_t_power() const { return options_.bracket_t_power; }
  bool forced() const { return options_.force; }

  /// sum_g a_g(v_i, v_j) g, without the t.
  AlgebraElement bracket(int i, int j) const;

protected:
  std::vector<Replacement> swap_rule(int j, int i) const override;
  std::vector<Replacement> push_rule(Element g, int i) const override;
  Replacement merge_rule(Element g, Element h) const override;

private:
  FormFamily family_;
  HeckeOptions options_;
  // brackets_[i * n + j]: (g, a_g(v_i, v_j)) with nonzero value
  std::vector<std::vector<std::pair<Element, Cyclotomic>>> brackets_;
};

/// Product in S(V) #_alpha G (all brackets zero).
AlgebraElement crossed_multiply(std::shared_ptr<const TwoCocycle> alpha, const AlgebraElement& x,
                                const AlgebraElement& y);

/// Product in the twisted graded Hecke algebra.
inline AlgebraElement hecke_multiply(const HeckeAlgebra& A, const AlgebraElement& x, const AlgebraElement& y) {
  return A.multiply(x, y);
}

/// The group element g acting on a vector: g v as coordinates.
Vector act(const FiniteMatrixGroup& G, Element g, const Vector& v);

} // namespace tgha
