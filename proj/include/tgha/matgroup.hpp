#pragma once

#include "tgha/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tgha {

/// Index of an element inside a FiniteMatrixGroup; 0 is always the identity.
using Element = std::size_t;

struct ConjugacyClass {
  Element representative; ///< smallest index in the class
  std::vector<Element> members;
};

/// Subspace of the ambient space with a canonical (reduced echelon) basis.
struct Subspace {
  int ambient_dim = 0;
  std::vector<Vector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/**
 * A finite group of invertible n x n cyclotomic matrices, closed under
 * multiplication, with full multiplication/inverse tables and conjugacy
 * classes. Immutable once generated.
 */
class FiniteMatrixGroup {
public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Breadth-first closure of `gens`. Throws SingularGenerator or GroupTooLarge.
  static FiniteMatrixGroup generate(std::span<const Matrix> gens, std::size_t cap = kDefaultCap);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }
  std::size_t order() const { return elements_.size(); }

  const Matrix& element(Element i) const { return elements_.at(i); }
  Element mul(Element a, Element b) const { return mul_table_[a * order() + b]; }
  Element inv(Element a) const { return inv_table_[a]; }
  /// h^-1 g h
  Element conjugate_by(Element g, Element h) const { return mul(mul(inv(h), g), h); }
  Element power(Element g, long k) const;

  /// Element indices of the original generators, in input order.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(Element g) const { return class_of_[g]; }

  std::optional<Element> find(const Matrix& m) const;

  /// Shortest generator word (breadth-first order), e.g. `g1*g2*g2`; `1` for the identity.
  std::string word(Element g) const;

private:
  FiniteMatrixGroup() = default;

  int dim_ = 0;
  int conductor_ = 1;
  std::vector<Matrix> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<Element> mul_table_;
  std::vector<Element> inv_table_;
  std::vector<Element> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::unordered_map<std::string, Element> index_;
};

/// All h with hg = gh, sorted.
std::vector<Element> centralizer(const FiniteMatrixGroup& G, Element g);

/// V^g = ker(g - 1).
Subspace fixed_space(const FiniteMatrixGroup& G, Element g);

/// (V^g)^perp realized as Im(g - 1).
Subspace perp_basis(const FiniteMatrixGroup& G, Element g);

/// Sum over G of g^* g; a G-invariant positive definite Hermitian form.
Matrix invariant_form(const FiniteMatrixGroup& G);

struct PerpDeterminant {
  Cyclotomic value;
  bool degenerate = false; ///< V^g = V; value is 1 by convention
};

/**
 * Determinant of h^perp: the action of h on (V^g)^perp followed by the
 * projection onto (V^g)^perp along V^g.
 */
PerpDeterminant h_perp_det(const FiniteMatrixGroup& G, Element g, Element h);

} // namespace tgha
