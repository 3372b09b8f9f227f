#pragma once

#include "tgha/matgroup.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tgha {

/**
 * A two-cocycle G x G -> C^x with root-of-unity values.
 *
 * Values are kept as exponents of a primitive L-th root of unity, where L
 * is the number of roots of unity in Q(zeta_N) for the group's conductor N
 * (L = N for even N, 2N for odd N). Construction from explicit values
 * throws NotRootOfUnity for anything else.
 */
class TwoCocycle {
public:
  static TwoCocycle trivial(std::shared_ptr<const FiniteMatrixGroup> G);
  /// Row-major |G| x |G| table of values.
  static TwoCocycle from_table(std::shared_ptr<const FiniteMatrixGroup> G, std::span<const Cyclotomic> table);
  static TwoCocycle from_exponents(std::shared_ptr<const FiniteMatrixGroup> G, std::vector<int> exponents);

  const FiniteMatrixGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteMatrixGroup>& group_ptr() const { return group_; }

  /// Order L of the root-of-unity group that holds the values.
  int root_order() const { return root_order_; }
  /// zeta_L^k as an element of the group's field.
  Cyclotomic root(long k) const;
  /// Exponent of `value` in the roots of unity, if it is one.
  std::optional<int> exponent_of(const Cyclotomic& value) const;

  int exponent(Element g, Element h) const { return exps_[g * group_->order() + h]; }
  Cyclotomic operator()(Element g, Element h) const { return root(exponent(g, h)); }

  /// Pointwise product.
  TwoCocycle operator*(const TwoCocycle& rhs) const;

private:
  TwoCocycle(std::shared_ptr<const FiniteMatrixGroup> G, std::vector<int> exps);

  std::shared_ptr<const FiniteMatrixGroup> group_;
  int root_order_;
  std::vector<int> exps_;
};

struct CocycleReport {
  enum class Status { Valid, NotACocycle, NotNormalized };
  Status status = Status::Valid;
  std::array<Element, 3> witness{};  ///< (g,h,k) or (g,h) for normalization failures

  bool ok() const { return status == Status::Valid; }
  std::string describe(const FiniteMatrixGroup& G) const;
};

/// Checks alpha(g,h) alpha(gh,k) = alpha(h,k) alpha(g,hk) on every triple and normalization.
CocycleReport verify_cocycle(const TwoCocycle& alpha);

/// alpha(g,h) = beta(g) beta(h) / beta(gh), with beta rescaled so beta(1) = 1.
TwoCocycle coboundary_from(std::shared_ptr<const FiniteMatrixGroup> G, std::span<const Cyclotomic> beta);

/**
 * alpha(g1^i1..., g1^j1...) = q^(-sum_k i_k j_(k+1)) on the diagonal group
 * generated by g_k = diag(..., q, q^-1, ...). Throws WrongGroupShape when
 * the generators do not have that form.
 */
TwoCocycle elementary_abelian_cocycle(std::shared_ptr<const FiniteMatrixGroup> G);

/// Exponent coordinates (i_1, ..., i_(n-1)) of an element of the diagonal group.
std::vector<int> elementary_abelian_coordinates(const FiniteMatrixGroup& G, Element g);

/// Permutation sigma with g e_j = e_sigma(j), or nullopt if g is not a permutation matrix.
std::optional<std::vector<int>> as_permutation(const Matrix& g);

/**
 * Nontrivial cocycle of S_n (n >= 4) on permutation matrices, from the section
 * sigma -> product of Clifford unit vectors (e_i - e_j)/sqrt(2).
 */
TwoCocycle symmetric_group_cocycle(std::shared_ptr<const FiniteMatrixGroup> G);

/// alpha(g,h) = alpha(h,g) for every h in C(g).
bool is_alpha_regular(const TwoCocycle& alpha, Element g);

/// alpha(h,g) / alpha(g,h)
Cyclotomic commutator_ratio(const TwoCocycle& alpha, Element h, Element g);

} // namespace tgha
