#pragma once

#include "tgha/algebra.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tgha {

/// All exponent vectors in N^n with entry sum exactly `degree`, in descending lexicographic order.
std::vector<std::vector<int>> exponent_vectors(int n, int degree);

/// t-free monomials v^e g with |e| <= max_degree and g drawn from `groups`.
std::vector<Monomial> basis_monomials(int n, int max_degree, const std::vector<Element>& groups);

/// {1} followed by the group generators.
std::vector<Element> identity_and_generators(const FiniteMatrixGroup& G);

struct AssociativityReport {
  bool ok = true;
  std::size_t triples = 0;
  std::size_t jacobi_triples = 0;
  std::string witness;  ///< first failing triple, empty when ok
};

/**
 * (xy)z = x(yz) for basis monomials v^e g with g in {1} and the generators,
 * where each factor counts |e| plus one for a group generator and the three
 * counts sum to at most `bound`; then the Jacobi combination on variable triples.
 */
AssociativityReport associativity_check(const Rewriter& A, int bound);

struct PbwLevel {
  int weight = 0;                    ///< |e| + (2/p) m for v^e g t^m
  std::size_t expected = 0;          ///< normal monomials of that weight
  std::size_t reached = 0;           ///< distinct normal monomials in the span
  std::size_t relation_rank = 0;     ///< rank of (leftmost - rightmost) reductions
  std::size_t filtered_expected = 0; ///< dim S(V)_{<=weight} * |G|
  std::size_t filtered_reached = 0;

  bool ok() const {
    return reached == expected && relation_rank == 0 && filtered_reached == filtered_expected;
  }
};

struct PbwReport {
  bool ok = true;
  std::vector<PbwLevel> levels;
  std::optional<int> collapse_weight;  ///< first weight where a count fails
  std::string detail;
};

/**
 * Reduces every word [prefix] v_i1 ... v_iL [g] with prefix in {none} and the
 * generators, g in G, L <= bound, by leftmost and by rightmost redex choice.
 * Checks homogeneity, that the reached monomials at each weight are all normal
 * monomials of that weight, that both reductions agree (no relation among
 * normal monomials), and the filtered count dim S(V)_{<=k} * |G|.
 */
PbwReport pbw_dimension_check(const HeckeAlgebra& A, int bound);

/**
 * Splits r*s by powers of t: entry i is mu_i(r,s), entry 0 the crossed product.
 * Throws DegreeLawViolation when a term of mu_i has degree other than
 * deg r + deg s - (2/p) i.
 */
std::vector<AlgebraElement> deformation_mu(const HeckeAlgebra& A, const Monomial& r, const Monomial& s,
                                           ReductionCache* cache = nullptr);

/// mu_1 extended bilinearly to t-free elements.
AlgebraElement mu1(const HeckeAlgebra& A, const AlgebraElement& r, const AlgebraElement& s, ReductionCache& cache);

struct DeformationReport {
  bool degree_law = true;
  bool vanishing = true;       ///< mu_i = 0 on pairs from the group algebra and V
  bool skew_part = true;       ///< mu_1(v_j,v_i) - mu_1(v_i,v_j) = -sum_g a_g(v_i,v_j) g
  bool zero_part = true;       ///< mu_0 agrees with the crossed product
  std::size_t pairs = 0;
  std::string witness;

  bool ok() const { return degree_law && vanishing && skew_part && zero_part; }
};

/// Runs the deformation checks on all t-free monomial pairs v^e g (g in G) with total degree <= bound.
DeformationReport deformation_check(const HeckeAlgebra& A, int bound);

struct HochschildReport {
  bool ok = true;
  std::size_t triples = 0;
  std::string witness;
};

/// mu_1(w,r)s + mu_1(wr,s) = mu_1(w,rs) + w mu_1(r,s) with crossed-product juxtaposition.
HochschildReport hochschild_check(const HeckeAlgebra& A, const std::vector<std::array<Monomial, 3>>& triples);

/// Triples of monomials v^e g, g in {1} and the generators, with |e| summing to at most `bound`.
std::vector<std::array<Monomial, 3>> hochschild_triples(const FiniteMatrixGroup& G, int bound);

} // namespace tgha
