#pragma once

#include "tgha/algebra.hpp"

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tgha {

struct GroupSpec {
  int conductor = 1;
  int dim = 0;
  std::vector<Matrix> generators;
};

/**
 * Group file:
 *
 *     conductor 3
 *     dim 3
 *     generators 2
 *     z 0 0
 *     ...
 *
 * followed by one block of `dim` rows per generator. Blank lines and `#`
 * comments are ignored. Throws ParseError.
 */
GroupSpec parse_group_spec(std::string_view text);

std::shared_ptr<const FiniteMatrixGroup> load_group(const std::filesystem::path& path,
                                                    std::size_t cap = FiniteMatrixGroup::kDefaultCap);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text(const std::filesystem::path& path);

/// `cocycle table` header, then |G|^2 lines `i j value` (element indices). Throws ParseError or NotRootOfUnity.
TwoCocycle parse_cocycle_table(std::string_view text, std::shared_ptr<const FiniteMatrixGroup> G);

/// Inverse of parse_cocycle_table.
std::string write_cocycle_table(const TwoCocycle& alpha);

/**
 * Element address: `1` or `identity`, a generator word such as `g1*g2^2`
 * or `g1^-1`, or a raw element index `#7`. Throws ParseError.
 */
Element parse_element(std::string_view text, const FiniteMatrixGroup& G);

/// `form <element>` followed by dim rows of dim literals; `form identity` is a_1. Throws ParseError.
FormFamily parse_forms(std::string_view text, std::shared_ptr<const TwoCocycle> alpha);

/// Inverse of parse_forms, in element order.
std::string write_forms(const FormFamily& family);

/// One summand of an unreduced expression.
struct ExpressionTerm {
  Cyclotomic coeff = 1;
  Word word;
  int tpow = 0;
};

/**
 * Parses sums of products such as `v2*v1*g1 + 3*v1^2*t - (z^1 + 1)*[g1*g2]`.
 * `gi` is the generator as an algebra element, so `g1*g2` picks up the cocycle
 * when reduced; `[word]` is the basis element of the group element `word`.
 * Throws ParseError.
 */
std::vector<ExpressionTerm> parse_expression(std::string_view text, const FiniteMatrixGroup& G);

/// Reduces parsed terms to normal form in `A`.
AlgebraElement evaluate(const Rewriter& A, const std::vector<ExpressionTerm>& terms);

} // namespace tgha
