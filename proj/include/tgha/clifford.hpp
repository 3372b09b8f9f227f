#pragma once

#include "tgha/cyclo.hpp"

#include <cstdint>
#include <map>

namespace tgha {

/**
 * Element of the Clifford algebra on n orthonormal generators
 * (e_i^2 = 1, e_i e_j = -e_j e_i). Basis blades are bitmasks over {0..n-1}.
 */
class CliffordElement {
public:
  explicit CliffordElement(int n) : n_(n) {}

  static CliffordElement scalar(int n, const Cyclotomic& c);
  /// (e_i - e_j)/sqrt(2), a unit vector squaring to 1. Coefficients live in Q(zeta_8).
  static CliffordElement transposition_unit(int n, int i, int j);

  int generators() const { return n_; }
  const std::map<std::uint32_t, Cyclotomic>& terms() const { return terms_; }

  Cyclotomic scalar_part() const;
  bool is_scalar() const;
  /// Reverses the order of every blade; inverse of a product of unit vectors.
  CliffordElement reversed() const;

  CliffordElement operator*(const CliffordElement& rhs) const;
  CliffordElement operator+(const CliffordElement& rhs) const;
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

private:
  void add_term(std::uint32_t blade, const Cyclotomic& c);

  int n_;
  std::map<std::uint32_t, Cyclotomic> terms_;
};

} // namespace tgha
