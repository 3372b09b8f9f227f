#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tgha {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/**
 * Exact element of the cyclotomic field Q(zeta_N).
 *
 * Stored as phi(N) rational coordinates in the power basis
 * 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
 * polynomial. Values at different conductors combine when one conductor
 * divides the other; the result lives at the larger conductor.
 */
class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(long value);
  Cyclotomic(const mpq_class& value);

  /// zeta_n^k in reduced form.
  static Cyclotomic root_of_unity(int n, long k);

  /// Builds a value from raw coordinates of length phi(n) (reduced form).
  static Cyclotomic from_coeffs(int n, std::vector<mpq_class> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;

  /// Image under Q(zeta_N) -> Q(zeta_M); throws NotASubfield unless N | M.
  Cyclotomic promote(int m) const;

  /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  Cyclotomic galois(long k) const;
  /// Complex conjugation, zeta -> zeta^(N-1).
  Cyclotomic conjugate() const;
  /// Throws DivisionByZero for zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  Cyclotomic pow(long e) const;

  /// Literal form, e.g. `1/2*z^1 - 1/2*z^3`; `compact` drops the spaces.
  std::string str(bool compact = false) const;

private:
  Cyclotomic(int n, std::vector<mpq_class> coeffs);

  static int common_conductor(int a, int b);
  // Reduces a length-n array of coefficients of zeta^0..zeta^(n-1).
  static std::vector<mpq_class> reduce(int n, std::vector<mpq_class> full);

  int conductor_;
  std::vector<mpq_class> coeffs_;
};

/// Number L of roots of unity in Q(zeta_n): n for even n, 2n for odd n.
int roots_of_unity_count(int conductor);

/// The k-th power of a fixed primitive L-th root of unity, as an element of Q(zeta_n).
Cyclotomic field_root_of_unity(int conductor, long k);

/// k in [0, L) with field_root_of_unity(conductor, k) == value, if any.
std::optional<int> root_of_unity_exponent(const Cyclotomic& value, int conductor);

/**
 * Parses a literal in the session field Q(zeta_n): integers, `p/q`,
 * `z`, `z^k` (k may be negative), parentheses, and `+ - *` combinations.
 * Throws ParseError.
 */
Cyclotomic parse_cyclotomic(std::string_view text, int conductor);

} // namespace tgha
