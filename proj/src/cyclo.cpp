#include "tgha/cyclo.hpp"

#include "tgha/errors.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace tgha {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact quotient of two integer polynomials, divisor monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

} // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<long>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<const std::vector<long>>(std::move(poly)));
  return *it->second;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{mpq_class(value)} {}

Cyclotomic::Cyclotomic(const mpq_class& value) : conductor_(1), coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(int n, std::vector<mpq_class> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<mpq_class> coeffs) {
  if (n < 1) throw Error("conductor must be positive");
  if (static_cast<int>(coeffs.size()) != euler_phi(n)) throw Error("coefficient count must equal phi(conductor)");
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic(n, std::move(coeffs));
}

std::vector<mpq_class> Cyclotomic::reduce(int n, std::vector<mpq_class> full) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t d = phi_poly.size() - 1;
  for (std::size_t deg = full.size(); deg-- > d;) {
    if (sgn(full[deg]) == 0) continue;
    const mpq_class c = full[deg];
    for (std::size_t i = 0; i < d; ++i) {
      if (phi_poly[i] != 0) full[deg - d + i] -= c * phi_poly[i];
    }
    full[deg] = 0;
  }
  full.resize(d);
  return full;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw Error("root_of_unity: order must be positive");
  long e = k % n;
  if (e < 0) e += n;
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  full[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(n, reduce(n, std::move(full)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

int Cyclotomic::common_conductor(int a, int b) {
  if (a % b == 0) return a;
  if (b % a == 0) return b;
  throw ConductorMismatch("conductors " + std::to_string(a) + " and " + std::to_string(b) +
                          " are not nested");
}

Cyclotomic Cyclotomic::promote(int m) const {
  if (m < 1 || m % conductor_ != 0) {
    throw NotASubfield("Q(zeta_" + std::to_string(conductor_) + ") is not a subfield of Q(zeta_" +
                       std::to_string(m) + ")");
  }
  if (m == conductor_) return *this;
  if (is_rational()) {
    std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(m)));
    c[0] = coeffs_[0];
    return Cyclotomic(m, std::move(c));
  }
  const int step = m / conductor_;
  std::vector<mpq_class> full(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * step] = coeffs_[i];
  return Cyclotomic(m, reduce(m, std::move(full)));
}

Cyclotomic Cyclotomic::galois(long k) const {
  const long n = conductor_;
  if (std::gcd(k, n) != 1) throw Error("galois: exponent not coprime to conductor");
  if (is_rational()) return *this;
  long kk = k % n;
  if (kk < 0) kk += n;
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[(i * kk) % n] += coeffs_[i];
  return Cyclotomic(conductor_, reduce(conductor_, std::move(full)));
}

Cyclotomic Cyclotomic::conjugate() const { return conductor_ <= 2 ? *this : galois(conductor_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    std::vector<mpq_class> c(coeffs_.size());
    c[0] = 1 / coeffs_[0];
    return Cyclotomic(conductor_, std::move(c));
  }
  // Product of the other Galois conjugates; x times it is the (rational) norm.
  Cyclotomic others(1);
  for (long k = 2; k < conductor_; ++k) {
    if (std::gcd(k, static_cast<long>(conductor_)) == 1) others *= galois(k);
  }
  const auto norm = (*this * others).as_rational();
  if (!norm) throw InternalInconsistency("norm of cyclotomic is not rational");
  return others * Cyclotomic(1 / *norm);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const int n = common_conductor(conductor_, rhs.conductor_);
  if (n != conductor_) *this = promote(n);
  if (rhs.conductor_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else if (rhs.is_rational()) {
    coeffs_[0] += rhs.coeffs_[0];
  } else {
    const Cyclotomic p = rhs.promote(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += p.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.is_rational()) {
    const int n = common_conductor(conductor_, rhs.conductor_);
    if (n != conductor_) *this = promote(n);
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    Cyclotomic r = rhs;
    const int n = common_conductor(conductor_, rhs.conductor_);
    if (n != r.conductor_) r = r.promote(n);
    for (auto& c : r.coeffs_) c *= coeffs_[0];
    return *this = std::move(r);
  }
  const int n = common_conductor(conductor_, rhs.conductor_);
  const Cyclotomic a = promote(n);
  const Cyclotomic b = rhs.promote(n);
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      full[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = Cyclotomic(n, reduce(n, std::move(full)));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
  if (lhs.is_rational() && rhs.is_rational()) return lhs.coeffs_[0] == rhs.coeffs_[0];
  const int n = Cyclotomic::common_conductor(lhs.conductor_, rhs.conductor_);
  return lhs.promote(n).coeffs_ == rhs.promote(n).coeffs_;
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cyclotomic result(1);
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Cyclotomic::str(bool compact) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += compact ? (negative ? "-" : "+") : (negative ? " - " : " + ");
    }
    const mpq_class mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

int roots_of_unity_count(int conductor) { return conductor % 2 == 0 ? conductor : 2 * conductor; }

Cyclotomic field_root_of_unity(int conductor, long k) {
  if (conductor % 2 == 0) return Cyclotomic::root_of_unity(conductor, k);
  // zeta_2n = -zeta_n^((n+1)/2)
  const long L = 2L * conductor;
  long e = k % L;
  if (e < 0) e += L;
  Cyclotomic r = Cyclotomic::root_of_unity(conductor, e * ((conductor + 1) / 2));
  return (e % 2) ? -r : r;
}

std::optional<int> root_of_unity_exponent(const Cyclotomic& value, int conductor) {
  if (conductor % value.conductor() != 0) return std::nullopt;
  const int L = roots_of_unity_count(conductor);
  for (int k = 0; k < L; ++k) {
    if (field_root_of_unity(conductor, k) == value) return k;
  }
  return std::nullopt;
}

namespace {

class LiteralParser {
public:
  LiteralParser(std::string_view text, int conductor) : text_(text), conductor_(conductor) {}

  Cyclotomic parse() {
    Cyclotomic value = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad cyclotomic literal '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Cyclotomic expr() {
    Cyclotomic value;
    bool first = true;
    for (;;) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (!accept('+') && !first) {
        break;
      }
      Cyclotomic t = term();
      value += negative ? -t : t;
      first = false;
      skip();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return value;
  }

  Cyclotomic term() {
    Cyclotomic value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  Cyclotomic factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Cyclotomic value = expr();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (c == 'z') {
      ++pos_;
      long k = 1;
      if (accept('^')) {
        const bool negative = accept('-');
        k = std::stol(digits());
        if (negative) k = -k;
      }
      return Cyclotomic::root_of_unity(conductor_, k);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q{mpz_class(digits())};
      if (accept('/')) {
        const mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      q.canonicalize();
      return Cyclotomic(q);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int conductor_;
  std::size_t pos_ = 0;
};

} // namespace

Cyclotomic parse_cyclotomic(std::string_view text, int conductor) {
  return LiteralParser(text, conductor).parse();
}

} // namespace tgha
