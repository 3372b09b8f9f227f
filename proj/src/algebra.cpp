#include "tgha/algebra.hpp"

#include "tgha/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tgha {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.tpow != b.tpow) return a.tpow < b.tpow;
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  if (a.exps != b.exps) return a.exps > b.exps;
  return a.group < b.group;
}

AlgebraElement AlgebraElement::monomial(Monomial m, const Cyclotomic& c) {
  AlgebraElement out;
  out.add(m, c);
  return out;
}

AlgebraElement AlgebraElement::scalar(int nvars, const Cyclotomic& c) {
  return monomial(Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0), 0, 0}, c);
}

AlgebraElement AlgebraElement::variable(int nvars, int i) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(nvars), 0), 0, 0};
  m.exps.at(static_cast<std::size_t>(i)) = 1;
  return monomial(std::move(m));
}

AlgebraElement AlgebraElement::group_element(int nvars, Element g) {
  return monomial(Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0), g, 0});
}

AlgebraElement AlgebraElement::vector(const Vector& coords) {
  const int n = static_cast<int>(coords.size());
  AlgebraElement out;
  for (int i = 0; i < n; ++i) {
    if (!coords[i].is_zero()) out += variable(n, i).scaled(coords[i]);
  }
  return out;
}

void AlgebraElement::add(const Monomial& m, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Cyclotomic& c) const {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

AlgebraElement AlgebraElement::shifted(int m) const {
  if (m == 0) return *this;
  AlgebraElement out;
  for (const auto& [mono, c] : terms_) {
    Monomial moved = mono;
    moved.tpow += m;
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

AlgebraElement AlgebraElement::t_part(int m) const {
  AlgebraElement out;
  for (const auto& [mono, c] : terms_) {
    if (mono.tpow != m) continue;
    Monomial stripped = mono;
    stripped.tpow = 0;
    out.terms_.emplace(std::move(stripped), c);
  }
  return out;
}

int AlgebraElement::max_tpow() const {
  int best = 0;
  for (const auto& entry : terms_) best = std::max(best, entry.first.tpow);
  return best;
}

std::string monomial_str(const Monomial& m, const FiniteMatrixGroup& G) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    std::string p = "v" + std::to_string(i + 1);
    if (m.exps[i] > 1) p += "^" + std::to_string(m.exps[i]);
    parts.push_back(std::move(p));
  }
  if (m.group != 0) parts.push_back("[" + G.word(m.group) + "]");
  if (m.tpow == 1) parts.emplace_back("t");
  if (m.tpow > 1) parts.push_back("t^" + std::to_string(m.tpow));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

std::string AlgebraElement::str(const FiniteMatrixGroup& G) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const std::string body = monomial_str(m, G);
    bool negative = false;
    std::string coeff;
    if (auto r = c.as_rational()) {
      negative = sgn(*r) < 0;
      const mpq_class mag = abs(*r);
      if (mag != 1 || body.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + c.str(true) + ")";
    }
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!coeff.empty() && !body.empty()) out += "*";
    out += body;
  }
  return out;
}

Rewriter::Rewriter(std::shared_ptr<const FiniteMatrixGroup> G) : group_(std::move(G)) {}

Word Rewriter::word_of(const Monomial& m) const {
  Word w;
  for (int i = 0; i < num_vars(); ++i) w.insert(w.end(), static_cast<std::size_t>(m.exps[i]), i);
  if (m.group != 0) w.push_back(group_token(m.group));
  return w;
}

namespace {

constexpr std::size_t kNoRedex = static_cast<std::size_t>(-1);

// Position of the chosen redex, or kNoRedex when the word is normal.
std::size_t find_redex(const Word& w, int n, Strategy s) {
  auto is_redex = [&](std::size_t k) {
    const int a = w[k];
    const int b = w[k + 1];
    if (a >= n) return true;  // group followed by anything
    return b < n && a > b;
  };
  if (w.size() < 2) return kNoRedex;
  if (s == Strategy::Leftmost) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (is_redex(k)) return k;
    }
  } else {
    for (std::size_t k = w.size() - 1; k-- > 0;) {
      if (is_redex(k)) return k;
    }
  }
  return kNoRedex;
}

} // namespace

AlgebraElement Rewriter::normal_form(const Word& w, Strategy s) const {
  ReductionCache cache;
  return normal_form(w, s, cache);
}

AlgebraElement Rewriter::normal_form(const Word& w, Strategy s, ReductionCache& cache) const {
  const int n = num_vars();
  auto& memo = cache.memo(s);
  if (auto it = memo.find(w); it != memo.end()) return it->second;

  AlgebraElement result;
  const std::size_t k = find_redex(w, n, s);
  if (k == kNoRedex) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(n), 0), 0, 0};
    for (int tok : w) {
      if (tok < n) {
        ++m.exps[tok];
      } else {
        m.group = static_cast<Element>(tok - n);
      }
    }
    result.add(m, 1);
  } else {
    const int a = w[k];
    const int b = w[k + 1];
    std::vector<Replacement> reps;
    if (a >= n && b >= n) {
      reps.push_back(merge_rule(static_cast<Element>(a - n), static_cast<Element>(b - n)));
    } else if (a >= n) {
      reps = push_rule(static_cast<Element>(a - n), b);
    } else {
      reps = swap_rule(a, b);
    }
    for (const auto& r : reps) {
      if (r.coeff.is_zero()) continue;
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      next.insert(next.end(), r.tokens.begin(), r.tokens.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
      result += normal_form(next, s, cache).shifted(r.tpow).scaled(r.coeff);
    }
  }
  return memo.emplace(w, std::move(result)).first->second;
}

AlgebraElement Rewriter::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  ReductionCache cache;
  return multiply(x, y, cache);
}

AlgebraElement Rewriter::multiply(const AlgebraElement& x, const AlgebraElement& y, ReductionCache& cache) const {
  AlgebraElement out;
  for (const auto& [mx, cx] : x.terms()) {
    const Word wx = word_of(mx);
    for (const auto& [my, cy] : y.terms()) {
      Word w = wx;
      const Word wy = word_of(my);
      w.insert(w.end(), wy.begin(), wy.end());
      out += normal_form(w, Strategy::Leftmost, cache).shifted(mx.tpow + my.tpow).scaled(cx * cy);
    }
  }
  return out;
}

HeckeAlgebra::HeckeAlgebra(FormFamily family, HeckeOptions options)
    : Rewriter(family.cocycle().group_ptr()), family_(std::move(family)), options_(options) {
  if (options_.bracket_t_power < 1) throw FamilyError("bracket t-power must be positive");
  if (!options_.force) {
    const FamilyReport report = verify_family(family_);
    if (!report.ok()) throw FamilyError("family fails verification: " + report.describe(group()));
  }
  const int n = num_vars();
  brackets_.resize(static_cast<std::size_t>(n * n));
  for (const auto& [g, m] : family_.forms()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!m(i, j).is_zero()) brackets_[static_cast<std::size_t>(i * n + j)].emplace_back(g, m(i, j));
      }
    }
  }
}

HeckeAlgebra HeckeAlgebra::crossed_product(std::shared_ptr<const TwoCocycle> alpha) {
  return HeckeAlgebra(FormFamily(std::move(alpha)));
}

AlgebraElement HeckeAlgebra::bracket(int i, int j) const {
  AlgebraElement out;
  for (const auto& [g, c] : brackets_[static_cast<std::size_t>(i * num_vars() + j)]) {
    out += AlgebraElement::group_element(num_vars(), g).scaled(c);
  }
  return out;
}

std::vector<Rewriter::Replacement> HeckeAlgebra::swap_rule(int j, int i) const {
  std::vector<Replacement> out;
  out.push_back({1, {i, j}, 0});
  for (const auto& [g, c] : brackets_[static_cast<std::size_t>(i * num_vars() + j)]) {
    Word tokens;
    if (g != 0) tokens.push_back(group_token(g));
    out.push_back({-c, std::move(tokens), options_.bracket_t_power});
  }
  return out;
}

std::vector<Rewriter::Replacement> HeckeAlgebra::push_rule(Element g, int i) const {
  std::vector<Replacement> out;
  const Matrix& m = group().element(g);
  for (int j = 0; j < num_vars(); ++j) {
    if (!m(j, i).is_zero()) out.push_back({m(j, i), {j, group_token(g)}, 0});
  }
  return out;
}

Rewriter::Replacement HeckeAlgebra::merge_rule(Element g, Element h) const {
  const Element gh = group().mul(g, h);
  Word tokens;
  if (gh != 0) tokens.push_back(group_token(gh));
  return {cocycle()(g, h), std::move(tokens), 0};
}

AlgebraElement crossed_multiply(std::shared_ptr<const TwoCocycle> alpha, const AlgebraElement& x,
                                const AlgebraElement& y) {
  return HeckeAlgebra::crossed_product(std::move(alpha)).multiply(x, y);
}

Vector act(const FiniteMatrixGroup& G, Element g, const Vector& v) { return G.element(g) * v; }

} // namespace tgha
