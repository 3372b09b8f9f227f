#include "tgha/checks.hpp"

#include "tgha/errors.hpp"

#include <algorithm>
#include <set>

namespace tgha {

namespace {

void fill_exponents(int n, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const auto i = cur.size();
  if (static_cast<int>(i) == n - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    fill_exponents(n, remaining - e, cur, out);
    cur.pop_back();
  }
}

int weight(const Monomial& m) { return m.degree() + (m.group != 0 ? 1 : 0); }

AlgebraElement single(const Monomial& m) { return AlgebraElement::monomial(m); }

AlgebraElement commutator(const Rewriter& A, const AlgebraElement& x, const AlgebraElement& y,
                          ReductionCache& cache) {
  return A.multiply(x, y, cache) - A.multiply(y, x, cache);
}

std::string triple_str(const FiniteMatrixGroup& G, const Monomial& a, const Monomial& b, const Monomial& c) {
  auto s = [&](const Monomial& m) {
    const std::string body = monomial_str(m, G);
    return body.empty() ? std::string("1") : body;
  };
  return "(" + s(a) + ", " + s(b) + ", " + s(c) + ")";
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Incremental sparse Gaussian elimination on leading monomials.
class RankCounter {
public:
  void add(AlgebraElement row) {
    while (!row.is_zero()) {
      const auto& [lead, c] = *row.terms().begin();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Monomial key = lead;
        pivots_.emplace(key, row.scaled(c.inverse()));
        return;
      }
      row -= it->second.scaled(c);
    }
  }
  std::size_t rank() const { return pivots_.size(); }

private:
  std::map<Monomial, AlgebraElement, MonomialOrder> pivots_;
};

} // namespace

std::vector<std::vector<int>> exponent_vectors(int n, int degree) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  fill_exponents(n, degree, cur, out);
  return out;
}

std::vector<Monomial> basis_monomials(int n, int max_degree, const std::vector<Element>& groups) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& e : exponent_vectors(n, d)) {
      for (Element g : groups) out.push_back(Monomial{e, g, 0});
    }
  }
  return out;
}

std::vector<Element> identity_and_generators(const FiniteMatrixGroup& G) {
  std::vector<Element> out{0};
  for (Element g : G.generators()) {
    if (g != 0 && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

AssociativityReport associativity_check(const Rewriter& A, int bound) {
  const FiniteMatrixGroup& G = A.group();
  const int n = A.num_vars();
  AssociativityReport report;
  ReductionCache cache;

  std::vector<Monomial> monos;
  for (const auto& m : basis_monomials(n, bound, identity_and_generators(G))) {
    if (weight(m) >= 1 && weight(m) <= bound) monos.push_back(m);
  }
  for (const auto& x : monos) {
    for (const auto& y : monos) {
      if (weight(x) + weight(y) > bound) continue;
      const AlgebraElement xy = A.multiply(single(x), single(y), cache);
      for (const auto& z : monos) {
        if (weight(x) + weight(y) + weight(z) > bound) continue;
        ++report.triples;
        const AlgebraElement left = A.multiply(xy, single(z), cache);
        const AlgebraElement right = A.multiply(single(x), A.multiply(single(y), single(z), cache), cache);
        if (!(left == right)) {
          report.ok = false;
          report.witness = "associativity fails at " + triple_str(G, x, y, z) + ": difference " +
                           (left - right).str(G);
          return report;
        }
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        ++report.jacobi_triples;
        const auto U = AlgebraElement::variable(n, u);
        const auto V = AlgebraElement::variable(n, v);
        const auto W = AlgebraElement::variable(n, w);
        const AlgebraElement j = commutator(A, U, commutator(A, V, W, cache), cache) +
                                 commutator(A, V, commutator(A, W, U, cache), cache) +
                                 commutator(A, W, commutator(A, U, V, cache), cache);
        if (!j.is_zero()) {
          report.ok = false;
          report.witness = "Jacobi identity fails at (v" + std::to_string(u + 1) + ", v" + std::to_string(v + 1) +
                           ", v" + std::to_string(w + 1) + "): " + j.str(G);
          return report;
        }
      }
    }
  }
  return report;
}

PbwReport pbw_dimension_check(const HeckeAlgebra& A, int bound) {
  const FiniteMatrixGroup& G = A.group();
  const int n = A.num_vars();
  const int p = A.bracket_t_power();
  const long order = static_cast<long>(G.order());
  PbwReport report;
  ReductionCache cache;

  // Scaled weight p|e| + 2m keeps everything integral.
  auto scaled_weight = [&](const Monomial& m) { return p * m.degree() + 2 * m.tpow; };

  std::vector<Element> prefixes = identity_and_generators(G);
  std::vector<std::set<Monomial, MonomialOrder>> reached_by_length(static_cast<std::size_t>(bound + 1));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(bound + 1), 0);

  for (int L = 0; L <= bound; ++L) {
    RankCounter relations;
    std::vector<int> vars(static_cast<std::size_t>(L), 0);
    bool more = true;
    while (more) {
      for (Element pre : prefixes) {
        for (Element suf = 0; suf < G.order(); ++suf) {
          Word w;
          if (pre != 0) w.push_back(n + static_cast<int>(pre));
          w.insert(w.end(), vars.begin(), vars.end());
          if (suf != 0) w.push_back(n + static_cast<int>(suf));
          const AlgebraElement left = A.normal_form(w, Strategy::Leftmost, cache);
          const AlgebraElement right = A.normal_form(w, Strategy::Rightmost, cache);
          for (const auto& [m, c] : left.terms()) {
            if (scaled_weight(m) != p * L && report.detail.empty()) {
              report.detail = "inhomogeneous term " + monomial_str(m, G) + " from a word of length " +
                              std::to_string(L);
            }
            reached_by_length[L].insert(m);
          }
          const AlgebraElement diff = left - right;
          if (!diff.is_zero()) {
            if (report.detail.empty()) {
              report.detail = "leftmost and rightmost reductions differ on a word of length " + std::to_string(L) +
                              ": " + diff.str(G);
            }
            relations.add(diff);
          }
        }
      }
      more = false;
      for (int k = L - 1; k >= 0; --k) {
        if (++vars[k] < n) {
          more = true;
          break;
        }
        vars[k] = 0;
      }
    }
    ranks[L] = relations.rank();
  }

  std::set<std::pair<std::vector<int>, Element>> filtered;
  for (int k = 0; k <= bound; ++k) {
    PbwLevel level;
    level.weight = k;
    for (int m = 0; 2 * m <= p * k; ++m) {
      if ((p * k - 2 * m) % p != 0) continue;
      level.expected += static_cast<std::size_t>(binomial(n - 1 + (p * k - 2 * m) / p, n - 1) * order);
    }
    std::set<Monomial, MonomialOrder> reached;
    for (int L = 0; L <= k; ++L) {
      if ((p * (k - L)) % 2 != 0) continue;
      const int shift = p * (k - L) / 2;
      for (Monomial m : reached_by_length[L]) {
        m.tpow += shift;
        reached.insert(m);
      }
    }
    level.reached = reached.size();
    for (const auto& m : reached) filtered.emplace(m.exps, m.group);
    level.relation_rank = ranks[k];
    level.filtered_expected = static_cast<std::size_t>(binomial(n + k, k) * order);
    level.filtered_reached = filtered.size();
    if (!level.ok() && !report.collapse_weight) report.collapse_weight = k;
    report.levels.push_back(level);
  }
  report.ok = !report.collapse_weight && report.detail.empty();
  return report;
}

std::vector<AlgebraElement> deformation_mu(const HeckeAlgebra& A, const Monomial& r, const Monomial& s,
                                           ReductionCache* cache) {
  if (r.tpow != 0 || s.tpow != 0) throw Error("deformation coefficients need t-free arguments");
  ReductionCache local;
  const AlgebraElement product = A.multiply(single(r), single(s), cache ? *cache : local);
  const int p = A.bracket_t_power();
  std::vector<AlgebraElement> mu(static_cast<std::size_t>(product.max_tpow() + 1));
  for (std::size_t i = 0; i < mu.size(); ++i) {
    mu[i] = product.t_part(static_cast<int>(i));
    for (const auto& [m, c] : mu[i].terms()) {
      if (p * (r.degree() + s.degree() - m.degree()) != 2 * static_cast<int>(i)) {
        throw DegreeLawViolation("term " + monomial_str(m, A.group()) + " of mu_" + std::to_string(i) +
                                 " has degree " + std::to_string(m.degree()) + ", arguments have degrees " +
                                 std::to_string(r.degree()) + " and " + std::to_string(s.degree()));
      }
    }
  }
  return mu;
}

AlgebraElement mu1(const HeckeAlgebra& A, const AlgebraElement& r, const AlgebraElement& s, ReductionCache& cache) {
  return A.multiply(r, s, cache).t_part(1);
}

DeformationReport deformation_check(const HeckeAlgebra& A, int bound) {
  const FiniteMatrixGroup& G = A.group();
  const int n = A.num_vars();
  const int p = A.bracket_t_power();
  const HeckeAlgebra crossed = HeckeAlgebra::crossed_product(A.family().cocycle_ptr());
  DeformationReport report;
  ReductionCache cache;
  ReductionCache crossed_cache;

  std::vector<Element> all(G.order());
  for (Element g = 0; g < G.order(); ++g) all[g] = g;
  const auto monos = basis_monomials(n, bound, all);
  for (const auto& r : monos) {
    for (const auto& s : monos) {
      if (r.degree() + s.degree() > bound) continue;
      ++report.pairs;
      std::vector<AlgebraElement> mu;
      try {
        mu = deformation_mu(A, r, s, &cache);
      } catch (const DegreeLawViolation& e) {
        if (report.degree_law) report.witness = e.what();
        report.degree_law = false;
        continue;
      }
      if (report.zero_part && !(mu[0] == crossed.multiply(single(r), single(s), crossed_cache))) {
        report.zero_part = false;
        if (report.witness.empty()) report.witness = "t^0 part differs from the crossed product";
      }
      if (r.degree() + s.degree() <= 1) {
        for (std::size_t i = 1; i < mu.size(); ++i) {
          if (!mu[i].is_zero() && report.vanishing) {
            report.vanishing = false;
            if (report.witness.empty()) report.witness = "mu_" + std::to_string(i) + " nonzero on a degree <= 1 pair";
          }
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto vi = AlgebraElement::variable(n, i);
      const auto vj = AlgebraElement::variable(n, j);
      const AlgebraElement lhs = A.multiply(vj, vi, cache).t_part(p) - A.multiply(vi, vj, cache).t_part(p);
      const AlgebraElement rhs = A.bracket(i, j).scaled(-1);
      if (!(lhs == rhs) && report.skew_part) {
        report.skew_part = false;
        if (report.witness.empty()) {
          report.witness = "skew part at (v" + std::to_string(i + 1) + ", v" + std::to_string(j + 1) + ")";
        }
      }
    }
  }
  return report;
}

std::vector<std::array<Monomial, 3>> hochschild_triples(const FiniteMatrixGroup& G, int bound) {
  const auto monos = basis_monomials(G.dim(), bound, identity_and_generators(G));
  std::vector<std::array<Monomial, 3>> out;
  for (const auto& a : monos) {
    for (const auto& b : monos) {
      if (a.degree() + b.degree() > bound) continue;
      for (const auto& c : monos) {
        if (a.degree() + b.degree() + c.degree() <= bound) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

HochschildReport hochschild_check(const HeckeAlgebra& A, const std::vector<std::array<Monomial, 3>>& triples) {
  const HeckeAlgebra crossed = HeckeAlgebra::crossed_product(A.family().cocycle_ptr());
  HochschildReport report;
  ReductionCache cache;
  ReductionCache cc;
  for (const auto& [wm, rm, sm] : triples) {
    ++report.triples;
    const auto w = single(wm);
    const auto r = single(rm);
    const auto s = single(sm);
    const AlgebraElement wr = crossed.multiply(w, r, cc);
    const AlgebraElement rs = crossed.multiply(r, s, cc);
    const AlgebraElement lhs = crossed.multiply(mu1(A, w, r, cache), s, cc) + mu1(A, wr, s, cache);
    const AlgebraElement rhs = mu1(A, w, rs, cache) + crossed.multiply(w, mu1(A, r, s, cache), cc);
    if (!(lhs == rhs)) {
      report.ok = false;
      report.witness = "Hochschild identity fails at " + triple_str(A.group(), wm, rm, sm);
      return report;
    }
  }
  return report;
}

} // namespace tgha
