#include "tgha/cocycle.hpp"

#include "tgha/clifford.hpp"
#include "tgha/errors.hpp"

#include <numeric>

namespace tgha {

namespace {

int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

TwoCocycle::TwoCocycle(std::shared_ptr<const FiniteMatrixGroup> G, std::vector<int> exps)
    : group_(std::move(G)), root_order_(roots_of_unity_count(group_->conductor())), exps_(std::move(exps)) {
  if (exps_.size() != group_->order() * group_->order()) throw Error("cocycle table has the wrong size");
  for (auto& e : exps_) e = mod(e, root_order_);
}

TwoCocycle TwoCocycle::trivial(std::shared_ptr<const FiniteMatrixGroup> G) {
  const std::size_t n = G->order();
  return TwoCocycle(std::move(G), std::vector<int>(n * n, 0));
}

TwoCocycle TwoCocycle::from_exponents(std::shared_ptr<const FiniteMatrixGroup> G, std::vector<int> exponents) {
  return TwoCocycle(std::move(G), std::move(exponents));
}

TwoCocycle TwoCocycle::from_table(std::shared_ptr<const FiniteMatrixGroup> G, std::span<const Cyclotomic> table) {
  TwoCocycle alpha = trivial(std::move(G));
  const std::size_t n = alpha.group_->order();
  if (table.size() != n * n) throw Error("cocycle table has the wrong size");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto e = alpha.exponent_of(table[i]);
    if (!e) {
      throw NotRootOfUnity("alpha(" + std::to_string(i / n) + "," + std::to_string(i % n) + ") = " +
                           table[i].str() + " is not a root of unity in Q(zeta_" +
                           std::to_string(alpha.group_->conductor()) + ")");
    }
    alpha.exps_[i] = *e;
  }
  return alpha;
}

Cyclotomic TwoCocycle::root(long k) const { return field_root_of_unity(group_->conductor(), k); }

std::optional<int> TwoCocycle::exponent_of(const Cyclotomic& value) const {
  return root_of_unity_exponent(value, group_->conductor());
}

TwoCocycle TwoCocycle::operator*(const TwoCocycle& rhs) const {
  if (group_ != rhs.group_) throw Error("cocycles over different groups");
  std::vector<int> e = exps_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exps_[i];
  return TwoCocycle(group_, std::move(e));
}

std::string CocycleReport::describe(const FiniteMatrixGroup& G) const {
  switch (status) {
    case Status::Valid:
      return "valid two-cocycle";
    case Status::NotACocycle:
      return "NotACocycle: identity fails at (g,h,k) = (" + G.word(witness[0]) + ", " + G.word(witness[1]) + ", " +
             G.word(witness[2]) + ")";
    case Status::NotNormalized:
      return "NotNormalized: alpha(" + G.word(witness[0]) + ", " + G.word(witness[1]) + ") != 1";
  }
  return {};
}

CocycleReport verify_cocycle(const TwoCocycle& alpha) {
  const FiniteMatrixGroup& G = alpha.group();
  const std::size_t n = G.order();
  const int L = alpha.root_order();
  for (Element g = 0; g < n; ++g) {
    if (alpha.exponent(0, g) != 0) return {CocycleReport::Status::NotNormalized, {0, g, 0}};
    if (alpha.exponent(g, 0) != 0) return {CocycleReport::Status::NotNormalized, {g, 0, 0}};
  }
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      const int gh = alpha.exponent(g, h);
      const Element prod = G.mul(g, h);
      for (Element k = 0; k < n; ++k) {
        const int lhs = gh + alpha.exponent(prod, k);
        const int rhs = alpha.exponent(h, k) + alpha.exponent(g, G.mul(h, k));
        if ((lhs - rhs) % L != 0) return {CocycleReport::Status::NotACocycle, {g, h, k}};
      }
    }
  }
  return {};
}

TwoCocycle coboundary_from(std::shared_ptr<const FiniteMatrixGroup> G, std::span<const Cyclotomic> beta) {
  const std::size_t n = G->order();
  if (beta.size() != n) throw Error("coboundary_from: beta must be defined on every element");
  std::vector<int> b(n);
  for (Element g = 0; g < n; ++g) {
    const auto e = root_of_unity_exponent(beta[g], G->conductor());
    if (!e) throw NotRootOfUnity("beta(" + G->word(g) + ") = " + beta[g].str() + " is not a root of unity");
    b[g] = *e;
  }
  std::vector<int> exps(n * n);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      // beta rescaled by beta(1)^-1 so the result is normalized.
      exps[g * n + h] = (b[g] - b[0]) + (b[h] - b[0]) - (b[G->mul(g, h)] - b[0]);
    }
  }
  return TwoCocycle::from_exponents(std::move(G), std::move(exps));
}

namespace {

struct DiagonalShape {
  int dim;
  int q_exponent;  // q = zeta_L^q_exponent
  int ell;         // order of q
};

DiagonalShape diagonal_shape(const FiniteMatrixGroup& G) {
  const int n = G.dim();
  const auto& gens = G.generators();
  if (n < 3 || static_cast<int>(gens.size()) != n - 1) {
    throw WrongGroupShape("expected n-1 diagonal generators on C^n with n >= 3");
  }
  const Cyclotomic q = G.element(gens[0])(0, 0);
  const auto qe = root_of_unity_exponent(q, G.conductor());
  if (!qe || *qe == 0) throw WrongGroupShape("g1[1,1] is not a nontrivial root of unity");
  const int L = roots_of_unity_count(G.conductor());
  const int ell = L / std::gcd(L, *qe);
  const Cyclotomic qinv = q.inverse();
  for (int k = 0; k < n - 1; ++k) {
    const Matrix& g = G.element(gens[k]);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Cyclotomic expect = 0;
        if (i == j) expect = (i == k) ? q : (i == k + 1 ? qinv : Cyclotomic(1));
        if (!(g(i, j) == expect)) {
          throw WrongGroupShape("generator g" + std::to_string(k + 1) + " is not diag(..., q, q^-1, ...)");
        }
      }
    }
  }
  return {n, *qe, ell};
}

} // namespace

std::vector<int> elementary_abelian_coordinates(const FiniteMatrixGroup& G, Element g) {
  const DiagonalShape shape = diagonal_shape(G);
  const int L = roots_of_unity_count(G.conductor());
  const Matrix& m = G.element(g);
  std::vector<int> c(static_cast<std::size_t>(shape.dim));
  for (int j = 0; j < shape.dim; ++j) {
    const auto e = root_of_unity_exponent(m(j, j), G.conductor());
    if (!e) throw WrongGroupShape("element " + G.word(g) + " is not diagonal with root-of-unity entries");
    // d_j = q^c_j
    int found = -1;
    for (int t = 0; t < shape.ell; ++t) {
      if (mod(static_cast<long>(t) * shape.q_exponent, L) == *e) {
        found = t;
        break;
      }
    }
    if (found < 0) throw WrongGroupShape("diagonal entry of " + G.word(g) + " is not a power of q");
    c[j] = found;
  }
  std::vector<int> coords(static_cast<std::size_t>(shape.dim - 1));
  int running = 0;
  for (int k = 0; k < shape.dim - 1; ++k) {
    running = mod(running + c[k], shape.ell);
    coords[k] = running;
  }
  if (mod(running + c[shape.dim - 1], shape.ell) != 0) {
    throw WrongGroupShape("element " + G.word(g) + " has determinant != 1");
  }
  return coords;
}

TwoCocycle elementary_abelian_cocycle(std::shared_ptr<const FiniteMatrixGroup> G) {
  const DiagonalShape shape = diagonal_shape(*G);
  const int L = roots_of_unity_count(G->conductor());
  const std::size_t n = G->order();
  std::vector<std::vector<int>> coords(n);
  for (Element g = 0; g < n; ++g) coords[g] = elementary_abelian_coordinates(*G, g);
  std::vector<int> exps(n * n);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      long s = 0;
      for (int k = 0; k + 1 < shape.dim - 1; ++k) s += static_cast<long>(coords[g][k]) * coords[h][k + 1];
      exps[g * n + h] = mod(-s * shape.q_exponent, L);
    }
  }
  return TwoCocycle::from_exponents(std::move(G), std::move(exps));
}

std::optional<std::vector<int>> as_permutation(const Matrix& g) {
  const int n = g.rows();
  std::vector<int> sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (g(i, j).is_zero()) continue;
      if (!g(i, j).is_one() || sigma[j] >= 0 || hit[i]) return std::nullopt;
      sigma[j] = i;
      hit[i] = true;
    }
    if (sigma[j] < 0) return std::nullopt;
  }
  return sigma;
}

namespace {

// sigma as (a1 a2)(a2 a3)... per cycle, cycles ordered by their smallest point.
CliffordElement section(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  CliffordElement t = CliffordElement::scalar(n, 1);
  std::vector<bool> seen(sigma.size(), false);
  for (int start = 0; start < n; ++start) {
    if (seen[start] || sigma[start] == start) continue;
    int a = start;
    seen[a] = true;
    for (int b = sigma[a]; b != start; a = b, b = sigma[b]) {
      seen[b] = true;
      t = t * CliffordElement::transposition_unit(n, a, b);
    }
  }
  return t;
}

} // namespace

TwoCocycle symmetric_group_cocycle(std::shared_ptr<const FiniteMatrixGroup> G) {
  const int n = G->dim();
  if (n < 4) throw WrongGroupShape("symmetric group cocycle needs n >= 4");
  const std::size_t order = G->order();
  std::vector<CliffordElement> lifts;
  lifts.reserve(order);
  for (Element g = 0; g < order; ++g) {
    const auto sigma = as_permutation(G->element(g));
    if (!sigma) throw WrongGroupShape("element " + G->word(g) + " is not a permutation matrix");
    lifts.push_back(section(*sigma));
  }
  std::vector<int> exps(order * order);
  for (Element g = 0; g < order; ++g) {
    for (Element h = 0; h < order; ++h) {
      const CliffordElement c = lifts[g] * lifts[h] * lifts[G->mul(g, h)].reversed();
      if (!c.is_scalar()) throw InternalInconsistency("section product is not central");
      const Cyclotomic s = c.scalar_part();
      if (s.is_one()) {
        exps[g * order + h] = 0;
      } else if ((-s).is_one()) {
        exps[g * order + h] = 1;  // -1 = zeta_L^(L/2); rescaled below
      } else {
        throw InternalInconsistency("section product is not +-1");
      }
    }
  }
  const int half = roots_of_unity_count(G->conductor()) / 2;
  for (auto& e : exps) e *= half;
  return TwoCocycle::from_exponents(std::move(G), std::move(exps));
}

bool is_alpha_regular(const TwoCocycle& alpha, Element g) {
  for (Element h : centralizer(alpha.group(), g)) {
    if (alpha.exponent(g, h) != alpha.exponent(h, g)) return false;
  }
  return true;
}

Cyclotomic commutator_ratio(const TwoCocycle& alpha, Element h, Element g) {
  return alpha.root(alpha.exponent(h, g) - alpha.exponent(g, h));
}

} // namespace tgha
