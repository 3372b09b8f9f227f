#include "tgha/matgroup.hpp"

#include "tgha/errors.hpp"

#include <numeric>

namespace tgha {

FiniteMatrixGroup FiniteMatrixGroup::generate(std::span<const Matrix> gens, std::size_t cap) {
  if (gens.empty()) throw Error("generate_group: at least one generator is required");
  FiniteMatrixGroup G;
  G.dim_ = gens[0].rows();
  int conductor = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Matrix& m = gens[i];
    if (!m.is_square() || m.rows() != G.dim_) throw Error("generate_group: generators must share one square shape");
    if (determinant(m).is_zero()) throw SingularGenerator("generator g" + std::to_string(i + 1) + " is singular");
    conductor = std::lcm(conductor, m.conductor());
  }
  G.conductor_ = conductor;

  // Distinct generators drive the breadth-first closure; `names` keeps the first input position.
  std::vector<Matrix> distinct;
  std::vector<int> names;
  {
    std::unordered_map<std::string, int> seen;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Matrix m = gens[i].promote(conductor);
      if (seen.emplace(m.key(), static_cast<int>(i)).second) {
        distinct.push_back(std::move(m));
        names.push_back(static_cast<int>(i));
      }
    }
  }

  const std::size_t ngen = distinct.size();
  std::vector<Element> right_gen;          // right_gen[x * ngen + s] = x * gen_s
  std::vector<std::pair<Element, int>> parent{{0, -1}};

  G.elements_.push_back(Matrix::identity(G.dim_).promote(conductor));
  G.words_.push_back({});
  G.index_.emplace(G.elements_[0].key(), 0);

  for (Element x = 0; x < G.elements_.size(); ++x) {
    for (std::size_t s = 0; s < ngen; ++s) {
      Matrix y = G.elements_[x] * distinct[s];
      std::string key = y.key();
      auto it = G.index_.find(key);
      Element idx;
      if (it == G.index_.end()) {
        idx = G.elements_.size();
        if (idx >= cap) {
          throw GroupTooLarge("group closure exceeds cap " + std::to_string(cap));
        }
        G.elements_.push_back(std::move(y));
        auto w = G.words_[x];
        w.push_back(names[s]);
        G.words_.push_back(std::move(w));
        parent.emplace_back(x, static_cast<int>(s));
        G.index_.emplace(std::move(key), idx);
      } else {
        idx = it->second;
      }
      right_gen.push_back(idx);
    }
  }

  const std::size_t N = G.elements_.size();
  G.mul_table_.assign(N * N, 0);
  for (Element a = 0; a < N; ++a) {
    G.mul_table_[a * N] = a;
    for (Element b = 1; b < N; ++b) {
      const auto [p, s] = parent[b];
      G.mul_table_[a * N + b] = right_gen[G.mul_table_[a * N + p] * ngen + static_cast<std::size_t>(s)];
    }
  }
  G.inv_table_.assign(N, 0);
  for (Element a = 0; a < N; ++a) {
    for (Element b = 0; b < N; ++b) {
      if (G.mul_table_[a * N + b] == 0) {
        G.inv_table_[a] = b;
        break;
      }
    }
  }

  for (const auto& g : gens) G.generators_.push_back(*G.find(g));

  G.class_of_.assign(N, N);
  for (Element g = 0; g < N; ++g) {
    if (G.class_of_[g] != N) continue;
    ConjugacyClass cls{g, {}};
    std::vector<bool> in(N, false);
    for (Element h = 0; h < N; ++h) in[G.conjugate_by(g, h)] = true;
    for (Element k = 0; k < N; ++k) {
      if (in[k]) {
        cls.members.push_back(k);
        G.class_of_[k] = G.classes_.size();
      }
    }
    G.classes_.push_back(std::move(cls));
  }
  return G;
}

Element FiniteMatrixGroup::power(Element g, long k) const {
  long order = 1;
  for (Element x = g; x != 0; x = mul(x, g)) ++order;
  long e = k % order;
  if (e < 0) e += order;
  Element r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, g);
  return r;
}

std::optional<Element> FiniteMatrixGroup::find(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  if (conductor_ % m.conductor() != 0) return std::nullopt;
  auto it = index_.find(m.promote(conductor_).key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteMatrixGroup::word(Element g) const {
  const auto& w = words_.at(g);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += 'g' + std::to_string(w[i] + 1);
  }
  return out;
}

std::vector<Element> centralizer(const FiniteMatrixGroup& G, Element g) {
  std::vector<Element> out;
  for (Element h = 0; h < G.order(); ++h) {
    if (G.mul(h, g) == G.mul(g, h)) out.push_back(h);
  }
  return out;
}

Subspace fixed_space(const FiniteMatrixGroup& G, Element g) {
  const int n = G.dim();
  return {n, nullspace(G.element(g) - Matrix::identity(n))};
}

Subspace perp_basis(const FiniteMatrixGroup& G, Element g) {
  const int n = G.dim();
  const Matrix d = G.element(g) - Matrix::identity(n);
  std::vector<Vector> cols;
  for (int j = 0; j < n; ++j) cols.push_back(d.column(j));
  return {n, row_reduce(std::move(cols))};
}

Matrix invariant_form(const FiniteMatrixGroup& G) {
  const int n = G.dim();
  Matrix H(n, n);
  for (Element g = 0; g < G.order(); ++g) H = H + G.element(g).adjoint() * G.element(g);
  return H;
}

PerpDeterminant h_perp_det(const FiniteMatrixGroup& G, Element g, Element h) {
  const Subspace perp = perp_basis(G, g);
  if (perp.dim() == 0) return {Cyclotomic(1), true};
  const Subspace fixed = fixed_space(G, g);
  std::vector<Vector> cols = perp.basis;
  cols.insert(cols.end(), fixed.basis.begin(), fixed.basis.end());
  const auto change = inverse(Matrix::from_columns(cols));
  if (!change) throw InternalInconsistency("V^g and Im(g-1) do not span V");
  const int k = perp.dim();
  Matrix restricted(k, k);
  for (int j = 0; j < k; ++j) {
    const Vector coords = *change * (G.element(h) * perp.basis[j]);
    for (int i = 0; i < k; ++i) restricted(i, j) = coords[i];
  }
  return {determinant(restricted), false};
}

} // namespace tgha
