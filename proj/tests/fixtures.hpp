#pragma once

#include "tgha/checks.hpp"
#include "tgha/cocycle.hpp"
#include "tgha/io.hpp"

#include <memory>
#include <string>

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(TGHA_DATA_DIR) + "/" + name; }

inline std::shared_ptr<const tgha::FiniteMatrixGroup> group(const std::string& name) {
  return tgha::load_group(data(name));
}

inline std::shared_ptr<const tgha::TwoCocycle> share(tgha::TwoCocycle alpha) {
  return std::make_shared<const tgha::TwoCocycle>(std::move(alpha));
}

inline tgha::Matrix diag(const std::vector<tgha::Cyclotomic>& d) {
  tgha::Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

/// Permutation matrix with g e_j = e_sigma(j).
inline tgha::Matrix perm(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  tgha::Matrix m(n, n);
  for (int j = 0; j < n; ++j) m(sigma[j], j) = 1;
  return m;
}

/// Element of a permutation group given by sigma (0-based images).
inline tgha::Element perm_element(const tgha::FiniteMatrixGroup& G, const std::vector<int>& sigma) {
  return *G.find(perm(sigma));
}

} // namespace fixtures
