#include "tgha/clifford.hpp"

#include <bit>

namespace tgha {

namespace {

// Sign of e_A e_B after sorting into e_{A xor B}: one swap for every pair
// (a in A, b in B) with a > b.
int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

} // namespace

CliffordElement CliffordElement::scalar(int n, const Cyclotomic& c) {
  CliffordElement x(n);
  x.add_term(0, c);
  return x;
}

CliffordElement CliffordElement::transposition_unit(int n, int i, int j) {
  const Cyclotomic root2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, -1);
  const Cyclotomic c = root2.inverse();
  CliffordElement x(n);
  x.add_term(1u << i, c);
  x.add_term(1u << j, -c);
  return x;
}

void CliffordElement::add_term(std::uint32_t blade, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(blade, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic CliffordElement::scalar_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

bool CliffordElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

CliffordElement CliffordElement::reversed() const {
  CliffordElement out(n_);
  for (const auto& [blade, c] : terms_) {
    // Reversing k generators takes k(k-1)/2 transpositions.
    const int k = std::popcount(blade);
    out.add_term(blade, ((k * (k - 1) / 2) & 1) ? -c : c);
  }
  return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& rhs) const {
  CliffordElement out(n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : rhs.terms_) {
      const Cyclotomic c = ca * cb;
      out.add_term(a ^ b, blade_sign(a, b) < 0 ? -c : c);
    }
  }
  return out;
}

CliffordElement CliffordElement::operator+(const CliffordElement& rhs) const {
  CliffordElement out = *this;
  for (const auto& [b, c] : rhs.terms_) out.add_term(b, c);
  return out;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

} // namespace tgha
