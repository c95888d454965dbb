#include "qsym/ncpoly.hpp"

#include <numeric>

namespace qsym {

MonomialOrder::MonomialOrder(std::vector<int> rank) : rank_(std::move(rank)) {
  std::vector<bool> seen(rank_.size(), false);
  for (int r : rank_) {
    if (r < 0 || r >= static_cast<int>(rank_.size()) || seen[static_cast<std::size_t>(r)])
      throw std::invalid_argument("monomial order ranks must be a permutation");
    seen[static_cast<std::size_t>(r)] = true;
  }
}

MonomialOrder MonomialOrder::natural(int ngens) {
  std::vector<int> rank(static_cast<std::size_t>(ngens));
  std::iota(rank.begin(), rank.end(), 0);
  return MonomialOrder(std::move(rank));
}

MonomialOrder MonomialOrder::from_precedence(const std::vector<int>& precedence) {
  std::vector<int> rank(precedence.size(), -1);
  for (std::size_t k = 0; k < precedence.size(); ++k) {
    const int g = precedence[k];
    if (g < 0 || g >= static_cast<int>(precedence.size()) || rank[static_cast<std::size_t>(g)] >= 0)
      throw std::invalid_argument("precedence must be a permutation of the generators");
    rank[static_cast<std::size_t>(g)] = static_cast<int>(k);
  }
  return MonomialOrder(std::move(rank));
}

std::vector<int> MonomialOrder::precedence() const {
  std::vector<int> out(rank_.size());
  for (std::size_t g = 0; g < rank_.size(); ++g) out[static_cast<std::size_t>(rank_[g])] = static_cast<int>(g);
  return out;
}

}  // namespace qsym
