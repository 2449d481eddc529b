#pragma once

// Littlewood-Richardson coefficients by explicit enumeration of LR skew
// tableaux. Shares no code with the Pieri/Giambelli product and exists to
// cross-check it.

#include <cstddef>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/partition.hpp"

namespace bggx {

/// c^nu_{lambda,mu}: number of semistandard fillings of nu/lambda with content
/// mu whose reverse reading word is a lattice word.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) {
    throw DomainError("LR coefficient needs |nu| = |lambda| + |mu|");
  }
  if (componentwise_compare(lambda, nu) == std::partial_ordering::greater ||
      componentwise_compare(lambda, nu) == std::partial_ordering::unordered) {
    return 0;
  }
  struct Cell {
    std::size_t row;
    int col;
  };
  // Reading order: rows top to bottom, each row right to left.
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < nu.length(); ++r) {
    for (int c = nu[r] - 1; c >= lambda[r]; --c) cells.push_back({r, c});
  }
  std::vector<std::vector<int>> filling(nu.length());
  for (std::size_t r = 0; r < nu.length(); ++r) filling[r].assign(static_cast<std::size_t>(nu[r]), 0);

  const std::size_t letters = mu.length();
  std::vector<int> used(letters + 1, 0);
  long long count = 0;

  auto rec = [&](auto& self, std::size_t index) -> void {
    if (index == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[index];
    for (std::size_t v = 1; v <= letters; ++v) {
      const int value = static_cast<int>(v);
      if (used[v] >= mu[v - 1]) continue;
      // lattice condition on the reading word prefix
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      // weakly increasing along the row (right neighbour already placed)
      if (c + 1 < nu[r] && filling[r][static_cast<std::size_t>(c + 1)] != 0 &&
          value > filling[r][static_cast<std::size_t>(c + 1)]) {
        continue;
      }
      // strictly increasing down the column (cell above inside the skew shape)
      if (r > 0 && c >= lambda[r - 1] && c < nu[r - 1] && value <= filling[r - 1][static_cast<std::size_t>(c)]) {
        continue;
      }
      filling[r][static_cast<std::size_t>(c)] = value;
      ++used[v];
      self(self, index + 1);
      --used[v];
      filling[r][static_cast<std::size_t>(c)] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

} // namespace bggx
