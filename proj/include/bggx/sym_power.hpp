#pragma once

// Universal Chern classes of Sym^r E for a rank-k bundle E, written in the
// elementary symmetric functions e_1..e_k of the Chern roots.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bggx/chern_series.hpp"
#include "bggx/errors.hpp"
#include "bggx/partition.hpp"
#include "bggx/rational.hpp"
#include "bggx/schur_ring.hpp"

namespace bggx {

/// Sparse polynomial in Chern roots x_1..x_k (exponent vector -> coefficient).
using RootPolynomial = std::map<std::vector<int>, Integer>;

struct SymChernTable {
  int rank = 0;        // k
  int power = 0;       // r
  int max_degree = 0;  // D
  /// entries[d]: exponent vector (a_1..a_k) of e_1^{a_1}...e_k^{a_k} -> coefficient.
  std::vector<std::map<std::vector<int>, Rational>> entries;

  /// Rank binom(k+r-1, r) of Sym^r E; entries above it vanish.
  [[nodiscard]] long long bundle_rank() const {
    return static_cast<long long>(binomial(rank + power - 1, power));
  }

  [[nodiscard]] Rational coefficient(const std::vector<int>& e_exponents) const {
    int d = 0;
    for (std::size_t i = 0; i < e_exponents.size(); ++i) d += static_cast<int>(i + 1) * e_exponents[i];
    if (d > max_degree) return Rational(0);
    const auto& level = entries.at(static_cast<std::size_t>(d));
    auto it = level.find(e_exponents);
    return it == level.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const SymChernTable&, const SymChernTable&) = default;
};

namespace detail {

inline void add_root_term(RootPolynomial& p, const std::vector<int>& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

/// prod over multisets {i_1 <= ... <= i_r} of (1 + x_{i_1} + ... + x_{i_r}),
/// truncated above total degree D.
inline RootPolynomial sym_power_root_product(int k, int r, int D) {
  RootPolynomial product;
  product[std::vector<int>(static_cast<std::size_t>(k), 0)] = 1;
  std::vector<int> multiset(static_cast<std::size_t>(r), 0);
  auto apply_factor = [&](const std::vector<int>& weights) {
    RootPolynomial next;
    for (const auto& [e, c] : product) {
      add_root_term(next, e, c);
      int degree = 0;
      for (int x : e) degree += x;
      if (degree + 1 > D) continue;
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0) continue;
        std::vector<int> shifted = e;
        ++shifted[i];
        add_root_term(next, shifted, c * weights[i]);
      }
    }
    product = std::move(next);
  };
  auto rec = [&](auto& self, int position, int smallest) -> void {
    if (position == r) {
      std::vector<int> weights(static_cast<std::size_t>(k), 0);
      for (int idx : multiset) ++weights[static_cast<std::size_t>(idx)];
      apply_factor(weights);
      return;
    }
    for (int i = smallest; i < k; ++i) {
      multiset[static_cast<std::size_t>(position)] = i;
      self(self, position + 1, i);
    }
  };
  rec(rec, 0, 0);
  return product;
}

/// Number of 0-1 matrices with the given row sums and column sums, i.e. the
/// coefficient of x^{col_sums} in e_{row_sums[0]} e_{row_sums[1]} ...
inline Integer zero_one_matrix_count(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  const std::size_t cols = col_sums.size();
  auto rec = [&](auto& self, std::size_t row, const std::vector<int>& remaining) -> Integer {
    if (row == row_sums.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; }) ? Integer(1) : Integer(0);
    }
    auto key = std::make_pair(row, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (unsigned mask = 0; mask < (1u << cols); ++mask) {
      if (static_cast<int>(__builtin_popcount(mask)) != row_sums[row]) continue;
      std::vector<int> next = remaining;
      bool ok = true;
      for (std::size_t c = 0; c < cols && ok; ++c) {
        if (mask & (1u << c)) ok = --next[c] >= 0;
      }
      if (ok) total += self(self, row + 1, next);
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, 0, col_sums);
}

/// Solves A x = b over the rationals for square invertible A.
inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ComputationError("singular monomial-to-elementary transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

} // namespace detail

/// Chern classes of Sym^r E in terms of e_1..e_k, degrees 0..D.
inline SymChernTable sym_power_chern(int k, int r, int D) {
  if (k < 1 || r < 1) throw DomainError("sym_power_chern needs k >= 1 and r >= 1");
  if (D < 0) throw DomainError("sym_power_chern needs D >= 0");
  SymChernTable table;
  table.rank = k;
  table.power = r;
  table.max_degree = D;
  table.entries.resize(static_cast<std::size_t>(D) + 1);
  const int effective = static_cast<int>(std::min<long long>(D, table.bundle_rank()));
  const RootPolynomial product = detail::sym_power_root_product(k, r, effective);

  for (const auto& [e, c] : product) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto it = product.find(sorted);
    if (it == product.end() || it->second != c) {
      throw ComputationError("Sym^" + std::to_string(r) + " root expansion is not symmetric");
    }
  }

  for (int d = 0; d <= effective; ++d) {
    // monomial basis: partitions of d with <= k parts; elementary basis:
    // partitions of d with parts <= k.
    const auto shapes = partitions_of(d, static_cast<std::size_t>(k));
    const auto e_shapes = partitions_of(d, static_cast<std::size_t>(d), k);
    if (shapes.size() != e_shapes.size()) throw ComputationError("basis size mismatch in degree " + std::to_string(d));
    const std::size_t n = shapes.size();
    std::vector<std::vector<Rational>> transition(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t row = 0; row < n; ++row) {
      std::vector<int> cols(static_cast<std::size_t>(k), 0);
      for (std::size_t i = 0; i < shapes[row].length(); ++i) cols[i] = shapes[row][i];
      auto it = product.find(cols);
      rhs[row] = it == product.end() ? Rational(0) : Rational(it->second);
      for (std::size_t col = 0; col < n; ++col) {
        transition[row][col] = Rational(detail::zero_one_matrix_count(e_shapes[col].vector(), cols));
      }
    }
    const auto solution = detail::solve_square(std::move(transition), std::move(rhs));
    for (std::size_t col = 0; col < n; ++col) {
      if (solution[col] == 0) continue;
      std::vector<int> exps(static_cast<std::size_t>(k), 0);
      for (int part : e_shapes[col].vector()) ++exps[static_cast<std::size_t>(part - 1)];
      table.entries[static_cast<std::size_t>(d)].emplace(std::move(exps), solution[col]);
    }
  }
  return table;
}

/// c(Sym^r S) in the Schubert ring: e_i -> c_i(S) = (-1)^i sigma_{1^i}.
template <Coefficient C = Rational>
GradedSeries<C> substitute(const SymChernTable& table, const GrassmannianContext& ctx,
                           std::optional<int> max_degree = std::nullopt) {
  if (table.rank != ctx.k()) {
    throw DomainError("table rank " + std::to_string(table.rank) + " does not match k=" + std::to_string(ctx.k()));
  }
  const int D = max_degree ? *max_degree : default_working_degree(ctx);
  if (table.max_degree < D && table.max_degree < table.bundle_rank()) {
    throw DomainError("table only reaches degree " + std::to_string(table.max_degree));
  }
  GradedSeries<C> out(ctx, D);
  const auto unit = SchubertExpr<C>::unit(ctx);
  for (int d = 0; d <= std::min(D, table.max_degree); ++d) {
    std::map<std::vector<int>, C> monomials;
    for (const auto& [exps, coeff] : table.entries[static_cast<std::size_t>(d)]) {
      std::vector<int> key;
      for (std::size_t i = exps.size(); i-- > 0;) {
        for (int t = 0; t < exps[i]; ++t) key.push_back(static_cast<int>(i + 1));
      }
      monomials.emplace(std::move(key), C{(d % 2) ? Rational(-coeff) : coeff});
    }
    out.set_component(d, detail::apply_monomials(unit, monomials, [&](const SchubertExpr<C>& x, int m) {
                        return apply_column_pieri(x, m, D);
                      }));
  }
  return out;
}

/// Thread-safe memo of tables keyed by (k, r, D).
class SymChernCache {
public:
  const SymChernTable& get(int k, int r, int D) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = tables_.find({k, r, D}); it != tables_.end()) return it->second;
    }
    SymChernTable table = sym_power_chern(k, r, D);
    std::lock_guard lock(mutex_);
    return tables_.try_emplace({k, r, D}, std::move(table)).first->second;
  }

  static SymChernCache& global() {
    static SymChernCache cache;
    return cache;
  }

private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, SymChernTable> tables_;
};

} // namespace bggx
