#pragma once

// Linear-algebra data of a compact Kaehler manifold as seen by the derivative
// complexes: Hodge numbers h[i][j] = dim H^j(Omega^i) and, for a basis v_1..v_q
// of V = H^0(Omega^1), the maps "wedge with v_a": H^j(Omega^i) -> H^j(Omega^{i+1}).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/matrix.hpp"
#include "bggx/rational.hpp"

namespace bggx {

class HodgeDatum {
public:
  HodgeDatum(int d, int q, std::vector<std::vector<std::size_t>> dims) : d_(d), q_(q), dims_(std::move(dims)) {
    if (d < 0 || q < 0) throw DataError("datum needs d >= 0 and q >= 0");
    if (dims_.size() != static_cast<std::size_t>(d) + 1) throw DataError("dims must have d+1 rows");
    for (const auto& row : dims_) {
      if (row.size() != static_cast<std::size_t>(d) + 1) throw DataError("dims must be (d+1) x (d+1)");
    }
    if (dims_[0][0] < 1) throw DataError("h[0][0] must be at least 1");
    if (d >= 1 && dims_[1][0] != static_cast<std::size_t>(q)) {
      throw DataError("h[1][0] = " + std::to_string(dims_[1][0]) + " differs from q = " + std::to_string(q));
    }
  }

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] int q() const { return q_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& dims() const { return dims_; }

  /// h[i][j]; zero outside 0..d.
  [[nodiscard]] std::size_t dim(int i, int j) const {
    if (i < 0 || j < 0 || i > d_ || j > d_) return 0;
    return dims_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Sets M_a^{(i,j)} for 0-based a.
  void set_action(int a, int i, int j, SparseMatrix m) {
    check_indices(a, i, j);
    if (m.rows() != dim(i + 1, j) || m.cols() != dim(i, j)) {
      throw DataError("action matrix for a=" + std::to_string(a + 1) + ", i=" + std::to_string(i) +
                      ", j=" + std::to_string(j) + " has shape " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected " + std::to_string(dim(i + 1, j)) + "x" +
                      std::to_string(dim(i, j)));
    }
    if (m.is_zero()) {
      action_.erase({a, i, j});
    } else {
      action_[{a, i, j}] = std::move(m);
    }
  }

  /// M_a^{(i,j)} (0-based a); absent matrices are zero.
  [[nodiscard]] SparseMatrix action(int a, int i, int j) const {
    check_indices(a, i, j);
    auto it = action_.find({a, i, j});
    return it == action_.end() ? SparseMatrix(dim(i + 1, j), dim(i, j)) : it->second;
  }

  [[nodiscard]] const std::map<std::tuple<int, int, int>, SparseMatrix>& stored_actions() const { return action_; }

  /// First (a, b, i, j) (0-based a <= b) with M_a M_b + M_b M_a != 0 on
  /// H^j(Omega^i), if any.
  [[nodiscard]] std::optional<std::tuple<int, int, int, int>> anticommutation_failure(int i, int j) const {
    if (i + 2 > d_) return std::nullopt;
    std::vector<SparseMatrix> lower;
    std::vector<SparseMatrix> upper;
    for (int a = 0; a < q_; ++a) {
      lower.push_back(action(a, i, j));
      upper.push_back(action(a, i + 1, j));
    }
    for (int a = 0; a < q_; ++a) {
      for (int b = a; b < q_; ++b) {
        SparseMatrix sum = upper[static_cast<std::size_t>(a)] * lower[static_cast<std::size_t>(b)];
        const SparseMatrix other = upper[static_cast<std::size_t>(b)] * lower[static_cast<std::size_t>(a)];
        for (std::size_t r = 0; r < other.rows(); ++r) {
          for (const auto& [c, v] : other.row(r)) sum.add(r, c, v);
        }
        if (!sum.is_zero()) return std::make_tuple(a, b, i, j);
      }
    }
    return std::nullopt;
  }

  /// Throws DataError naming (a, b, i, j) (1-based a, b) on the first failure.
  void validate() const {
    for (int i = 0; i + 2 <= d_; ++i) {
      for (int j = 0; j <= d_; ++j) {
        if (auto bad = anticommutation_failure(i, j)) throw_anticommutation(*bad);
      }
    }
  }

  [[noreturn]] static void throw_anticommutation(const std::tuple<int, int, int, int>& bad) {
    const auto [a, b, i, j] = bad;
    throw DataError("wedge action does not anticommute: a=" + std::to_string(a + 1) + ", b=" + std::to_string(b + 1) +
                    ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
  }

  std::map<std::string, std::string> metadata;

private:
  void check_indices(int a, int i, int j) const {
    if (a < 0 || a >= q_ || i < 0 || i >= d_ || j < 0 || j > d_) {
      throw DataError("action index out of range: a=" + std::to_string(a + 1) + ", i=" + std::to_string(i) +
                      ", j=" + std::to_string(j));
    }
  }

  int d_;
  int q_;
  std::vector<std::vector<std::size_t>> dims_;
  std::map<std::tuple<int, int, int>, SparseMatrix> action_;
};

/// W <= V given by k basis vectors in the v_a coordinates.
class SubspaceW {
public:
  explicit SubspaceW(std::vector<std::vector<Rational>> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw DomainError("W needs at least one basis vector");
    const std::size_t q = basis_[0].size();
    for (const auto& v : basis_) {
      if (v.size() != q) throw DomainError("W basis vectors have different lengths");
    }
    if (rank_exact(SparseMatrix::from_dense(basis_, q)) != basis_.size()) {
      throw DomainError("W basis vectors are linearly dependent");
    }
  }

  [[nodiscard]] int k() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] int q() const { return static_cast<int>(basis_[0].size()); }
  [[nodiscard]] const std::vector<std::vector<Rational>>& basis() const { return basis_; }

  /// Basis w'_s = sum_t g[t][s] w_t; g must be invertible.
  [[nodiscard]] SubspaceW transformed(const std::vector<std::vector<Rational>>& g) const {
    const std::size_t k = basis_.size();
    if (g.size() != k) throw DomainError("change of basis must be k x k");
    if (rank_exact(SparseMatrix::from_dense(g, k)) != k) throw DomainError("change of basis is singular");
    std::vector<std::vector<Rational>> out(k, std::vector<Rational>(basis_[0].size()));
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        if (g[t][s] == 0) continue;
        for (std::size_t a = 0; a < out[s].size(); ++a) out[s][a] += g[t][s] * basis_[t][a];
      }
    }
    return SubspaceW(std::move(out));
  }

  /// Whole of V with the standard basis.
  static SubspaceW full(int q) {
    std::vector<std::vector<Rational>> basis(static_cast<std::size_t>(q), std::vector<Rational>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a) basis[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
    return SubspaceW(std::move(basis));
  }

private:
  std::vector<std::vector<Rational>> basis_;
};

} // namespace bggx
