#pragma once

// Concrete Hodge data: abelian varieties (exterior algebras) and the product
// of two genus-3 curves with W spanned by p1^*alpha_t + p2^*beta_t.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/hodge_datum.hpp"
#include "bggx/matrix.hpp"
#include "bggx/rational.hpp"

namespace bggx {

namespace detail {

/// Subsets of {0..q-1} of size m in lexicographic order.
inline std::vector<std::vector<int>> subsets(int q, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto& self, int next) -> void {
    if (static_cast<int>(current.size()) == m) {
      out.push_back(current);
      return;
    }
    for (int x = next; x < q; ++x) {
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace detail

/// H^j(Omega^i) = Lambda^i V (x) Lambda^j conj(V), d = q; v_a acts by
/// e_I -> (-1)^{#{b in I : b < a}} e_{I + a} on the first factor.
inline HodgeDatum abelian_model(int q) {
  if (q < 1) throw DomainError("abelian model needs q >= 1");
  std::vector<std::vector<std::vector<int>>> sets;
  std::vector<std::map<std::vector<int>, std::size_t>> index;
  for (int m = 0; m <= q; ++m) {
    sets.push_back(detail::subsets(q, m));
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t s = 0; s < sets.back().size(); ++s) idx.emplace(sets.back()[s], s);
    index.push_back(std::move(idx));
  }
  std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(q) + 1, std::vector<std::size_t>(static_cast<std::size_t>(q) + 1));
  for (int i = 0; i <= q; ++i) {
    for (int j = 0; j <= q; ++j) dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sets[static_cast<std::size_t>(i)].size() * sets[static_cast<std::size_t>(j)].size();
  }
  HodgeDatum datum(q, q, dims);
  for (int a = 0; a < q; ++a) {
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j <= q; ++j) {
        const std::size_t bj = sets[static_cast<std::size_t>(j)].size();
        SparseMatrix m(datum.dim(i + 1, j), datum.dim(i, j));
        for (std::size_t s = 0; s < sets[static_cast<std::size_t>(i)].size(); ++s) {
          const auto& I = sets[static_cast<std::size_t>(i)][s];
          if (std::find(I.begin(), I.end(), a) != I.end()) continue;
          const auto before = std::count_if(I.begin(), I.end(), [a](int b) { return b < a; });
          std::vector<int> larger = I;
          larger.insert(std::upper_bound(larger.begin(), larger.end(), a), a);
          const std::size_t target = index[static_cast<std::size_t>(i) + 1].at(larger);
          for (std::size_t J = 0; J < bj; ++J) m.add(target * bj + J, s * bj + J, Rational(before % 2 ? -1 : 1));
        }
        datum.set_action(a, i, j, std::move(m));
      }
    }
  }
  datum.metadata["model"] = "abelian variety of dimension " + std::to_string(q);
  datum.metadata["non_degeneracy"] = "every W is non-degenerate (invariant 1-forms vanish nowhere)";
  return datum;
}

struct CurvesModel {
  HodgeDatum datum;
  SubspaceW W;
};

namespace detail {

/// Hodge pieces (i, j) of a genus-g curve with bases
/// (0,0): 1;  (1,0): alpha_1..g;  (0,1): alpha*_1..g;  (1,1): [pt].
inline std::size_t curve_dim(int i, int j, int g) {
  if (i < 0 || j < 0 || i > 1 || j > 1) return 0;
  return (i == j) ? 1 : static_cast<std::size_t>(g);
}

/// alpha_t ^ : piece (i, j) -> piece (i+1, j) of a curve; `pairing[t][s]` is
/// the coefficient of [pt] in alpha_t ^ alpha*_s.
inline std::vector<std::vector<Rational>> curve_wedge(int t, int i, int j, int g,
                                                      const std::vector<std::vector<Rational>>& pairing) {
  const std::size_t rows = curve_dim(i + 1, j, g);
  const std::size_t cols = curve_dim(i, j, g);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  if (i == 0 && j == 0) m[static_cast<std::size_t>(t)][0] = 1;
  if (i == 0 && j == 1) {
    for (int s = 0; s < g; ++s) m[0][static_cast<std::size_t>(s)] = pairing[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
  }
  return m;
}

} // namespace detail

inline std::vector<std::vector<Rational>> identity_matrix(std::size_t n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Kuenneth datum of C1 x C2 for genus-3 curves. V has basis
/// (p1^*alpha_1..3, p2^*beta_1..3); p2^* forms pass the first factor with sign
/// (-1)^{i1+j1}. The pairings default to dual bases.
inline CurvesModel curves_product_model(const std::vector<std::vector<Rational>>& pairing1 = identity_matrix(3),
                                        const std::vector<std::vector<Rational>>& pairing2 = identity_matrix(3)) {
  constexpr int g = 3;
  for (const auto* p : {&pairing1, &pairing2}) {
    if (p->size() != g || rank_exact(SparseMatrix::from_dense(*p, g)) != g) {
      throw DomainError("Serre pairing must be an invertible 3x3 matrix");
    }
  }
  // Basis of H^j(Omega^i)(X): blocks over (i1, j1) in increasing order, each
  // block the tensor basis (b1, b2) in lexicographic order.
  struct Block {
    int i1, j1, i2, j2;
    std::size_t offset;
  };
  auto blocks_of = [&](int i, int j) {
    std::vector<Block> out;
    std::size_t offset = 0;
    for (int i1 = 0; i1 <= 1; ++i1) {
      for (int j1 = 0; j1 <= 1; ++j1) {
        const int i2 = i - i1;
        const int j2 = j - j1;
        if (i2 < 0 || i2 > 1 || j2 < 0 || j2 > 1) continue;
        out.push_back({i1, j1, i2, j2, offset});
        offset += detail::curve_dim(i1, j1, g) * detail::curve_dim(i2, j2, g);
      }
    }
    return std::make_pair(out, offset);
  };
  std::vector<std::vector<std::size_t>> dims(3, std::vector<std::size_t>(3));
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = blocks_of(i, j).second;
  }
  HodgeDatum datum(2, 2 * g, dims);
  for (int a = 0; a < 2 * g; ++a) {
    const bool second = a >= g;
    const int t = second ? a - g : a;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j <= 2; ++j) {
        const auto [src_blocks, src_dim] = blocks_of(i, j);
        const auto [dst_blocks, dst_dim] = blocks_of(i + 1, j);
        SparseMatrix m(dst_dim, src_dim);
        for (const auto& sb : src_blocks) {
          // find the target block
          const int ti1 = sb.i1 + (second ? 0 : 1);
          const int ti2 = sb.i2 + (second ? 1 : 0);
          const auto target = std::find_if(dst_blocks.begin(), dst_blocks.end(), [&](const Block& b) {
            return b.i1 == ti1 && b.j1 == sb.j1 && b.i2 == ti2 && b.j2 == sb.j2;
          });
          if (target == dst_blocks.end()) continue;
          const std::size_t n1 = detail::curve_dim(sb.i1, sb.j1, g);
          const std::size_t n2 = detail::curve_dim(sb.i2, sb.j2, g);
          const std::size_t m1 = detail::curve_dim(target->i1, target->j1, g);
          const std::size_t m2 = detail::curve_dim(target->i2, target->j2, g);
          if (!second) {
            const auto w = detail::curve_wedge(t, sb.i1, sb.j1, g, pairing1);
            for (std::size_t x = 0; x < n1; ++x) {
              for (std::size_t x2 = 0; x2 < m1; ++x2) {
                if (w[x2][x] == 0) continue;
                for (std::size_t y = 0; y < n2; ++y) m.add(target->offset + x2 * m2 + y, sb.offset + x * n2 + y, w[x2][x]);
              }
            }
          } else {
            const auto w = detail::curve_wedge(t, sb.i2, sb.j2, g, pairing2);
            const Rational sign = ((sb.i1 + sb.j1) % 2) ? -1 : 1;
            for (std::size_t x = 0; x < n1; ++x) {
              for (std::size_t y = 0; y < n2; ++y) {
                for (std::size_t y2 = 0; y2 < m2; ++y2) {
                  if (w[y2][y] == 0) continue;
                  m.add(target->offset + x * m2 + y2, sb.offset + x * n2 + y, sign * w[y2][y]);
                }
              }
            }
          }
        }
        datum.set_action(a, i, j, std::move(m));
      }
    }
  }
  if (datum.anticommutation_failure(0, 0) || datum.anticommutation_failure(0, 1) ||
      datum.anticommutation_failure(0, 2)) {
    throw ComputationError("curve product model violates anticommutation (sign convention)");
  }
  datum.metadata["model"] = "C1 x C2, plane quartics (genus 3 each)";
  datum.metadata["W"] = "w_i = p1^*alpha_i + p2^*beta_i, i = 1..3";
  datum.metadata["Z_1"] = "empty";
  datum.metadata["Z_2"] = "16 points P_1..P_16";
  datum.metadata["H^0(X,H^1)"] = "dimension 48 (16 stalks of dimension 3), recorded, not computed";

  std::vector<std::vector<Rational>> w(g, std::vector<Rational>(2 * g));
  for (int t = 0; t < g; ++t) {
    w[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
    w[static_cast<std::size_t>(t)][static_cast<std::size_t>(g + t)] = 1;
  }
  return CurvesModel{std::move(datum), SubspaceW(std::move(w))};
}

/// max(0, d - k - j + 1).
inline int expected_exactness(int d, int k, int j) { return std::max(0, d - k - j + 1); }

} // namespace bggx
