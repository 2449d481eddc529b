#pragma once

// Sparse exact-rational matrices and rank computation.
//
// rank_exact runs fraction-free (Bareiss) elimination on integerised rows.
// rank_mod_p gives a lower bound for the rational rank of the same matrix;
// callers use it when the bound is enough to pin the answer (e.g. full rank,
// or a complex whose homology the bound forces to vanish). Both split the
// matrix into connected blocks and reuse the rank of repeated blocks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/rational.hpp"

namespace bggx {

class SparseMatrix {
public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Row& row(std::size_t r) const { return rows_.at(r); }
  [[nodiscard]] const std::vector<Row>& data() const { return rows_; }

  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

  /// Adds c to entry (r, c); rows are kept sorted.
  void add(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_.size() || c >= cols_) throw DomainError("matrix index out of range");
    if (value == 0) return;
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += value;
      if (it->second == 0) row.erase(it);
    } else {
      row.insert(it, {c, value});
    }
  }

  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const {
    const auto& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it->second : Rational(0);
  }

  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense, std::size_t cols) {
    SparseMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r].size() != cols) throw DomainError("ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) {
        if (dense[r][c] != 0) m.rows_[r].emplace_back(c, dense[r][c]);
      }
    }
    return m;
  }

  /// Rows given as unsorted (column, value) lists, duplicates summed.
  static SparseMatrix from_rows(std::vector<Row> rows, std::size_t cols) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto& row = rows[r];
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      auto& out = m.rows_[r];
      for (auto& [c, v] : row) {
        if (c >= cols) throw DomainError("matrix index out of range");
        if (!out.empty() && out.back().first == c) {
          out.back().second += v;
        } else {
          if (!out.empty() && out.back().second == 0) out.pop_back();
          out.emplace_back(c, std::move(v));
        }
      }
      if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return m;
  }

  [[nodiscard]] std::vector<std::vector<Rational>> to_dense() const {
    std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols_));
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) out[r][c] = v;
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) {
      throw DomainError("shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    SparseMatrix out(a.rows(), b.cols());
    std::map<std::size_t, Rational> acc;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      acc.clear();
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) acc[c] += av * bv;
      }
      for (const auto& [c, v] : acc) {
        if (v != 0) out.rows_[r].emplace_back(c, v);
      }
    }
    return out;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

namespace detail {

/// A connected block: global row and column indices in increasing order.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Connected components of the bipartite graph rows <-> columns (only rows and
/// columns touching a non-zero entry).
template <class T>
std::vector<Block> connected_blocks(const std::vector<std::vector<std::pair<std::size_t, T>>>& rows, std::size_t cols) {
  const std::size_t R = rows.size();
  std::vector<std::size_t> parent(R + cols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < R; ++r) {
    for (const auto& [c, v] : rows[r]) {
      const std::size_t a = find(r);
      const std::size_t b = find(R + c);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, Block> by_root;
  for (std::size_t r = 0; r < R; ++r) {
    if (!rows[r].empty()) by_root[find(r)].rows.push_back(r);
  }
  std::vector<bool> used_col(cols, false);
  for (std::size_t r = 0; r < R; ++r) {
    for (const auto& [c, v] : rows[r]) used_col[c] = true;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (used_col[c]) by_root[find(R + c)].cols.push_back(c);
  }
  std::vector<Block> out;
  out.reserve(by_root.size());
  for (auto& [root, block] : by_root) out.push_back(std::move(block));
  return out;
}

inline std::vector<Block> connected_blocks(const SparseMatrix& m) { return connected_blocks(m.data(), m.cols()); }

/// Local column index of each global column of the block.
inline std::map<std::size_t, std::size_t> local_columns(const Block& b) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < b.cols.size(); ++i) local.emplace(b.cols[i], i);
  return local;
}

/// Rank of a dense integer matrix by Bareiss fraction-free elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / previous;
      }
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

inline std::size_t block_rank_exact(const SparseMatrix& m, const Block& b) {
  const auto local = local_columns(b);
  std::vector<std::vector<Integer>> dense;
  dense.reserve(b.rows.size());
  for (std::size_t r : b.rows) {
    Integer scale = 1;
    for (const auto& [c, v] : m.row(r)) {
      const Integer den = denominator_of(v);
      scale = scale / boost::multiprecision::gcd(scale, den) * den;
    }
    std::vector<Integer> row(b.cols.size(), Integer(0));
    for (const auto& [c, v] : m.row(r)) row[local.at(c)] = numerator_of(v) * (scale / denominator_of(v));
    dense.push_back(std::move(row));
  }
  // eliminate along the shorter side
  if (b.cols.size() < dense.size()) {
    std::vector<std::vector<Integer>> t(b.cols.size(), std::vector<Integer>(dense.size()));
    for (std::size_t r = 0; r < dense.size(); ++r) {
      for (std::size_t c = 0; c < b.cols.size(); ++c) t[c][r] = dense[r][c];
    }
    return bareiss_rank(std::move(t));
  }
  return bareiss_rank(std::move(dense));
}

template <std::uint64_t P>
std::uint64_t inverse_mod(std::uint64_t a) {
  std::uint64_t result = 1;
  std::uint64_t base = a % P;
  for (std::uint64_t e = P - 2; e; e >>= 1) {
    if (e & 1) result = result * base % P;
    base = base * base % P;
  }
  return result;
}

template <std::uint64_t P>
std::optional<std::uint64_t> reduce_mod(const Rational& v) {
  long small_num = 0;
  unsigned long small_den = 0;
  if (small_parts(v, small_num, small_den)) {
    const std::uint64_t den = small_den % P;
    if (den == 0) return std::nullopt;
    const long r = small_num % static_cast<long>(P);
    const std::uint64_t num = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(P) : r);
    return den == 1 ? num : num * inverse_mod<P>(den) % P;
  }
  const Integer p(P);
  Integer num = numerator_of(v) % p;
  if (num < 0) num += p;
  const Integer den = denominator_of(v) % p;
  if (den == 0) return std::nullopt;
  return num.convert_to<std::uint64_t>() * inverse_mod<P>(den.convert_to<std::uint64_t>()) % P;
}

template <std::uint64_t P>
std::optional<std::uint64_t> reduce_mod(std::int64_t v) {
  const std::int64_t r = v % static_cast<std::int64_t>(P);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(P) : r);
}

template <std::uint64_t P>
std::size_t dense_rank_mod(std::vector<std::vector<std::uint64_t>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inverse_mod<P>(a[rank][c]);
    for (std::size_t cc = c; cc < cols; ++cc) a[rank][cc] = a[rank][cc] * inv % P;
    const auto& prow = a[rank];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = a[r][c];
      if (f == 0) continue;
      const std::uint64_t g = P - f;
      auto& row = a[r];
      for (std::size_t cc = c; cc < cols; ++cc) row[cc] = (row[cc] + g * prow[cc]) % P;
    }
    ++rank;
  }
  return rank;
}

} // namespace detail

/// Exact rank over the rationals.
inline std::size_t rank_exact(const SparseMatrix& m) {
  std::size_t rank = 0;
  std::map<std::vector<std::tuple<std::size_t, std::size_t, Rational>>, std::size_t> seen;
  for (const auto& block : detail::connected_blocks(m)) {
    const auto local = detail::local_columns(block);
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> key;
    for (std::size_t i = 0; i < block.rows.size(); ++i) {
      for (const auto& [c, v] : m.row(block.rows[i])) key.emplace_back(i, local.at(c), v);
    }
    auto it = seen.find(key);
    if (it == seen.end()) it = seen.emplace(std::move(key), detail::block_rank_exact(m, block)).first;
    rank += it->second;
  }
  return rank;
}

namespace detail {

template <std::uint64_t P, class T>
std::optional<std::size_t> rows_rank_mod_p(const std::vector<std::vector<std::pair<std::size_t, T>>>& rows, std::size_t cols) {
  std::size_t rank = 0;
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  for (const auto& block : connected_blocks(rows, cols)) {
    const auto local = local_columns(block);
    std::vector<std::vector<std::uint64_t>> dense(block.rows.size(), std::vector<std::uint64_t>(block.cols.size(), 0));
    std::vector<std::uint64_t> key{block.rows.size(), block.cols.size()};
    for (std::size_t i = 0; i < block.rows.size(); ++i) {
      for (const auto& [c, v] : rows[block.rows[i]]) {
        const auto reduced = reduce_mod<P>(v);
        if (!reduced) return std::nullopt;
        dense[i][local.at(c)] = *reduced;
        key.push_back(i);
        key.push_back(local.at(c));
        key.push_back(*reduced);
      }
    }
    auto it = seen.find(key);
    if (it == seen.end()) {
      std::size_t r = 0;
      if (block.cols.size() < dense.size()) {
        std::vector<std::vector<std::uint64_t>> t(block.cols.size(), std::vector<std::uint64_t>(dense.size()));
        for (std::size_t a = 0; a < dense.size(); ++a) {
          for (std::size_t b = 0; b < block.cols.size(); ++b) t[b][a] = dense[a][b];
        }
        r = dense_rank_mod<P>(std::move(t), dense.size());
      } else {
        r = dense_rank_mod<P>(std::move(dense), block.cols.size());
      }
      it = seen.emplace(std::move(key), r).first;
    }
    rank += it->second;
  }
  return rank;
}

} // namespace detail

/// Rank of the reduction mod P (a lower bound for the rational rank), or
/// nullopt when some denominator vanishes mod P.
template <std::uint64_t P>
std::optional<std::size_t> rank_mod_p(const SparseMatrix& m) {
  return detail::rows_rank_mod_p<P>(m.data(), m.cols());
}

namespace detail {

using IntRows = std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>;

/// m scaled by the lcm of its denominators, as int64 entries; nullopt if an
/// entry does not fit in 62 bits.
inline std::optional<IntRows> integer_rows(const SparseMatrix& m) {
  {
    // common case: small entries, small lcm
    std::uint64_t lcm = 1;
    bool small = true;
    for (std::size_t r = 0; r < m.rows() && small; ++r) {
      for (const auto& [c, v] : m.row(r)) {
        long num = 0;
        unsigned long den = 0;
        if (!small_parts(v, num, den) || den > (1UL << 20)) {
          small = false;
          break;
        }
        if (den != 1) lcm = lcm / std::gcd(lcm, static_cast<std::uint64_t>(den)) * den;
        if (lcm > (1UL << 20)) {
          small = false;
          break;
        }
      }
    }
    if (small) {
      IntRows out(m.rows());
      for (std::size_t r = 0; r < m.rows(); ++r) {
        out[r].reserve(m.row(r).size());
        for (const auto& [c, v] : m.row(r)) {
          long num = 0;
          unsigned long den = 0;
          small_parts(v, num, den);
          const __int128 x = static_cast<__int128>(num) * static_cast<__int128>(lcm / den);
          if (x >= (static_cast<__int128>(1) << 62) || x <= -(static_cast<__int128>(1) << 62)) return std::nullopt;
          out[r].emplace_back(c, static_cast<std::int64_t>(x));
        }
      }
      return out;
    }
  }
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      const Integer den = denominator_of(v);
      if (den != 1) scale = scale / boost::multiprecision::gcd(scale, den) * den;
    }
  }
  const Integer limit = Integer(1) << 62;
  IntRows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out[r].reserve(m.row(r).size());
    for (const auto& [c, v] : m.row(r)) {
      const Integer x = numerator_of(v) * (scale / denominator_of(v));
      if (abs(x) >= limit) return std::nullopt;
      out[r].emplace_back(c, x.convert_to<std::int64_t>());
    }
  }
  return out;
}

/// Whether a * b vanishes for integer rows (b has `cols` columns); nullopt
/// when 128-bit accumulation could overflow.
inline std::optional<bool> int_product_is_zero(const IntRows& a, const IntRows& b, std::size_t cols) {
  unsigned __int128 max_a = 0;
  unsigned __int128 max_b = 0;
  std::size_t width = 0;
  auto magnitude = [](std::int64_t v) { return static_cast<unsigned __int128>(v < 0 ? -static_cast<__int128>(v) : v); };
  for (const auto& row : a) {
    width = std::max(width, row.size());
    for (const auto& [c, v] : row) max_a = std::max(max_a, magnitude(v));
  }
  for (const auto& row : b) {
    for (const auto& [c, v] : row) max_b = std::max(max_b, magnitude(v));
  }
  const unsigned __int128 bound = (static_cast<unsigned __int128>(1) << 126) / (max_b == 0 ? 1 : max_b) /
                                  (width == 0 ? 1 : static_cast<unsigned __int128>(width));
  if (max_a > bound) return std::nullopt;
  std::vector<__int128> acc(cols, 0);
  std::vector<std::size_t> touched;
  for (const auto& row : a) {
    touched.clear();
    for (const auto& [k, av] : row) {
      for (const auto& [c, bv] : b[k]) {
        if (acc[c] == 0) touched.push_back(c);
        acc[c] += static_cast<__int128>(av) * bv;
      }
    }
    bool zero = true;
    for (std::size_t c : touched) {
      if (acc[c] != 0) zero = false;
      acc[c] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

} // namespace detail

/// Whether second * first vanishes, exactly. Entries are integerised (which
/// does not change whether the product is zero) and accumulated in 128 bits
/// when that cannot overflow.
inline bool product_is_zero(const SparseMatrix& second, const SparseMatrix& first) {
  if (second.cols() != first.rows()) throw DomainError("shape mismatch in product_is_zero");
  const auto a = detail::integer_rows(second);
  const auto b = detail::integer_rows(first);
  if (a && b) {
    if (auto zero = detail::int_product_is_zero(*a, *b, first.cols())) return *zero;
  }
  return (second * first).is_zero();
}

inline constexpr std::uint64_t kPrimeA = 2147483647ULL;
inline constexpr std::uint64_t kPrimeB = 2147483629ULL;
inline constexpr std::uint64_t kPrimeC = 2147483587ULL;

/// Best available lower bound for the rational rank from the three primes
/// (the first prime at which every denominator is invertible).
inline std::optional<std::size_t> rank_lower_bound(const SparseMatrix& m) {
  if (auto r = rank_mod_p<kPrimeA>(m)) return r;
  if (auto r = rank_mod_p<kPrimeB>(m)) return r;
  return rank_mod_p<kPrimeC>(m);
}

/// A matrix kept as integer rows when its entries allow, rational otherwise.
/// The rational form of an integer map is built on first use.
class LinearMap {
public:
  LinearMap(detail::IntRows rows, std::size_t cols) : rows_(rows.size()), cols_(cols), integral_(std::move(rows)) {}
  explicit LinearMap(SparseMatrix m) : rows_(m.rows()), cols_(m.cols()), rational_(std::move(m)) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::optional<detail::IntRows>& integral() const { return integral_; }

  [[nodiscard]] const SparseMatrix& rational() const {
    if (!rational_) {
      std::vector<SparseMatrix::Row> rows(rows_);
      for (std::size_t r = 0; r < rows_; ++r) {
        rows[r].reserve((*integral_)[r].size());
        for (const auto& [c, v] : (*integral_)[r]) rows[r].emplace_back(c, Rational(static_cast<long long>(v)));
      }
      rational_ = SparseMatrix::from_rows(std::move(rows), cols_);
    }
    return *rational_;
  }

  [[nodiscard]] std::optional<std::size_t> rank_lower_bound() const {
    if (integral_) return detail::rows_rank_mod_p<kPrimeA>(*integral_, cols_);
    return bggx::rank_lower_bound(*rational_);
  }

  [[nodiscard]] std::size_t rank_exact() const { return bggx::rank_exact(rational()); }

  /// Whether (*this) * first vanishes.
  [[nodiscard]] bool composes_to_zero_after(const LinearMap& first) const {
    if (integral_ && first.integral_) {
      if (auto zero = detail::int_product_is_zero(*integral_, *first.integral_, first.cols_)) return *zero;
    }
    return product_is_zero(rational(), first.rational());
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::optional<detail::IntRows> integral_;
  mutable std::optional<SparseMatrix> rational_;
};

} // namespace bggx
