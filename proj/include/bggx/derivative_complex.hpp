#pragma once

// The complexes C^j_{r,W}:
//   0 -> Sym^r W (x) H^j(O) -> Sym^{r-1} W (x) H^j(Omega^1) -> ... -> Sym^{r-n} W (x) H^j(Omega^n) -> 0
// with n = min(r, d) and
//   mu(w_1...w_m (x) a) = sum_t w_1..^w_t..w_m (x) (w_t ^ a).
// On the monomial basis the sum runs over distinct members weighted by
// multiplicity.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/hodge_datum.hpp"
#include "bggx/matrix.hpp"
#include "bggx/rational.hpp"

namespace bggx {

/// Monomial basis of Sym^m of a k-dimensional space: sorted multisets of
/// {0..k-1}, in lexicographic order.
class MultisetBasis {
public:
  MultisetBasis(int k, int m) : k_(k), m_(m) {
    if (k < 1 || m < 0) throw DomainError("multiset basis needs k >= 1, m >= 0");
    std::vector<int> current;
    auto rec = [&](auto& self, int smallest) -> void {
      if (static_cast<int>(current.size()) == m) {
        index_.emplace(current, elements_.size());
        elements_.push_back(current);
        return;
      }
      for (int i = smallest; i < k; ++i) {
        current.push_back(i);
        self(self, i);
        current.pop_back();
      }
    };
    rec(rec, 0);
  }

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<int>& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] std::size_t index_of(const std::vector<int>& multiset) const { return index_.at(multiset); }

private:
  int k_;
  int m_;
  std::vector<std::vector<int>> elements_;
  std::map<std::vector<int>, std::size_t> index_;
};

struct ComplexOfMatrices {
  std::vector<std::size_t> term_dims;  // i = 0..n
  std::vector<LinearMap> maps;         // maps[i]: term i -> term i+1
  int r = 0;
  int j = 0;
  int n = 0;
  int k = 0;
  std::string ordering = "Sym basis: multisets of W-basis indices, lexicographic; then H^j(Omega^i) basis";

  [[nodiscard]] std::size_t length() const { return term_dims.size(); }
};

namespace detail {

/// A_t = sum_a W[t][a] M_a on H^j(Omega^i).
inline std::vector<SparseMatrix> w_action(const HodgeDatum& datum, const SubspaceW& W, int i, int j) {
  std::vector<SparseMatrix> out;
  const auto rows = datum.dim(i + 1, j);
  const auto cols = datum.dim(i, j);
  std::vector<SparseMatrix> basis_action;
  for (int a = 0; a < datum.q(); ++a) basis_action.push_back(datum.action(a, i, j));
  for (const auto& w : W.basis()) {
    std::vector<SparseMatrix::Row> acc(rows);
    for (int a = 0; a < datum.q(); ++a) {
      const Rational& coeff = w[static_cast<std::size_t>(a)];
      if (coeff == 0) continue;
      const auto& m = basis_action[static_cast<std::size_t>(a)];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) acc[r].emplace_back(c, coeff * v);
      }
    }
    out.push_back(SparseMatrix::from_rows(std::move(acc), cols));
  }
  return out;
}

/// Integer entry of magnitude below 2^31, if x is one.
inline std::optional<std::int64_t> small_integer(const Rational& x) {
  long num = 0;
  unsigned long den = 0;
  if (!small_parts(x, num, den) || den != 1 || num >= (1L << 31) || num <= -(1L << 31)) return std::nullopt;
  return num;
}

/// The A_t as integer rows when W and the action matrices are small integers.
inline std::optional<std::vector<IntRows>> w_action_integral(const HodgeDatum& datum, const SubspaceW& W, int i, int j) {
  std::vector<std::vector<std::int64_t>> w;
  for (const auto& row : W.basis()) {
    std::vector<std::int64_t> coords;
    for (const auto& x : row) {
      const auto v = small_integer(x);
      if (!v) return std::nullopt;
      coords.push_back(*v);
    }
    w.push_back(std::move(coords));
  }
  const auto rows = datum.dim(i + 1, j);
  std::vector<IntRows> out(w.size(), IntRows(rows));
  std::vector<IntRows> basis_action;
  for (int a = 0; a < datum.q(); ++a) {
    const auto m = datum.action(a, i, j);
    IntRows converted(rows);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : m.row(r)) {
        const auto x = small_integer(v);
        if (!x) return std::nullopt;
        converted[r].emplace_back(c, *x);
      }
    }
    basis_action.push_back(std::move(converted));
  }
  std::vector<__int128> acc(datum.dim(i, j), 0);
  std::vector<std::size_t> touched;
  for (std::size_t t = 0; t < w.size(); ++t) {
    for (std::size_t r = 0; r < rows; ++r) {
      touched.clear();
      for (int a = 0; a < datum.q(); ++a) {
        const std::int64_t coeff = w[t][static_cast<std::size_t>(a)];
        if (coeff == 0) continue;
        for (const auto& [c, v] : basis_action[static_cast<std::size_t>(a)][r]) {
          if (acc[c] == 0) touched.push_back(c);
          acc[c] += static_cast<__int128>(coeff) * v;
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (std::size_t c : touched) {
        const __int128 v = acc[c];
        acc[c] = 0;
        if (v == 0) continue;
        if (v >= (static_cast<__int128>(1) << 40) || v <= -(static_cast<__int128>(1) << 40)) return std::nullopt;
        out[t][r].emplace_back(c, static_cast<std::int64_t>(v));
      }
    }
  }
  return out;
}

/// Rows of the map Sym^m W (x) H^j(Omega^i) -> Sym^{m-1} W (x) H^j(Omega^{i+1}),
/// given the A_t by columns. Every entry is hit at most once.
template <class T>
std::vector<std::vector<std::pair<std::size_t, T>>> assemble_map(
    const std::vector<std::vector<std::vector<std::pair<std::size_t, T>>>>& columns, const MultisetBasis& src,
    const MultisetBasis& dst, std::size_t h_src, std::size_t h_dst) {
  std::vector<std::vector<std::pair<std::size_t, T>>> rows(dst.size() * h_dst);
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto& mono = src[s];
    for (std::size_t pos = 0; pos < mono.size(); ++pos) {
      if (pos > 0 && mono[pos] == mono[pos - 1]) continue;
      const int t = mono[pos];
      const auto multiplicity = static_cast<std::int64_t>(std::count(mono.begin(), mono.end(), t));
      std::vector<int> rest = mono;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      const std::size_t target = dst.index_of(rest);
      for (std::size_t alpha = 0; alpha < h_src; ++alpha) {
        for (const auto& [beta, v] : columns[static_cast<std::size_t>(t)][alpha]) {
          rows[target * h_dst + beta].emplace_back(s * h_src + alpha, multiplicity == 1 ? v : v * T(multiplicity));
        }
      }
    }
  }
  for (auto& row : rows) std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return rows;
}

template <class T>
std::vector<std::vector<std::vector<std::pair<std::size_t, T>>>> by_columns(
    const std::vector<std::vector<std::vector<std::pair<std::size_t, T>>>>& actions, std::size_t cols) {
  std::vector<std::vector<std::vector<std::pair<std::size_t, T>>>> out(actions.size());
  for (std::size_t t = 0; t < actions.size(); ++t) {
    out[t].resize(cols);
    for (std::size_t row = 0; row < actions[t].size(); ++row) {
      for (const auto& [col, v] : actions[t][row]) out[t][col].emplace_back(row, v);
    }
  }
  return out;
}

} // namespace detail

/// Builds C^j_{r,W} and checks that consecutive maps compose to zero.
inline ComplexOfMatrices build_complex(const HodgeDatum& datum, const SubspaceW& W, int r, int j) {
  if (r < 1) throw DomainError("build_complex needs r >= 1");
  if (j < 0 || j > datum.d()) throw DomainError("build_complex needs 0 <= j <= d");
  if (W.q() != datum.q()) {
    throw DomainError("W lives in a space of dimension " + std::to_string(W.q()) + ", datum has q=" +
                      std::to_string(datum.q()));
  }
  ComplexOfMatrices c;
  c.r = r;
  c.j = j;
  c.n = std::min(r, datum.d());
  c.k = W.k();
  std::vector<MultisetBasis> sym;
  for (int i = 0; i <= c.n; ++i) {
    sym.emplace_back(c.k, r - i);
    c.term_dims.push_back(sym.back().size() * datum.dim(i, j));
  }
  for (int i = 0; i < c.n; ++i) {
    const std::size_t h_src = datum.dim(i, j);
    const std::size_t h_dst = datum.dim(i + 1, j);
    const auto& src = sym[static_cast<std::size_t>(i)];
    const auto& dst = sym[static_cast<std::size_t>(i) + 1];
    const std::size_t cols = c.term_dims[static_cast<std::size_t>(i)];
    auto small = r < (1 << 20) ? detail::w_action_integral(datum, W, i, j) : std::nullopt;
    if (small) {
      c.maps.emplace_back(detail::assemble_map(detail::by_columns(*small, h_src), src, dst, h_src, h_dst), cols);
    } else {
      std::vector<std::vector<SparseMatrix::Row>> actions;
      for (const auto& a : detail::w_action(datum, W, i, j)) actions.push_back(a.data());
      auto rows = detail::assemble_map(detail::by_columns(actions, h_src), src, dst, h_src, h_dst);
      c.maps.emplace_back(SparseMatrix::from_rows(std::move(rows), cols));
    }
  }
  for (int i = 0; i + 1 < c.n; ++i) {
    if (!c.maps[static_cast<std::size_t>(i) + 1].composes_to_zero_after(c.maps[static_cast<std::size_t>(i)])) {
      if (auto bad = datum.anticommutation_failure(i, j)) HodgeDatum::throw_anticommutation(*bad);
      throw ComputationError("maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                             " do not compose to zero although the datum anticommutes");
    }
  }
  return c;
}

/// Rank bookkeeping for one complex. Lower bounds from modular reduction are
/// promoted to exact ranks when they leave no room (full rank, or zero
/// homology at a step); otherwise exact elimination is used.
class HomologyEngine {
public:
  explicit HomologyEngine(const ComplexOfMatrices& c)
      : c_(c), lower_(c.maps.size()), exact_(c.maps.size()) {}

  /// Homology dimension at step s (s = n is the cokernel of the last map).
  std::size_t at(std::size_t s) {
    const std::size_t dim = c_.term_dims.at(s);
    const bool has_in = s > 0;
    const bool has_out = s < c_.maps.size();
    const std::size_t in_lower = has_in ? lower(s - 1) : 0;
    const std::size_t out_lower = has_out ? lower(s) : 0;
    if (in_lower + out_lower > dim) throw ComputationError("rank bounds exceed the term dimension at step " + std::to_string(s));
    if (in_lower + out_lower == dim) {
      // rational ranks are >= these bounds and sum to at most dim
      if (has_in) exact_[s - 1] = in_lower;
      if (has_out) exact_[s] = out_lower;
      return 0;
    }
    const std::size_t in_rank = has_in ? exact(s - 1) : 0;
    const std::size_t out_rank = has_out ? exact(s) : 0;
    if (in_rank + out_rank > dim) throw ComputationError("ranks exceed the term dimension at step " + std::to_string(s));
    return dim - in_rank - out_rank;
  }

  std::size_t exact(std::size_t map) {
    if (!exact_[map]) {
      const auto& m = c_.maps[map];
      const std::size_t bound = lower(map);
      exact_[map] = bound == std::min(m.rows(), m.cols()) ? bound : m.rank_exact();
    }
    return *exact_[map];
  }

private:
  std::size_t lower(std::size_t map) {
    if (!lower_[map]) {
      if (exact_[map]) {
        lower_[map] = exact_[map];
      } else {
        const auto bound = c_.maps[map].rank_lower_bound();
        lower_[map] = bound ? *bound : exact(map);
      }
    }
    return *lower_[map];
  }

  const ComplexOfMatrices& c_;
  std::vector<std::optional<std::size_t>> lower_;
  std::vector<std::optional<std::size_t>> exact_;
};

/// Homology at every step 0..n (the last entry is the cokernel of the last map).
/// The Euler characteristic identity is checked on the way out.
inline std::vector<std::size_t> homology_dims(const ComplexOfMatrices& c) {
  HomologyEngine engine(c);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < c.length(); ++s) out.push_back(engine.at(s));
  long long chi_terms = 0;
  long long chi_homology = 0;
  for (std::size_t s = 0; s < c.length(); ++s) {
    const long long sign = (s % 2) ? -1 : 1;
    chi_terms += sign * static_cast<long long>(c.term_dims[s]);
    chi_homology += sign * static_cast<long long>(out[s]);
  }
  if (chi_terms != chi_homology) throw ComputationError("Euler characteristic mismatch");
  return out;
}

/// Number of leading steps with vanishing homology. With a limit, stops once
/// `limit` steps are known to be exact (the result is then min(prefix, limit)).
inline std::size_t exactness_prefix(const ComplexOfMatrices& c, std::optional<std::size_t> limit = std::nullopt) {
  HomologyEngine engine(c);
  std::size_t prefix = 0;
  while (prefix < c.length() && (!limit || prefix < *limit) && engine.at(prefix) == 0) ++prefix;
  return prefix;
}

struct E2Table {
  int r = 0;
  int d = 0;
  int n = 0;
  std::vector<std::vector<std::size_t>> e;  // e[i][j], i = 0..n, j = 0..d
  std::vector<std::size_t> hyper;           // hyper[m] = sum_{i+j=m} e[i][j], m = 0..n+d
  std::vector<std::vector<std::size_t>> term_dims;  // per j
};

inline E2Table e2_table(const HodgeDatum& datum, const SubspaceW& W, int r) {
  E2Table t;
  t.r = r;
  t.d = datum.d();
  t.n = std::min(r, datum.d());
  t.e.assign(static_cast<std::size_t>(t.n) + 1, std::vector<std::size_t>(static_cast<std::size_t>(t.d) + 1, 0));
  t.hyper.assign(static_cast<std::size_t>(t.n + t.d) + 1, 0);
  for (int j = 0; j <= t.d; ++j) {
    const auto c = build_complex(datum, W, r, j);
    const auto h = homology_dims(c);
    t.term_dims.push_back(c.term_dims);
    for (int i = 0; i <= t.n; ++i) {
      t.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(i)];
      t.hyper[static_cast<std::size_t>(i + j)] += h[static_cast<std::size_t>(i)];
    }
  }
  return t;
}

/// Homology over W and over the basis W g agree.
inline bool basis_change_invariance_check(const HodgeDatum& datum, const SubspaceW& W,
                                          const std::vector<std::vector<Rational>>& g, int r, int j) {
  const SubspaceW moved = W.transformed(g);
  return homology_dims(build_complex(datum, W, r, j)) == homology_dims(build_complex(datum, moved, r, j));
}

} // namespace bggx
