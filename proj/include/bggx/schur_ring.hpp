#pragma once

// Cohomology ring of the Grassmannian Gr(k, q) with exact coefficients.
//
// Classes sigma_lambda are indexed by partitions in the k x (q-k) box. In
// STABLE mode the width is unbounded: the ring is the ring of symmetric
// functions in k variables with Schur basis, which is what symbolic-q
// computations need. Products go through Giambelli (expansion in the special
// classes sigma_m) followed by repeated Pieri rules.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/partition.hpp"
#include "bggx/polynomial.hpp"
#include "bggx/rational.hpp"

namespace bggx {

class GrassmannianContext {
public:
  static GrassmannianContext concrete(int k, int q) {
    if (k < 1 || q < k) {
      throw DomainError("Gr(k,q) needs 1 <= k <= q, got k=" + std::to_string(k) + ", q=" + std::to_string(q));
    }
    return GrassmannianContext(k, q - k);
  }

  static GrassmannianContext stable(int k) {
    if (k < 1) throw DomainError("stable context needs k >= 1");
    return GrassmannianContext(k, std::nullopt);
  }

  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] bool is_stable() const { return !width_.has_value(); }

  [[nodiscard]] int width() const {
    if (!width_) throw DomainError("stable context has no width");
    return *width_;
  }

  [[nodiscard]] int q() const { return k_ + width(); }

  /// Complex dimension k(q-k) of the Grassmannian.
  [[nodiscard]] int dimension() const { return k_ * width(); }

  [[nodiscard]] bool admits(const Partition& p) const {
    if (p.length() > static_cast<std::size_t>(k_)) return false;
    return !width_ || p.empty() || p[0] <= *width_;
  }

  [[nodiscard]] std::string to_string() const {
    if (is_stable()) return "Gr(" + std::to_string(k_) + ",stable)";
    return "Gr(" + std::to_string(k_) + "," + std::to_string(q()) + ")";
  }

  friend bool operator==(const GrassmannianContext&, const GrassmannianContext&) = default;

private:
  GrassmannianContext(int k, std::optional<int> width) : k_(k), width_(width) {}

  int k_;
  std::optional<int> width_;
};

/// Finite formal sum of Schubert classes. Zero coefficients are never stored
/// and classes outside the box are dropped in concrete mode.
template <Coefficient C>
class SchubertExpr {
public:
  using TermMap = std::map<Partition, C>;

  explicit SchubertExpr(GrassmannianContext ctx) : ctx_(ctx) {}

  static SchubertExpr unit(GrassmannianContext ctx) {
    SchubertExpr e(ctx);
    e.add_term(Partition(), C{Rational(1)});
    return e;
  }

  /// coeff * sigma_lambda; lambda must fit the context.
  static SchubertExpr schubert_class(GrassmannianContext ctx, const Partition& lambda, C coeff = C{Rational(1)}) {
    if (!ctx.admits(lambda)) {
      throw DomainError("partition (" + lambda.to_string() + ") does not fit " + ctx.to_string());
    }
    SchubertExpr e(ctx);
    e.add_term(lambda, coeff);
    return e;
  }

  [[nodiscard]] const GrassmannianContext& context() const { return ctx_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] C coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Adds c * sigma_p; silently truncates classes outside the box.
  void add_term(const Partition& p, const C& c) {
    if (bggx::is_zero(c) || !ctx_.admits(p)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (bggx::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_term(Partition&& p, const C& c) {
    if (bggx::is_zero(c) || !ctx_.admits(p)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(p), c);
    if (!inserted) {
      it->second += c;
      if (bggx::is_zero(it->second)) terms_.erase(it);
    }
  }

  SchubertExpr& operator+=(const SchubertExpr& o) {
    require_same_context(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }

  SchubertExpr& operator-=(const SchubertExpr& o) {
    require_same_context(o);
    for (const auto& [p, c] : o.terms_) add_term(p, C{} - c);
    return *this;
  }

  SchubertExpr& operator*=(const C& s) {
    if (bggx::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      it = bggx::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend SchubertExpr operator+(SchubertExpr a, const SchubertExpr& b) { return a += b; }
  friend SchubertExpr operator-(SchubertExpr a, const SchubertExpr& b) { return a -= b; }
  friend SchubertExpr operator*(SchubertExpr a, const C& s) { return a *= s; }

  friend bool operator==(const SchubertExpr& a, const SchubertExpr& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  /// Degree-d part (classes with |lambda| = d).
  [[nodiscard]] SchubertExpr homogeneous_part(int degree) const {
    SchubertExpr out(ctx_);
    for (const auto& [p, c] : terms_) {
      if (p.size() == degree) out.terms_.emplace(p, c);
    }
    return out;
  }

  [[nodiscard]] int max_degree() const {
    int d = -1;
    for (const auto& [p, c] : terms_) d = std::max(d, p.size());
    return d;
  }

  /// Drops classes that do not fit `target` (e.g. stable -> concrete).
  [[nodiscard]] SchubertExpr truncated_to(const GrassmannianContext& target) const {
    if (target.k() != ctx_.k()) throw DomainError("truncation must keep k");
    SchubertExpr out(target);
    for (const auto& [p, c] : terms_) out.add_term(p, c);
    return out;
  }

  template <Coefficient D, class F>
  [[nodiscard]] SchubertExpr<D> map_coefficients(F&& f) const {
    SchubertExpr<D> out(ctx_);
    for (const auto& [p, c] : terms_) out.add_term(p, f(c));
    return out;
  }

  void require_same_context(const SchubertExpr& o) const {
    if (!(ctx_ == o.ctx_)) {
      throw DomainError("context mismatch: " + ctx_.to_string() + " vs " + o.ctx_.to_string());
    }
  }

private:
  GrassmannianContext ctx_;
  TermMap terms_;
};

namespace detail {

inline int width_cap(const GrassmannianContext& ctx) { return ctx.is_stable() ? -1 : ctx.width(); }

} // namespace detail

/// Calls f(nu) for every nu with nu/lambda a horizontal m-strip that fits the
/// context and has |nu| <= max_degree (when given).
template <class F>
void for_each_horizontal_strip(const Partition& lambda, int m, const GrassmannianContext& ctx,
                               std::optional<int> max_degree, F&& f) {
  if (m < 0) throw DomainError("Pieri needs m >= 0");
  if (max_degree && lambda.size() + m > *max_degree) return;
  const int width = detail::width_cap(ctx);
  const std::size_t rows = std::min(lambda.length() + 1, static_cast<std::size_t>(ctx.k()));
  std::vector<int> nu(rows, 0);
  auto rec = [&](auto& self, std::size_t row, int remaining) -> void {
    if (row == rows) {
      if (remaining == 0) f(Partition(nu));
      return;
    }
    const int low = lambda[row];
    int high = row == 0 ? low + remaining : std::min(lambda[row - 1], low + remaining);
    if (row == 0 && width >= 0) high = std::min(high, width);
    for (int v = high; v >= low; --v) {
      nu[row] = v;
      self(self, row + 1, remaining - (v - low));
    }
  };
  rec(rec, 0, m);
}

/// Calls f(nu) for every nu with nu/lambda a vertical m-strip (the Pieri rule
/// for sigma_{1^m}).
template <class F>
void for_each_vertical_strip(const Partition& lambda, int m, const GrassmannianContext& ctx,
                             std::optional<int> max_degree, F&& f) {
  if (m < 0) throw DomainError("Pieri needs m >= 0");
  if (max_degree && lambda.size() + m > *max_degree) return;
  const int width = detail::width_cap(ctx);
  const std::size_t rows = std::min(lambda.length() + static_cast<std::size_t>(m), static_cast<std::size_t>(ctx.k()));
  std::vector<int> nu(rows, 0);
  auto rec = [&](auto& self, std::size_t row, int remaining) -> void {
    if (remaining == 0) {
      for (std::size_t r = row; r < rows; ++r) nu[r] = lambda[r];
      f(Partition(nu));
      return;
    }
    if (row == rows || rows - row < static_cast<std::size_t>(remaining)) return;
    const int base = lambda[row];
    // add a box to this row
    const bool room_above = row == 0 || nu[row - 1] >= base + 1;
    const bool room_right = width < 0 || base + 1 <= width;
    if (room_above && room_right) {
      nu[row] = base + 1;
      self(self, row + 1, remaining - 1);
    }
    nu[row] = base;
    self(self, row + 1, remaining);
  };
  rec(rec, 0, m);
}

/// sigma_lambda * sigma_m.
template <Coefficient C = Rational>
SchubertExpr<C> pieri(const Partition& lambda, int m, const GrassmannianContext& ctx) {
  if (!ctx.admits(lambda)) {
    throw DomainError("partition (" + lambda.to_string() + ") does not fit " + ctx.to_string());
  }
  SchubertExpr<C> out(ctx);
  for_each_horizontal_strip(lambda, m, ctx, std::nullopt, [&](Partition nu) { out.add_term(std::move(nu), C{Rational(1)}); });
  return out;
}

/// a * sigma_m, dropping degrees above max_degree.
template <Coefficient C>
SchubertExpr<C> apply_pieri(const SchubertExpr<C>& a, int m, std::optional<int> max_degree = std::nullopt) {
  SchubertExpr<C> out(a.context());
  for (const auto& [lambda, c] : a.terms()) {
    for_each_horizontal_strip(lambda, m, a.context(), max_degree, [&](Partition nu) { out.add_term(std::move(nu), c); });
  }
  return out;
}

/// a * sigma_{1^m}, dropping degrees above max_degree.
template <Coefficient C>
SchubertExpr<C> apply_column_pieri(const SchubertExpr<C>& a, int m, std::optional<int> max_degree = std::nullopt) {
  SchubertExpr<C> out(a.context());
  for (const auto& [lambda, c] : a.terms()) {
    for_each_vertical_strip(lambda, m, a.context(), max_degree, [&](Partition nu) { out.add_term(std::move(nu), c); });
  }
  return out;
}

/// Jacobi-Trudi/Giambelli expansion det(sigma_{lambda_i + j - i}) as a map
/// from sorted (decreasing) multisets of special-class indices to integer
/// coefficients. Special classes sigma_m with m > width vanish in concrete mode.
inline std::map<std::vector<int>, Integer> giambelli_monomials(const Partition& lambda, const GrassmannianContext& ctx) {
  if (lambda.length() > static_cast<std::size_t>(ctx.k())) {
    throw DomainError("partition (" + lambda.to_string() + ") is longer than k=" + std::to_string(ctx.k()));
  }
  const int width = detail::width_cap(ctx);
  const std::size_t n = lambda.length();
  std::map<std::vector<int>, Integer> out;
  std::vector<bool> used(n, false);
  std::vector<int> factors;
  auto rec = [&](auto& self, std::size_t row, int sign) -> void {
    if (row == n) {
      std::vector<int> key = factors;
      std::sort(key.begin(), key.end(), std::greater<>());
      auto [it, inserted] = out.try_emplace(std::move(key), Integer(sign));
      if (!inserted) {
        it->second += sign;
        if (it->second == 0) out.erase(it);
      }
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col]) continue;
      const int index = lambda[row] + static_cast<int>(col) - static_cast<int>(row);
      // columns to the right that are already used create inversions
      int inversions = 0;
      for (std::size_t c2 = col + 1; c2 < n; ++c2) inversions += used[c2] ? 1 : 0;
      if (index < 0 || (width >= 0 && index > width)) continue;
      used[col] = true;
      if (index > 0) factors.push_back(index);
      self(self, row + 1, (inversions % 2) ? -sign : sign);
      if (index > 0) factors.pop_back();
      used[col] = false;
    }
  };
  rec(rec, 0, 1);
  return out;
}

/// sigma_lambda recomputed from its Giambelli determinant via Pieri products.
template <Coefficient C = Rational>
SchubertExpr<C> giambelli(const Partition& lambda, const GrassmannianContext& ctx) {
  SchubertExpr<C> out(ctx);
  const auto unit = SchubertExpr<C>::unit(ctx);
  for (const auto& [monomial, coeff] : giambelli_monomials(lambda, ctx)) {
    SchubertExpr<C> term = unit;
    for (int m : monomial) term = apply_pieri(term, m);
    out += term * C{Rational(coeff)};
  }
  return out;
}

namespace detail {

/// sum_key coeff[key] * a * prod_{m in key} op(m), sharing work between keys
/// with a common prefix (keys are visited in lexicographic order).
template <Coefficient C, class Op>
SchubertExpr<C> apply_monomials(const SchubertExpr<C>& a, const std::map<std::vector<int>, C>& monomials, Op&& op) {
  SchubertExpr<C> out(a.context());
  std::vector<SchubertExpr<C>> stack{a};
  const std::vector<int>* previous = nullptr;
  for (const auto& [key, coeff] : monomials) {
    std::size_t common = 0;
    if (previous) {
      while (common < previous->size() && common < key.size() && (*previous)[common] == key[common]) ++common;
    }
    stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(common) + 1, stack.end());
    for (std::size_t t = common; t < key.size(); ++t) {
      if (stack.back().is_zero()) {
        stack.push_back(stack.back());
      } else {
        stack.push_back(op(stack.back(), key[t]));
      }
    }
    if (!stack.back().is_zero()) out += stack.back() * coeff;
    previous = &key;
  }
  return out;
}

} // namespace detail

/// Ring product; b is Giambelli-expanded into special classes, which then act
/// on a by Pieri. Degrees above max_degree are dropped.
template <Coefficient C>
SchubertExpr<C> multiply(const SchubertExpr<C>& a, const SchubertExpr<C>& b, std::optional<int> max_degree = std::nullopt) {
  a.require_same_context(b);
  std::map<std::vector<int>, C> monomials;
  for (const auto& [mu, coeff] : b.terms()) {
    for (const auto& [key, sign] : giambelli_monomials(mu, b.context())) {
      C contribution = coeff * Rational(sign);
      auto [it, inserted] = monomials.try_emplace(key, contribution);
      if (!inserted) it->second += contribution;
    }
  }
  std::erase_if(monomials, [](const auto& kv) { return bggx::is_zero(kv.second); });
  return detail::apply_monomials(a, monomials, [&](const SchubertExpr<C>& x, int m) { return apply_pieri(x, m, max_degree); });
}

/// Complementary partition in the k x (q-k) box: lambda^_i = (q-k) - lambda_{k+1-i}.
inline Partition complement(const Partition& lambda, const GrassmannianContext& ctx) {
  if (ctx.is_stable()) throw DomainError("complement needs a concrete context");
  if (!ctx.admits(lambda)) {
    throw DomainError("partition (" + lambda.to_string() + ") does not fit " + ctx.to_string());
  }
  const std::size_t k = static_cast<std::size_t>(ctx.k());
  std::vector<int> parts(k);
  for (std::size_t i = 0; i < k; ++i) parts[i] = ctx.width() - lambda[k - 1 - i];
  return Partition(std::move(parts));
}

/// The class of a point: the full k x (q-k) box.
inline Partition full_box(const GrassmannianContext& ctx) {
  return Partition(std::vector<int>(static_cast<std::size_t>(ctx.k()), ctx.width()));
}

} // namespace bggx
