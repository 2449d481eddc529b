#pragma once

// Total-Chern-class style series over the Schubert ring, truncated at a fixed
// working degree D, with inverse, log/exp and symbolic powers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/polynomial.hpp"
#include "bggx/rational.hpp"
#include "bggx/schur_ring.hpp"

namespace bggx {

/// k(q-k) for concrete contexts; stable contexts have no default.
inline int default_working_degree(const GrassmannianContext& ctx) {
  if (ctx.is_stable()) throw DomainError("stable contexts need an explicit working degree");
  return ctx.dimension();
}

template <Coefficient C>
class GradedSeries {
public:
  GradedSeries(GrassmannianContext ctx, int max_degree) : ctx_(ctx), max_degree_(max_degree) {
    if (max_degree < 0) throw DomainError("working degree must be >= 0");
    components_.assign(static_cast<std::size_t>(max_degree) + 1, SchubertExpr<C>(ctx));
  }

  static GradedSeries one(GrassmannianContext ctx, int max_degree) {
    GradedSeries s(ctx, max_degree);
    s.components_[0] = SchubertExpr<C>::unit(ctx);
    return s;
  }

  /// Splits an expression by degree; parts above max_degree are dropped.
  static GradedSeries from_expr(const SchubertExpr<C>& e, int max_degree) {
    GradedSeries s(e.context(), max_degree);
    for (const auto& [p, c] : e.terms()) {
      if (p.size() <= max_degree) s.components_[static_cast<std::size_t>(p.size())].add_term(p, c);
    }
    return s;
  }

  [[nodiscard]] const GrassmannianContext& context() const { return ctx_; }
  [[nodiscard]] int max_degree() const { return max_degree_; }

  [[nodiscard]] const SchubertExpr<C>& component(int d) const { return components_.at(static_cast<std::size_t>(d)); }

  void set_component(int d, SchubertExpr<C> part) {
    part.require_same_context(components_.at(static_cast<std::size_t>(d)));
    for (const auto& [p, c] : part.terms()) {
      if (p.size() != d) {
        throw DomainError("class (" + p.to_string() + ") placed in degree " + std::to_string(d));
      }
    }
    components_[static_cast<std::size_t>(d)] = std::move(part);
  }

  /// Coefficient of sigma_lambda (zero above the working degree).
  [[nodiscard]] C coefficient(const Partition& p) const {
    if (p.size() > max_degree_) return C{};
    return components_[static_cast<std::size_t>(p.size())].coefficient(p);
  }

  [[nodiscard]] bool has_unit_constant() const {
    return components_[0] == SchubertExpr<C>::unit(ctx_);
  }

  [[nodiscard]] bool has_zero_constant() const { return components_[0].is_zero(); }

  [[nodiscard]] SchubertExpr<C> total() const {
    SchubertExpr<C> out(ctx_);
    for (const auto& part : components_) out += part;
    return out;
  }

  GradedSeries& operator+=(const GradedSeries& o) {
    require_compatible(o);
    for (std::size_t d = 0; d < components_.size(); ++d) components_[d] += o.components_[d];
    return *this;
  }

  GradedSeries& operator-=(const GradedSeries& o) {
    require_compatible(o);
    for (std::size_t d = 0; d < components_.size(); ++d) components_[d] -= o.components_[d];
    return *this;
  }

  GradedSeries& operator*=(const C& s) {
    for (auto& part : components_) part *= s;
    return *this;
  }

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const C& s) { return a *= s; }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.require_compatible(b);
    return from_expr(multiply(a.total(), b.total(), a.max_degree_), a.max_degree_);
  }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.ctx_ == b.ctx_ && a.max_degree_ == b.max_degree_ && a.components_ == b.components_;
  }

  void require_compatible(const GradedSeries& o) const {
    if (!(ctx_ == o.ctx_) || max_degree_ != o.max_degree_) {
      throw DomainError("series mismatch: " + ctx_.to_string() + "/D=" + std::to_string(max_degree_) + " vs " +
                        o.ctx_.to_string() + "/D=" + std::to_string(o.max_degree_));
    }
  }

  template <Coefficient D, class F>
  [[nodiscard]] GradedSeries<D> map_coefficients(F&& f) const {
    GradedSeries<D> out(ctx_, max_degree_);
    for (int d = 0; d <= max_degree_; ++d) {
      out.set_component(d, components_[static_cast<std::size_t>(d)].template map_coefficients<D>(f));
    }
    return out;
  }

private:
  GrassmannianContext ctx_;
  int max_degree_;
  std::vector<SchubertExpr<C>> components_;
};

/// Rational series viewed as a series of constant polynomials in h, q.
inline GradedSeries<CoefPoly> lift(const GradedSeries<Rational>& s) {
  return s.map_coefficients<CoefPoly>([](const Rational& c) { return CoefPoly(c); });
}

/// Specialises the symbols h, q to numbers.
inline GradedSeries<Rational> specialize(const GradedSeries<CoefPoly>& s, const Rational& h, const Rational& q) {
  return s.map_coefficients<Rational>([&](const CoefPoly& c) { return evaluate(c, h, q); });
}

/// c(S) = 1 - sigma_1 + sigma_{1,1} - ... (alternating columns).
template <Coefficient C = Rational>
GradedSeries<C> chern_S(const GrassmannianContext& ctx, std::optional<int> max_degree = std::nullopt) {
  const int D = max_degree ? *max_degree : default_working_degree(ctx);
  GradedSeries<C> s = GradedSeries<C>::one(ctx, D);
  for (int i = 1; i <= ctx.k() && i <= D; ++i) {
    const Partition column(std::vector<int>(static_cast<std::size_t>(i), 1));
    auto part = SchubertExpr<C>(ctx);
    part.add_term(column, C{Rational(i % 2 ? -1 : 1)});
    s.set_component(i, part);
  }
  return s;
}

/// c(Q) = 1 + sigma_1 + sigma_2 + ... (special classes).
template <Coefficient C = Rational>
GradedSeries<C> chern_Q(const GrassmannianContext& ctx, std::optional<int> max_degree = std::nullopt) {
  const int D = max_degree ? *max_degree : default_working_degree(ctx);
  GradedSeries<C> s = GradedSeries<C>::one(ctx, D);
  const int top = ctx.is_stable() ? D : std::min(D, ctx.width());
  for (int m = 1; m <= top; ++m) {
    auto part = SchubertExpr<C>(ctx);
    part.add_term(Partition{m}, C{Rational(1)});
    s.set_component(m, part);
  }
  return s;
}

/// t with s * t = 1 up to the working degree; s must have constant term 1.
template <Coefficient C>
GradedSeries<C> invert(const GradedSeries<C>& s) {
  if (!s.has_unit_constant()) throw DomainError("invert: constant term is not 1");
  const int D = s.max_degree();
  GradedSeries<C> t = GradedSeries<C>::one(s.context(), D);
  for (int d = 1; d <= D; ++d) {
    SchubertExpr<C> acc(s.context());
    for (int i = 1; i <= d; ++i) {
      if (s.component(i).is_zero() || t.component(d - i).is_zero()) continue;
      acc -= multiply(s.component(i), t.component(d - i), D);
    }
    t.set_component(d, acc);
  }
  return t;
}

namespace detail {

/// Euler operator: multiplies the degree-d part by d. It is a derivation of
/// the graded ring, which drives the log/exp recursions below.
template <Coefficient C>
GradedSeries<C> euler(const GradedSeries<C>& s) {
  GradedSeries<C> out(s.context(), s.max_degree());
  for (int d = 1; d <= s.max_degree(); ++d) out.set_component(d, s.component(d) * C{Rational(d)});
  return out;
}

} // namespace detail

/// Formal logarithm of a series with constant term 1: E(log s) = E(s) / s.
template <Coefficient C>
GradedSeries<C> log_series(const GradedSeries<C>& s) {
  if (!s.has_unit_constant()) throw DomainError("log: constant term is not 1");
  const GradedSeries<C> ratio = detail::euler(s) * invert(s);
  GradedSeries<C> out(s.context(), s.max_degree());
  for (int d = 1; d <= s.max_degree(); ++d) out.set_component(d, ratio.component(d) * C{make_rational(1, d)});
  return out;
}

/// Formal exponential of a series with zero constant term:
/// t_d = (1/d) sum_{i=1..d} i * u_i * t_{d-i}.
template <Coefficient C>
GradedSeries<C> exp_series(const GradedSeries<C>& u) {
  if (!u.has_zero_constant()) throw DomainError("exp: constant term is not 0");
  const int D = u.max_degree();
  GradedSeries<C> t = GradedSeries<C>::one(u.context(), D);
  for (int d = 1; d <= D; ++d) {
    SchubertExpr<C> acc(u.context());
    for (int i = 1; i <= d; ++i) {
      if (u.component(i).is_zero() || t.component(d - i).is_zero()) continue;
      acc += multiply(u.component(i), t.component(d - i), D) * C{Rational(i)};
    }
    t.set_component(d, acc * C{make_rational(1, d)});
  }
  return t;
}

/// s^n for an integer n by repeated multiplication (inverse first if n < 0).
template <Coefficient C>
GradedSeries<C> pow_integer(const GradedSeries<C>& s, int n) {
  GradedSeries<C> base = n < 0 ? invert(s) : s;
  GradedSeries<C> result = GradedSeries<C>::one(s.context(), s.max_degree());
  for (int i = 0; i < (n < 0 ? -n : n); ++i) result = result * base;
  return result;
}

/// s^e = exp(e * log s) for a polynomial exponent e in h, q.
inline GradedSeries<CoefPoly> pow_symbolic(const GradedSeries<Rational>& s, const CoefPoly& exponent) {
  if (!s.has_unit_constant()) throw DomainError("pow_symbolic: constant term is not 1");
  return exp_series(lift(log_series(s)) * exponent);
}

} // namespace bggx
