#pragma once

// Chern classes of the Grassmannian BGG sheaves F = F^0_{2,n} and G = F^0_{3,n}:
//   c(F) = c(Sym^2 S) c(Q)^q              in Gr(k, q),
//   c(G) = c(Sym^2 S)^q / (c(S)^h c(Sym^3 S))  with h, q symbolic.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bggx/bounds.hpp"
#include "bggx/chern_series.hpp"
#include "bggx/errors.hpp"
#include "bggx/partition.hpp"
#include "bggx/polynomial.hpp"
#include "bggx/rational.hpp"
#include "bggx/schur_ring.hpp"
#include "bggx/sym_power.hpp"

namespace bggx {

/// c(Sym^2 S) c(Q)^q in Gr(k, q), truncated at k(q-k).
inline GradedSeries<Rational> chern_F(int k, int q) {
  if (k < 1 || q <= k) throw DomainError("chern_F needs 1 <= k < q");
  const auto ctx = GrassmannianContext::concrete(k, q);
  const int D = ctx.dimension();
  const auto sym2 = substitute(SymChernCache::global().get(k, 2, D), ctx, D);
  // multiplying by c(Q) = sum_m sigma_m is a sum of Pieri steps
  SchubertExpr<Rational> acc = sym2.total();
  for (int step = 0; step < q; ++step) {
    SchubertExpr<Rational> next = acc;
    for (int m = 1; m <= ctx.width(); ++m) next += apply_pieri(acc, m, D);
    acc = std::move(next);
  }
  return GradedSeries<Rational>::from_expr(acc, D);
}

/// (q-k-1, q-k-2, ..., q-2k) truncated at the first non-positive part.
inline Partition conjecture_mu(int k, int q) {
  if (k < 1 || q <= k) throw DomainError("conjecture_mu needs 1 <= k < q");
  std::vector<int> parts;
  for (int i = 1; i <= k && q - k - i > 0; ++i) parts.push_back(q - k - i);
  return Partition(std::move(parts));
}

enum class Status { Pass, Warn, Fail };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Warn: return "WARN";
    case Status::Fail: return "FAIL";
  }
  return "FAIL";
}

struct ConjectureReport {
  int k = 0;
  int q = 0;
  Partition mu;
  bool above_mu_all_zero = true;
  Rational mu_coefficient;
  std::vector<std::pair<Partition, Rational>> offending;
  int codim_mu = 0;
  Integer rank_lower_bound;
  std::size_t checked = 0;  // number of partitions strictly above mu
  bool boundary = false;    // q = k+1, where mu is empty
  Status status = Status::Fail;
};

/// Scans every box partition strictly above mu for non-zero coefficients of c(F).
inline ConjectureReport verify_conjecture(int k, int q) {
  ConjectureReport rep;
  rep.k = k;
  rep.q = q;
  rep.mu = conjecture_mu(k, q);
  rep.codim_mu = rep.mu.size();
  rep.rank_lower_bound = conjecture_rank_bound(q, k).rank;
  rep.boundary = q == k + 1;
  const auto F = chern_F(k, q);
  rep.mu_coefficient = F.coefficient(rep.mu);
  for (const auto& lambda : partitions_in_box(static_cast<std::size_t>(k), q - k)) {
    if (!is_bigger(lambda, rep.mu)) continue;
    ++rep.checked;
    const Rational c = F.coefficient(lambda);
    if (c != 0) rep.offending.emplace_back(lambda, c);
  }
  rep.above_mu_all_zero = rep.offending.empty();
  const bool holds = rep.above_mu_all_zero && rep.mu_coefficient != 0;
  if (rep.boundary) {
    rep.status = Status::Warn;
  } else {
    rep.status = holds ? Status::Pass : Status::Fail;
  }
  return rep;
}

struct GCoeffs {
  int k = 0;
  int max_degree = 0;
  std::map<Partition, CoefPoly> g;

  /// The stable computation equals the Gr(k,q) one whenever q - k >= max_degree.
  [[nodiscard]] std::string validity() const {
    return "q >= " + std::to_string(k + max_degree);
  }

  [[nodiscard]] CoefPoly at(const Partition& p) const {
    if (p.size() > max_degree) throw DomainError("g_(" + p.to_string() + ") is above the computed degree");
    auto it = g.find(p);
    return it == g.end() ? CoefPoly() : it->second;
  }
};

/// c(G) = exp(q log c(Sym^2 S)) exp(-h log c(S)) c(Sym^3 S)^{-1}, computed in
/// the stable ring of rank k up to max_degree.
inline GradedSeries<CoefPoly> chern_G(int k, int max_degree) {
  if (k < 1) throw DomainError("chern_G needs k >= 1");
  if (max_degree < 0) throw DomainError("chern_G needs max_degree >= 0");
  const auto ctx = GrassmannianContext::stable(k);
  const int D = max_degree;
  auto& cache = SymChernCache::global();
  const auto sym2 = substitute(cache.get(k, 2, D), ctx, D);
  const auto sym3 = substitute(cache.get(k, 3, D), ctx, D);
  const auto taut = chern_S(ctx, D);
  return pow_symbolic(sym2, sym_q()) * pow_symbolic(taut, -sym_h()) * lift(invert(sym3));
}

inline GCoeffs chern_G_coeffs(int k, int max_degree) {
  const auto series = chern_G(k, max_degree);
  GCoeffs out;
  out.k = k;
  out.max_degree = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& lambda : partitions_of(d, static_cast<std::size_t>(k))) out.g[lambda] = series.coefficient(lambda);
  }
  return out;
}

/// c(Sym^2 S)^{q0} c(S)^{-h0} c(Sym^3 S)^{-1} with concrete integer exponents,
/// by repeated multiplication in Gr(k, q0).
inline GradedSeries<Rational> chern_G_concrete(int k, int q0, int h0, int max_degree) {
  const auto ctx = GrassmannianContext::concrete(k, q0);
  auto& cache = SymChernCache::global();
  const auto sym2 = substitute(cache.get(k, 2, max_degree), ctx, max_degree);
  const auto sym3 = substitute(cache.get(k, 3, max_degree), ctx, max_degree);
  const auto taut = chern_S(ctx, max_degree);
  return pow_integer(sym2, q0) * pow_integer(taut, -h0) * invert(sym3);
}

// Closed forms with A = q(k+1) - binom(k+2,2).

inline CoefPoly symbolic_a(int k) {
  return sym_q() * Rational(k + 1) - CoefPoly(Rational(binomial(k + 2, 2)));
}

/// binom(q,2) as a polynomial in q.
inline CoefPoly symbolic_binom_q2() { return (sym_q() * sym_q() - sym_q()) * make_rational(1, 2); }

inline CoefPoly g1_closed_form(int k) { return sym_h() - symbolic_a(k); }

inline CoefPoly g2_closed_form(int k) {
  const Rational kk(k);
  const CoefPoly h = sym_h();
  const CoefPoly q = sym_q();
  const CoefPoly constant = symbolic_binom_q2() * Rational((kk + 1) * (kk + 1)) -
                            q * (make_rational(1, 2) * (kk + 2) * (kk * kk + kk + 2)) +
                            CoefPoly(make_rational(1, 8) * (kk + 3) * (kk + 2) * (kk * kk + kk + 4));
  return h * h * make_rational(1, 2) - (symbolic_a(k) - CoefPoly(make_rational(1, 2))) * h + constant;
}

inline CoefPoly g11_closed_form(int k) {
  const Rational kk(k);
  const CoefPoly h = sym_h();
  const CoefPoly q = sym_q();
  const CoefPoly constant = symbolic_binom_q2() * Rational((kk + 1) * (kk + 1)) -
                            q * (kk * Rational(binomial(k + 2, 2))) + CoefPoly(Rational(3 * binomial(k + 3, 4)));
  return h * h * make_rational(1, 2) - (symbolic_a(k) + CoefPoly(make_rational(1, 2))) * h + constant;
}

/// Roots center +- (1/2) sqrt(radicand) of a quadratic in h, symbolic in q.
struct QuadraticRoots {
  CoefPoly center;
  CoefPoly radicand;

  struct Numeric {
    bool real = false;
    Rational center;
    Integer radicand;
    double minus = 0;
    double plus = 0;
  };

  [[nodiscard]] Numeric at(int q) const {
    Numeric n;
    n.center = evaluate(center, 0, q);
    const Rational r = evaluate(radicand, 0, q);
    n.radicand = numerator_of(r);
    n.real = r >= 0;
    if (n.real) {
      const double c = n.center.convert_to<double>();
      const double s = 0.5 * std::sqrt(r.convert_to<double>());
      n.minus = c - s;
      n.plus = c + s;
    }
    return n;
  }
};

/// alpha_+- = (A - 1/2) +- (1/2) sqrt(8(q-k) - 15).
inline QuadraticRoots g2_roots(int k) {
  return QuadraticRoots{symbolic_a(k) - CoefPoly(make_rational(1, 2)), sym_q() * Rational(8) - CoefPoly(Rational(8 * k + 15))};
}

/// beta_+- = (A + 1/2) +- 1/2.
inline QuadraticRoots g11_roots(int k) {
  return QuadraticRoots{symbolic_a(k) + CoefPoly(make_rational(1, 2)), CoefPoly(Rational(1))};
}

/// (1/2)(h - beta_+)(h - beta_-) with beta_+ = A + 1, beta_- = A.
inline CoefPoly g11_factored(int k) {
  const CoefPoly a = symbolic_a(k);
  return (sym_h() - a - CoefPoly(Rational(1))) * (sym_h() - a) * make_rational(1, 2);
}

} // namespace bggx
