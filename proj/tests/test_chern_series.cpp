#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include "bggx/chern_series.hpp"
#include "bggx/sym_power.hpp"

using namespace bggx;

namespace {

using Series = GradedSeries<Rational>;
using Expr = SchubertExpr<Rational>;

Series random_unit_series(const GrassmannianContext& ctx, int D, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Series s = Series::one(ctx, D);
  for (int d = 1; d <= D; ++d) {
    Expr part(ctx);
    for_each_partition(d, static_cast<std::size_t>(ctx.k()), ctx.is_stable() ? -1 : ctx.width(),
                       [&](const Partition& p) { part.add_term(p, make_rational(num(rng), den(rng))); });
    s.set_component(d, part);
  }
  return s;
}

// Naive product over multisets of roots, truncated at degree D.
using XPoly = std::map<std::vector<int>, Integer>;

XPoly xpoly_mul(const XPoly& a, const XPoly& b, int D) {
  XPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int degree = 0;
      for (std::size_t i = 0; i < e.size(); ++i) degree += e[i] = ea[i] + eb[i];
      if (degree > D) continue;
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

XPoly naive_root_product(int k, int r, int D) {
  XPoly total{{std::vector<int>(static_cast<std::size_t>(k), 0), Integer(1)}};
  // multisets as non-decreasing index tuples, enumerated by counting in base k
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  while (true) {
    bool sorted = true;
    for (std::size_t i = 1; i < idx.size(); ++i) sorted = sorted && idx[i - 1] <= idx[i];
    if (sorted) {
      XPoly factor{{std::vector<int>(static_cast<std::size_t>(k), 0), Integer(1)}};
      for (int v : idx) {
        std::vector<int> e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(v)] = 1;
        factor[e] += 1;
      }
      total = xpoly_mul(total, factor, D);
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == k) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return total;
}

// e_i as a polynomial in k roots.
XPoly elementary(int k, int i) {
  XPoly out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    for (int b = 0; b < k; ++b) e[static_cast<std::size_t>(b)] = (mask >> b) & 1u;
    out[e] = 1;
  }
  return out;
}

} // namespace

TEST_CASE("chern classes of the tautological bundles") {
  const auto g13 = GrassmannianContext::concrete(1, 3);
  const Series s1 = chern_S(GrassmannianContext::concrete(1, 4));
  CHECK(s1.component(1) == Expr::schubert_class(GrassmannianContext::concrete(1, 4), {1}, Rational(-1)));
  CHECK(s1.component(2).is_zero());
  const Series q13 = chern_Q(g13);
  CHECK(q13.total() == Expr::unit(g13) + Expr::schubert_class(g13, {1}) + Expr::schubert_class(g13, {2}));
  const auto g25 = GrassmannianContext::concrete(2, 5);
  CHECK(chern_S(g25).total() ==
        Expr::unit(g25) - Expr::schubert_class(g25, {1}) + Expr::schubert_class(g25, {1, 1}));
  CHECK(chern_S(g25).coefficient(Partition()) == 1);
}

TEST_CASE("c(S) c(Q) = 1 for 1 <= k < q <= 10") {
  for (int q = 2; q <= 10; ++q) {
    for (int k = 1; k < q; ++k) {
      const auto ctx = GrassmannianContext::concrete(k, q);
      INFO(ctx.to_string());
      CHECK(chern_S(ctx) * chern_Q(ctx) == Series::one(ctx, ctx.dimension()));
    }
  }
}

TEST_CASE("invert") {
  const auto g25 = GrassmannianContext::concrete(2, 5);
  CHECK(invert(Series::one(g25, 6)) == Series::one(g25, 6));
  CHECK(invert(chern_S(g25)) == chern_Q(g25));
  Series bad = Series::one(g25, 6) * Rational(2);
  CHECK_THROWS_AS(invert(bad), DomainError);
}

TEST_CASE("log and exp are inverse, invert is an involution") {
  std::mt19937 rng(7);
  const auto ctx = GrassmannianContext::concrete(3, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const Series s = random_unit_series(ctx, 6, rng);
    CHECK(exp_series(log_series(s)) == s);
    CHECK(invert(invert(s)) == s);
  }
}

TEST_CASE("log turns products into sums") {
  std::mt19937 rng(11);
  const auto ctx = GrassmannianContext::stable(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Series s = random_unit_series(ctx, 5, rng);
    const Series t = random_unit_series(ctx, 5, rng);
    CHECK(log_series(s * t) == log_series(s) + log_series(t));
  }
  const Series one = Series::one(ctx, 4);
  CHECK(log_series(one) == Series(ctx, 4));
  CHECK(exp_series(Series(ctx, 4)) == one);
  CHECK_THROWS_AS(exp_series(one), DomainError);
  CHECK_THROWS_AS(log_series(Series(ctx, 4)), DomainError);
}

TEST_CASE("symbolic powers at integers match repeated multiplication") {
  std::mt19937 rng(3);
  const auto ctx = GrassmannianContext::concrete(2, 5);
  for (int trial = 0; trial < 5; ++trial) {
    const Series s = random_unit_series(ctx, 6, rng);
    for (int n = 0; n <= 6; ++n) {
      Series repeated = Series::one(ctx, 6);
      for (int i = 0; i < n; ++i) repeated = repeated * s;
      const auto symbolic = pow_symbolic(s, CoefPoly(n));
      CHECK(specialize(symbolic, 0, 0) == repeated);
      CHECK(pow_integer(s, n) == repeated);
    }
    CHECK(pow_integer(s, -2) * pow_integer(s, 2) == Series::one(ctx, 6));
  }
  const auto g37 = GrassmannianContext::concrete(3, 7);
  const auto q_power = pow_symbolic(chern_Q(g37), sym_q());
  CHECK(specialize(q_power, 0, 5) == pow_integer(chern_Q(g37), 5));
  const auto h_power = pow_symbolic(chern_S(g37), -sym_h());
  CHECK(specialize(h_power, 4, 0) == pow_integer(chern_S(g37), -4));
}

TEST_CASE("sym power tables: trivial cases") {
  for (int k = 1; k <= 4; ++k) {
    const auto table = sym_power_chern(k, 1, 6);
    for (int d = 0; d <= 6; ++d) {
      std::map<std::vector<int>, Rational> expected;
      if (d <= k) {
        std::vector<int> e(static_cast<std::size_t>(k), 0);
        if (d > 0) e[static_cast<std::size_t>(d - 1)] = 1;
        expected[e] = 1;
      }
      CHECK(table.entries[static_cast<std::size_t>(d)] == expected);
    }
  }
  for (int r = 1; r <= 5; ++r) {
    const auto table = sym_power_chern(1, r, 4);
    CHECK(table.coefficient({0}) == 1);
    CHECK(table.coefficient({1}) == r);
    CHECK(table.entries[2].empty());
  }
}

TEST_CASE("sym power tables: degree-one entries") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> e1(static_cast<std::size_t>(k), 0);
    e1[0] = 1;
    CHECK(sym_power_chern(k, 2, 1).coefficient(e1) == Rational(k + 1));
    CHECK(sym_power_chern(k, 3, 1).coefficient(e1) == Rational(binomial(k + 2, 2)));
    for (int r = 1; r <= 4; ++r) {
      // each root appears r * binom(k+r-1, r) / k times
      CHECK(sym_power_chern(k, r, 1).coefficient(e1) == Rational(binomial(k + r - 1, k)));
    }
  }
}

TEST_CASE("sym power tables expand back to the root product") {
  for (int k = 1; k <= 3; ++k) {
    for (int r = 1; r <= 4; ++r) {
      for (int D = 0; D <= 4; ++D) {
        INFO("k=" << k << " r=" << r << " D=" << D);
        const auto table = sym_power_chern(k, r, D);
        XPoly rebuilt;
        for (int d = 0; d <= D; ++d) {
          for (const auto& [exps, coeff] : table.entries[static_cast<std::size_t>(d)]) {
            REQUIRE(is_integer(coeff));
            XPoly term{{std::vector<int>(static_cast<std::size_t>(k), 0), numerator_of(coeff)}};
            for (int i = 1; i <= k; ++i) {
              for (int t = 0; t < exps[static_cast<std::size_t>(i - 1)]; ++t) term = xpoly_mul(term, elementary(k, i), D);
            }
            for (const auto& [e, c] : term) rebuilt[e] += c;
          }
        }
        std::erase_if(rebuilt, [](const auto& kv) { return kv.second == 0; });
        CHECK(rebuilt == naive_root_product(k, r, D));
      }
    }
  }
}

TEST_CASE("splitting principle for Sym^2 of a rank-2 bundle") {
  // (1+2a)(1+a+b)(1+2b) with e1 = a+b, e2 = ab: 1 + 3e1 + (2e1^2 + 4e2) + 4e1e2
  const auto table = sym_power_chern(2, 2, 3);
  CHECK(table.coefficient({0, 0}) == 1);
  CHECK(table.coefficient({1, 0}) == 3);
  CHECK(table.coefficient({2, 0}) == 2);
  CHECK(table.coefficient({0, 1}) == 4);
  CHECK(table.coefficient({1, 1}) == 4);
  CHECK(table.coefficient({3, 0}) == 0);
  CHECK(table.entries[2].size() == 2);
  CHECK(table.entries[3].size() == 1);
}

TEST_CASE("substitution into the Schubert ring") {
  const auto g25 = GrassmannianContext::concrete(2, 5);
  CHECK(substitute(sym_power_chern(2, 1, 6), g25) == chern_S(g25));
  const auto sym2 = substitute(sym_power_chern(2, 2, 6), g25);
  CHECK(sym2.component(1) == Expr::schubert_class(g25, {1}, Rational(-3)));
  for (int r = 1; r <= 4; ++r) {
    const auto g14 = GrassmannianContext::concrete(1, 4);
    // line bundle O(-r): c = 1 - r sigma_1
    const auto series = substitute(sym_power_chern(1, r, 3), g14);
    CHECK(series.component(1) == Expr::schubert_class(g14, {1}, Rational(-r)));
    CHECK(series.component(2).is_zero());
  }
  CHECK_THROWS_AS(substitute(sym_power_chern(3, 2, 6), g25), DomainError);
  CHECK_THROWS_AS(substitute(sym_power_chern(2, 2, 2), g25), DomainError);
}

TEST_CASE("table cache returns identical tables") {
  auto& cache = SymChernCache::global();
  const auto& a = cache.get(3, 2, 4);
  const auto& b = cache.get(3, 2, 4);
  CHECK(&a == &b);
  CHECK(a == sym_power_chern(3, 2, 4));
}
