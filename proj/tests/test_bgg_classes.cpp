#include <catch_amalgamated.hpp>

#include <random>

#include "bggx/bgg_classes.hpp"

using namespace bggx;

namespace {

using Series = GradedSeries<Rational>;

// c(F) through general series products: c(Sym^2 S) c(S)^{-q}, with the
// c(Sym^2 S) factor assembled from Chern roots in the splitting sense.
Series chern_F_by_products(int k, int q) {
  const auto ctx = GrassmannianContext::concrete(k, q);
  const int D = ctx.dimension();
  const auto sym2 = substitute(sym_power_chern(k, 2, D), ctx, D);
  return sym2 * pow_integer(chern_S(ctx), -q);
}

} // namespace

TEST_CASE("mu for the conjecture") {
  CHECK(conjecture_mu(2, 6) == Partition{3, 2});
  CHECK(conjecture_mu(3, 12) == Partition{8, 7, 6});
  CHECK(conjecture_mu(2, 5) == Partition{2, 1});
  CHECK(conjecture_mu(2, 3).empty());
  CHECK(conjecture_mu(3, 5) == Partition{1});
  CHECK(conjecture_mu(4, 8) == Partition{3, 2, 1});
  CHECK_THROWS_AS(conjecture_mu(3, 3), DomainError);
}

TEST_CASE("low-degree coefficients of c(F)") {
  for (int k = 1; k <= 3; ++k) {
    for (int q = k + 1; q <= 7; ++q) {
      const auto F = chern_F(k, q);
      CHECK(F.coefficient(Partition()) == 1);
      CHECK(F.coefficient(Partition{1}) == Rational(q - (k + 1)));
    }
  }
}

TEST_CASE("c(F) agrees with the general product path") {
  for (int k = 1; k <= 3; ++k) {
    for (int q = k + 1; q <= 7; ++q) {
      INFO("k=" << k << " q=" << q);
      CHECK(chern_F(k, q) == chern_F_by_products(k, q));
    }
  }
}

TEST_CASE("conjecture reports") {
  const auto r26 = verify_conjecture(2, 6);
  CHECK(r26.mu == Partition{3, 2});
  CHECK(r26.above_mu_all_zero);
  CHECK(r26.mu_coefficient != 0);
  CHECK(r26.status == Status::Pass);
  CHECK(r26.codim_mu == 5);
  CHECK(r26.rank_lower_bound == 5);

  const auto r25 = verify_conjecture(2, 5);
  CHECK(r25.mu == Partition{2, 1});
  CHECK(r25.status == Status::Pass);

  const auto r23 = verify_conjecture(2, 3);
  CHECK(r23.mu.empty());
  CHECK(r23.boundary);
  CHECK(r23.status == Status::Warn);
}

TEST_CASE("codimension of mu matches the rank bound") {
  for (int k = 1; k <= 6; ++k) {
    for (int q = k + 1; q <= 16; ++q) {
      CHECK(Integer(conjecture_mu(k, q).size()) == conjecture_rank_bound(q, k).rank);
    }
  }
}

TEST_CASE("g polynomials match the closed forms") {
  for (int k = 1; k <= 6; ++k) {
    INFO("k=" << k);
    const auto g = chern_G_coeffs(k, 2);
    CHECK(g.at(Partition()) == CoefPoly(1));
    CHECK(g.at(Partition{1}) == g1_closed_form(k));
    CHECK(g.at(Partition{2}) == g2_closed_form(k));
    if (k >= 2) {
      CHECK(g.at(Partition{1, 1}) == g11_closed_form(k));
    } else {
      CHECK(g.g.count(Partition{1, 1}) == 0);
    }
    CHECK(g11_closed_form(k) == g11_factored(k));
    CHECK(g2_closed_form(k).coefficient({2, 0}) == make_rational(1, 2));
    CHECK(g11_closed_form(k).coefficient({2, 0}) == make_rational(1, 2));
  }
}

TEST_CASE("g polynomials specialise to concrete computations") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick_k(1, 4);
  std::uniform_int_distribution<int> pick_h(-4, 25);
  std::uniform_int_distribution<int> pick_extra(0, 5);
  const int D = 3;
  std::map<int, GCoeffs> symbolic;
  for (int k = 1; k <= 4; ++k) symbolic.emplace(k, chern_G_coeffs(k, D));
  for (int trial = 0; trial < 100; ++trial) {
    const int k = pick_k(rng);
    const int h0 = pick_h(rng);
    const int q0 = k + D + pick_extra(rng);
    INFO("k=" << k << " h=" << h0 << " q=" << q0);
    const auto concrete = chern_G_concrete(k, q0, h0, D);
    for (const auto& [lambda, poly] : symbolic.at(k).g) {
      CHECK(evaluate(poly, h0, q0) == concrete.coefficient(lambda));
    }
  }
}

TEST_CASE("roots of g_2 and g_{1,1}") {
  for (int k = 1; k <= 6; ++k) {
    const auto beta = g11_roots(k);
    for (int q = k + 1; q <= 20; ++q) {
      const auto b = beta.at(q);
      CHECK(b.real);
      CHECK(b.plus - b.minus == 1.0);
      const auto a = g2_roots(k).at(q);
      CHECK(a.real == (q - k >= 2));
      CHECK(a.radicand == 8 * (q - k) - 15);
    }
  }
  const auto a15 = g2_roots(1).at(5);
  CHECK(a15.center == make_rational(13, 2));
  CHECK(a15.radicand == 17);
  CHECK_FALSE(g2_roots(3).at(4).real);
}
