#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "bggx/lr_oracle.hpp"
#include "bggx/schur_ring.hpp"

using namespace bggx;

namespace {

using Expr = SchubertExpr<Rational>;

Expr sigma(const GrassmannianContext& ctx, Partition p) { return Expr::schubert_class(ctx, p); }

// Brute force: every box partition nu of the right size containing lambda with
// nu/lambda a horizontal strip (nu_{i+1} <= lambda_i).
Expr brute_force_pieri(const Partition& lambda, int m, const GrassmannianContext& ctx) {
  Expr out(ctx);
  for_each_partition(lambda.size() + m, static_cast<std::size_t>(ctx.k()), ctx.width(), [&](Partition nu) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(ctx.k()); ++i) {
      if (nu[i] < lambda[i]) return;
      if (nu[i + 1] > lambda[i]) return;
    }
    out.add_term(nu, Rational(1));
  });
  return out;
}

} // namespace

TEST_CASE("pieri examples") {
  const auto g24 = GrassmannianContext::concrete(2, 4);
  CHECK(pieri(Partition{1}, 1, g24) == sigma(g24, {2}) + sigma(g24, {1, 1}));
  CHECK(pieri(Partition{2, 1}, 0, g24) == sigma(g24, {2, 1}));
  CHECK(pieri(Partition{2, 2}, 1, g24).is_zero());
  CHECK_THROWS_AS(pieri(Partition{3}, 1, g24), DomainError);
}

TEST_CASE("pieri matches brute-force strip enumeration") {
  for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}, {4, 8}}) {
    const auto ctx = GrassmannianContext::concrete(k, q);
    for (const auto& lambda : partitions_in_box(static_cast<std::size_t>(k), q - k)) {
      for (int m = 0; m <= q - k; ++m) {
        INFO(ctx.to_string() << " lambda=" << lambda.to_string() << " m=" << m);
        CHECK(pieri(lambda, m, ctx) == brute_force_pieri(lambda, m, ctx));
      }
    }
  }
}

TEST_CASE("giambelli reproduces the Schubert class") {
  const auto g24 = GrassmannianContext::concrete(2, 4);
  const auto g25 = GrassmannianContext::concrete(2, 5);
  CHECK(giambelli(Partition{1, 1}, g24) == sigma(g24, {1, 1}));
  CHECK(giambelli(Partition{2, 1}, g25) == sigma(g25, {2, 1}));
  CHECK(giambelli(Partition{3}, g25) == sigma(g25, {3}));
  const auto stable = GrassmannianContext::stable(3);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n, 3)) {
      CHECK(giambelli(lambda, stable) == sigma(stable, lambda));
    }
  }
  const auto g37 = GrassmannianContext::concrete(3, 7);
  for (const auto& lambda : partitions_in_box(3, 4)) CHECK(giambelli(lambda, g37) == sigma(g37, lambda));
}

TEST_CASE("multiply small products") {
  const auto g24 = GrassmannianContext::concrete(2, 4);
  CHECK(multiply(sigma(g24, {1, 1}), sigma(g24, {1, 1})) == sigma(g24, {2, 2}));
  CHECK(multiply(sigma(g24, {1}), sigma(g24, {2, 1})) == sigma(g24, {2, 2}));
  const auto b = sigma(g24, {2}) * Rational(3) + sigma(g24, {1});
  CHECK(multiply(Expr::unit(g24), b) == b);
  CHECK_THROWS_AS(multiply(Expr::unit(g24), Expr::unit(GrassmannianContext::concrete(2, 5))), DomainError);
}

TEST_CASE("multiply agrees with pieri on special classes") {
  const auto ctx = GrassmannianContext::concrete(3, 7);
  for (const auto& lambda : partitions_in_box(3, 4)) {
    for (int m = 0; m <= 4; ++m) {
      const auto special = m == 0 ? Expr::unit(ctx) : sigma(ctx, {m});
      CHECK(multiply(sigma(ctx, lambda), special) == pieri(lambda, m, ctx));
    }
  }
}

TEST_CASE("lr oracle examples") {
  CHECK(lr_coefficient(Partition{1}, Partition{1, 1}, Partition{2, 1}) == 1);
  CHECK(lr_coefficient(Partition(), Partition{3, 1}, Partition{3, 1}) == 1);
  CHECK(lr_coefficient(Partition{2}, Partition{1, 1}, Partition{2, 2}) == 0);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  CHECK_THROWS_AS(lr_coefficient(Partition{1}, Partition{1}, Partition{2, 2}), DomainError);
}

TEST_CASE("multiply agrees with the LR tableau oracle in Gr(3,8)") {
  const auto ctx = GrassmannianContext::concrete(3, 8);
  std::vector<Partition> small;
  for (int n = 0; n <= 4; ++n) {
    for_each_partition(n, 3, 5, [&](Partition p) { small.push_back(std::move(p)); });
  }
  for (const auto& lambda : small) {
    for (const auto& mu : small) {
      const auto product = multiply(sigma(ctx, lambda), sigma(ctx, mu));
      for_each_partition(lambda.size() + mu.size(), 3, 5, [&](const Partition& nu) {
        INFO(lambda.to_string() << " * " << mu.to_string() << " at " << nu.to_string());
        CHECK(product.coefficient(nu) == Rational(lr_coefficient(lambda, mu, nu)));
      });
    }
  }
}

TEST_CASE("multiplication is commutative and associative") {
  std::mt19937 rng(20240611);
  for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}}) {
    const auto ctx = GrassmannianContext::concrete(k, q);
    const auto box = partitions_in_box(static_cast<std::size_t>(k), q - k);
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = sigma(ctx, box[pick(rng)]);
      const auto b = sigma(ctx, box[pick(rng)]);
      const auto c = sigma(ctx, box[pick(rng)]);
      CHECK(multiply(a, b) == multiply(b, a));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("complement and Poincare duality") {
  const auto g24 = GrassmannianContext::concrete(2, 4);
  CHECK(complement(Partition{1}, g24) == Partition{2, 1});
  CHECK(complement(full_box(g24), g24).empty());
  CHECK(complement(Partition{2, 1}, GrassmannianContext::concrete(3, 6)) == Partition{3, 2, 1});
  CHECK_THROWS_AS(complement(Partition{1}, GrassmannianContext::stable(2)), DomainError);

  for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {3, 7}}) {
    const auto ctx = GrassmannianContext::concrete(k, q);
    const auto point = full_box(ctx);
    const auto box = partitions_in_box(static_cast<std::size_t>(k), q - k);
    for (const auto& lambda : box) {
      for (const auto& mu : box) {
        if (mu.size() != lambda.size()) continue;
        const auto pairing = multiply(sigma(ctx, lambda), sigma(ctx, complement(mu, ctx))).coefficient(point);
        CHECK(pairing == Rational(mu == lambda ? 1 : 0));
      }
    }
  }
}

TEST_CASE("stable products truncate to concrete products") {
  for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 6}, {3, 7}}) {
    const auto ctx = GrassmannianContext::concrete(k, q);
    const auto stable = GrassmannianContext::stable(k);
    const int width = q - k;
    for (int n = 0; n <= width; ++n) {
      for (const auto& lambda : partitions_of(n, static_cast<std::size_t>(k), width)) {
        for (int m = 0; n + m <= width; ++m) {
          for (const auto& mu : partitions_of(m, static_cast<std::size_t>(k), width)) {
            const auto in_stable = multiply(sigma(stable, lambda), sigma(stable, mu)).truncated_to(ctx);
            CHECK(in_stable == multiply(sigma(ctx, lambda), sigma(ctx, mu)));
          }
        }
      }
    }
  }
}

TEST_CASE("schubert_class rejects partitions outside the box") {
  CHECK_THROWS_AS(Expr::schubert_class(GrassmannianContext::concrete(2, 4), Partition{1, 1, 1}), DomainError);
  CHECK_THROWS_AS(GrassmannianContext::concrete(3, 2), DomainError);
}
