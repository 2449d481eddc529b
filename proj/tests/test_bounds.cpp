#include <catch_amalgamated.hpp>

#include <vector>

#include "bggx/bounds.hpp"

using namespace bggx;

namespace {

std::vector<Integer> abelian_row(long long q, long long j) {
  std::vector<Integer> row;
  for (long long i = 0; i <= q; ++i) row.push_back(binomial(q, i) * binomial(q, j));
  return row;
}

} // namespace

TEST_CASE("combin identity") {
  CHECK(combin_identity(5, 0) == 1);
  CHECK(combin_identity(3, 2) == 0);
  CHECK(combin_identity(0, 4) == 0);
  CHECK(combin_identity(0, 0) == 1);
  for (int A = 0; A <= 30; ++A) {
    for (int B = 0; B <= 30; ++B) CHECK(combin_identity(A, B) == (B == 0 ? 1 : 0));
  }
  CHECK_THROWS_AS(combin_identity(-1, 2), DomainError);
}

TEST_CASE("alternating sums") {
  CHECK(alternating_sum(abelian_row(3, 0), 1, 1, 1) == 2);
  CHECK(alternating_sum(abelian_row(4, 0), 2, 2, 2) == 1);
  CHECK(alternating_sum(abelian_row(4, 0), 2, 2, 0) == 3);
  CHECK(alternating_sum_applies(4, 2, 0, 2, 2));
  CHECK_FALSE(alternating_sum_applies(4, 2, 1, 3, 3));
  CHECK_THROWS_AS(alternating_sum(abelian_row(2, 0), 1, 1, 3), DomainError);
}

TEST_CASE("corollary chain reproduces Hodge numbers") {
  for (long long q = 1; q <= 6; ++q) {
    for (long long j = 0; j <= q; ++j) {
      const auto row = abelian_row(q, j);
      for (long long k = 1; k <= q; ++k) {
        for (long long p = 0; p <= std::min(k, q); ++p) {
          Integer chain = 0;
          for (long long i = 0; i <= p; ++i) chain += binomial(k, p - i) * alternating_m(row, k, i);
          CHECK(chain == row[static_cast<std::size_t>(p)]);
        }
      }
    }
  }
}

TEST_CASE("binomial bounds and equality on abelian varieties") {
  CHECK(subvariety_bound(5, 1, 1).value == 16);
  CHECK(subvariety_bound(5, 1, 1).applicable);
  CHECK(binom_bound(4, 0, 0).value == 1);
  CHECK(binom_bound(3, 2, 1).value == 9);
  CHECK_FALSE(binom_bound(3, 4, 1).applicable);
  for (long long q = 1; q <= 6; ++q) {
    for (long long p = 0; p <= q; ++p) {
      for (long long j = 0; j <= q; ++j) {
        const Integer h = binomial(q, p) * binomial(q, j);
        // W = V has k = q = d
        const auto b = binom_bound(q, p, j, q);
        if (b.applicable) CHECK(h == b.value);
        for (long long k = 1; k <= q; ++k) {
          const auto bk = binom_bound(k, p, j, q);
          if (bk.applicable) CHECK(h >= bk.value);
        }
      }
    }
  }
}

TEST_CASE("thm11 bound: piecewise form against the family maximum") {
  CHECK(thm11_bound(3, 7).piecewise == 18);
  CHECK(thm11_bound(3, 4).piecewise == 6);
  CHECK(thm11_bound(1, 1).piecewise == 0);
  for (long long d = 1; d <= 10; ++d) {
    for (long long q = 0; q <= 40; ++q) {
      const auto b = thm11_bound(d, q);
      CHECK(b.piecewise == b.family_max);
    }
  }
}

TEST_CASE("c1 and c2 bounds") {
  for (long long q = 2; q <= 20; ++q) CHECK(c1_bound(q, 1) == 2 * q - 3);
  const auto b = c2_bound(10, 1);
  CHECK(b.base == 17);
  CHECK(b.radicand == 57);
  CHECK(b.applicable);
  // 17 + (sqrt(57)-1)/2 = 20.27..., so the smallest integer is 21
  CHECK(b.min_h == 21);
  CHECK_FALSE(c2_bound(8, 7).applicable);
  for (long long q = 2; q <= 30; ++q) {
    for (long long k = 1; k < q; ++k) {
      const auto c2 = c2_bound(q, k);
      const bool excess_positive = c2.applicable && c2.radicand > 1;
      CHECK(excess_positive == (k <= q - 3));
      if (c2.applicable) {
        const Integer m = c2.min_h - c2.base;
        CHECK((2 * m + 1) * (2 * m + 1) >= c2.radicand);
        if (m > 0) CHECK((2 * m - 1) * (2 * m - 1) < c2.radicand);
      }
    }
  }
}

TEST_CASE("truncation and conditional bounds") {
  for (long long q = 2; q <= 20; ++q) CHECK(truncation_bound(q, 1) == Rational(q - 1));
  for (long long q = 3; q <= 20; ++q) CHECK(hypothetical_top_chern_bound(q, 2).value == 4 * q - 7);
  CHECK(hypothetical_top_chern_bound(5, 2).conditional);
  for (long long k = 1; k <= 10; ++k) {
    for (long long q = k + 1; q <= 40; ++q) CHECK(Rational(linear_bound(q, k)) >= truncation_bound(q, k));
  }
}

TEST_CASE("rank bound identities") {
  const auto b = conjecture_rank_bound(12, 4);
  CHECK(b.rank == 22);
  CHECK(b.h_bound == 60);
  for (long long k = 1; k <= 20; ++k) {
    for (long long q = k + 1; q <= 60; ++q) {
      const auto r = conjecture_rank_bound(q, k);
      if (q <= 2 * k) {
        CHECK(r.h_bound == binomial(q, 2));
      } else {
        CHECK(r.h_bound == Integer(2 * k * q) - binomial(2 * k + 1, 2));
      }
    }
  }
  CHECK(cdf_inequality_holds(4, 4));
  CHECK_FALSE(cdf_inequality_holds(5, 4));
}
