#include <catch_amalgamated.hpp>

#include <random>

#include "bggx/derivative_complex.hpp"
#include "bggx/hodge_models.hpp"

using namespace bggx;

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Mat m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = make_rational(num(rng), den(rng));
  }
  return m;
}

Mat random_invertible(std::size_t n, std::mt19937& rng) {
  while (true) {
    Mat m = random_matrix(n, n, rng);
    if (rank_exact(SparseMatrix::from_dense(m, n)) == n) return m;
  }
}

SubspaceW random_subspace(int k, int q, std::mt19937& rng) {
  while (true) {
    Mat m = random_matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(q), rng);
    if (rank_exact(SparseMatrix::from_dense(m, static_cast<std::size_t>(q))) == static_cast<std::size_t>(k)) {
      return SubspaceW(std::move(m));
    }
  }
}

} // namespace

TEST_CASE("exact and modular ranks") {
  const Mat m{{1, 2, 3}, {2, 4, 6}, {make_rational(1, 2), 0, 1}};
  const auto sm = SparseMatrix::from_dense(m, 3);
  CHECK(rank_exact(sm) == 2);
  CHECK(rank_mod_p<kPrimeA>(sm) == 2u);
  CHECK(rank_exact(SparseMatrix(4, 5)) == 0);
  // block diagonal with repeated blocks
  SparseMatrix blocks(6, 6);
  for (std::size_t b = 0; b < 3; ++b) {
    blocks.add(2 * b, 2 * b, 1);
    blocks.add(2 * b, 2 * b + 1, 2);
    blocks.add(2 * b + 1, 2 * b, 2);
    blocks.add(2 * b + 1, 2 * b + 1, 4);
  }
  CHECK(rank_exact(blocks) == 3);
  CHECK(rank_lower_bound(blocks) == 3u);
  // a denominator divisible by the first prime falls through to the next one
  SparseMatrix tricky(1, 1);
  tricky.add(0, 0, Rational(Integer(1), Integer(kPrimeA)));
  CHECK(!rank_mod_p<kPrimeA>(tricky));
  CHECK(rank_lower_bound(tricky) == 1u);
}

TEST_CASE("bareiss rank matches random low-rank products") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t inner = 1 + trial % 5;
    const auto a = SparseMatrix::from_dense(random_matrix(7, inner, rng), inner);
    const auto b = SparseMatrix::from_dense(random_matrix(inner, 6, rng), 6);
    const auto p = a * b;
    CHECK(rank_exact(p) <= inner);
    CHECK(rank_lower_bound(p).value() <= rank_exact(p));
  }
}

TEST_CASE("multiset basis") {
  const MultisetBasis b(3, 2);
  CHECK(b.size() == 6);
  CHECK(b[0] == std::vector<int>{0, 0});
  CHECK(b[1] == std::vector<int>{0, 1});
  CHECK(b[5] == std::vector<int>{2, 2});
  CHECK(MultisetBasis(4, 0).size() == 1);
}

TEST_CASE("abelian model data") {
  const auto a1 = abelian_model(1);
  CHECK(a1.dims() == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}});
  CHECK(a1.action(0, 0, 0).to_dense() == Mat{{1}});
  CHECK(a1.action(0, 0, 1).to_dense() == Mat{{1}});
  CHECK(abelian_model(3).dim(1, 2) == 9);
  for (int q = 1; q <= 5; ++q) CHECK_NOTHROW(abelian_model(q).validate());
}

TEST_CASE("small abelian complexes") {
  const auto a2 = abelian_model(2);
  const auto c = build_complex(a2, SubspaceW({{1, 0}}), 2, 0);
  CHECK(c.term_dims == std::vector<std::size_t>{1, 2, 1});
  CHECK(homology_dims(c) == std::vector<std::size_t>{0, 0, 0});
  const auto r1 = build_complex(a2, SubspaceW({{1, 1}}), 1, 1);
  CHECK(r1.term_dims == std::vector<std::size_t>{2, 4});
  const auto t = e2_table(a2, SubspaceW({{2, 3}}), 1);
  for (int j = 0; j <= 2; ++j) CHECK(t.e[0][static_cast<std::size_t>(j)] == 0);
  CHECK(t.hyper[0] == t.e[0][0]);
}

TEST_CASE("full-space Koszul exactness on abelian varieties") {
  for (int q = 1; q <= 5; ++q) {
    const auto datum = abelian_model(q);
    for (int r = 1; r <= q; ++r) {
      const auto c = build_complex(datum, SubspaceW::full(q), r, 0);
      const auto h = homology_dims(c);
      for (int s = 0; s < c.n; ++s) CHECK(h[static_cast<std::size_t>(s)] == 0);
    }
  }
}

TEST_CASE("exactness prefix on random subspaces of abelian varieties") {
  std::mt19937 rng(17);
  for (int q = 2; q <= 4; ++q) {
    const auto datum = abelian_model(q);
    for (int k = 1; k <= q; ++k) {
      for (int r = 1; r <= q; ++r) {
        for (int j = 0; j <= q; ++j) {
          for (int trial = 0; trial < 3; ++trial) {
            const auto c = build_complex(datum, random_subspace(k, q, rng), r, j);
            const auto full = homology_dims(c);
            std::size_t prefix = 0;
            while (prefix < full.size() && full[prefix] == 0) ++prefix;
            CHECK(exactness_prefix(c) == prefix);
            const auto need = static_cast<std::size_t>(std::min(expected_exactness(q, k, j), c.n));
            CHECK(prefix >= need);
            CHECK(exactness_prefix(c, need) == need);
          }
        }
      }
    }
  }
}

TEST_CASE("curves example: dimensions and E2 table") {
  const auto model = curves_product_model();
  CHECK(model.datum.dims() == std::vector<std::vector<std::size_t>>{{1, 6, 9}, {6, 20, 6}, {9, 6, 1}});
  CHECK_NOTHROW(model.datum.validate());
  const auto c = build_complex(model.datum, model.W, 2, 0);
  CHECK(c.term_dims == std::vector<std::size_t>{6, 18, 9});
  const auto h = homology_dims(c);
  CHECK(h[0] == 0);
  CHECK(h[1] == 3);
  CHECK(exactness_prefix(c) == 1);
  const auto t = e2_table(model.datum, model.W, 2);
  std::vector<std::vector<std::size_t>> expected(3, std::vector<std::size_t>(3, 0));
  expected[1][0] = 3;
  expected[1][1] = 18;
  expected[0][2] = 37;
  CHECK(t.e == expected);
  CHECK(t.hyper == std::vector<std::size_t>{0, 3, 55, 0, 0});
}

TEST_CASE("curves example does not depend on the dual basis") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 3; ++trial) {
    const auto model = curves_product_model(random_invertible(3, rng), random_invertible(3, rng));
    const auto t = e2_table(model.datum, model.W, 2);
    CHECK(t.e[1][0] == 3);
    CHECK(t.e[1][1] == 18);
    CHECK(t.e[0][2] == 37);
  }
}

TEST_CASE("homology is invariant under change of W basis") {
  std::mt19937 rng(29);
  const auto model = curves_product_model();
  CHECK(basis_change_invariance_check(model.datum, model.W, identity_matrix(3), 2, 0));
  Mat twice = identity_matrix(3);
  for (std::size_t i = 0; i < 3; ++i) twice[i][i] = 2;
  CHECK(basis_change_invariance_check(model.datum, model.W, twice, 2, 1));
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(basis_change_invariance_check(model.datum, model.W, random_invertible(3, rng), 2, trial % 3));
  }
  Mat singular(3, std::vector<Rational>(3, Rational(1)));
  CHECK_THROWS_AS(basis_change_invariance_check(model.datum, model.W, singular, 2, 0), DomainError);
}

TEST_CASE("a broken datum is reported with its indices") {
  auto datum = abelian_model(2);
  // make v_1 and v_2 commute instead of anticommute on H^0(O) -> H^0(Omega^2)
  SparseMatrix m = datum.action(1, 1, 0);
  SparseMatrix flipped(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) flipped.add(r, c, -v);
  }
  datum.set_action(1, 1, 0, flipped);
  try {
    build_complex(datum, SubspaceW::full(2), 2, 0);
    FAIL("expected a data error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("a=1, b=2, i=0, j=0") != std::string::npos);
  }
  CHECK_THROWS_AS(datum.validate(), DataError);
  CHECK_THROWS_AS(datum.set_action(0, 0, 0, SparseMatrix(3, 3)), DataError);
}

TEST_CASE("expected exactness") {
  CHECK(expected_exactness(4, 2, 0) == 3);
  CHECK(expected_exactness(2, 3, 0) == 0);
  CHECK(expected_exactness(5, 1, 0) == 5);
}
