#include <catch_amalgamated.hpp>

#include <stdexcept>

#include "bggx/hodge_models.hpp"
#include "bggx/json_io.hpp"
#include "bggx/parallel.hpp"

using namespace bggx;

TEST_CASE("SchubertExpr JSON round trip keeps exact coefficients") {
  const auto ctx = GrassmannianContext::concrete(3, 7);
  auto e = SchubertExpr<Rational>::schubert_class(ctx, Partition({2, 1}), make_rational(-5, 3));
  e += SchubertExpr<Rational>::schubert_class(ctx, Partition({1}), make_rational(7, 2));
  const Json j = to_json(e);
  CHECK(j.dump() == R"({"context":{"k":3,"q":7},"terms":[{"partition":[1],"coeff":"7/2"},{"partition":[2,1],"coeff":"-5/3"}]})");
  CHECK(schubert_expr_from_json(j) == e);
}

TEST_CASE("HodgeDatum JSON round trip") {
  const auto datum = abelian_model(3);
  const auto back = hodge_datum_from_json(to_json(datum));
  CHECK(back.dims() == datum.dims());
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j <= 3; ++j) CHECK(back.action(a, i, j).to_dense() == datum.action(a, i, j).to_dense());
    }
  }
  CHECK(to_json(back).dump() == to_json(datum).dump());
}

TEST_CASE("malformed data files raise DataError") {
  CHECK_THROWS_AS(hodge_datum_from_json(Json::parse(R"({"d":1,"q":1})")), DataError);
  CHECK_THROWS_AS(hodge_datum_from_json(Json::parse(R"({"d":1,"q":1,"dims":[[1,-1],[1,1]]})")), DataError);
  CHECK_THROWS_AS(hodge_datum_from_json(Json::parse(R"({"d":1,"q":1,"dims":[[1,1],[1,1]],
    "action":[{"a":0,"i":0,"j":0,"matrix":[["1"]]}]})")), DataError);
  CHECK_THROWS_AS(hodge_datum_from_json(Json::parse(R"({"d":1,"q":1,"dims":[[1,1],[1,1]],
    "action":[{"a":1,"i":0,"j":0,"matrix":[["x"]]}]})")), DataError);
  CHECK_THROWS_AS(schubert_expr_from_json(Json::parse(R"({"context":{"k":2,"q":4},"terms":[{"partition":[3],"coeff":"1"}]})")),
                  DataError);
}

TEST_CASE("Hodge tables accept a datum or a bare array") {
  CHECK(hodge_table_from_json(Json::parse("[[1,2],[2,1]]")) == std::vector<std::vector<std::size_t>>{{1, 2}, {2, 1}});
  CHECK(hodge_table_from_json(Json::parse(R"({"dims":[[1]]})")) == std::vector<std::vector<std::size_t>>{{1}});
}

TEST_CASE("subspaces parse from the command-line form") {
  const auto W = parse_subspace("1,0,0;0,1/2,-3", 3);
  CHECK(W.k() == 2);
  CHECK_THROWS_AS(parse_subspace("1,0", 3), DomainError);
  CHECK_THROWS_AS(parse_subspace("1,a,0", 3), DomainError);
}

TEST_CASE("CSV fields are quoted only when needed") {
  CHECK(csv_row({"a", "2,1", "say \"hi\""}) == "a,\"2,1\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("parallel_map keeps index order and rethrows") {
  for (unsigned jobs : {1U, 3U, 8U}) {
    const auto out = parallel_map(50, jobs, [](std::size_t i) { return i * i; });
    REQUIRE(out.size() == 50);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i);
  }
  CHECK(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
  CHECK_THROWS_AS(parallel_map(10, 2,
                               [](std::size_t i) {
                                 if (i == 7) throw std::runtime_error("cell 7");
                                 return i;
                               }),
                  std::runtime_error);
}

TEST_CASE("LinearMap integer and rational forms agree") {
  const detail::IntRows first{{{0, 1}}, {{0, 1}}};  // 2x1: x -> (x, x)
  const detail::IntRows second{{{0, 1}, {1, -1}}};  // 1x2: (y, z) -> y - z
  const LinearMap f(first, 1);
  const LinearMap g(second, 2);
  CHECK(g.composes_to_zero_after(f));
  CHECK(f.rank_exact() == 1);
  CHECK(f.rank_lower_bound() == std::optional<std::size_t>(1));
  const LinearMap g_rational(g.rational());
  CHECK(g_rational.composes_to_zero_after(f));
  const LinearMap h(detail::IntRows{{{0, 1}, {1, 1}}}, 2);
  CHECK_FALSE(h.composes_to_zero_after(f));
  const LinearMap big(detail::IntRows{{{0, std::int64_t{1} << 40}, {1, std::int64_t{1} << 40}}}, 2);
  CHECK_FALSE(big.composes_to_zero_after(LinearMap(detail::IntRows{{{0, std::int64_t{1} << 40}}, {{0, std::int64_t{1} << 40}}}, 1)));
}
