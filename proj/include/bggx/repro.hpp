#pragma once

// One function per reproducible claim. Each returns a CheckResult with a
// PASS/WARN/FAIL status, a one-line message naming the failing item, and JSON
// details. Randomness comes from per-cell seeds derived from a master seed, so
// results do not depend on the number of worker threads.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bggx/bgg_classes.hpp"
#include "bggx/bounds.hpp"
#include "bggx/chern_series.hpp"
#include "bggx/derivative_complex.hpp"
#include "bggx/errors.hpp"
#include "bggx/hodge_models.hpp"
#include "bggx/json_io.hpp"
#include "bggx/lr_oracle.hpp"
#include "bggx/parallel.hpp"
#include "bggx/partition.hpp"
#include "bggx/polynomial.hpp"
#include "bggx/rational.hpp"
#include "bggx/schur_ring.hpp"

namespace bggx {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CheckResult {
  std::string id;
  std::string title;
  Status status = Status::Pass;
  std::string message;  // names the first failing item, or summarises
  Json details = Json::object();
  double seconds = 0;   // wall time; never serialised into JSON

  [[nodiscard]] bool failed() const { return status == Status::Fail; }
};

inline Json to_json(const CheckResult& c) {
  return Json{{"id", c.id}, {"title", c.title}, {"status", to_string(c.status)}, {"message", c.message}, {"details", c.details}};
}

struct ReproOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  int trials = 20;          // random W per battery cell
  int battery_q_max = 6;
  std::string inject_fault;  // "g2" tampers with the g_2 closed form
};

/// Deterministic generator for one cell of a grid.
inline std::mt19937_64 cell_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> cell) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (auto c : cell) words.push_back(static_cast<std::uint32_t>(c));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

/// Random k x q matrix of rank k with coordinates in [-3, 3].
inline SubspaceW random_subspace(int k, int q, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  while (true) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(q)));
    for (auto& row : rows) {
      for (auto& x : row) x = coord(rng);
    }
    if (rank_exact(SparseMatrix::from_dense(rows, static_cast<std::size_t>(q))) == static_cast<std::size_t>(k)) {
      return SubspaceW(std::move(rows));
    }
  }
}

/// Random invertible n x n matrix with entries a/b, |a| <= 3, 1 <= b <= 2.
inline std::vector<std::vector<Rational>> random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  while (true) {
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (auto& row : g) {
      for (auto& x : row) x = make_rational(num(rng), den(rng));
    }
    if (rank_exact(SparseMatrix::from_dense(g, n)) == n) return g;
  }
}

namespace detail {

template <class F>
CheckResult timed(std::string id, std::string title, F&& body) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.message = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void fail_once(CheckResult& r, const std::string& what) {
  if (r.status != Status::Fail) r.message = what;
  r.status = Status::Fail;
}

} // namespace detail

/// verify_conjecture over k in [k_lo, k_hi], q in k+1..q_max.
inline std::vector<ConjectureReport> conjecture_sweep(int k_lo, int k_hi, int q_max, unsigned jobs) {
  std::vector<std::pair<int, int>> cells;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int q = k + 1; q <= q_max; ++q) cells.emplace_back(k, q);
  }
  return parallel_map(cells.size(), jobs, [&](std::size_t i) { return verify_conjecture(cells[i].first, cells[i].second); });
}

inline CheckResult check_conjecture(unsigned jobs, int k_lo = 2, int k_hi = 4, int q_max = 12) {
  return detail::timed("conjecture", "Conjecture sweep: c(F) vanishes above mu and not at mu", [&](CheckResult& r) {
    const auto reports = conjecture_sweep(k_lo, k_hi, q_max, jobs);
    std::size_t pass = 0;
    std::size_t warn = 0;
    Json cells = Json::array();
    for (const auto& rep : reports) {
      cells.push_back(to_json(rep));
      if (rep.status == Status::Pass) ++pass;
      if (rep.status == Status::Warn) ++warn;
      if (rep.status == Status::Fail) {
        detail::fail_once(r, "conjecture cell k=" + std::to_string(rep.k) + ", q=" + std::to_string(rep.q));
      }
    }
    r.details = Json{{"cells", reports.size()}, {"pass", pass}, {"warn", warn}, {"reports", std::move(cells)}};
    if (r.status != Status::Fail) {
      r.message = std::to_string(reports.size()) + " cells, " + std::to_string(pass) + " pass, " + std::to_string(warn) +
                  " boundary warnings";
    }
  });
}

inline CheckResult check_g_polynomials(const std::string& inject_fault = "") {
  return detail::timed("g-polynomials", "g_1, g_2, g_{1,1} closed forms for k = 1..6", [&](CheckResult& r) {
    Json per_k = Json::array();
    for (int k = 1; k <= 6; ++k) {
      const auto g = chern_G_coeffs(k, 2);
      Json row{{"k", k}, {"g_1", to_string(g.at(Partition{1}))}, {"g_2", to_string(g.at(Partition{2}))}};
      if (g.at(Partition{1}) != g1_closed_form(k)) detail::fail_once(r, "g_1 closed form, k=" + std::to_string(k));
      CoefPoly expected_g2 = g2_closed_form(k);
      if (inject_fault == "g2") expected_g2 += CoefPoly(Rational(1));
      if (g.at(Partition{2}) != expected_g2) detail::fail_once(r, "g_2 closed form, k=" + std::to_string(k));
      if (k >= 2) {
        const CoefPoly g11 = g.at(Partition{1, 1});
        row["g_11"] = to_string(g11);
        if (g11 != g11_closed_form(k)) detail::fail_once(r, "g_{1,1} closed form, k=" + std::to_string(k));
        if (g11 != g11_factored(k)) detail::fail_once(r, "g_{1,1} factorisation, k=" + std::to_string(k));
        // beta_+ - beta_- = sqrt(radicand) = 1; both roots are zeros of g_{1,1}
        if (g11_roots(k).radicand != CoefPoly(Rational(1))) detail::fail_once(r, "beta_+ - beta_- != 1, k=" + std::to_string(k));
        for (int q = k + 2; q <= k + 20; ++q) {
          const Rational a = evaluate(symbolic_a(k), 0, q);
          if (evaluate(g11, a, q) != 0 || evaluate(g11, a + 1, q) != 0) {
            detail::fail_once(r, "g_{1,1} roots A, A+1, k=" + std::to_string(k) + ", q=" + std::to_string(q));
          }
        }
      } else {
        row["g_11"] = nullptr;  // no sigma_{1,1} in rank 1
      }
      per_k.push_back(std::move(row));
    }
    r.details = Json{{"per_k", std::move(per_k)}, {"g_11_checked_for", "k=2..6"}};
    if (r.status != Status::Fail) r.message = "g_1, g_2 match for k=1..6; g_{1,1} matches and factors for k=2..6";
  });
}

inline CheckResult check_curves_example() {
  return detail::timed("curves", "C1 x C2 example: E2 table and hypercohomology", [&](CheckResult& r) {
    const auto model = curves_product_model();
    const auto table = e2_table(model.datum, model.W, 2);
    std::vector<std::vector<std::size_t>> expected(3, std::vector<std::size_t>(3, 0));
    expected[1][0] = 3;
    expected[1][1] = 18;
    expected[0][2] = 37;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (table.e[i][j] != expected[i][j]) {
          detail::fail_once(r, "E2[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + std::to_string(table.e[i][j]) +
                                   ", expected " + std::to_string(expected[i][j]));
        }
      }
    }
    const std::vector<std::size_t> hyper{0, 3, 55, 0, 0};
    if (table.hyper != hyper) detail::fail_once(r, "hypercohomology dimensions differ from (0, 3, 55)");
    if (table.term_dims.at(0) != std::vector<std::size_t>{6, 18, 9}) detail::fail_once(r, "term dims of C^0 differ from (6, 18, 9)");
    const auto c0 = build_complex(model.datum, model.W, 2, 0);
    const auto prefix = exactness_prefix(c0);
    if (prefix != 1) detail::fail_once(r, "C^0 should be exact only at step 0, prefix = " + std::to_string(prefix));
    r.details = to_json(table);
    r.details["exactness_prefix_j0"] = prefix;
    Json meta = Json::object();
    for (const auto& [key, value] : model.datum.metadata) meta[key] = value;
    r.details["metadata"] = std::move(meta);
    if (r.status != Status::Fail) r.message = "E2 = {(1,0): 3, (1,1): 18, (0,2): 37}, H = (0, 3, 55)";
  });
}

struct BatteryStats {
  std::size_t complexes = 0;
  std::size_t cells = 0;
  std::size_t capped_cells = 0;      // cells with d-k-j+1 > n
  std::size_t literal_failures = 0;  // complexes failing the uncapped count
};

inline CheckResult check_exactness_battery(const ReproOptions& opt, BatteryStats* stats_out = nullptr) {
  return detail::timed("exactness", "Exactness theorem on abelian varieties, random W", [&](CheckResult& r) {
    struct Cell {
      int q, k, rr, j;
    };
    struct CellResult {
      std::size_t complexes = 0;
      std::size_t failures = 0;
      std::size_t literal_failures = 0;
      std::size_t alternating_failures = 0;
      std::size_t min_margin = 0;
      std::string first_failure;
    };
    std::vector<Cell> cells;
    for (int q = 2; q <= opt.battery_q_max; ++q) {
      for (int k = 1; k <= q; ++k) {
        for (int rr = 1; rr <= q; ++rr) {
          for (int j = 0; j <= q; ++j) cells.push_back({q, k, rr, j});
        }
      }
    }
    std::map<int, HodgeDatum> models;
    for (int q = 2; q <= opt.battery_q_max; ++q) models.emplace(q, abelian_model(q));
    const auto results = parallel_map(cells.size(), opt.jobs, [&](std::size_t index) {
      const Cell& cell = cells[index];
      const auto& datum = models.at(cell.q);
      auto rng = cell_rng(opt.seed, {1, static_cast<std::uint64_t>(cell.q), static_cast<std::uint64_t>(cell.k),
                                     static_cast<std::uint64_t>(cell.rr), static_cast<std::uint64_t>(cell.j)});
      CellResult out;
      const int need = expected_exactness(cell.q, cell.k, cell.j);
      std::vector<Integer> hrow;
      for (int i = 0; i <= cell.q; ++i) hrow.emplace_back(datum.dim(i, cell.j));
      out.min_margin = static_cast<std::size_t>(-1);
      for (int t = 0; t < opt.trials; ++t) {
        const auto W = random_subspace(cell.k, cell.q, rng);
        const auto c = build_complex(datum, W, cell.rr, cell.j);
        ++out.complexes;
        const auto capped = static_cast<std::size_t>(std::min(need, c.n));
        const auto prefix = exactness_prefix(c, capped);
        if (prefix < capped) {
          ++out.failures;
          if (out.first_failure.empty()) {
            out.first_failure = "q=" + std::to_string(cell.q) + ", k=" + std::to_string(cell.k) + ", r=" + std::to_string(cell.rr) +
                                ", j=" + std::to_string(cell.j) + ": exact in " + std::to_string(prefix) + " steps, expected " +
                                std::to_string(capped);
          }
        }
        if (static_cast<std::size_t>(need) > capped) ++out.literal_failures;
        // exactness at steps < p forces sum_{i<=p} (-1)^{p-i} dim C_i = rank >= 0
        for (std::size_t p = 0; p < prefix; ++p) {
          if (alternating_sum(hrow, cell.rr, cell.k, static_cast<long long>(p)) < 0) ++out.alternating_failures;
        }
        out.min_margin = std::min(out.min_margin, prefix - std::min(prefix, capped));
      }
      return out;
    });
    BatteryStats stats;
    std::size_t alternating_failures = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& res = results[i];
      stats.complexes += res.complexes;
      ++stats.cells;
      if (expected_exactness(cells[i].q, cells[i].k, cells[i].j) > std::min(cells[i].rr, cells[i].q)) ++stats.capped_cells;
      stats.literal_failures += res.literal_failures;
      alternating_failures += res.alternating_failures;
      if (res.failures) detail::fail_once(r, "exactness bound violated at " + res.first_failure);
    }
    if (alternating_failures) detail::fail_once(r, "alternating sum negative although the prefix is exact");
    // W = V, j = 0: Koszul complex, exact at every step before the last
    Json full = Json::array();
    for (int q = 2; q <= opt.battery_q_max; ++q) {
      for (int rr = 1; rr <= q; ++rr) {
        const auto c = build_complex(models.at(q), SubspaceW::full(q), rr, 0);
        ++stats.complexes;
        const auto h = homology_dims(c);
        for (int s = 0; s < c.n; ++s) {
          if (h[static_cast<std::size_t>(s)] != 0) {
            detail::fail_once(r, "W=V, q=" + std::to_string(q) + ", r=" + std::to_string(rr) + ": homology " +
                                     std::to_string(h[static_cast<std::size_t>(s)]) + " at step " + std::to_string(s));
          }
        }
        full.push_back(Json{{"q", q}, {"r", rr}, {"homology", h}});
      }
    }
    r.details = Json{{"seed", opt.seed},
                     {"trials_per_cell", opt.trials},
                     {"q_range", Json::array({2, opt.battery_q_max})},
                     {"cells", stats.cells},
                     {"complexes", stats.complexes},
                     {"cells_where_bound_exceeds_length", stats.capped_cells},
                     {"complexes_failing_uncapped_count", stats.literal_failures},
                     {"full_space_j0", std::move(full)}};
    if (r.status != Status::Fail) {
      r.message = std::to_string(stats.complexes) + " complexes, all exact in the first min(d-k-j+1, n) steps";
    }
    if (stats_out) *stats_out = stats;
  });
}

inline CheckResult check_identities() {
  return detail::timed("identities", "Binomial identities and bound algebra", [&](CheckResult& r) {
    for (long long A = 0; A <= 30; ++A) {
      for (long long B = 0; B <= 30; ++B) {
        if (combin_identity(A, B) != (B == 0 ? 1 : 0)) {
          detail::fail_once(r, "combin identity at A=" + std::to_string(A) + ", B=" + std::to_string(B));
        }
      }
    }
    // symbolic in (q, k)
    using P = Polynomial<2>;
    const P q = P::variable(0);
    const P k = P::variable(1);
    const P one(Rational(1));
    auto binom2 = [&](const P& x) { return x * (x - one) * make_rational(1, 2); };
    const P lhs_small = binom2(q - k) + k * q - binom2(k + one);
    const P lhs_large = k * (q * Rational(2) - k * Rational(3) - one) * make_rational(1, 2) + k * q - binom2(k + one);
    const P rhs_large = k * q * Rational(2) - binom2(k * Rational(2) + one);
    if (lhs_small != binom2(q)) detail::fail_once(r, "rank identity for q <= 2k");
    if (lhs_large != rhs_large) detail::fail_once(r, "rank identity for q >= 2k");
    for (long long d = 1; d <= 10; ++d) {
      for (long long qq = 0; qq <= 40; ++qq) {
        const auto t = thm11_bound(d, qq);
        const Integer expected = qq <= 2 * d - 1 ? binomial(qq, 2) : t.family_max;
        if (t.piecewise != expected || (qq >= 2 * d && t.piecewise != t.family_max)) {
          detail::fail_once(r, "thm11 piecewise vs family at d=" + std::to_string(d) + ", q=" + std::to_string(qq));
        }
        if (qq <= 2 * d - 1 && t.family_max > t.piecewise) {
          detail::fail_once(r, "thm11 family exceeds binom(q,2) at d=" + std::to_string(d) + ", q=" + std::to_string(qq));
        }
      }
    }
    // rank bound identities on the concrete grid as well
    for (long long kk = 1; kk <= 12; ++kk) {
      for (long long qq = kk + 1; qq <= 40; ++qq) {
        const auto b = conjecture_rank_bound(qq, kk);
        const Integer expected = qq <= 2 * kk ? binomial(qq, 2) : Integer(2 * kk * qq) - binomial(2 * kk + 1, 2);
        if (b.h_bound != expected) detail::fail_once(r, "rank bound at q=" + std::to_string(qq) + ", k=" + std::to_string(kk));
      }
    }
    r.details = Json{{"combin_grid", "0 <= A, B <= 30"},
                     {"rank_identity_small", lhs_small.to_string({"q", "k"})},
                     {"rank_identity_large", lhs_large.to_string({"q", "k"})},
                     {"thm11_grid", "1 <= d <= 10, 0 <= q <= 40"}};
    if (r.status != Status::Fail) r.message = "combin identity, both rank identities and the thm11 grid hold";
  });
}

inline CheckResult check_ring(std::uint64_t seed) {
  return detail::timed("ring", "Schubert ring: algebra laws, duality, LR oracle, c(S)c(Q) = 1", [&](CheckResult& r) {
    auto random_class = [](const GrassmannianContext& ctx, std::mt19937_64& rng) {
      const auto box = partitions_in_box(static_cast<std::size_t>(ctx.k()), ctx.width());
      std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
      std::uniform_int_distribution<int> terms(1, 3);
      std::uniform_int_distribution<int> num(-4, 4);
      std::uniform_int_distribution<int> den(1, 3);
      SchubertExpr<Rational> e(ctx);
      const int n = terms(rng);
      for (int t = 0; t < n; ++t) e += SchubertExpr<Rational>::schubert_class(ctx, box[pick(rng)], make_rational(num(rng), den(rng)));
      return e;
    };
    std::size_t triples = 0;
    for (const auto& ctx : {GrassmannianContext::concrete(2, 5), GrassmannianContext::concrete(3, 7)}) {
      auto rng = cell_rng(seed, {2, static_cast<std::uint64_t>(ctx.k()), static_cast<std::uint64_t>(ctx.q())});
      for (int t = 0; t < 200; ++t) {
        const auto a = random_class(ctx, rng);
        const auto b = random_class(ctx, rng);
        const auto c = random_class(ctx, rng);
        ++triples;
        if (multiply(a, b) != multiply(b, a)) detail::fail_once(r, "commutativity in " + ctx.to_string());
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) detail::fail_once(r, "associativity in " + ctx.to_string());
      }
      // duality: sigma_lambda sigma_mu has point coefficient [mu = complement(lambda)]
      const auto point = full_box(ctx);
      const auto box = partitions_in_box(static_cast<std::size_t>(ctx.k()), ctx.width());
      for (const auto& lambda : box) {
        for (const auto& mu : box) {
          if (lambda.size() + mu.size() != ctx.dimension()) continue;
          const auto prod = multiply(SchubertExpr<Rational>::schubert_class(ctx, lambda), SchubertExpr<Rational>::schubert_class(ctx, mu));
          if (prod.coefficient(point) != Rational(mu == complement(lambda, ctx) ? 1 : 0)) {
            detail::fail_once(r, "duality pairing (" + lambda.to_string() + ") x (" + mu.to_string() + ") in " + ctx.to_string());
          }
        }
      }
    }
    // LR oracle in Gr(3,8)
    std::size_t lr_checked = 0;
    {
      const auto ctx = GrassmannianContext::concrete(3, 8);
      const auto box = partitions_in_box(3, 5);
      for (const auto& lambda : box) {
        if (lambda.size() > 4) continue;
        for (const auto& mu : box) {
          if (mu.size() > 4) continue;
          const auto prod = multiply(SchubertExpr<Rational>::schubert_class(ctx, lambda), SchubertExpr<Rational>::schubert_class(ctx, mu));
          for (const auto& nu : box) {
            if (nu.size() != lambda.size() + mu.size()) continue;
            ++lr_checked;
            if (prod.coefficient(nu) != Rational(lr_coefficient(lambda, mu, nu))) {
              detail::fail_once(r, "LR coefficient c^(" + nu.to_string() + ")_(" + lambda.to_string() + "),(" + mu.to_string() + ")");
            }
          }
        }
      }
    }
    // Whitney sum formula
    for (int q = 2; q <= 10; ++q) {
      for (int k = 1; k < q; ++k) {
        const auto ctx = GrassmannianContext::concrete(k, q);
        if (chern_S(ctx) * chern_Q(ctx) != GradedSeries<Rational>::one(ctx, ctx.dimension())) {
          detail::fail_once(r, "c(S)c(Q) != 1 in Gr(" + std::to_string(k) + "," + std::to_string(q) + ")");
        }
      }
    }
    r.details = Json{{"seed", seed}, {"random_triples", triples}, {"lr_coefficients_checked", lr_checked}, {"whitney_grid", "1 <= k < q <= 10"}};
    if (r.status != Status::Fail) {
      r.message = std::to_string(triples) + " triples, " + std::to_string(lr_checked) + " LR coefficients, duality and c(S)c(Q)=1 hold";
    }
  });
}

inline CheckResult check_well_formedness(std::uint64_t seed, const BatteryStats* battery = nullptr) {
  return detail::timed("well-formed", "Complexes: composition zero, Euler identity, basis invariance", [&](CheckResult& r) {
    std::size_t built = 0;
    // full homology (with the Euler identity) on every abelian cell with q <= 4
    for (int q = 1; q <= 4; ++q) {
      const auto datum = abelian_model(q);
      auto rng = cell_rng(seed, {3, static_cast<std::uint64_t>(q)});
      for (int k = 1; k <= q; ++k) {
        for (int rr = 1; rr <= q + 1; ++rr) {
          for (int j = 0; j <= q; ++j) {
            homology_dims(build_complex(datum, random_subspace(k, q, rng), rr, j));
            ++built;
          }
        }
      }
    }
    const auto model = curves_product_model();
    for (int rr = 1; rr <= 4; ++rr) {
      for (int j = 0; j <= 2; ++j) {
        homology_dims(build_complex(model.datum, model.W, rr, j));
        ++built;
      }
    }
    auto rng = cell_rng(seed, {4});
    for (int t = 0; t < 100; ++t) {
      const auto g = random_invertible(3, rng);
      const int rr = 1 + t % 3;
      const int j = (t / 3) % 3;
      built += 2;
      if (!basis_change_invariance_check(model.datum, model.W, g, rr, j)) {
        detail::fail_once(r, "homology changed under a W basis change (trial " + std::to_string(t) + ", r=" + std::to_string(rr) +
                                 ", j=" + std::to_string(j) + ")");
      }
    }
    r.details = Json{{"seed", seed}, {"complexes_with_full_homology", built}, {"basis_changes", 100}};
    if (battery) r.details["battery_complexes"] = battery->complexes;
    if (r.status != Status::Fail) {
      r.message = std::to_string(built + (battery ? battery->complexes : 0)) +
                  " complexes composed to zero; Euler identity and 100 basis changes hold";
    }
  });
}

/// Every check, in a fixed order.
inline std::vector<CheckResult> run_all_checks(const ReproOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_conjecture(opt.jobs));
  out.push_back(check_g_polynomials(opt.inject_fault));
  out.push_back(check_curves_example());
  BatteryStats stats;
  out.push_back(check_exactness_battery(opt, &stats));
  out.push_back(check_identities());
  out.push_back(check_ring(opt.seed));
  out.push_back(check_well_formedness(opt.seed, &stats));
  return out;
}

} // namespace bggx
