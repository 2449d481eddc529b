// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.
// A criterion also fails when it exceeds its runtime budget.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bggx/parallel.hpp"
#include "bggx/repro.hpp"

using namespace bggx;

namespace {

struct Criterion {
  int number;
  double budget_seconds;
  std::function<CheckResult()> run;
};

} // namespace

int main() {
  ReproOptions opt;
  opt.jobs = default_jobs();
  BatteryStats stats;

  const std::vector<Criterion> criteria{
      {1, 300.0, [&] { return check_conjecture(opt.jobs); }},
      {2, 10.0, [] { return check_g_polynomials(); }},
      {3, 1.0, [] { return check_curves_example(); }},
      {4, 120.0, [&] { return check_exactness_battery(opt, &stats); }},
      {5, 1.0, [] { return check_identities(); }},
      {6, 60.0, [&] { return check_ring(opt.seed); }},
      {7, 60.0, [&] { return check_well_formedness(opt.seed, &stats); }},
  };

  int failures = 0;
  std::printf("seed %llu, %u worker threads\n", static_cast<unsigned long long>(opt.seed), opt.jobs);
  for (const auto& c : criteria) {
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.title = "criterion " + std::to_string(c.number);
      r.message = std::string("exception: ") + e.what();
    }
    std::string message = r.message;
    const bool over_budget = r.seconds > c.budget_seconds;
    if (over_budget) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "; runtime %.1f s exceeds the %.0f s budget", r.seconds, c.budget_seconds);
      message += buf;
    }
    const bool pass = !r.failed() && !over_budget;
    failures += !pass;
    std::printf("%s [%d] %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.number, r.title.c_str(), message.c_str(), r.seconds,
                r.status == Status::Warn ? ", with warnings" : "");
    if (c.number == 4) {
      std::printf("     %zu of %zu cells ask for more steps than the complex has; %zu complexes fall short of the uncapped count\n",
                  stats.capped_cells, stats.cells, stats.literal_failures);
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
