// bggx: command-line front end.
//
// Exit codes: 0 pass, 1 mathematical mismatch, 2 usage error, 3 input-data error.

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bggx/bgg_classes.hpp"
#include "bggx/bounds.hpp"
#include "bggx/derivative_complex.hpp"
#include "bggx/errors.hpp"
#include "bggx/hodge_models.hpp"
#include "bggx/json_io.hpp"
#include "bggx/parallel.hpp"
#include "bggx/repro.hpp"
#include "bggx/schur_ring.hpp"
#include "bggx/sym_power.hpp"

using namespace bggx;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct Global {
  std::string format = "text";
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

struct Output {
  Json json = Json::object();
  std::string csv;
  std::string text;
  int exit = 0;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path);
  out << content;
}

std::string expr_text(const SchubertExpr<Rational>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : e.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "s(" + lambda.to_string() + ")";
  }
  return out;
}

std::string status_line(Status s, const std::string& message) { return to_string(s) + ": " + message + "\n"; }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw DomainError("malformed range '" + text + "' (expected A..B or A)");
  }
}

// ---- schubert mult -------------------------------------------------------

struct MultArgs {
  std::optional<int> k;
  std::optional<int> q;
  bool stable = false;
  std::string a;
  std::string b;
  std::string a_file;
  std::string b_file;
  std::optional<int> max_degree;
};

Output cmd_schubert_mult(const MultArgs& args) {
  auto operand = [&](const std::string& partition, const std::string& file, const char* name) {
    if (!file.empty()) return schubert_expr_from_json(read_json_file(file));
    if (!args.k) throw DomainError(std::string("--k is required unless --") + name + "-file is given");
    if (!args.stable && !args.q) throw DomainError("--q or --stable is required");
    const auto ctx = args.stable ? GrassmannianContext::stable(*args.k) : GrassmannianContext::concrete(*args.k, *args.q);
    return SchubertExpr<Rational>::schubert_class(ctx, Partition::parse(partition));
  };
  const auto a = operand(args.a, args.a_file, "a");
  const auto b = operand(args.b, args.b_file, "b");
  if (a.context().is_stable() && !args.max_degree) throw DomainError("stable products need --max-degree");
  const auto product = multiply(a, b, args.max_degree);
  Output out;
  out.json = to_json(product);
  out.csv = csv_row({"partition", "coeff"});
  for (const auto& [lambda, c] : product.terms()) out.csv += csv_row({lambda.to_string(), to_string(c)});
  out.text = "(" + expr_text(a) + ") * (" + expr_text(b) + ") = " + expr_text(product) + "\n";
  return out;
}

// ---- chern sym -----------------------------------------------------------

Output cmd_chern_sym(int rank, int power, int max_degree) {
  const auto table = sym_power_chern(rank, power, max_degree);
  Output out;
  out.json = to_json(table);
  out.csv = csv_row({"degree", "monomial", "coeff"});
  std::ostringstream text;
  text << "c(Sym^" << power << " E), rank E = " << rank << ", rank Sym = " << table.bundle_rank() << "\n";
  for (std::size_t d = 0; d < table.entries.size(); ++d) {
    std::string line;
    for (const auto& [mono, c] : table.entries[d]) {
      std::string m;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!m.empty()) m += "*";
        m += "e" + std::to_string(i + 1);
        if (mono[i] > 1) m += "^" + std::to_string(mono[i]);
      }
      if (m.empty()) m = "1";
      std::string exps;
      for (std::size_t i = 0; i < mono.size(); ++i) exps += (i ? " " : "") + std::to_string(mono[i]);
      out.csv += csv_row({std::to_string(d), exps, to_string(c)});
      line += (line.empty() ? "" : " + ") + (c == 1 ? m : to_string(c) + "*" + m);
    }
    text << "  c_" << d << " = " << (line.empty() ? "0" : line) << "\n";
  }
  out.text = text.str();
  return out;
}

// ---- conjecture verify ---------------------------------------------------

Output cmd_conjecture(const std::string& k_range, int q_max, const Global& g) {
  const auto [k_lo, k_hi] = parse_range(k_range);
  if (k_lo < 1) throw DomainError("k must be at least 1");
  const auto reports = conjecture_sweep(k_lo, k_hi, q_max, g.jobs);
  Output out;
  Json cells = Json::array();
  std::size_t pass = 0;
  std::size_t warn = 0;
  std::size_t fail = 0;
  out.csv = csv_row({"k", "q", "mu", "mu_coefficient", "checked_above_mu", "nonzero_above_mu", "status"});
  std::ostringstream text;
  text << "  k   q  mu                 coefficient at mu           above mu  status\n";
  for (const auto& r : reports) {
    cells.push_back(to_json(r));
    pass += r.status == Status::Pass;
    warn += r.status == Status::Warn;
    fail += r.status == Status::Fail;
    out.csv += csv_row({std::to_string(r.k), std::to_string(r.q), r.mu.to_string(), to_string(r.mu_coefficient),
                        std::to_string(r.checked), std::to_string(r.offending.size()), to_string(r.status)});
    std::string mu = "(" + r.mu.to_string() + ")";
    mu.resize(std::max<std::size_t>(mu.size(), 18), ' ');
    std::string coeff = to_string(r.mu_coefficient);
    coeff.resize(std::max<std::size_t>(coeff.size(), 26), ' ');
    text << (r.k < 10 ? "  " : " ") << r.k << (r.q < 10 ? "   " : "  ") << r.q << "  " << mu << " " << coeff << "  "
         << (r.above_mu_all_zero ? "all 0" : std::to_string(r.offending.size()) + " non-zero") << "   " << to_string(r.status)
         << "\n";
  }
  const Status overall = fail ? Status::Fail : Status::Pass;
  text << status_line(overall, std::to_string(reports.size()) + " cells, " + std::to_string(pass) + " pass, " +
                                   std::to_string(warn) + " warn, " + std::to_string(fail) + " fail");
  out.json = Json{{"command", "conjecture verify"},
                  {"parameters", Json{{"k", Json::array({k_lo, k_hi})}, {"q_max", q_max}}},
                  {"status", to_string(overall)},
                  {"summary", Json{{"pass", pass}, {"warn", warn}, {"fail", fail}}},
                  {"reports", std::move(cells)}};
  out.text = text.str();
  out.exit = fail ? kExitMismatch : 0;
  return out;
}

// ---- gclass --------------------------------------------------------------

Output cmd_gclass(int k, int max_degree) {
  const auto g = chern_G_coeffs(k, max_degree);
  Output out;
  out.json = to_json(g);
  out.csv = csv_row({"partition", "g"});
  std::ostringstream text;
  text << "c(G) in rank " << k << " (stable; valid for " << g.validity() << ")\n";
  for (const auto& [lambda, p] : g.g) {
    out.csv += csv_row({lambda.to_string(), to_string(p)});
    text << "  g_(" << (lambda.empty() ? "" : lambda.to_string()) << ") = " << to_string(p) << "\n";
  }
  out.text = text.str();
  return out;
}

// ---- bounds --------------------------------------------------------------

Output cmd_bounds_h20(long long q, long long d, std::optional<long long> k_opt) {
  if (q < 0 || d < 1) throw DomainError("bounds h20 needs q >= 0 and d >= 1");
  Output out;
  const auto t = thm11_bound(d, q);
  Json rows = Json::array();
  out.csv = csv_row({"bound", "k", "value", "applicable", "note"});
  std::ostringstream text;
  text << "Lower bounds for h^{2,0} with q = " << q << ", dim = " << d << "\n";
  auto add = [&](const std::string& name, std::optional<long long> k, const std::string& value, bool applicable, const std::string& note) {
    Json row{{"bound", name}, {"k", k ? Json(*k) : Json(nullptr)}, {"value", value}, {"applicable", applicable}};
    if (!note.empty()) row["note"] = note;
    rows.push_back(std::move(row));
    out.csv += csv_row({name, k ? std::to_string(*k) : "", value, applicable ? "true" : "false", note});
    std::string label = name + (k ? " (k=" + std::to_string(*k) + ")" : "");
    label.resize(std::max<std::size_t>(label.size(), 28), ' ');
    text << "  " << label << " " << value << (applicable ? "" : "   [not applicable]") << (note.empty() ? "" : "   " + note) << "\n";
  };
  add("thm11", std::nullopt, to_string(t.piecewise), true, "family max " + to_string(t.family_max) + " at k'=" + std::to_string(t.best_k));
  std::vector<long long> ks;
  if (k_opt) {
    ks.push_back(*k_opt);
  } else {
    for (long long k = 1; k < q; ++k) ks.push_back(k);
  }
  for (long long k : ks) {
    if (k < 1) throw DomainError("k must be at least 1");
    add("c1", k, to_string(c1_bound(q, k)), k < q, "");
    const auto c2 = c2_bound(q, k);
    add("c2", k, c2.applicable ? c2.to_string() : "-", c2.applicable,
        c2.applicable ? "integer h >= " + to_string(c2.min_h) : "radicand " + to_string(c2.radicand) + " < 0");
    add("truncation", k, to_string(truncation_bound(q, k)), true, "");
    add("linear", k, to_string(linear_bound(q, k)), true, "");
    add("top_chern", k, to_string(hypothetical_top_chern_bound(q, k).value), false,
        "CONDITIONAL: needs the top Chern class of F non-zero");
    if (k < q) {
      const auto rb = conjecture_rank_bound(q, k);
      add("conjectural_rank", k, to_string(rb.h_bound), true, "rk F >= " + to_string(rb.rank));
    }
  }
  out.json = Json{{"command", "bounds h20"}, {"parameters", Json{{"q", q}, {"d", d}}}, {"bounds", std::move(rows)}};
  if (k_opt) out.json["parameters"]["k"] = *k_opt;
  out.text = text.str();
  return out;
}

Output cmd_bounds_check(const std::string& path, long long k, long long r) {
  const auto dims = hodge_table_from_json(read_json_file(path));
  const long long d = static_cast<long long>(dims.size()) - 1;
  if (d < 0) throw DataError("empty Hodge table");
  if (k < 1 || r < 1) throw DomainError("bounds check needs k >= 1 and r >= 1");
  Output out;
  Json rows = Json::array();
  out.csv = csv_row({"j", "p", "sum", "applies", "ok"});
  std::ostringstream text;
  text << "Alternating sums sum_i (-1)^{p-i} binom(r-i+k-1,k-1) h^{i,j}, k = " << k << ", r = " << r << "\n";
  std::size_t violations = 0;
  for (long long j = 0; j <= d; ++j) {
    std::vector<Integer> hrow;
    for (long long i = 0; i <= d; ++i) hrow.emplace_back(dims[static_cast<std::size_t>(i)].at(static_cast<std::size_t>(j)));
    for (long long p = 0; p <= std::min(d, r); ++p) {
      const auto sum = alternating_sum(hrow, r, k, p);
      const bool applies = alternating_sum_applies(d, k, j, r, p);
      const bool ok = !applies || sum >= 0;
      violations += !ok;
      rows.push_back(Json{{"j", j}, {"p", p}, {"sum", to_string(sum)}, {"applies", applies}, {"ok", ok}});
      out.csv += csv_row({std::to_string(j), std::to_string(p), to_string(sum), applies ? "true" : "false", ok ? "true" : "false"});
      text << "  j=" << j << " p=" << p << "  " << to_string(sum) << (applies ? (ok ? "  >= 0" : "  < 0  VIOLATION") : "  (no claim)") << "\n";
    }
  }
  const Status s = violations ? Status::Fail : Status::Pass;
  text << status_line(s, violations ? std::to_string(violations) + " applicable sums are negative"
                                    : "every applicable alternating sum is non-negative");
  out.json = Json{{"command", "bounds check"},
                  {"parameters", Json{{"hodge", path}, {"k", k}, {"r", r}}},
                  {"status", to_string(s)},
                  {"sums", std::move(rows)}};
  out.text = text.str();
  out.exit = violations ? kExitMismatch : 0;
  return out;
}

// ---- complexes -----------------------------------------------------------

Json complex_json(const ComplexOfMatrices& c) {
  return Json{{"r", c.r}, {"j", c.j}, {"n", c.n}, {"k", c.k}, {"term_dims", c.term_dims}, {"homology", homology_dims(c)},
              {"exactness_prefix", exactness_prefix(c)}};
}

std::string e2_text(const E2Table& t) {
  std::ostringstream s;
  s << "E2 table (rows i = 0.." << t.n << ", columns j = 0.." << t.d << ")\n";
  for (std::size_t i = 0; i < t.e.size(); ++i) {
    s << "  i=" << i << ":";
    for (auto v : t.e[i]) s << " " << v;
    s << "\n";
  }
  s << "  hypercohomology:";
  for (auto v : t.hyper) s << " " << v;
  s << "\n";
  return s.str();
}

Output cmd_complex_check(const std::string& path, const std::string& w_text, int r, int j, bool e2) {
  const auto datum = hodge_datum_from_json(read_json_file(path));
  datum.validate();
  const auto W = parse_subspace(w_text, datum.q());
  Output out;
  const auto c = build_complex(datum, W, r, j);
  out.json = complex_json(c);
  out.json["expected_exactness"] = std::min(expected_exactness(datum.d(), W.k(), j), c.n);
  out.csv = csv_row({"step", "term_dim", "homology"});
  const auto h = out.json["homology"].get<std::vector<std::size_t>>();
  std::ostringstream text;
  text << "C^" << j << "_{" << r << ",W}, dim W = " << W.k() << ", n = " << c.n << "\n";
  for (std::size_t s = 0; s < c.term_dims.size(); ++s) {
    out.csv += csv_row({std::to_string(s), std::to_string(c.term_dims[s]), std::to_string(h[s])});
    text << "  step " << s << ": dim " << c.term_dims[s] << ", homology " << h[s] << "\n";
  }
  text << "  exact in the first " << out.json["exactness_prefix"].get<std::size_t>() << " steps\n";
  if (e2) {
    const auto t = e2_table(datum, W, r);
    out.json["e2_table"] = to_json(t);
    text << e2_text(t);
  }
  out.text = text.str();
  return out;
}

Output cmd_example_curves(const std::string& emit) {
  const auto model = curves_product_model();
  if (!emit.empty()) write_file(emit, to_json(model.datum).dump(2) + "\n");
  const auto check = check_curves_example();
  const auto t = e2_table(model.datum, model.W, 2);
  Output out;
  out.json = Json{{"command", "example curves"}, {"status", to_string(check.status)}, {"message", check.message}, {"e2_table", to_json(t)}};
  Json meta = Json::object();
  for (const auto& [key, value] : model.datum.metadata) meta[key] = value;
  out.json["metadata"] = std::move(meta);
  out.csv = csv_row({"i", "j", "dim"});
  for (std::size_t i = 0; i < t.e.size(); ++i) {
    for (std::size_t jj = 0; jj < t.e[i].size(); ++jj) out.csv += csv_row({std::to_string(i), std::to_string(jj), std::to_string(t.e[i][jj])});
  }
  out.text = "C1 x C2 (genus 3 curves), W = <p1^*alpha_t + p2^*beta_t>, r = 2\n" + e2_text(t) + status_line(check.status, check.message);
  out.exit = check.failed() ? kExitMismatch : 0;
  return out;
}

Output cmd_model_abelian(int q, const std::string& emit) {
  const auto datum = abelian_model(q);
  if (!emit.empty()) write_file(emit, to_json(datum).dump(2) + "\n");
  Output out;
  out.json = Json{{"command", "model abelian"}, {"q", q}, {"dims", datum.dims()}};
  if (!emit.empty()) out.json["datum_file"] = emit;
  out.csv = csv_row({"i", "j", "dim"});
  std::ostringstream text;
  text << "Abelian variety of dimension " << q << ": h^{i,j} = binom(q,i) binom(q,j)\n";
  for (int i = 0; i <= q; ++i) {
    text << " ";
    for (int j = 0; j <= q; ++j) {
      out.csv += csv_row({std::to_string(i), std::to_string(j), std::to_string(datum.dim(i, j))});
      text << " " << datum.dim(i, j);
    }
    text << "\n";
  }
  if (!emit.empty()) text << "datum written to " << emit << "\n";
  out.text = text.str();
  return out;
}

Output cmd_identity_combin(int max) {
  if (max < 0) throw DomainError("--max must be non-negative");
  std::size_t bad = 0;
  Json failures = Json::array();
  for (long long A = 0; A <= max; ++A) {
    for (long long B = 0; B <= max; ++B) {
      if (combin_identity(A, B) != (B == 0 ? 1 : 0)) {
        ++bad;
        failures.push_back(Json::array({A, B}));
      }
    }
  }
  const Status s = bad ? Status::Fail : Status::Pass;
  Output out;
  const std::string message = std::to_string((max + 1) * (max + 1)) + " pairs (A, B) in [0, " + std::to_string(max) + "]^2, " +
                              std::to_string(bad) + " failures";
  out.json = Json{{"command", "identity combin"}, {"max", max}, {"status", to_string(s)}, {"failures", std::move(failures)}};
  out.csv = csv_row({"max", "failures", "status"}) + csv_row({std::to_string(max), std::to_string(bad), to_string(s)});
  out.text = status_line(s, message);
  out.exit = bad ? kExitMismatch : 0;
  return out;
}

Output cmd_repro(const Global& g, int trials, int q_max, const std::string& fault) {
  ReproOptions opt;
  opt.seed = g.seed;
  opt.jobs = g.jobs;
  opt.trials = trials;
  opt.battery_q_max = q_max;
  opt.inject_fault = fault;
  const auto checks = run_all_checks(opt);
  Output out;
  Json list = Json::array();
  bool failed = false;
  out.csv = csv_row({"check", "status", "message"});
  std::ostringstream text;
  text << "seed " << g.seed << "\n";
  double total = 0;
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    failed = failed || c.failed();
    total += c.seconds;
    out.csv += csv_row({c.id, to_string(c.status), c.message});
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.2f", c.seconds);
    text << to_string(c.status) << "  " << c.title << ": " << c.message << "  (" << seconds << " s)\n";
  }
  const Status overall = failed ? Status::Fail : Status::Pass;
  text << "overall: " << to_string(overall) << "\n";
  out.json = Json{{"command", "repro"},
                  {"parameters", Json{{"seed", g.seed}, {"trials", trials}, {"battery_q_max", q_max}}},
                  {"status", to_string(overall)},
                  {"checks", std::move(list)}};
  out.text = text.str();
  out.exit = failed ? kExitMismatch : 0;
  std::cerr << "wall time " << total << " s\n";
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bggx: Chern classes of BGG sheaves on Grassmannians and derivative complexes of Hodge data"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--json", g.json, "Shorthand for --format json");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--seed", g.seed, "Seed for random subspaces and basis changes");
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.fallthrough();

  std::optional<Output> result;
  auto run = [&](auto&& f) { return [&, f] { result = f(); }; };

  auto* schubert = app.add_subcommand("schubert", "Schubert calculus")->require_subcommand(1);
  MultArgs mult;
  auto* mult_cmd = schubert->add_subcommand("mult", "Product of two Schubert classes or expressions");
  mult_cmd->add_option("--k", mult.k, "Rank of the tautological subbundle");
  mult_cmd->add_option("--q", mult.q, "Dimension of the ambient space");
  mult_cmd->add_flag("--stable", mult.stable, "Stable (Schur function) ring of rank k");
  mult_cmd->add_option("--a", mult.a, "First partition, e.g. 2,1");
  mult_cmd->add_option("--b", mult.b, "Second partition");
  mult_cmd->add_option("--a-file", mult.a_file, "First factor as SchubertExpr JSON");
  mult_cmd->add_option("--b-file", mult.b_file, "Second factor as SchubertExpr JSON");
  mult_cmd->add_option("--max-degree", mult.max_degree, "Drop degrees above this");
  mult_cmd->callback(run([&] { return cmd_schubert_mult(mult); }));

  auto* chern = app.add_subcommand("chern", "Chern classes")->require_subcommand(1);
  int sym_rank = 0;
  int sym_power = 0;
  int sym_degree = 0;
  auto* sym_cmd = chern->add_subcommand("sym", "c(Sym^r E) in terms of the Chern classes of E");
  sym_cmd->add_option("--rank", sym_rank, "Rank of E")->required();
  sym_cmd->add_option("--power", sym_power, "Symmetric power r")->required();
  sym_cmd->add_option("--max-degree", sym_degree, "Highest degree")->required();
  sym_cmd->callback(run([&] { return cmd_chern_sym(sym_rank, sym_power, sym_degree); }));

  auto* conjecture = app.add_subcommand("conjecture", "Vanishing of c(F) above mu")->require_subcommand(1);
  std::string k_range = "2..4";
  int q_max = 12;
  auto* verify_cmd = conjecture->add_subcommand("verify", "Sweep the (k, q) grid");
  verify_cmd->add_option("--k", k_range, "k or range A..B")->capture_default_str();
  verify_cmd->add_option("--q-max", q_max, "Largest q")->capture_default_str();
  verify_cmd->callback(run([&] { return cmd_conjecture(k_range, q_max, g); }));

  int g_k = 0;
  int g_degree = 2;
  auto* gclass_cmd = app.add_subcommand("gclass", "Coefficients g_lambda of c(G), symbolic in h and q");
  gclass_cmd->add_option("--k", g_k, "Rank k")->required();
  gclass_cmd->add_option("--max-degree", g_degree, "Highest degree")->capture_default_str();
  gclass_cmd->callback(run([&] { return cmd_gclass(g_k, g_degree); }));

  auto* bounds = app.add_subcommand("bounds", "Hodge number bounds")->require_subcommand(1);
  long long b_q = 0;
  long long b_d = 0;
  std::optional<long long> b_k;
  auto* h20_cmd = bounds->add_subcommand("h20", "All lower bounds for h^{2,0}");
  h20_cmd->add_option("--q", b_q, "Irregularity q")->required();
  h20_cmd->add_option("--d", b_d, "Dimension")->required();
  h20_cmd->add_option("--k", b_k, "Dimension of the subspace W (default: every k < q)");
  h20_cmd->callback(run([&] { return cmd_bounds_h20(b_q, b_d, b_k); }));
  std::string hodge_path;
  long long c_k = 0;
  long long c_r = 0;
  auto* check_cmd = bounds->add_subcommand("check", "Alternating-sum conformance of a Hodge table");
  check_cmd->add_option("--hodge", hodge_path, "Hodge table JSON")->required();
  check_cmd->add_option("--k", c_k, "dim W")->required();
  check_cmd->add_option("--r", c_r, "Symmetric power r")->required();
  check_cmd->callback(run([&] { return cmd_bounds_check(hodge_path, c_k, c_r); }));

  auto* complex = app.add_subcommand("complex", "Derivative complexes")->require_subcommand(1);
  std::string datum_path;
  std::string w_text;
  int x_r = 0;
  int x_j = 0;
  bool x_e2 = false;
  auto* cc_cmd = complex->add_subcommand("check", "Homology of C^j_{r,W} for a datum");
  cc_cmd->add_option("--input", datum_path, "HodgeDatum JSON")->required();
  cc_cmd->add_option("--w", w_text, "Basis of W, rows separated by ';'")->required();
  cc_cmd->add_option("--r", x_r, "Symmetric power r")->required();
  cc_cmd->add_option("--j", x_j, "Cohomological degree j")->capture_default_str();
  cc_cmd->add_flag("--e2-table", x_e2, "Also compute the E2 table for all j");
  cc_cmd->callback(run([&] { return cmd_complex_check(datum_path, w_text, x_r, x_j, x_e2); }));

  auto* example = app.add_subcommand("example", "Worked examples")->require_subcommand(1);
  std::string curves_emit;
  auto* curves_cmd = example->add_subcommand("curves", "Product of two genus-3 curves");
  curves_cmd->add_option("--emit-datum", curves_emit, "Write the datum JSON to FILE");
  curves_cmd->callback(run([&] { return cmd_example_curves(curves_emit); }));

  auto* model = app.add_subcommand("model", "Hodge data models")->require_subcommand(1);
  int a_q = 0;
  std::string abelian_emit;
  auto* abelian_cmd = model->add_subcommand("abelian", "Abelian variety of dimension q");
  abelian_cmd->add_option("--q", a_q, "Dimension")->required()->check(CLI::Range(1, 12));
  abelian_cmd->add_option("--emit-datum", abelian_emit, "Write the datum JSON to FILE");
  abelian_cmd->callback(run([&] { return cmd_model_abelian(a_q, abelian_emit); }));

  auto* identity = app.add_subcommand("identity", "Binomial identities")->require_subcommand(1);
  int combin_max = 30;
  auto* combin_cmd = identity->add_subcommand("combin", "sum_n (-1)^{B-n} binom(A,n) binom(A+B-n-1,B-n) = [B=0]");
  combin_cmd->add_option("--max", combin_max, "Largest A and B")->capture_default_str();
  combin_cmd->callback(run([&] { return cmd_identity_combin(combin_max); }));

  int repro_trials = 20;
  int repro_q_max = 6;
  std::string fault;
  auto* repro_cmd = app.add_subcommand("repro", "Re-run every reproducible claim");
  repro_cmd->add_option("--trials", repro_trials, "Random W per battery cell")->capture_default_str()->check(CLI::Range(1, 100000));
  repro_cmd->add_option("--battery-q-max", repro_q_max, "Largest q in the exactness battery")->capture_default_str()->check(CLI::Range(2, 8));
  repro_cmd->add_option("--inject-fault", fault, "")->group("")->check(CLI::IsMember({"g2"}));
  repro_cmd->callback(run([&] { return cmd_repro(g, repro_trials, repro_q_max, fault); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "input data error: " << e.what() << "\n";
    return kExitData;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ComputationError& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  if (!result) return kExitUsage;
  if (g.json) g.format = "json";
  std::string rendered;
  if (g.format == "json") {
    rendered = result->json.dump(2) + "\n";
  } else if (g.format == "csv") {
    rendered = result->csv;
  } else {
    rendered = result->text;
  }
  if (g.out.empty()) {
    std::cout << rendered;
  } else {
    try {
      write_file(g.out, rendered);
    } catch (const DomainError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return result->exit;
}
