#pragma once

// JSON and CSV forms of the library types. Coefficients are exact strings
// ("p/q" for rationals, canonical polynomial strings for CoefPoly); key order
// is fixed so repeated runs give byte-identical output.

#include "json.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bggx/bgg_classes.hpp"
#include "bggx/bounds.hpp"
#include "bggx/chern_series.hpp"
#include "bggx/derivative_complex.hpp"
#include "bggx/errors.hpp"
#include "bggx/hodge_datum.hpp"
#include "bggx/partition.hpp"
#include "bggx/polynomial.hpp"
#include "bggx/rational.hpp"
#include "bggx/schur_ring.hpp"
#include "bggx/sym_power.hpp"

namespace bggx {

using Json = nlohmann::ordered_json;

inline std::string coefficient_string(const Rational& x) { return to_string(x); }
inline std::string coefficient_string(const CoefPoly& p) { return to_string(p); }

inline Json to_json(const Partition& p) { return Json(p.vector()); }

inline Json to_json(const GrassmannianContext& ctx) {
  Json j;
  j["k"] = ctx.k();
  if (ctx.is_stable()) {
    j["stable"] = true;
  } else {
    j["q"] = ctx.q();
  }
  return j;
}

template <Coefficient C>
Json to_json(const SchubertExpr<C>& e) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : e.terms()) {
    terms.push_back(Json{{"partition", to_json(lambda)}, {"coeff", coefficient_string(c)}});
  }
  return Json{{"context", to_json(e.context())}, {"terms", std::move(terms)}};
}

/// Degree-indexed array of SchubertExpr objects.
template <Coefficient C>
Json to_json(const GradedSeries<C>& s) {
  Json out = Json::array();
  for (int d = 0; d <= s.max_degree(); ++d) out.push_back(to_json(s.component(d)));
  return out;
}

inline Json to_json(const SymChernTable& t) {
  Json entries = Json::array();
  for (const auto& level : t.entries) {
    Json row = Json::array();
    for (const auto& [mono, c] : level) row.push_back(Json{{"monomial", mono}, {"coeff", to_string(c)}});
    entries.push_back(std::move(row));
  }
  return Json{{"rank", t.rank}, {"power", t.power}, {"max_degree", t.max_degree}, {"entries", std::move(entries)}};
}

inline Json to_json(const ConjectureReport& r) {
  Json offending = Json::array();
  for (const auto& [lambda, c] : r.offending) offending.push_back(Json{{"partition", to_json(lambda)}, {"coeff", to_string(c)}});
  return Json{{"k", r.k},
              {"q", r.q},
              {"mu", to_json(r.mu)},
              {"mu_coefficient", to_string(r.mu_coefficient)},
              {"above_mu_all_zero", r.above_mu_all_zero},
              {"checked_above_mu", r.checked},
              {"offending", std::move(offending)},
              {"codim_mu", r.codim_mu},
              {"rank_lower_bound", to_string(r.rank_lower_bound)},
              {"boundary", r.boundary},
              {"status", to_string(r.status)}};
}

inline Json to_json(const GCoeffs& g) {
  Json terms = Json::array();
  for (const auto& [lambda, p] : g.g) terms.push_back(Json{{"partition", to_json(lambda)}, {"g", to_string(p)}});
  return Json{{"k", g.k}, {"max_degree", g.max_degree}, {"valid_for", g.validity()}, {"coefficients", std::move(terms)}};
}

inline Json to_json(const E2Table& t) {
  return Json{{"r", t.r}, {"d", t.d}, {"n", t.n}, {"e", t.e}, {"hyper", t.hyper}, {"term_dims", t.term_dims}};
}

inline Json to_json(const HodgeDatum& datum) {
  Json action = Json::array();
  for (const auto& [key, m] : datum.stored_actions()) {
    const auto [a, i, j] = key;
    Json rows = Json::array();
    for (const auto& row : m.to_dense()) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      rows.push_back(std::move(r));
    }
    action.push_back(Json{{"a", a + 1}, {"i", i}, {"j", j}, {"matrix", std::move(rows)}});
  }
  Json out{{"d", datum.d()}, {"q", datum.q()}, {"dims", datum.dims()}, {"action", std::move(action)}};
  if (!datum.metadata.empty()) {
    Json meta = Json::object();
    for (const auto& [key, value] : datum.metadata) meta[key] = value;
    out["metadata"] = std::move(meta);
  }
  return out;
}

namespace detail {

inline const Json& require(const Json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key)) throw DataError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

inline long long require_int(const Json& j, const char* key, std::string_view what) {
  const Json& v = require(j, key, what);
  if (!v.is_number_integer()) throw DataError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<long long>();
}

inline Rational json_rational(const Json& v, std::string_view what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw DataError(std::string(what) + ": expected a rational string, got " + v.dump());
  try {
    return parse_rational(v.get<std::string>());
  } catch (const DomainError& e) {
    throw DataError(std::string(what) + ": " + e.what());
  }
}

inline std::vector<std::vector<std::size_t>> json_dims(const Json& v, std::string_view what) {
  if (!v.is_array()) throw DataError(std::string(what) + ": dims must be an array of rows");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : v) {
    if (!row.is_array()) throw DataError(std::string(what) + ": dims must be an array of rows");
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw DataError(std::string(what) + ": dims entries must be non-negative integers");
      r.push_back(x.get<std::size_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace detail

inline SchubertExpr<Rational> schubert_expr_from_json(const Json& j) {
  const Json& ctx_json = detail::require(j, "context", "SchubertExpr");
  const auto k = detail::require_int(ctx_json, "k", "context");
  const bool stable = ctx_json.value("stable", false);
  if (k < 1) throw DataError("context: k must be positive");
  GrassmannianContext ctx = GrassmannianContext::stable(static_cast<int>(k));
  if (!stable) {
    const auto q = detail::require_int(ctx_json, "q", "context");
    if (q < k) throw DataError("context: q must be at least k");
    ctx = GrassmannianContext::concrete(static_cast<int>(k), static_cast<int>(q));
  }
  SchubertExpr<Rational> e(ctx);
  const Json& terms = detail::require(j, "terms", "SchubertExpr");
  if (!terms.is_array()) throw DataError("SchubertExpr: terms must be an array");
  for (const auto& t : terms) {
    const Json& parts = detail::require(t, "partition", "term");
    std::vector<int> p;
    if (!parts.is_array()) throw DataError("term: partition must be an array");
    for (const auto& x : parts) {
      if (!x.is_number_integer()) throw DataError("term: partition parts must be integers");
      p.push_back(x.get<int>());
    }
    try {
      Partition lambda(std::move(p));
      e += SchubertExpr<Rational>::schubert_class(ctx, lambda, detail::json_rational(detail::require(t, "coeff", "term"), "term"));
    } catch (const DomainError& err) {
      throw DataError(std::string("term: ") + err.what());
    }
  }
  return e;
}

inline HodgeDatum hodge_datum_from_json(const Json& j) {
  const auto d = detail::require_int(j, "d", "datum");
  const auto q = detail::require_int(j, "q", "datum");
  HodgeDatum datum(static_cast<int>(d), static_cast<int>(q), detail::json_dims(detail::require(j, "dims", "datum"), "datum"));
  if (j.contains("action")) {
    const Json& action = j.at("action");
    if (!action.is_array()) throw DataError("datum: action must be an array");
    for (const auto& entry : action) {
      const auto a = detail::require_int(entry, "a", "action");
      const auto i = detail::require_int(entry, "i", "action");
      const auto jj = detail::require_int(entry, "j", "action");
      const std::string where = "action a=" + std::to_string(a) + ", i=" + std::to_string(i) + ", j=" + std::to_string(jj);
      const Json& rows = detail::require(entry, "matrix", where);
      if (!rows.is_array()) throw DataError(where + ": matrix must be an array of rows");
      std::vector<std::vector<Rational>> dense;
      for (const auto& row : rows) {
        if (!row.is_array()) throw DataError(where + ": matrix must be an array of rows");
        std::vector<Rational> r;
        for (const auto& x : row) r.push_back(detail::json_rational(x, where));
        dense.push_back(std::move(r));
      }
      const std::size_t cols = dense.empty() ? datum.dim(static_cast<int>(i), static_cast<int>(jj)) : dense[0].size();
      for (const auto& r : dense) {
        if (r.size() != cols) throw DataError(where + ": ragged matrix");
      }
      SparseMatrix m = SparseMatrix::from_dense(dense, cols);
      if (a < 1) throw DataError(where + ": a is 1-based");
      datum.set_action(static_cast<int>(a) - 1, static_cast<int>(i), static_cast<int>(jj), std::move(m));
    }
  }
  if (j.contains("metadata") && j.at("metadata").is_object()) {
    for (const auto& [key, value] : j.at("metadata").items()) {
      datum.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return datum;
}

/// Hodge numbers from {"dims": [[...]]} (a datum file works) or a bare array.
inline std::vector<std::vector<std::size_t>> hodge_table_from_json(const Json& j) {
  if (j.is_array()) return detail::json_dims(j, "hodge table");
  return detail::json_dims(detail::require(j, "dims", "hodge table"), "hodge table");
}

/// W from "1,0,0;0,1,0": rows are basis vectors in v_a coordinates.
inline SubspaceW parse_subspace(std::string_view text, int q) {
  std::vector<std::vector<Rational>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto semi = text.find(';', pos);
    const auto row_text = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    std::vector<Rational> row;
    std::size_t p = 0;
    while (p <= row_text.size()) {
      const auto comma = row_text.find(',', p);
      row.push_back(parse_rational(row_text.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p)));
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    if (static_cast<int>(row.size()) != q) {
      throw DomainError("W row has " + std::to_string(row.size()) + " coordinates, expected q=" + std::to_string(q));
    }
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return SubspaceW(std::move(rows));
}

/// Quotes a CSV field when needed.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

} // namespace bggx
