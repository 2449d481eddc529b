#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bggx/rational.hpp"

namespace bggx {

/// Multivariate polynomial in N formal symbols with exact rational
/// coefficients, stored in canonical sparse form (no zero coefficients).
template <std::size_t N>
class Polynomial {
public:
  using Exponents = std::array<int, N>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant) { // NOLINT(google-explicit-constructor)
    if (!bggx::is_zero(constant)) terms_[Exponents{}] = constant;
  }
  Polynomial(long long constant) : Polynomial(Rational(constant)) {} // NOLINT

  static Polynomial variable(std::size_t index) {
    Exponents e{};
    e.at(index) = 1;
    return monomial(e, Rational(1));
  }

  static Polynomial monomial(const Exponents& e, const Rational& c) {
    Polynomial p;
    if (!bggx::is_zero(c)) p.terms_[e] = c;
    return p;
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  [[nodiscard]] Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] int degree_in(std::size_t index) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
    return d;
  }

  [[nodiscard]] int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (bggx::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] Polynomial pow(unsigned n) const {
    Polynomial result(Rational(1));
    for (unsigned i = 0; i < n; ++i) result = result * *this;
    return result;
  }

  [[nodiscard]] Rational evaluate(const std::array<Rational, N>& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < N; ++i) {
        for (int p = 0; p < e[i]; ++p) term *= point[i];
      }
      sum += term;
    }
    return sum;
  }

  /// Substitute a constant for one symbol.
  [[nodiscard]] Polynomial substitute(std::size_t index, const Rational& value) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      Rational factor = c;
      for (int p = 0; p < e[index]; ++p) factor *= value;
      Exponents reduced = e;
      reduced[index] = 0;
      out.add_term(reduced, factor);
    }
    return out;
  }

  /// Canonical text: terms by decreasing total degree, then decreasing
  /// exponent vector; coefficients as "p" or "p/q".
  [[nodiscard]] std::string to_string(const std::array<std::string_view, N>& names) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      const int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
      const int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
      const bool negative = c < 0;
      const Rational magnitude = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string monomial;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (!monomial.empty()) monomial += '*';
        monomial += names[i];
        if (e[i] > 1) monomial += '^' + std::to_string(e[i]);
      }
      if (monomial.empty()) {
        out += bggx::to_string(magnitude);
      } else if (magnitude == 1) {
        out += monomial;
      } else {
        out += bggx::to_string(magnitude) + '*' + monomial;
      }
    }
    return out;
  }

private:
  void add_term(const Exponents& e, const Rational& c) {
    if (bggx::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (bggx::is_zero(it->second)) terms_.erase(it);
    }
  }

  TermMap terms_;
};

template <std::size_t N>
bool is_zero(const Polynomial<N>& p) {
  return p.is_zero();
}

/// Coefficient ring for the symbolic Chern computations: polynomials in
/// h = h^{2,0} and q = irregularity.
using CoefPoly = Polynomial<2>;

inline constexpr std::size_t kSymH = 0;
inline constexpr std::size_t kSymQ = 1;

inline CoefPoly sym_h() { return CoefPoly::variable(kSymH); }
inline CoefPoly sym_q() { return CoefPoly::variable(kSymQ); }

inline std::string to_string(const CoefPoly& p) { return p.to_string({"h", "q"}); }

inline Rational evaluate(const CoefPoly& p, const Rational& h, const Rational& q) {
  return p.evaluate({h, q});
}

/// Exact coefficient rings usable in Schubert expressions.
template <class C>
concept Coefficient = requires(C a, const C& b, const Rational& r) {
  C{};
  C{Rational(1)};
  { a += b };
  { a -= b };
  { b * b } -> std::convertible_to<C>;
  { b * r } -> std::convertible_to<C>;
  { is_zero(b) } -> std::same_as<bool>;
  { b == b } -> std::convertible_to<bool>;
};

} // namespace bggx
