#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "bggx/errors.hpp"

namespace bggx {

// Expression templates are disabled: `auto x = a * b` must be a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) {
    throw DomainError("zero denominator");
  }
  return Rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& x) { return x == 0; }

inline Integer numerator_of(const Rational& x) {
  return boost::multiprecision::numerator(x);
}

inline Integer denominator_of(const Rational& x) {
  return boost::multiprecision::denominator(x);
}

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

/// Numerator and denominator as machine integers, without allocating; false
/// if either does not fit.
inline bool small_parts(const Rational& x, long& num, unsigned long& den) {
  const auto* q = x.backend().data();
  if (!mpz_fits_slong_p(mpq_numref(q)) || !mpz_fits_ulong_p(mpq_denref(q))) return false;
  num = mpz_get_si(mpq_numref(q));
  den = mpz_get_ui(mpq_denref(q));
  return true;
}

/// "p" for integers, "p/q" otherwise; always in lowest terms.
inline std::string to_string(const Rational& x) {
  std::string s = numerator_of(x).str();
  if (!is_integer(x)) {
    s += '/';
    s += denominator_of(x).str();
  }
  return s;
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    return Rational(to_int(text));
  }
  auto num = trim(text.substr(0, slash));
  auto den = trim(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  Integer d = to_int(den);
  if (d == 0) {
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(to_int(num), d);
}

/// Binomial coefficient extended to negative upper index:
/// binom(n, k) = n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0.
inline Integer binomial(long long n, long long k) {
  if (k < 0) return Integer(0);
  if (n >= 0 && k > n) return Integer(0);
  Integer result = 1;
  for (long long i = 0; i < k; ++i) {
    result *= Integer(n - i);
    result /= Integer(i + 1);
  }
  return result;
}

} // namespace bggx
