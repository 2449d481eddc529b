#pragma once

// Closed-form Hodge-number inequalities and the binomial identities behind
// them. Geometric hypotheses (existence of a non-degenerate subspace, no
// higher irrational pencil, ...) cannot be decided from numbers, so each
// evaluator only reports whether the numeric side conditions hold.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bggx/errors.hpp"
#include "bggx/rational.hpp"

namespace bggx {

/// An integer-valued bound with its numeric applicability.
struct BoundValue {
  Integer value;
  bool applicable = true;

  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

/// sum_{n=0}^{min(A,B)} (-1)^{B-n} binom(A,n) binom(A+B-n-1, B-n); equals [B = 0].
inline Integer combin_identity(long long A, long long B) {
  if (A < 0 || B < 0) throw DomainError("combin_identity needs A, B >= 0");
  Integer sum = 0;
  for (long long n = 0; n <= std::min(A, B); ++n) {
    Integer term = binomial(A, n) * binomial(A + B - n - 1, B - n);
    sum += ((B - n) % 2) ? Integer(-term) : term;
  }
  return sum;
}

/// sum_{i=0}^p (-1)^{p-i} binom(r-i+k-1, k-1) h[i].
inline Integer alternating_sum(const std::vector<Integer>& hrow, long long r, long long k, long long p) {
  if (p < 0 || static_cast<std::size_t>(p) >= hrow.size()) {
    throw DomainError("alternating_sum needs 0 <= p < " + std::to_string(hrow.size()));
  }
  Integer sum = 0;
  for (long long i = 0; i <= p; ++i) {
    Integer term = binomial(r - i + k - 1, k - 1) * hrow[static_cast<std::size_t>(i)];
    sum += ((p - i) % 2) ? Integer(-term) : term;
  }
  return sum;
}

/// Whether the alternating sum is claimed non-negative: p <= min(d-k-j+1, r).
inline bool alternating_sum_applies(long long d, long long k, long long j, long long r, long long p) {
  return p >= 0 && p <= std::min(d - k - j + 1, r);
}

/// M_{p,j}: the alternating sum with r = p.
inline Integer alternating_m(const std::vector<Integer>& hrow, long long k, long long p) {
  return alternating_sum(hrow, p, k, p);
}

/// binom(k,p) binom(k,j); applicable when p, j <= k and (given d) p+j <= d-k+1.
inline BoundValue binom_bound(long long k, long long p, long long j, std::optional<long long> d = std::nullopt) {
  BoundValue b{binomial(k, p) * binomial(k, j), p <= k && j <= k};
  if (d) b.applicable = b.applicable && p + j <= *d - k + 1;
  return b;
}

/// binom(d+1-(p+j), p) binom(d+1-(p+j), j); applicable when max(p,j) <= d+1-(p+j).
inline BoundValue subvariety_bound(long long d, long long p, long long j) {
  const long long m = d + 1 - (p + j);
  return BoundValue{binomial(m, p) * binomial(m, j), std::max(p, j) <= m};
}

struct Thm11Bound {
  Integer piecewise;   // binom(q,2) if q <= 2d-1, else 2(d-1)q - binom(2d-1,2)
  Integer family_max;  // max over 0 <= k' < d of 2k'q - binom(2k'+1,2)
  long long best_k = 0;
};

inline Thm11Bound thm11_bound(long long d, long long q) {
  if (d < 1 || q < 0) throw DomainError("thm11_bound needs d >= 1, q >= 0");
  Thm11Bound out;
  out.piecewise = q <= 2 * d - 1 ? binomial(q, 2) : Integer(2 * (d - 1) * q) - binomial(2 * d - 1, 2);
  out.family_max = 0;  // k' = 0 gives the empty bound h >= 0
  for (long long kp = 1; kp < d; ++kp) {
    Integer v = Integer(2 * kp * q) - binomial(2 * kp + 1, 2);
    if (v > out.family_max) {
      out.family_max = v;
      out.best_k = kp;
    }
  }
  return out;
}

/// h >= q(k+1) - binom(k+2,2).
inline Integer c1_bound(long long q, long long k) { return Integer(q * (k + 1)) - binomial(k + 2, 2); }

/// h >= c1_bound + (sqrt(R) - 1)/2 with R = 8q - 8k - 15.
struct C2Bound {
  Integer base;       // c1_bound(q, k)
  Integer radicand;   // 8q - 8k - 15
  bool applicable = false;
  Integer min_h;      // smallest integer h satisfying the inequality (when applicable)

  [[nodiscard]] double approximate() const {
    return base.convert_to<double>() + 0.5 * (std::sqrt(radicand.convert_to<double>()) - 1.0);
  }

  [[nodiscard]] std::string to_string() const {
    return bggx::to_string(base) + " + (sqrt(" + bggx::to_string(radicand) + ") - 1)/2";
  }
};

inline C2Bound c2_bound(long long q, long long k) {
  C2Bound b;
  b.base = c1_bound(q, k);
  b.radicand = Integer(8 * q - 8 * k - 15);
  b.applicable = b.radicand >= 0;
  if (b.applicable) {
    // h - base = m must satisfy 2m + 1 >= sqrt(R), i.e. (2m+1)^2 >= R with m >= 0
    long long m = 0;
    while (Integer((2 * m + 1) * (2 * m + 1)) < b.radicand) ++m;
    b.min_h = b.base + m;
  }
  return b;
}

/// (k+1)/2 q - (k+2)(k+1)/6.
inline Rational truncation_bound(long long q, long long k) {
  return make_rational((k + 1) * q, 2) - make_rational((k + 2) * (k + 1), 6);
}

/// kq - binom(k+1,2), the bound obtained from c_1 of the rank-k piece alone.
inline Integer linear_bound(long long q, long long k) { return Integer(k * q) - binomial(k + 1, 2); }

/// 2kq - (k^2 + binom(k+1,2)). Conditional: only valid if the top Chern class
/// of F is non-zero, which the computed Chern classes contradict for k = 2, 3, 4.
struct ConditionalBound {
  Integer value;
  bool conditional = true;
};

inline ConditionalBound hypothetical_top_chern_bound(long long q, long long k) {
  return ConditionalBound{Integer(2 * k * q) - (Integer(k * k) + binomial(k + 1, 2)), true};
}

struct RankBound {
  Integer rank;     // lower bound for rk F
  Integer h_bound;  // rank + kq - binom(k+1,2)
};

/// rk F >= binom(q-k,2) (q <= 2k) or k(2q-3k-1)/2 (q >= 2k).
inline RankBound conjecture_rank_bound(long long q, long long k) {
  if (k < 1 || q <= k) throw DomainError("rank bound needs 1 <= k < q");
  RankBound b;
  b.rank = q <= 2 * k ? binomial(q - k, 2) : Integer(k * (2 * q - 3 * k - 1) / 2);
  b.h_bound = b.rank + linear_bound(q, k);
  return b;
}

/// Castelnuovo-de Franchis type inequality p_g <= 2q - 4; a hypothesis that
/// forces a fibration, not a bound.
inline bool cdf_inequality_holds(long long pg, long long q) { return pg <= 2 * q - 4; }

} // namespace bggx
