#pragma once

#include "mzv/rational.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/words.hpp"

namespace mzv {

struct EvalResult {
  double value = 0.0;
  double bound = 0.0;  // rigorous truncation bound; excludes float rounding
  long long terms = 0;
};

// Truncated series sum over N >= k_1 > ... > k_d >= 1, inner-to-outer prefix
// sums. Tail bound: sum_{k>N} (1+ln k)^{d-1} k^{-s_1} / (d-1)! , closed by one
// leading term plus the integral, requires (d-1)/s_1 < 1 + ln(N+1) so the
// integrand is decreasing past N.
EvalResult direct_nested_sum(const Composition& c, long long N);

// Partial iterated integral over [0,1/2] of A^{e_1}B...A^{e_d}B:
//   sum_{k_1>...>k_d>=1} 2^{-k_1} / (k_1^{e_1+1} ... k_d^{e_d+1}),
// truncated once the geometric tail majorant sum_{k>N} k^{d-1} 2^{-k} drops
// below target_bound. Empty word evaluates to exactly 1 with bound 0.
EvalResult polylog_half(const Word& w, double target_bound);

// zeta of an admissible word by splitting the integration path at 1/2:
//   zeta(w) = sum_j polylog_half(w_{j+1..}) * polylog_half(tau_reverse(w_{..j})).
EvalResult zeta_word(const Word& w, double target_bound);

// Linear extension; per-word budget is target_bound / total coefficient mass.
// Every word with a nonzero coefficient must be admissible.
EvalResult zeta_poly(const WordPolynomial& P, double target_bound);

// Sum of all words encoding an interleaving of the argument string (2,...,2)
// (m twos) with the fixed string (3,1,3,1,...) (n pairs, internal order kept):
// binom(m+2n, m) distinct admissible words, coefficient 1 each.
WordPolynomial interleaving_words(long long m, long long n);

// zeta of the interleaving sum for ({2}^m, {3,1}^n). This is the object the
// closed form describes; the word-level shuffle of the two encodings is a
// different polynomial whose zeta value factors into a product.
EvalResult theorem_lhs(long long m, long long n, double target_bound);

// binom(2n+m, m) / ((2n+1) (4n+2m+1)!), the closed-form value over pi^{4n+2m}.
BigRat theorem_rhs_rational(long long m, long long n);
double theorem_rhs(long long m, long long n);

struct XReport {
  long long n = 0;
  long long j = 0;
  Parity parity = Parity::odd;
  EvalResult lhs;  // integral of the T-sum
  EvalResult rhs;  // zeta of interleaving_words(2j-1 or 2j, n-j)
  bool words_equal = false;  // T-sum == word-level shuffle of the encodings
  double diff = 0.0;
};

// Value-level comparison of the T-sum integral with the interleaving zeta
// value. words_equal compares the T-sum against the word-level shuffle
// of (AB)^{2j-1 or 2j} with (AABB)^{n-j}; that polynomial contains words
// with triple-A runs once both factors are nonempty, so the value identity
// is not word-by-word.
XReport x_identity_check(long long n, long long j, Parity parity, double target_bound);

}  // namespace mzv
