#pragma once

#include "mzv/rational.hpp"
#include "mzv/words.hpp"

#include <map>
#include <string>
#include <utility>

namespace mzv {

// Formal integer-linear combination of words. No zero coefficients are stored;
// iteration order is the canonical word order, so serialization is deterministic.
class WordPolynomial {
 public:
  using Terms = std::map<Word, BigInt>;

  WordPolynomial() = default;
  static WordPolynomial monomial(const Word& w, BigInt coeff = 1);

  void add_term(const Word& w, const BigInt& coeff);
  WordPolynomial& operator+=(const WordPolynomial& other);
  WordPolynomial operator+(const WordPolynomial& other) const;
  WordPolynomial operator-(const WordPolynomial& other) const;
  WordPolynomial scaled(const BigInt& factor) const;

  bool operator==(const WordPolynomial& other) const = default;

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Sum of |coefficients|.
  BigInt mass() const;

  // "+2·ABAB +4·AABB" in canonical order; "0" when empty.
  std::string str() const;

 private:
  Terms terms_;
};

// All order-preserving interleavings of u and v, with multiplicity.
// Recursive with memoization on suffix pairs; commutative and, extended
// bilinearly, associative. Total mass is binomial(|u|+|v|, |u|).
WordPolynomial shuffle(const Word& u, const Word& v);

// Bilinear extension.
WordPolynomial shuffle_poly(const WordPolynomial& P, const WordPolynomial& Q);

// Sum, coefficient 1 each, of the distinct words of (AB)^p shuffle (AB)^q
// whose AA-factor count is exactly j. Requires j <= min(p,q).
WordPolynomial t_sum(long long p, long long q, long long j);

struct CheckResult {
  bool ok = false;
  std::string detail;
};

// (AB)^p shuffle (AB)^q == sum_j binom(p+q-2j, p-j) * 4^j * t_sum(p,q,j),
// exact WordPolynomial equality. The detail names the first differing term
// on failure and carries term counts on success.
CheckResult lemma2_check(long long p, long long q);

enum class Parity { odd, even };

// Word-level identity sides. parity = odd:
//   lhs = sum_{k=1-n}^{n} (-1)^k k^{2m-1} (AB)^{n-k} shuffle (AB)^{n-1+k}
//   rhs = sum_{j=1}^{m} 4^{n-j} a_{2m-1,j} T_{2n-1,n-j}
// parity = even uses k^{2m}, (AB)^{n-k} shuffle (AB)^{n+k}, T_{2n,n-j}, a_{2m,j}.
// The factor 4^{n-j} is applied inside the j-sum. Requires 1 <= m <= n.
std::pair<WordPolynomial, WordPolynomial> lemma3_sides(Parity parity, long long m, long long n);

}  // namespace mzv
