#include "mzv/shuffle.hpp"

#include "mzv/identities.hpp"

#include <stdexcept>

namespace mzv {

WordPolynomial WordPolynomial::monomial(const Word& w, BigInt coeff) {
  WordPolynomial p;
  p.add_term(w, coeff);
  return p;
}

void WordPolynomial::add_term(const Word& w, const BigInt& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

WordPolynomial WordPolynomial::operator+(const WordPolynomial& other) const {
  WordPolynomial r = *this;
  r += other;
  return r;
}

WordPolynomial WordPolynomial::operator-(const WordPolynomial& other) const {
  WordPolynomial r = *this;
  for (const auto& [w, c] : other.terms_) r.add_term(w, -c);
  return r;
}

WordPolynomial WordPolynomial::scaled(const BigInt& factor) const {
  WordPolynomial r;
  if (factor == 0) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * factor);
  return r;
}

BigInt WordPolynomial::mass() const {
  BigInt m = 0;
  for (const auto& [w, c] : terms_) m += abs(c);
  return m;
}

std::string WordPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += ' ';
    s += (c < 0) ? "-" : "+";
    s += BigInt(abs(c)).str();
    s += "\xC2\xB7";  // U+00B7
    s += w.str();
  }
  return s;
}

namespace {

using ShuffleCache = std::map<std::pair<std::string, std::string>, WordPolynomial>;

const WordPolynomial& shuffle_rec(const Word& u, const Word& v, ShuffleCache& cache) {
  auto key = std::make_pair(u.letters(), v.letters());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  WordPolynomial result;
  if (u.empty()) {
    result = WordPolynomial::monomial(v);
  } else if (v.empty()) {
    result = WordPolynomial::monomial(u);
  } else {
    for (const auto& [w, c] : shuffle_rec(u.suffix_from(1), v, cache).terms()) {
      result.add_term(w.prepend(u.at(0)), c);
    }
    for (const auto& [w, c] : shuffle_rec(u, v.suffix_from(1), cache).terms()) {
      result.add_term(w.prepend(v.at(0)), c);
    }
  }
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

const Word kAB = Word::from_string("AB");

}  // namespace

WordPolynomial shuffle(const Word& u, const Word& v) {
  ShuffleCache cache;
  return shuffle_rec(u, v, cache);
}

WordPolynomial shuffle_poly(const WordPolynomial& P, const WordPolynomial& Q) {
  WordPolynomial r;
  ShuffleCache cache;
  for (const auto& [u, cu] : P.terms()) {
    for (const auto& [v, cv] : Q.terms()) {
      for (const auto& [w, c] : shuffle_rec(u, v, cache).terms()) {
        r.add_term(w, c * cu * cv);
      }
    }
  }
  return r;
}

WordPolynomial t_sum(long long p, long long q, long long j) {
  if (p < 0 || q < 0 || j < 0) throw std::invalid_argument("t_sum: indices must be nonnegative");
  if (j > std::min(p, q)) throw std::invalid_argument("t_sum: j must be <= min(p,q)");
  WordPolynomial r;
  WordPolynomial full = shuffle(word_pow(kAB, p), word_pow(kAB, q));
  for (const auto& [w, c] : full.terms()) {
    if (count_double_A(w) == j) r.add_term(w, 1);
  }
  return r;
}

CheckResult lemma2_check(long long p, long long q) {
  WordPolynomial lhs = shuffle(word_pow(kAB, p), word_pow(kAB, q));
  WordPolynomial rhs;
  for (long long j = 0; j <= std::min(p, q); ++j) {
    rhs += t_sum(p, q, j).scaled(binom(p + q - 2 * j, p - j) * pow_int(4, static_cast<unsigned long long>(j)));
  }
  if (lhs == rhs) {
    return {true, "terms=" + std::to_string(lhs.term_count())};
  }
  WordPolynomial diff = lhs - rhs;
  const auto& [w, c] = *diff.terms().begin();
  return {false, "first differing term " + w.str() + " off by " + c.str()};
}

std::pair<WordPolynomial, WordPolynomial> lemma3_sides(Parity parity, long long m, long long n) {
  if (m < 1 || m > n) throw std::invalid_argument("lemma3_sides: requires 1 <= m <= n");
  WordPolynomial lhs, rhs;
  if (parity == Parity::odd) {
    for (long long k = 1 - n; k <= n; ++k) {
      if (k == 0) continue;
      BigInt coeff = sign_pow(k) * pow_int(BigInt(k), static_cast<unsigned long long>(2 * m - 1));
      lhs += shuffle(word_pow(kAB, n - k), word_pow(kAB, n - 1 + k)).scaled(coeff);
    }
    for (long long j = 1; j <= m; ++j) {
      BigRat a = a_coeff(Parity::odd, m, j);
      BigInt coeff = numerator(a) * pow_int(4, static_cast<unsigned long long>(n - j));
      rhs += t_sum(n, n - 1, n - j).scaled(coeff);
    }
  } else {
    for (long long k = -n; k <= n; ++k) {
      if (k == 0) continue;
      BigInt coeff = sign_pow(k) * pow_int(BigInt(k), static_cast<unsigned long long>(2 * m));
      lhs += shuffle(word_pow(kAB, n - k), word_pow(kAB, n + k)).scaled(coeff);
    }
    for (long long j = 1; j <= m; ++j) {
      BigRat a = a_coeff(Parity::even, m, j);
      BigInt coeff = numerator(a) * pow_int(4, static_cast<unsigned long long>(n - j));
      rhs += t_sum(n, n, n - j).scaled(coeff);
    }
  }
  return {lhs, rhs};
}

}  // namespace mzv
