#include "mzv/numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mzv {

namespace {

double to_double(const BigInt& z) { return z.convert_to<double>(); }
double to_double(const BigRat& r) { return r.convert_to<double>(); }

std::vector<long long> exponents_with_leading_b(const Word& w) {
  // s_i - 1 per block; a leading B gives e_1 = 0.
  Composition c = composition_from_word(w);
  std::vector<long long> e;
  e.reserve(c.size());
  for (long long s : c) e.push_back(s - 1);
  return e;
}

}  // namespace

EvalResult direct_nested_sum(const Composition& c, long long N) {
  if (c.empty()) throw std::invalid_argument("direct_nested_sum: empty composition");
  for (long long s : c) {
    if (s < 1) throw std::invalid_argument("direct_nested_sum: parts must be >= 1");
  }
  if (c.front() < 2) throw std::invalid_argument("direct_nested_sum: divergent (s_1 = 1)");
  if (N < 1) throw std::invalid_argument("direct_nested_sum: N must be positive");
  const long long d = static_cast<long long>(c.size());
  const double s1 = static_cast<double>(c.front());
  const double a = std::log(static_cast<double>(N + 1));
  if (static_cast<double>(d - 1) / s1 >= 1.0 + a) {
    throw std::invalid_argument("direct_nested_sum: N too small for the stated tail bound");
  }

  // prefix[k] = sum over tuples k > k_i > ... > k_d >= 1 of the inner parts
  std::vector<double> prefix(static_cast<std::size_t>(N) + 1, 1.0);
  long long terms = 0;
  for (long long i = d - 1; i >= 1; --i) {
    double run = 0.0;
    std::vector<double> next(static_cast<std::size_t>(N) + 1, 0.0);
    for (long long k = 1; k <= N; ++k) {
      run += std::pow(static_cast<double>(k), -static_cast<double>(c[static_cast<std::size_t>(i)])) *
             prefix[static_cast<std::size_t>(k) - 1];
      next[static_cast<std::size_t>(k)] = run;
      ++terms;
    }
    prefix = std::move(next);
  }
  double value = 0.0;
  for (long long k = 1; k <= N; ++k) {
    value += std::pow(static_cast<double>(k), -s1) * prefix[static_cast<std::size_t>(k) - 1];
    ++terms;
  }

  const double lambda = s1 - 1.0;
  double integral = 0.0;
  double fact = 1.0;
  for (long long i = 0; i <= d - 1; ++i) {
    if (i > 0) fact *= static_cast<double>(i);
    integral += to_double(binom(d - 1, i)) * std::pow(1.0 + a, static_cast<double>(d - 1 - i)) *
                fact / std::pow(lambda, static_cast<double>(i) + 1.0);
  }
  integral *= std::pow(static_cast<double>(N + 1), 1.0 - s1);
  const double lead = std::pow(1.0 + a, static_cast<double>(d - 1)) *
                      std::pow(static_cast<double>(N + 1), -s1);
  double dfact = 1.0;
  for (long long i = 2; i <= d - 1; ++i) dfact *= static_cast<double>(i);
  return {value, (lead + integral) / dfact, terms};
}

namespace {

// Tail majorant sum_{k>N} k^{d-1} 2^{-k} <= (N+1)^{d-1} 2^{-(N+1)} / (1-r),
// r = ((N+2)/(N+1))^{d-1} / 2; valid (r < 1) for every N this loop visits.
double polylog_tail(long long N, long long d) {
  const double x = static_cast<double>(N + 1);
  const double r = std::pow((x + 1.0) / x, static_cast<double>(d - 1)) / 2.0;
  if (r >= 1.0) return HUGE_VAL;
  return std::pow(x, static_cast<double>(d - 1)) * std::exp2(-x) / (1.0 - r);
}

EvalResult polylog_half_uncached(const Word& w, double target_bound) {
  const auto e = exponents_with_leading_b(w);
  const long long d = static_cast<long long>(e.size());
  long long N = 20;
  while (polylog_tail(N, d) >= target_bound) ++N;
  const double bound = polylog_tail(N, d);

  std::vector<double> prefix(static_cast<std::size_t>(N) + 1, 1.0);
  long long terms = 0;
  for (long long i = d - 1; i >= 1; --i) {
    double run = 0.0;
    std::vector<double> next(static_cast<std::size_t>(N) + 1, 0.0);
    for (long long k = 1; k <= N; ++k) {
      run += std::pow(static_cast<double>(k), -static_cast<double>(e[static_cast<std::size_t>(i)] + 1)) *
             prefix[static_cast<std::size_t>(k) - 1];
      next[static_cast<std::size_t>(k)] = run;
      ++terms;
    }
    prefix = std::move(next);
  }
  double value = 0.0;
  for (long long k = 1; k <= N; ++k) {
    value += std::exp2(-static_cast<double>(k)) *
             std::pow(static_cast<double>(k), -static_cast<double>(e[0] + 1)) *
             prefix[static_cast<std::size_t>(k) - 1];
    ++terms;
  }
  return {value, bound, terms};
}

std::mutex polylog_cache_mutex;
std::map<std::pair<std::string, double>, EvalResult> polylog_cache;

}  // namespace

EvalResult polylog_half(const Word& w, double target_bound) {
  if (!(target_bound > 0.0)) throw std::invalid_argument("polylog_half: target bound must be positive");
  if (w.empty()) return {1.0, 0.0, 0};
  if (w.at(w.size() - 1) != 'B') throw std::invalid_argument("polylog_half: word must end in B");
  const auto key = std::make_pair(w.letters(), target_bound);
  {
    std::lock_guard<std::mutex> lock(polylog_cache_mutex);
    if (auto it = polylog_cache.find(key); it != polylog_cache.end()) return it->second;
  }
  EvalResult r = polylog_half_uncached(w, target_bound);
  std::lock_guard<std::mutex> lock(polylog_cache_mutex);
  return polylog_cache.emplace(key, r).first->second;
}

EvalResult zeta_word(const Word& w, double target_bound) {
  if (!(target_bound > 0.0)) throw std::invalid_argument("zeta_word: target bound must be positive");
  if (!w.admissible()) throw std::invalid_argument("zeta_word: word must start with A and end with B");
  const std::size_t len = w.size();
  const double piece = target_bound / static_cast<double>(len + 1);
  EvalResult total;
  for (std::size_t j = 0; j <= len; ++j) {
    const Word right = w.suffix_from(j);
    const Word left = tau_reverse(w.prefix(j));
    EvalResult e1 = polylog_half(right, piece / 3.0);
    EvalResult e2 = polylog_half(left, piece / 3.0);
    double pb = e1.bound * std::abs(e2.value) + std::abs(e1.value) * e2.bound + e1.bound * e2.bound;
    if (pb > piece) {
      const double tighter = piece / (3.0 * (1.0 + std::abs(e1.value) + std::abs(e2.value)));
      e1 = polylog_half(right, tighter);
      e2 = polylog_half(left, tighter);
      pb = e1.bound * std::abs(e2.value) + std::abs(e1.value) * e2.bound + e1.bound * e2.bound;
    }
    total.value += e1.value * e2.value;
    total.bound += pb;
    total.terms += e1.terms + e2.terms;
  }
  return total;
}

EvalResult zeta_poly(const WordPolynomial& P, double target_bound) {
  if (!(target_bound > 0.0)) throw std::invalid_argument("zeta_poly: target bound must be positive");
  for (const auto& [w, c] : P.terms()) {
    if (!w.admissible()) {
      throw std::invalid_argument("zeta_poly: non-admissible word " + w.str());
    }
  }
  if (P.is_zero()) return {0.0, 0.0, 0};
  const double mass = to_double(P.mass());
  const double per_word = target_bound / mass;
  EvalResult total;
  for (const auto& [w, c] : P.terms()) {
    EvalResult e = zeta_word(w, per_word);
    const double cd = to_double(c);
    total.value += cd * e.value;
    total.bound += std::abs(cd) * e.bound;
    total.terms += e.terms;
  }
  return total;
}

namespace {

// Distribute `remaining` twos into the gaps around the rest of the fixed
// (3,1)-string; `slot` counts emitted fixed parts, 2n in total.
void place_twos(long long slot, long long pairs2, long long remaining,
                Composition& parts, WordPolynomial& out) {
  if (slot == pairs2) {
    Composition c = parts;
    c.insert(c.end(), remaining, 2);
    out.add_term(word_from_composition(c), 1);
    return;
  }
  const std::size_t mark = parts.size();
  for (long long k = 0; k <= remaining; ++k) {
    parts.resize(mark);
    parts.insert(parts.end(), k, 2);
    parts.push_back(slot % 2 == 0 ? 3 : 1);
    place_twos(slot + 1, pairs2, remaining - k, parts, out);
  }
  parts.resize(mark);
}

}  // namespace

WordPolynomial interleaving_words(long long m, long long n) {
  if (m < 0 || n < 0 || m + n < 1)
    throw std::invalid_argument("interleaving_words: need m+n >= 1, m,n >= 0");
  WordPolynomial out;
  Composition parts;
  place_twos(0, 2 * n, m, parts, out);
  return out;
}

EvalResult theorem_lhs(long long m, long long n, double target_bound) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("theorem_lhs: need m+n >= 1, m,n >= 0");
  return zeta_poly(interleaving_words(m, n), target_bound);
}

BigRat theorem_rhs_rational(long long m, long long n) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("theorem_rhs: need m+n >= 1, m,n >= 0");
  return BigRat(binom(2 * n + m, m), BigInt(2 * n + 1) * factorial(4 * n + 2 * m + 1));
}

double theorem_rhs(long long m, long long n) {
  return to_double(theorem_rhs_rational(m, n)) *
         std::pow(std::numbers::pi, static_cast<double>(4 * n + 2 * m));
}

XReport x_identity_check(long long n, long long j, Parity parity, double target_bound) {
  if (n < 1 || j < 1 || j > n) throw std::invalid_argument("x_identity_check: need 1 <= j <= n");
  XReport rep;
  rep.n = n;
  rep.j = j;
  rep.parity = parity;
  const Word two = Word::from_string("AB");
  const Word threeone = Word::from_string("AABB");
  WordPolynomial t = (parity == Parity::odd) ? t_sum(n, n - 1, n - j) : t_sum(n, n, n - j);
  const long long reps = (parity == Parity::odd) ? 2 * j - 1 : 2 * j;
  WordPolynomial s = shuffle(word_pow(two, reps), word_pow(threeone, n - j));
  rep.words_equal = (t == s);
  rep.lhs = zeta_poly(t, target_bound);
  rep.rhs = theorem_lhs(reps, n - j, target_bound);
  rep.diff = std::abs(rep.lhs.value - rep.rhs.value);
  return rep;
}

}  // namespace mzv
