#include "mzv/rational.hpp"

#include <deque>

namespace mzv {

const BigInt& factorial(long long n) {
  // Deque, not vector: callers may hold several returned references inside one
  // expression, so growth must not relocate existing elements.
  static std::deque<BigInt> cache{BigInt(1)};
  if (n < 0) throw std::domain_error("factorial of negative integer");
  while (static_cast<long long>(cache.size()) <= n) {
    cache.push_back(cache.back() * static_cast<long long>(cache.size()));
  }
  return cache[static_cast<std::size_t>(n)];
}

BigInt binom(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt gen_binom(long long a, long long b) {
  if (b < 0) return 0;
  BigInt num = 1;
  for (long long i = 0; i < b; ++i) num *= (a - i);
  BigInt q, r;
  boost::multiprecision::divide_qr(num, factorial(b), q, r);
  if (r != 0) throw std::logic_error("gen_binom: falling factorial not divisible by b!");
  return q;
}

BigInt pow_int(const BigInt& base, unsigned long long e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigRat pow4(long long e) {
  if (e >= 0) return BigRat(pow_int(4, static_cast<unsigned long long>(e)));
  return BigRat(1, pow_int(4, static_cast<unsigned long long>(-e)));
}

std::string to_decimal(const BigRat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal(const BigInt& z) { return z.str(); }

}  // namespace mzv
