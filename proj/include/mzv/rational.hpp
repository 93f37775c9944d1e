#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// n! with a process-wide cache; thread-compatible (callers in tests are single-threaded,
// concurrent use requires external synchronization of the first growth).
const BigInt& factorial(long long n);

// Classical binomial C(n,k) for n >= 0; zero outside 0 <= k <= n.
BigInt binom(long long n, long long k);

// Generalized binomial: 0 for b < 0, otherwise the falling factorial
// a(a-1)...(a-b+1)/b!, valid for any integer a (negative included).
// Always an integer. Not symmetric under b -> a-b when a < 0.
BigInt gen_binom(long long a, long long b);

// base^e for e >= 0.
BigInt pow_int(const BigInt& base, unsigned long long e);

// 4^e with e possibly negative (exact rational).
BigRat pow4(long long e);

// (-1)^k for any integer k.
inline int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

std::string to_decimal(const BigRat& r);   // "p/q", or "p" when q == 1
std::string to_decimal(const BigInt& z);

}  // namespace mzv
