#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/numeric.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/words.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace mzv;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

void admissible_compositions(long long weight_max, std::vector<Composition>& out) {
  // First part >= 2, later parts >= 1.
  std::vector<Composition> stack;
  for (long long s1 = 2; s1 <= weight_max; ++s1) stack.push_back({s1});
  while (!stack.empty()) {
    Composition c = stack.back();
    stack.pop_back();
    out.push_back(c);
    long long w = weight(c);
    for (long long s = 1; w + s <= weight_max; ++s) {
      Composition next = c;
      next.push_back(s);
      stack.push_back(next);
    }
  }
}

}  // namespace

TEST_CASE("half-path polylogs hit classical constants") {
  EvalResult ln2 = polylog_half(Word::from_string("B"), 1e-14);
  CHECK(rel_err(ln2.value, kLn2) < 1e-12);
  CHECK(ln2.bound <= 1e-14);

  double li2_half = kPi * kPi / 12.0 - kLn2 * kLn2 / 2.0;
  EvalResult li2 = polylog_half(Word::from_string("AB"), 1e-14);
  CHECK(rel_err(li2.value, li2_half) < 1e-12);

  EvalResult one = polylog_half(Word(), 1e-14);
  CHECK(one.value == 1.0);
  CHECK(one.bound == 0.0);
}

TEST_CASE("split evaluation matches classical zeta values") {
  CHECK(rel_err(zeta_word(Word::from_string("AB"), 1e-13).value, kPi * kPi / 6.0) < 1e-12);
  CHECK(rel_err(zeta_word(Word::from_string("AAB"), 1e-13).value, 1.2020569031595942854) <
        1e-12);
  CHECK(rel_err(zeta_word(Word::from_string("AAAB"), 1e-13).value,
                std::pow(kPi, 4) / 90.0) < 1e-12);
  CHECK(rel_err(zeta_word(Word::from_string("AABB"), 1e-13).value,
                std::pow(kPi, 4) / 360.0) < 1e-11);
  CHECK(rel_err(zeta_word(Word::from_string("ABAB"), 1e-13).value,
                std::pow(kPi, 4) / 120.0) < 1e-11);

  // The split of zeta(2) is the classical dilogarithm reflection.
  double li2_half = kPi * kPi / 12.0 - kLn2 * kLn2 / 2.0;
  CHECK(std::abs(2.0 * li2_half + kLn2 * kLn2 - kPi * kPi / 6.0) < 1e-14);
}

TEST_CASE("linear combinations reproduce the square of zeta(2)") {
  WordPolynomial p = shuffle(Word::from_string("AB"), Word::from_string("AB"));
  EvalResult r = zeta_poly(p, 1e-12);
  CHECK(rel_err(r.value, std::pow(kPi, 4) / 36.0) < 1e-11);
  CHECK(r.bound <= 1e-12);
}

TEST_CASE("direct summation bound is rigorous and small for depth one") {
  EvalResult z4 = direct_nested_sum({4}, 1000);
  CHECK(z4.bound <= 1.0 / (3.0 * 1000.0 * 1000.0 * 1000.0));
  CHECK(std::abs(z4.value - std::pow(kPi, 4) / 90.0) <= z4.bound + 1e-13);
}

TEST_CASE("split evaluation agrees with direct summation on every admissible word of weight up to 7") {
  std::vector<Composition> comps;
  admissible_compositions(7, comps);
  CHECK(comps.size() == 63);
  for (const Composition& c : comps) {
    Word w = word_from_composition(c);
    EvalResult split = zeta_word(w, 1e-10);
    EvalResult direct = direct_nested_sum(c, 100000);
    CAPTURE(composition_str(c));
    CHECK(std::abs(split.value - direct.value) <= split.bound + direct.bound);
  }
}

TEST_CASE("products of zeta values match the shuffle of their words") {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"AB", "AB"}, {"AB", "AABB"}, {"AAB", "AB"}, {"AAB", "AAB"}, {"AAAB", "AB"},
      {"AABB", "AABB"}, {"AAAB", "AAAB"},
  };
  for (const auto& [su, sv] : pairs) {
    Word u = Word::from_string(su);
    Word v = Word::from_string(sv);
    double prod = zeta_word(u, 1e-13).value * zeta_word(v, 1e-13).value;
    double combined = zeta_poly(shuffle(u, v), 1e-12).value;
    CAPTURE(su);
    CAPTURE(sv);
    CHECK(rel_err(combined, prod) < 1e-9);
  }
}

TEST_CASE("repeated-block values match their closed forms") {
  const Word two = Word::from_string("AB");
  const Word threeone = Word::from_string("AABB");
  for (long long r = 1; r <= 6; ++r) {
    double fact = 1.0;
    for (long long i = 2; i <= 2 * r + 1; ++i) fact *= static_cast<double>(i);
    double want = std::pow(kPi, 2.0 * r) / fact;
    EvalResult got = zeta_word(word_pow(two, r), want * 1e-12);
    CAPTURE(r);
    CHECK(rel_err(got.value, want) < 1e-10);
  }
  for (long long n = 1; n <= 3; ++n) {
    double fact = 1.0;
    for (long long i = 2; i <= 4 * n + 2; ++i) fact *= static_cast<double>(i);
    double want = 2.0 * std::pow(kPi, 4.0 * n) / fact;
    EvalResult got = zeta_word(word_pow(threeone, n), want * 1e-11);
    CAPTURE(n);
    CHECK(rel_err(got.value, want) < 1e-9);
  }
}

TEST_CASE("interleaving words enumerate argument-string merges") {
  WordPolynomial p = interleaving_words(1, 1);
  WordPolynomial expected;
  for (const char* s : {"AABABB", "AABBAB", "ABAABB"}) {
    expected.add_term(Word::from_string(s), 1);
  }
  CHECK(p == expected);
  CHECK(interleaving_words(0, 2) == WordPolynomial::monomial(Word::from_string("AABBAABB")));
  CHECK(interleaving_words(3, 0) == WordPolynomial::monomial(Word::from_string("ABABAB")));
  for (long long m = 0; m <= 4; ++m) {
    for (long long n = (m == 0) ? 1 : 0; n <= 3; ++n) {
      WordPolynomial q = interleaving_words(m, n);
      CHECK(q.mass() == binom(m + 2 * n, m));
      CHECK(BigInt(q.term_count()) == q.mass());
    }
  }
  CHECK_THROWS_AS(interleaving_words(0, 0), std::invalid_argument);
}

TEST_CASE("main statement, smallest case") {
  double want = std::pow(kPi, 6) / 5040.0;
  EvalResult got = theorem_lhs(1, 1, want * 1e-10);
  CHECK(rel_err(got.value, want) < 1e-9);
  CHECK(rel_err(theorem_rhs(1, 1), want) < 1e-14);
  double other = zeta_poly(shuffle(Word::from_string("AB"), Word::from_string("AABB")),
                           1e-12).value;
  CHECK(rel_err(other, std::pow(kPi, 6) / 2160.0) < 1e-9);
}

TEST_CASE("closed form specializes to the pure {3,1} evaluation") {
  for (long long n = 1; n <= 5; ++n) {
    CHECK(theorem_rhs_rational(0, n) == BigRat(2, factorial(4 * n + 2)));
  }
  for (long long m = 1; m <= 5; ++m) {
    CHECK(theorem_rhs_rational(m, 0) == BigRat(1, factorial(2 * m + 1)));
  }
}

TEST_CASE("tighter targets tighten the reported bound") {
  Word w = Word::from_string("AABAB");
  EvalResult loose = zeta_word(w, 1e-6);
  EvalResult tight = zeta_word(w, 1e-12);
  CHECK(loose.bound <= 1e-6);
  CHECK(tight.bound <= 1e-12);
  CHECK(std::abs(loose.value - tight.value) <= loose.bound + tight.bound);
  CHECK(tight.terms >= loose.terms);
}

TEST_CASE("invalid numeric inputs are rejected") {
  CHECK_THROWS_AS(zeta_word(Word::from_string("BA"), 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(zeta_word(Word(), 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(polylog_half(Word::from_string("ABA"), 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(polylog_half(Word::from_string("AB"), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(direct_nested_sum({1, 1}, 100), std::invalid_argument);
  CHECK_THROWS_AS(direct_nested_sum({}, 100), std::invalid_argument);
  CHECK_THROWS_AS(direct_nested_sum({3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(direct_nested_sum({2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(theorem_lhs(0, 0, 1e-8), std::invalid_argument);
  WordPolynomial bad;
  bad.add_term(Word::from_string("BA"), 1);
  CHECK_THROWS_AS(zeta_poly(bad, 1e-8), std::invalid_argument);
}

TEST_CASE("tee-sum integrals versus shuffle zeta values") {
  XReport r = x_identity_check(2, 1, Parity::odd, 1e-12);
  CHECK(r.diff < 1e-9);
  CHECK_FALSE(r.words_equal);

  XReport top = x_identity_check(2, 2, Parity::odd, 1e-12);
  CHECK(top.diff < 1e-10);
  CHECK(top.words_equal);
}
