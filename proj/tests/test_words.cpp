#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/words.hpp"

#include <stdexcept>
#include <vector>

using namespace mzv;

TEST_CASE("from_string round trip and empty word") {
  CHECK(Word::from_string("AABB").letters() == "AABB");
  CHECK(Word::from_string("AABB").str() == "AABB");
  CHECK(Word().str() == "e");
  CHECK(Word().empty());
  CHECK(Word::from_string("").empty());
  CHECK_THROWS_AS(Word::from_string("AXB"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("ab"), std::invalid_argument);
}

TEST_CASE("admissibility") {
  CHECK(Word::from_string("AB").admissible());
  CHECK(Word::from_string("AABB").admissible());
  CHECK_FALSE(Word::from_string("BA").admissible());
  CHECK_FALSE(Word::from_string("BB").admissible());
  CHECK_FALSE(Word::from_string("AA").admissible());
  CHECK_FALSE(Word().admissible());
}

TEST_CASE("composition encoding") {
  CHECK(word_from_composition({2}) == Word::from_string("AB"));
  CHECK(word_from_composition({3, 1}) == Word::from_string("AABB"));
  CHECK(word_from_composition({1}) == Word::from_string("B"));
  CHECK(word_from_composition({2, 2}) == Word::from_string("ABAB"));
  CHECK_THROWS_AS(word_from_composition({}), std::invalid_argument);
  CHECK_THROWS_AS(word_from_composition({2, 0}), std::invalid_argument);

  CHECK(composition_from_word(Word::from_string("AABB")) == Composition{3, 1});
  CHECK(composition_from_word(Word::from_string("BABB")) == Composition{1, 2, 1});
  CHECK(composition_from_word(Word::from_string("B")) == Composition{1});
  CHECK_THROWS_AS(composition_from_word(Word()), std::invalid_argument);
  CHECK_THROWS_AS(composition_from_word(Word::from_string("ABA")), std::invalid_argument);
}

TEST_CASE("composition round trips") {
  std::vector<Composition> comps = {{2}, {3, 1}, {2, 1, 1}, {4, 2, 3}, {1, 1, 2}, {5}};
  for (const auto& c : comps) {
    CHECK(composition_from_word(word_from_composition(c)) == c);
  }
  std::vector<std::string> words = {"AB", "AABB", "ABAB", "BAB", "AAAB", "BBB"};
  for (const auto& s : words) {
    Word w = Word::from_string(s);
    CHECK(word_from_composition(composition_from_word(w)) == w);
  }
}

TEST_CASE("count_double_A") {
  CHECK(count_double_A(Word()) == 0);
  CHECK(count_double_A(Word::from_string("ABAB")) == 0);
  CHECK(count_double_A(Word::from_string("AABB")) == 1);
  CHECK(count_double_A(Word::from_string("AAABBB")) == 2);
  CHECK(count_double_A(Word::from_string("AABAAB")) == 2);
  CHECK(count_double_A(Word::from_string("AAAAB")) == 3);
}

TEST_CASE("tau_reverse") {
  CHECK(tau_reverse(Word::from_string("AB")) == Word::from_string("AB"));
  CHECK(tau_reverse(Word::from_string("AABB")) == Word::from_string("AABB"));
  CHECK(tau_reverse(Word::from_string("AAB")) == Word::from_string("ABB"));
  CHECK(tau_reverse(Word()) == Word());
  std::vector<std::string> words = {"A", "B", "AAB", "ABAB", "AABAB", "BBA"};
  for (const auto& s : words) {
    Word w = Word::from_string(s);
    CHECK(tau_reverse(tau_reverse(w)) == w);
    CHECK(tau_reverse(w).size() == w.size());
  }
  CHECK(tau_reverse(Word::from_string("AAABAB")).admissible());
}

TEST_CASE("canonical order is length then lexicographic") {
  std::vector<std::string> ordered = {"A", "B", "AA", "AB", "BA", "BB", "AAA"};
  Word prev;
  for (const auto& s : ordered) {
    Word w = Word::from_string(s);
    CHECK(prev < w);
    prev = w;
  }
}

TEST_CASE("word_pow, prefix, suffix") {
  CHECK(word_pow(Word::from_string("AB"), 3) == Word::from_string("ABABAB"));
  CHECK(word_pow(Word::from_string("AB"), 0) == Word());
  Word w = Word::from_string("AABAB");
  CHECK(w.prefix(2) == Word::from_string("AA"));
  CHECK(w.suffix_from(2) == Word::from_string("BAB"));
  CHECK(w.prefix(0) == Word());
  CHECK(w.suffix_from(5) == Word());
  CHECK(w.append('B') == Word::from_string("AABABB"));
  CHECK(w.prepend('A') == Word::from_string("AAABAB"));
}

TEST_CASE("weight and formatting") {
  CHECK(weight({3, 1}) == 4);
  CHECK(weight({2, 2, 2}) == 6);
  CHECK(composition_str({3, 1}) == "3,1");
  CHECK(composition_str({2}) == "2");
}
