#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mzv {

using Composition = std::vector<long long>;

// Immutable word over the two-letter alphabet {A, B}.
// A encodes dx/x, B encodes dx/(1-x); this module does no analysis, the tags
// only fix the MZV encoding A^{s-1}B per part.
class Word {
 public:
  Word() = default;
  static Word from_string(const std::string& letters);  // throws on letters outside {A,B}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char at(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }

  // Starts with A and ends with B (encodes a convergent MZV).
  bool admissible() const;

  Word prefix(std::size_t len) const;
  Word suffix_from(std::size_t pos) const;
  Word append(char letter) const;
  Word prepend(char letter) const;

  // Canonical order: by length, then lexicographic with A < B.
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const = default;

  // "e" for the empty word, otherwise the letters.
  std::string str() const;

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

// A^{s_1-1}B A^{s_2-1}B ... A^{s_d-1}B. Rejects empty compositions and parts < 1.
Word word_from_composition(const Composition& c);

// Exact inverse; rejects the empty word and words ending in A.
// Words starting with B are accepted (part s_1 = 1), they arise as suffix
// pieces in the split-at-1/2 evaluation.
Composition composition_from_word(const Word& w);

// Number of positions i with w[i] = w[i+1] = A (a run of r A's contributes r-1).
long long count_double_A(const Word& w);

// Reverse the word and swap A <-> B; an involution mapping admissible words
// to admissible words.
Word tau_reverse(const Word& w);

// (base)^r by concatenation.
Word word_pow(const Word& base, long long r);

long long weight(const Composition& c);

std::string composition_str(const Composition& c);  // "3,1"

}  // namespace mzv
