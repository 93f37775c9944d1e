#include "mzv/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

Word Word::from_string(const std::string& letters) {
  for (char c : letters) {
    if (c != 'A' && c != 'B') {
      throw std::invalid_argument("word letters must be A or B, got '" + std::string(1, c) + "'");
    }
  }
  return Word(letters);
}

bool Word::admissible() const {
  return !letters_.empty() && letters_.front() == 'A' && letters_.back() == 'B';
}

Word Word::prefix(std::size_t len) const { return Word(letters_.substr(0, len)); }

Word Word::suffix_from(std::size_t pos) const { return Word(letters_.substr(pos)); }

Word Word::append(char letter) const { return Word(letters_ + letter); }

Word Word::prepend(char letter) const { return Word(std::string(1, letter) + letters_); }

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  int c = letters_.compare(other.letters_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Word::str() const { return letters_.empty() ? "e" : letters_; }

Word word_from_composition(const Composition& c) {
  if (c.empty()) throw std::invalid_argument("empty composition has no word");
  std::string s;
  for (long long part : c) {
    if (part < 1) throw std::invalid_argument("composition parts must be >= 1");
    s.append(static_cast<std::size_t>(part - 1), 'A');
    s.push_back('B');
  }
  return Word::from_string(s);
}

Composition composition_from_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word has no composition");
  if (w.at(w.size() - 1) != 'B') throw std::invalid_argument("word must end in B");
  Composition c;
  long long run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.at(i) == 'A') {
      ++run;
    } else {
      c.push_back(run + 1);
      run = 0;
    }
  }
  return c;
}

long long count_double_A(const Word& w) {
  long long n = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w.at(i) == 'A' && w.at(i + 1) == 'A') ++n;
  }
  return n;
}

Word tau_reverse(const Word& w) {
  std::string s = w.letters();
  std::reverse(s.begin(), s.end());
  for (char& c : s) c = (c == 'A') ? 'B' : 'A';
  return Word::from_string(s);
}

Word word_pow(const Word& base, long long r) {
  std::string s;
  for (long long i = 0; i < r; ++i) s += base.letters();
  return Word::from_string(s);
}

long long weight(const Composition& c) {
  long long w = 0;
  for (long long part : c) w += part;
  return w;
}

std::string composition_str(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace mzv
