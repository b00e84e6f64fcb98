#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace skein {

// One generator letter a_i or its inverse a_i^-1.
//
// The total letter order used everywhere for canonical forms is
//   a1 < a1^-1 < a2 < a2^-1 < a3 < ...
struct Letter {
  int index = 1;  // generator number, >= 1
  int sign = +1;  // +1 or -1

  Letter inverse() const { return Letter{index, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return (a.sign < 0) <=> (b.sign < 0);
  }
};

// A freely reduced word in the free group on a1, a2, ...  The empty word is
// the identity. Construction reduces adjacent inverse pairs, so a Word is
// always in normal form.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(int index, int sign = +1) { return Word({Letter{index, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool positive() const;          // no inverse letters
  std::vector<int> indices() const;  // index sequence, in word order

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex under the letter order; a deterministic total order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::vector<Letter> letters);
Word word_concat(const Word& u, const Word& v);
Word word_inverse(const Word& u);
Word word_power(const Word& u, int k);

// A conjugacy class of the free group, taken up to inversion as well. The
// stored word is the canonical representative: cyclically reduced and
// minimal, under left-to-right comparison in the letter order, among all
// rotations of the word and all rotations of its inverse.
class ConjClass {
 public:
  ConjClass() = default;  // the class of the identity

  const Word& word() const { return word_; }
  bool trivial() const { return word_.empty(); }
  std::size_t length() const { return word_.size(); }

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
  friend std::strong_ordering operator<=>(const ConjClass& a, const ConjClass& b) {
    return a.word_ <=> b.word_;
  }

 private:
  friend ConjClass canonical_class(const Word& w);
  explicit ConjClass(Word w) : word_(std::move(w)) {}
  Word word_;
};

ConjClass canonical_class(const Word& w);

// Text grammar: whitespace-separated tokens, token = a<digits> optionally
// suffixed ^-1; the literal 1 denotes the empty word.
Word parse_word(const std::string& text);
// As parse_word but reports the error offset relative to `base_offset`.
Word parse_word_at(const std::string& text, std::size_t base_offset);
std::string format_word(const Word& w);

}  // namespace skein
