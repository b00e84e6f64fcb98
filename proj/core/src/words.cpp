#include "skein/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 1) throw std::invalid_argument("letter index must be >= 1");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word free_reduce(std::vector<Letter> letters) { return Word(std::move(letters)); }

bool Word::positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.sign > 0; });
}

std::vector<int> Word::indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(l.index);
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word word_concat(const Word& u, const Word& v) {
  std::vector<Letter> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(all));
}

Word word_inverse(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word word_power(const Word& u, int k) {
  Word base = k < 0 ? word_inverse(u) : u;
  int count = k < 0 ? -k : k;
  Word acc;
  for (int i = 0; i < count; ++i) acc = word_concat(acc, base);
  return acc;
}

namespace {

// Pure left-to-right comparison of equal-length letter sequences.
bool lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Letter> rotation(const std::vector<Letter>& v, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(start + i) % v.size()]);
  return out;
}

}  // namespace

ConjClass canonical_class(const Word& w) {
  std::vector<Letter> v = w.letters();
  // Cyclic reduction: conjugate away mutually inverse first/last letters.
  while (v.size() >= 2 && v.front() == v.back().inverse()) {
    v.erase(v.begin());
    v.pop_back();
  }
  if (v.empty()) return ConjClass();

  // Minimum over rotations of the word and of its inverse. On equal strings
  // the rotation of the original word wins (strict comparison below), a
  // tie-break that is irrelevant to correctness but pinned for
  // reproducibility.
  std::vector<Letter> best = v;
  for (std::size_t s = 1; s < v.size(); ++s) {
    auto cand = rotation(v, s);
    if (lex_less(cand, best)) best = cand;
  }
  std::vector<Letter> inv;
  inv.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) inv.push_back(it->inverse());
  for (std::size_t s = 0; s < inv.size(); ++s) {
    auto cand = rotation(inv, s);
    if (lex_less(cand, best)) best = cand;
  }

  return ConjClass(Word(std::move(best)));
}

Word parse_word_at(const std::string& text, std::size_t base_offset) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t tok = i;
    if (text[i] == '1') {
      ++i;
      if (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character after '1'", base_offset + i);
      }
      continue;  // identity token contributes nothing
    }
    if (text[i] != 'a') throw ParseError("expected generator token 'a<digits>'", base_offset + tok);
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected digits after 'a'", base_offset + i);
    }
    long index = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      if (index > 1000000) throw ParseError("generator index out of range", base_offset + tok);
      ++i;
    }
    if (index < 1) throw ParseError("generator index must be >= 1", base_offset + tok);
    int sign = +1;
    if (i < n && text[i] == '^') {
      if (text.compare(i, 3, "^-1") == 0) {
        sign = -1;
        i += 3;
      } else {
        throw ParseError("expected '^-1'", base_offset + i);
      }
    }
    letters.push_back(Letter{static_cast<int>(index), sign});
  }
  return Word(std::move(letters));
}

Word parse_word(const std::string& text) { return parse_word_at(text, 0); }

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    const Letter& l = w.letters()[i];
    out += 'a';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace skein
