#include "skein/trace_poly.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

namespace {

// A canonical class is coordinate-shaped when its word is positive with
// strictly ascending indices (square-free follows).
bool coordinate_shaped(const Word& w) {
  if (w.empty() || !w.positive()) return false;
  const auto& ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i - 1].index >= ls[i].index) return false;
  }
  return true;
}

}  // namespace

TraceVar TraceVar::coordinate(std::vector<int> indices) {
  if (indices.empty()) throw std::invalid_argument("coordinate needs at least one index");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw std::invalid_argument("coordinate index must be >= 1");
    if (i && indices[i - 1] >= indices[i]) {
      throw std::invalid_argument("coordinate indices must be strictly ascending");
    }
  }
  TraceVar v;
  v.rep_ = std::move(indices);
  return v;
}

TraceVar TraceVar::of_class(const ConjClass& c) {
  if (c.trivial()) throw std::invalid_argument("the trivial class is the scalar 2, not a variable");
  if (coordinate_shaped(c.word())) return coordinate(c.word().indices());
  TraceVar v;
  v.rep_ = c;
  return v;
}

const std::vector<int>& TraceVar::indices() const {
  return std::get<std::vector<int>>(rep_);
}

const ConjClass& TraceVar::cls() const { return std::get<ConjClass>(rep_); }

Word TraceVar::word() const {
  if (is_coordinate()) {
    std::vector<Letter> ls;
    for (int i : indices()) ls.push_back(Letter{i, +1});
    return Word(std::move(ls));
  }
  return cls().word();
}

std::strong_ordering operator<=>(const TraceVar& a, const TraceVar& b) {
  if (a.is_coordinate() != b.is_coordinate()) {
    return a.is_coordinate() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_coordinate()) {
    const auto& x = a.indices();
    const auto& y = b.indices();
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  return a.cls() <=> b.cls();
}

std::string format_var(const TraceVar& v) {
  if (v.is_coordinate()) {
    const auto& idx = v.indices();
    bool compact = std::all_of(idx.begin(), idx.end(), [](int i) { return i <= 9; });
    std::string out = "t";
    if (compact) {
      for (int i : idx) out += static_cast<char>('0' + i);
    } else {
      out += '{';
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx[i]);
      }
      out += '}';
    }
    return out;
  }
  return "(" + format_word(v.cls().word()) + ")";
}

Monomial::Monomial(std::vector<TraceVar> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Monomial Monomial::var(const TraceVar& v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  Monomial m;
  for (int i = 0; i < exponent; ++i) m.factors_.push_back(v);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  std::merge(factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(),
             std::back_inserter(out.factors_));
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Same degree: compare from the largest factor down.
  for (std::size_t i = a.factors_.size(); i-- > 0;) {
    if (auto c = a.factors_[i] <=> b.factors_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

TracePolynomial TracePolynomial::constant(const Rat& c) {
  TracePolynomial p;
  p.add_term(Monomial::one(), c);
  return p;
}

TracePolynomial TracePolynomial::variable(const TraceVar& v) {
  TracePolynomial p;
  p.add_term(Monomial::var(v), 1);
  return p;
}

TracePolynomial TracePolynomial::term(const Rat& c, const Monomial& m) {
  TracePolynomial p;
  p.add_term(m, c);
  return p;
}

bool TracePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::set<TraceVar> TracePolynomial::variables() const {
  std::set<TraceVar> out;
  for (const auto& [m, c] : terms_) {
    for (const TraceVar& v : m.factors()) out.insert(v);
  }
  return out;
}

std::size_t TracePolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void TracePolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& o) const {
  TracePolynomial out = *this;
  out += o;
  return out;
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& o) const {
  TracePolynomial out = *this;
  out -= o;
  return out;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TracePolynomial TracePolynomial::operator-() const {
  TracePolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& o) const {
  TracePolynomial out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      out.add_term(m1 * m2, c1 * c2);
    }
  }
  return out;
}

TracePolynomial TracePolynomial::scaled(const Rat& c) const {
  TracePolynomial out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, c * k);
  return out;
}

TracePolynomial TracePolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("polynomial power must be >= 0");
  TracePolynomial out = constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

TracePolynomial TracePolynomial::substitute(const TraceVar& v, const TracePolynomial& q) const {
  TracePolynomial out;
  for (const auto& [m, c] : terms_) {
    int exponent = 0;
    std::vector<TraceVar> rest;
    for (const TraceVar& f : m.factors()) {
      if (f == v) {
        ++exponent;
      } else {
        rest.push_back(f);
      }
    }
    TracePolynomial piece = term(c, Monomial(std::move(rest)));
    if (exponent) piece = piece * q.pow(exponent);
    out += piece;
  }
  return out;
}

Rat TracePolynomial::evaluate(const std::function<Rat(const TraceVar&)>& value) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat prod = c;
    for (const TraceVar& v : m.factors()) prod *= value(v);
    total += prod;
  }
  return total;
}

TracePolynomial class_var(const Word& w) {
  ConjClass c = canonical_class(w);
  if (c.trivial()) return TracePolynomial::constant(2);
  return TracePolynomial::variable(TraceVar::of_class(c));
}

TracePolynomial coordinate_poly(std::vector<int> indices) {
  return TracePolynomial::variable(TraceVar::coordinate(std::move(indices)));
}

TracePolynomial substitute_generators(const TracePolynomial& p, const std::map<int, Word>& sub) {
  TracePolynomial out;
  for (const auto& [m, c] : p.terms()) {
    TracePolynomial piece = TracePolynomial::constant(c);
    for (const TraceVar& v : m.factors()) {
      std::vector<Letter> image;
      const Word vw = v.word();
      for (const Letter& l : vw.letters()) {
        auto it = sub.find(l.index);
        if (it == sub.end()) {
          image.push_back(l);
          continue;
        }
        Word part = l.sign > 0 ? it->second : word_inverse(it->second);
        image.insert(image.end(), part.letters().begin(), part.letters().end());
      }
      piece = piece * class_var(Word(std::move(image)));
    }
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  TracePolynomial parse() {
    TracePolynomial out;
    skip_ws();
    bool first = true;
    while (true) {
      int sign = +1;
      skip_ws();
      if (pos_ >= text_.size()) {
        if (first) throw ParseError("empty polynomial", pos_);
        break;
      }
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        if (first && text_[pos_] == '+') throw ParseError("unexpected '+'", pos_);
        sign = text_[pos_] == '-' ? -1 : +1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      TracePolynomial t = parse_term();
      out += sign < 0 ? -t : t;
      first = false;
      skip_ws();
      if (pos_ >= text_.size()) break;
    }
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == 't';
  }

  TracePolynomial parse_term() {
    skip_ws();
    Rat coeff = 1;
    bool have_coeff = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = parse_number();
      have_coeff = true;
    }
    TracePolynomial out = TracePolynomial::constant(coeff);
    bool have_factor = false;
    while (at_factor_start()) {
      out = out * parse_factor();
      have_factor = true;
    }
    if (!have_coeff && !have_factor) {
      throw ParseError("expected coefficient or factor", pos_);
    }
    return out;
  }

  Rat parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator digits", pos_);
      den = text_.substr(dstart, pos_ - dstart);
    }
    Rat r(num + "/" + den);
    r.canonicalize();
    return r;
  }

  int parse_exponent() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError("expected exponent digits", pos_);
      int k = std::stoi(text_.substr(start, pos_ - start));
      return k;
    }
    return 1;
  }

  TracePolynomial parse_factor() {
    skip_ws();
    if (text_[pos_] == '(') {
      std::size_t open = pos_;
      std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) throw ParseError("missing ')'", open);
      std::string inside = text_.substr(open + 1, close - open - 1);
      Word w = parse_word_at(inside, open + 1);
      pos_ = close + 1;
      return class_var(w).pow(parse_exponent());
    }
    // t-coordinate
    std::size_t tok = pos_;
    ++pos_;  // consume 't'
    std::vector<int> idx;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      while (true) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected index digits", pos_);
        idx.push_back(std::stoi(text_.substr(start, pos_ - start)));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == '}') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or '}'", pos_);
      }
    } else {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw ParseError("expected coordinate digits after 't'", pos_);
      for (std::size_t i = start; i < pos_; ++i) idx.push_back(text_[i] - '0');
    }
    TracePolynomial v;
    try {
      v = coordinate_poly(std::move(idx));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), tok);
    }
    return v.pow(parse_exponent());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string format_coeff_magnitude(const Rat& c) {
  Rat a = abs(c);
  return a.get_str();
}

}  // namespace

TracePolynomial parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::string format_poly(const TracePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Largest monomial first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rat mag = abs(c);
    if (m.is_one()) {
      out += format_coeff_magnitude(c);
    } else {
      if (mag != 1) {
        out += format_coeff_magnitude(c);
        out += ' ';
      }
      const auto& fs = m.factors();
      for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        if (i) out += ' ';
        out += format_var(fs[i]);
        if (j - i > 1) {
          out += '^';
          out += std::to_string(j - i);
        }
        i = j;
      }
    }
  }
  return out;
}

}  // namespace skein
