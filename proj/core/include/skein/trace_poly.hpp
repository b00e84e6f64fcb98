#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "skein/rational.hpp"
#include "skein/words.hpp"

namespace skein {

// A variable of the trace-polynomial ring: either a coordinate t_{i1...im}
// on strictly ascending indices, or a conjugacy-class variable (w).
//
// A class whose canonical word is positive, square-free and ascending
// denotes the same function as the coordinate on those indices, so
// construction promotes such classes eagerly; a TraceVar in class form is
// never coordinate-shaped. Total order: coordinates first (by index count,
// then tuple), then classes by shortlex canonical word.
class TraceVar {
 public:
  static TraceVar coordinate(std::vector<int> indices);
  static TraceVar of_class(const ConjClass& c);

  bool is_coordinate() const { return std::holds_alternative<std::vector<int>>(rep_); }
  const std::vector<int>& indices() const;  // coordinate form only
  const ConjClass& cls() const;             // class form only
  Word word() const;                        // underlying word in either form

  friend bool operator==(const TraceVar&, const TraceVar&) = default;
  friend std::strong_ordering operator<=>(const TraceVar& a, const TraceVar& b);

 private:
  TraceVar() = default;
  std::variant<std::vector<int>, ConjClass> rep_;
};

std::string format_var(const TraceVar& v);

// A product of variables, stored as an ascending sorted sequence with
// repetition (t1^2 t12 = [t1, t1, t12]). The empty monomial is the constant
// term. Ordered by degree, then by comparing factors from the largest down.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<TraceVar> factors);

  static Monomial one() { return Monomial(); }
  static Monomial var(const TraceVar& v, int exponent = 1);

  const std::vector<TraceVar>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<TraceVar> factors_;
};

// Multivariate polynomial with exact rational coefficients over TraceVars.
// Zero coefficients are never stored; the trivial class never appears as a
// variable (it is the scalar 2).
class TracePolynomial {
 public:
  TracePolynomial() = default;

  static TracePolynomial constant(const Rat& c);
  static TracePolynomial variable(const TraceVar& v);
  static TracePolynomial term(const Rat& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  std::set<TraceVar> variables() const;
  std::size_t degree() const;

  TracePolynomial operator+(const TracePolynomial& o) const;
  TracePolynomial operator-(const TracePolynomial& o) const;
  TracePolynomial operator-() const;
  TracePolynomial operator*(const TracePolynomial& o) const;
  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial& operator-=(const TracePolynomial& o);

  TracePolynomial scaled(const Rat& c) const;
  TracePolynomial pow(int k) const;  // k >= 0

  // Replaces every occurrence of `v` by `q`, expanding powers.
  TracePolynomial substitute(const TraceVar& v, const TracePolynomial& q) const;

  // Exact evaluation with `value` supplying each variable's value.
  Rat evaluate(const std::function<Rat(const TraceVar&)>& value) const;

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rat& c);
  std::map<Monomial, Rat> terms_;
};

inline TracePolynomial poly_add(const TracePolynomial& p, const TracePolynomial& q) { return p + q; }
inline TracePolynomial poly_sub(const TracePolynomial& p, const TracePolynomial& q) { return p - q; }
inline TracePolynomial poly_mul(const TracePolynomial& p, const TracePolynomial& q) { return p * q; }
inline TracePolynomial poly_scale(const Rat& c, const TracePolynomial& p) { return p.scaled(c); }

// The polynomial consisting of the single variable (canonical class of w);
// the trivial class evaluates to tr(I) and is returned as the constant 2.
TracePolynomial class_var(const Word& w);
TracePolynomial coordinate_poly(std::vector<int> indices);

// Replaces generator a_i (and its inverse) by sub.at(i) inside every
// variable, then re-canonicalizes. Indices absent from `sub` are kept.
TracePolynomial substitute_generators(const TracePolynomial& p, const std::map<int, Word>& sub);

// Grammar: sum of terms; term = optional rational coefficient followed by
// factors; factor = "( word )", "t<digits>" (one index per digit) or
// "t{i1,i2,...}", each optionally raised with "^<k>".
TracePolynomial parse_poly(const std::string& text);
std::string format_poly(const TracePolynomial& p);

}  // namespace skein
