#pragma once

#include <compare>
#include <map>
#include <vector>

#include "skein/rational.hpp"
#include "skein/trace_poly.hpp"

namespace skein {

// A permutation of an explicit finite set of generator letters (fixed
// points included). Composition convention: (s.compose(t))(a) = s(t(a)).
class Permutation {
 public:
  static Permutation identity(std::vector<int> letters);
  static Permutation transposition(std::vector<int> letters, int a, int b);
  static Permutation from_images(std::vector<int> letters, std::vector<int> images);

  const std::vector<int>& letters() const { return letters_; }
  int apply(int letter) const;
  Permutation compose(const Permutation& o) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  // Disjoint cycles including fixed points; each cycle starts at its
  // smallest letter, cycles sorted by first letter.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<int> letters_;  // sorted ascending
  std::vector<int> images_;   // images_[k] = sigma(letters_[k])
};

Permutation perm_mul(const Permutation& s, const Permutation& t);
inline int sgn(const Permutation& s) { return s.sign(); }

// A finite rational combination of permutations sharing one letter set.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::vector<int> letters);
  static GroupAlgebraElement of(const Permutation& p, const Rat& coeff = 1);

  const std::vector<int>& letters() const { return letters_; }
  const std::map<Permutation, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(const Rat& c) const;

  void add(const Permutation& p, const Rat& coeff);

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  std::vector<int> letters_;
  std::map<Permutation, Rat> terms_;
};

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

// A Young tableau: rows of distinct letters with weakly decreasing lengths.
class Tableau {
 public:
  explicit Tableau(std::vector<std::vector<int>> rows);
  // Canonical filling: `letters` written row by row into the shape.
  static Tableau row_filling(const std::vector<int>& shape, const std::vector<int>& letters);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const;
  std::vector<int> shape() const;
  std::vector<int> letters() const;  // sorted
  std::size_t size() const;

 private:
  std::vector<std::vector<int>> rows_;
};

// Exact enumerations of the row and column stabilizer subgroups.
std::vector<Permutation> row_stabilizer(const Tableau& y);
std::vector<Permutation> column_stabilizer(const Tableau& y);

// (sum over the row stabilizer) * (signed sum over the column stabilizer).
GroupAlgebraElement young_symmetrizer(const Tableau& y);

// Coset decomposition of the stabilizers of a tableau obtained by deleting
// a removable corner box. Requires `corner_letter` to sit at the end of
// both its row and its column.
struct CosetDecomposition {
  std::vector<std::vector<Permutation>> row_cosets;
  std::vector<std::vector<Permutation>> column_cosets;
};
CosetDecomposition corner_cosets(const Tableau& y, int corner_letter);

// Reads each permutation in cycle notation (trivial cycles included) as a
// product of class variables and extends linearly.
TracePolynomial cycles_to_trace_poly(const GroupAlgebraElement& x);

// Young symmetrizers of all diagrams with at least three rows, one
// canonical row-filled tableau per partition of m. Empty for m < 3. Sizes
// above the default cap of m = 5 must be enabled explicitly.
std::vector<GroupAlgebraElement> procesi_generators(int m, const std::vector<int>& letters,
                                                    bool allow_large = false);

// Partitions of m with at least min_parts parts, in descending
// lexicographic order.
std::vector<std::vector<int>> partitions_with_min_parts(int m, int min_parts);

// The expanded 4x4 determinant with entries 2(x_i y_j) - (x_i)(y_j); an
// identity for arbitrary 2x2 matrix assignments.
TracePolynomial pairing_det_identity(const std::vector<int>& x_letters,
                                     const std::vector<int>& y_letters);

// The triple-product identity: [(x1 x2 x3) - (x1 x3 x2)] times the
// symmetrized y-block, minus the bordered 4x4 determinant; an identity for
// arbitrary 2x2 matrix assignments.
TracePolynomial triple_det_identity(const std::vector<int>& x_letters,
                                    const std::vector<int>& y_letters);

}  // namespace skein
