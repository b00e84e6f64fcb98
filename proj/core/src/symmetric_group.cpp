#include "skein/symmetric_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skein {

namespace {

void require_sorted_unique(const std::vector<int>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] < 1) throw std::invalid_argument("letters must be >= 1");
    if (i && letters[i - 1] >= letters[i]) {
      throw std::invalid_argument("letter set must be strictly ascending");
    }
  }
}

}  // namespace

Permutation Permutation::identity(std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  require_sorted_unique(letters);
  Permutation p;
  p.images_ = letters;
  p.letters_ = std::move(letters);
  return p;
}

Permutation Permutation::transposition(std::vector<int> letters, int a, int b) {
  Permutation p = identity(std::move(letters));
  auto ia = std::find(p.letters_.begin(), p.letters_.end(), a);
  auto ib = std::find(p.letters_.begin(), p.letters_.end(), b);
  if (ia == p.letters_.end() || ib == p.letters_.end()) {
    throw std::invalid_argument("transposition letters outside the letter set");
  }
  std::swap(p.images_[ia - p.letters_.begin()], p.images_[ib - p.letters_.begin()]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> letters, std::vector<int> images) {
  std::vector<std::pair<int, int>> pairs;
  if (letters.size() != images.size()) {
    throw std::invalid_argument("letters and images differ in length");
  }
  for (std::size_t i = 0; i < letters.size(); ++i) pairs.emplace_back(letters[i], images[i]);
  std::sort(pairs.begin(), pairs.end());
  Permutation p;
  for (auto& [l, im] : pairs) {
    p.letters_.push_back(l);
    p.images_.push_back(im);
  }
  require_sorted_unique(p.letters_);
  std::vector<int> check = p.images_;
  std::sort(check.begin(), check.end());
  if (check != p.letters_) throw std::invalid_argument("images are not a bijection of the letters");
  return p;
}

int Permutation::apply(int letter) const {
  auto it = std::lower_bound(letters_.begin(), letters_.end(), letter);
  if (it == letters_.end() || *it != letter) {
    throw std::invalid_argument("letter not in permutation domain");
  }
  return images_[it - letters_.begin()];
}

Permutation Permutation::compose(const Permutation& o) const {
  if (letters_ != o.letters_) throw std::invalid_argument("mismatched letter sets");
  Permutation p;
  p.letters_ = letters_;
  p.images_.reserve(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) p.images_.push_back(apply(o.images_[i]));
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), images_[i]);
    images[it - letters_.begin()] = letters_[i];
  }
  Permutation p;
  p.letters_ = letters_;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const { return letters_ == images_; }

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (int start : letters_) {
    if (seen.count(start)) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      cycle.push_back(cur);
      seen.insert(cur);
      cur = apply(cur);
    } while (cur != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::sign() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? +1 : -1;
}

Permutation perm_mul(const Permutation& s, const Permutation& t) { return s.compose(t); }

GroupAlgebraElement::GroupAlgebraElement(std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  require_sorted_unique(letters);
  letters_ = std::move(letters);
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, const Rat& coeff) {
  GroupAlgebraElement x(p.letters());
  x.add(p, coeff);
  return x;
}

void GroupAlgebraElement::add(const Permutation& p, const Rat& coeff) {
  if (p.letters() != letters_) throw std::invalid_argument("mismatched letter sets");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  if (letters_ != o.letters_) throw std::invalid_argument("mismatched letter sets");
  GroupAlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  if (letters_ != o.letters_) throw std::invalid_argument("mismatched letter sets");
  GroupAlgebraElement out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rat& c) const {
  GroupAlgebraElement out(letters_);
  if (c == 0) return out;
  for (const auto& [p, k] : terms_) out.add(p, c * k);
  return out;
}

GroupAlgebraElement algebra_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (x.letters() != y.letters()) throw std::invalid_argument("mismatched letter sets");
  GroupAlgebraElement out(x.letters());
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [q, d] : y.terms()) {
      out.add(p.compose(q), c * d);
    }
  }
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("tableau must be nonempty");
  std::set<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r && rows_[r - 1].size() < rows_[r].size()) {
      throw std::invalid_argument("row lengths must be weakly decreasing");
    }
    for (int l : rows_[r]) {
      if (l < 1) throw std::invalid_argument("letters must be >= 1");
      if (!seen.insert(l).second) throw std::invalid_argument("tableau letters must be distinct");
    }
  }
}

Tableau Tableau::row_filling(const std::vector<int>& shape, const std::vector<int>& letters) {
  std::size_t total = 0;
  for (int len : shape) {
    if (len < 1) throw std::invalid_argument("shape parts must be >= 1");
    total += static_cast<std::size_t>(len);
  }
  if (total != letters.size()) {
    throw std::invalid_argument("letter count does not match the shape");
  }
  std::vector<std::vector<int>> rows;
  std::size_t next = 0;
  for (int len : shape) {
    rows.emplace_back(letters.begin() + next, letters.begin() + next + len);
    next += static_cast<std::size_t>(len);
  }
  return Tableau(std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(rows_[0].size());
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  }
  return cols;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.push_back(static_cast<int>(row.size()));
  return out;
}

std::vector<int> Tableau::letters() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Tableau::size() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

namespace {

// All permutations of `all` that permute each block within itself.
std::vector<Permutation> block_stabilizer(const std::vector<int>& all,
                                          const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out{Permutation::identity(all)};
  for (const auto& block : blocks) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> arrangements;
    std::vector<int> arrangement = sorted;
    do {
      arrangements.push_back(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    std::vector<Permutation> grown;
    grown.reserve(out.size() * arrangements.size());
    for (const Permutation& base : out) {
      for (const auto& arr : arrangements) {
        std::vector<int> letters = base.letters();
        std::vector<int> images;
        images.reserve(letters.size());
        for (std::size_t i = 0; i < letters.size(); ++i) {
          int image = base.apply(letters[i]);
          auto it = std::find(sorted.begin(), sorted.end(), image);
          if (it != sorted.end()) image = arr[it - sorted.begin()];
          images.push_back(image);
        }
        grown.push_back(Permutation::from_images(letters, std::move(images)));
      }
    }
    out = std::move(grown);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Permutation> row_stabilizer(const Tableau& y) {
  return block_stabilizer(y.letters(), y.rows());
}

std::vector<Permutation> column_stabilizer(const Tableau& y) {
  return block_stabilizer(y.letters(), y.columns());
}

GroupAlgebraElement young_symmetrizer(const Tableau& y) {
  GroupAlgebraElement row_sum(y.letters());
  for (const Permutation& p : row_stabilizer(y)) row_sum.add(p, 1);
  GroupAlgebraElement col_sum(y.letters());
  for (const Permutation& q : column_stabilizer(y)) col_sum.add(q, q.sign());
  return algebra_mul(row_sum, col_sum);
}

CosetDecomposition corner_cosets(const Tableau& y, int corner_letter) {
  const auto& rows = y.rows();
  std::size_t row_of = rows.size(), col_of = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == corner_letter) {
        row_of = r;
        col_of = c;
      }
    }
  }
  if (row_of == rows.size()) throw std::invalid_argument("corner letter not in tableau");
  if (col_of + 1 != rows[row_of].size()) {
    throw std::invalid_argument("corner letter is not the last box of its row");
  }
  if (row_of + 1 < rows.size() && rows[row_of + 1].size() > col_of) {
    throw std::invalid_argument("corner letter is not the last box of its column");
  }

  // The smaller tableau with the corner box removed, embedded in the full
  // letter set (the corner letter becomes a fixed point).
  std::vector<std::vector<int>> sub_rows = rows;
  sub_rows[row_of].pop_back();
  if (sub_rows[row_of].empty()) sub_rows.erase(sub_rows.begin() + row_of);

  const std::vector<int> all = y.letters();
  auto embedded = [&](const std::vector<std::vector<int>>& blocks) {
    return block_stabilizer(all, blocks);
  };

  Tableau full_for_cols(rows);
  std::vector<std::vector<int>> sub_cols;
  {
    Tableau sub(sub_rows);
    sub_cols = sub.columns();
  }

  CosetDecomposition out;
  auto build = [&](const std::vector<int>& box_mates,
                   const std::vector<Permutation>& subgroup) {
    std::vector<std::vector<Permutation>> cosets;
    for (int mate : box_mates) {
      Permutation rep = Permutation::transposition(all, mate, corner_letter);
      std::vector<Permutation> coset;
      coset.reserve(subgroup.size());
      for (const Permutation& s : subgroup) coset.push_back(rep.compose(s));
      std::sort(coset.begin(), coset.end());
      cosets.push_back(std::move(coset));
    }
    return cosets;
  };

  std::vector<Permutation> sub_p = embedded(sub_rows);
  std::vector<Permutation> sub_q = embedded(sub_cols);

  std::vector<int> row_mates = rows[row_of];  // r_1..r_s, then the corner itself
  std::vector<int> col_mates;
  for (std::size_t r = 0; r <= row_of; ++r) {
    if (rows[r].size() > col_of) col_mates.push_back(rows[r][col_of]);
  }

  out.row_cosets = build(row_mates, sub_p);
  out.column_cosets = build(col_mates, sub_q);

  // Postconditions: the cosets are disjoint and partition the stabilizers.
  auto verify = [&](const std::vector<std::vector<Permutation>>& cosets,
                    const std::vector<Permutation>& whole) {
    std::set<Permutation> seen;
    std::size_t total = 0;
    for (const auto& coset : cosets) {
      for (const Permutation& p : coset) {
        if (!seen.insert(p).second) throw std::logic_error("coset decomposition is not disjoint");
        ++total;
      }
    }
    if (total != whole.size()) throw std::logic_error("coset decomposition has the wrong size");
    for (const Permutation& p : whole) {
      if (!seen.count(p)) throw std::logic_error("coset decomposition misses an element");
    }
  };
  verify(out.row_cosets, row_stabilizer(y));
  verify(out.column_cosets, column_stabilizer(y));
  return out;
}

TracePolynomial cycles_to_trace_poly(const GroupAlgebraElement& x) {
  TracePolynomial out;
  for (const auto& [p, coeff] : x.terms()) {
    TracePolynomial piece = TracePolynomial::constant(coeff);
    for (const auto& cycle : p.cycles()) {
      std::vector<Letter> letters;
      letters.reserve(cycle.size());
      for (int l : cycle) letters.push_back(Letter{l, +1});
      piece = piece * class_var(Word(std::move(letters)));
    }
    out += piece;
  }
  return out;
}

std::vector<std::vector<int>> partitions_with_min_parts(int m, int min_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  if (m >= 1) rec(rec, m, m);
  return out;
}

std::vector<GroupAlgebraElement> procesi_generators(int m, const std::vector<int>& letters,
                                                    bool allow_large) {
  if (m < 3) return {};
  if (m > 5 && !allow_large) {
    throw std::invalid_argument(
        "symmetrizer size above 5 must be enabled explicitly (allow_large)");
  }
  if (static_cast<int>(letters.size()) != m) {
    throw std::invalid_argument("need exactly m letters");
  }
  std::vector<GroupAlgebraElement> out;
  for (const auto& shape : partitions_with_min_parts(m, 3)) {
    out.push_back(young_symmetrizer(Tableau::row_filling(shape, letters)));
  }
  return out;
}

namespace {

void require_distinct(const std::vector<int>& xs, const std::vector<int>& ys) {
  std::set<int> seen;
  for (int v : xs) {
    if (!seen.insert(v).second) throw std::invalid_argument("letters must be distinct");
  }
  for (int v : ys) {
    if (!seen.insert(v).second) throw std::invalid_argument("letters must be distinct");
  }
}

Word pair_word(int a, int b) { return Word({Letter{a, +1}, Letter{b, +1}}); }

// Expanded determinant of a 4x4 matrix of polynomials.
TracePolynomial poly_det4(const std::vector<std::vector<TracePolynomial>>& m) {
  static const int perms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  TracePolynomial out;
  for (const auto& perm : perms) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    TracePolynomial prod = TracePolynomial::constant(inversions % 2 == 0 ? 1 : -1);
    for (int r = 0; r < 4; ++r) prod = prod * m[r][perm[r]];
    out += prod;
  }
  return out;
}

}  // namespace

TracePolynomial pairing_det_identity(const std::vector<int>& x_letters,
                                     const std::vector<int>& y_letters) {
  if (x_letters.size() != 4 || y_letters.size() != 4) {
    throw std::invalid_argument("need four x letters and four y letters");
  }
  require_distinct(x_letters, y_letters);
  std::vector<std::vector<TracePolynomial>> m(4, std::vector<TracePolynomial>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m[i][j] = class_var(pair_word(x_letters[i], y_letters[j])).scaled(2) -
                class_var(Word::generator(x_letters[i])) * class_var(Word::generator(y_letters[j]));
    }
  }
  return poly_det4(m);
}

TracePolynomial triple_det_identity(const std::vector<int>& x_letters,
                                    const std::vector<int>& y_letters) {
  if (x_letters.size() != 3 || y_letters.size() != 3) {
    throw std::invalid_argument("need three x letters and three y letters");
  }
  require_distinct(x_letters, y_letters);
  auto gen = [](int i) { return class_var(Word::generator(i)); };
  auto triple = [](int a, int b, int c) {
    return class_var(Word({Letter{a, +1}, Letter{b, +1}, Letter{c, +1}}));
  };
  const auto& x = x_letters;
  const auto& y = y_letters;

  TracePolynomial first = triple(x[0], x[1], x[2]) - triple(x[0], x[2], x[1]);
  TracePolynomial second = triple(y[0], y[1], y[2]).scaled(2) + gen(y[0]) * gen(y[1]) * gen(y[2]) -
                           gen(y[0]) * class_var(pair_word(y[1], y[2])) -
                           gen(y[1]) * class_var(pair_word(y[0], y[2])) -
                           gen(y[2]) * class_var(pair_word(y[0], y[1]));

  std::vector<std::vector<TracePolynomial>> m(4, std::vector<TracePolynomial>(4));
  for (int r = 0; r < 3; ++r) {
    m[r][0] = gen(x[r]);
    for (int c = 0; c < 3; ++c) m[r][c + 1] = class_var(pair_word(x[r], y[c]));
  }
  m[3][0] = TracePolynomial::constant(2);
  for (int c = 0; c < 3; ++c) m[3][c + 1] = gen(y[c]);

  return first * second - poly_det4(m);
}

}  // namespace skein
