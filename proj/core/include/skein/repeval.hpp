#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skein/matrices.hpp"
#include "skein/rng.hpp"
#include "skein/trace_poly.hpp"
#include "skein/words.hpp"

namespace skein {

enum class RepMode { SL2, Any };

// An assignment of exact 2x2 matrices to generator indices. SL2 mode
// requires determinant exactly 1 for every matrix.
class Representation {
 public:
  Representation(std::map<int, Matrix2> assignment, RepMode mode);

  RepMode mode() const { return mode_; }
  const std::map<int, Matrix2>& assignment() const { return assignment_; }
  const Matrix2& matrix(int index) const;

 private:
  std::map<int, Matrix2> assignment_;
  RepMode mode_;
};

// Random element of SL2(Z): a product of 2..6 elementary shears with nonzero
// integer offsets bounded by size_bound. Determinant is 1 by construction.
Matrix2 random_sl2(Rng& rng, int size_bound);

// Uniform integer entries in [-size_bound, size_bound]; the determinant is
// unconstrained (and may be zero).
Matrix2 random_any(Rng& rng, int size_bound);

Representation random_representation(const std::set<int>& indices, RepMode mode, Rng& rng,
                                     int size_bound);

// Ordered matrix product over the word; inverse letters use the exact
// adjugate/determinant inverse. Throws on a singular matrix in Any mode.
Matrix2 eval_word(const Representation& rep, const Word& w);

// Substitutes the trace of eval_word for every variable; exact arithmetic.
Rat eval_poly(const Representation& rep, const TracePolynomial& p);

struct VerifyReport {
  bool passed = false;
  int trials = 0;
  std::uint64_t seed = 0;
  RepMode mode = RepMode::SL2;
  // Populated on failure.
  std::optional<int> failed_trial;
  std::optional<Representation> counterexample;
  Rat counterexample_value;
};

// Evaluates p on `trials` seeded random representations; passes when every
// value is exactly 0. In Any mode p must be inverse-free.
VerifyReport verify_identity(const TracePolynomial& p, int trials, std::uint64_t seed,
                             RepMode mode, int size_bound = 3);

// Representation file format: one line per generator, "a<k> = [[p,q],[r,s]]"
// with exact rational entries. Blank lines and '#' comments are skipped.
Representation parse_representation(const std::string& text, RepMode mode);
std::string format_representation(const Representation& rep);

}  // namespace skein
