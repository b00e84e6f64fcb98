#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "skein/trace_poly.hpp"
#include "skein/words.hpp"

namespace skein {

// Rewrite rules of the normal-form engine. The short tags are the stable
// names used in traces and JSON output.
enum class RewriteRule {
  TrivialClass,   // R1: (1) -> 2
  InverseElim,    // R3: (u a_i^-1 v) -> (a_i)(v u) - (u a_i v)
  DuplicateElim,  // R4: (u a_i v a_i) -> (u a_i)(v a_i) - (u v^-1)
  AdjacentSwap,   // R5: sort one adjacent pair of a square-free positive word
  TripleSort,     // EX1: the length-3 instance of the swap, used at stage T0
  QuadExpand,     // L4: expand a coordinate with more than three indices
};

std::string rule_tag(RewriteRule r);

struct ReductionStep {
  RewriteRule rule;
  TraceVar variable;            // the variable rewritten
  TracePolynomial replacement;  // what replaced it, verbatim
};

// Audit log of a reduction: replaying the steps (substituting each variable
// by its replacement, in order) transforms input into output exactly.
struct ReductionTrace {
  TracePolynomial input;
  std::vector<ReductionStep> steps;
  TracePolynomial output;
};

TracePolynomial replay(const ReductionTrace& trace);  // applies the steps to trace.input

// The terminating rewrite engine: class variables down to ascending
// coordinates, then coordinates down to at most three indices. Results are
// memoized per conjugacy class and per coordinate; the memo tables are the
// only shared state and are guarded for concurrent use.
class Reducer {
 public:
  // Expresses (w) as a polynomial in ascending coordinates. Every rewrite
  // step preserves the value on all SL2 representations.
  TracePolynomial reduce_class(const ConjClass& c);

  // Linear extension of reduce_class over class variables; coordinates pass
  // through untouched.
  TracePolynomial reduce_to_T(const TracePolynomial& p);

  // Eliminates coordinates with more than three indices. Precondition: all
  // variables are coordinates.
  TracePolynomial reduce_to_T0(const TracePolynomial& p);

  TracePolynomial psi_normal_form(const TracePolynomial& p);

  // Step-by-step variants recording an exact replayable trace. They produce
  // the same output as the memoized fast path.
  ReductionTrace traced_reduce_to_T(const TracePolynomial& p);
  ReductionTrace traced_reduce_to_T0(const TracePolynomial& p);
  ReductionTrace traced_normal_form(const TracePolynomial& p);

  // One rewrite step for a single non-coordinate class variable: the rule
  // that fires and the replacement polynomial. Exposed for the traced
  // engine and for tests of the termination measure.
  std::pair<RewriteRule, TracePolynomial> class_step(const ConjClass& c) const;

  // Expansion of a coordinate with more than three indices into shorter
  // ones (before recursive reduction); used by the traced engine.
  TracePolynomial quad_expansion(const std::vector<int>& indices) const;

 private:
  TracePolynomial expand_coordinate(const std::vector<int>& indices);

  std::map<ConjClass, TracePolynomial> class_memo_;
  std::map<std::vector<int>, TracePolynomial> coord_memo_;
  std::mutex mutex_;
};

// Process-wide engine used by the free functions below.
Reducer& default_reducer();

TracePolynomial reduce_class(const ConjClass& c);
TracePolynomial reduce_to_T(const TracePolynomial& p);
TracePolynomial reduce_to_T0(const TracePolynomial& p);
TracePolynomial psi_normal_form(const TracePolynomial& p);

// (w1 w2) + (w1 w2^-1) - (w1)(w2); its normal form is identically zero.
TracePolynomial fundamental_relation(const Word& w1, const Word& w2);

// The termination measure of a class variable: (letter count, inverse
// letters, sorting inversions). Every rewrite strictly decreases it
// lexicographically over the classes it introduces.
struct ClassMeasure {
  std::size_t letters = 0;
  std::size_t inverses = 0;
  std::size_t inversions = 0;
  friend auto operator<=>(const ClassMeasure&, const ClassMeasure&) = default;
};
ClassMeasure class_measure(const ConjClass& c);

}  // namespace skein
