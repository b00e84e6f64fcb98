#include "skein/reduce.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace skein {

std::string rule_tag(RewriteRule r) {
  switch (r) {
    case RewriteRule::TrivialClass: return "R1";
    case RewriteRule::InverseElim: return "R3";
    case RewriteRule::DuplicateElim: return "R4";
    case RewriteRule::AdjacentSwap: return "R5";
    case RewriteRule::TripleSort: return "EX1";
    case RewriteRule::QuadExpand: return "L4";
  }
  return "?";
}

namespace {

bool squarefree(const std::vector<Letter>& ls) {
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (ls[i].index == ls[j].index) return false;
    }
  }
  return true;
}

bool ascending_coordinate(const Word& w) {
  if (w.empty() || !w.positive()) return false;
  const auto& ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i - 1].index >= ls[i].index) return false;
  }
  return true;
}

Word slice(const std::vector<Letter>& ls, std::size_t from, std::size_t to) {
  return Word(std::vector<Letter>(ls.begin() + from, ls.begin() + to));
}

}  // namespace

ClassMeasure class_measure(const ConjClass& c) {
  ClassMeasure m;
  const auto& ls = c.word().letters();
  m.letters = ls.size();
  for (const Letter& l : ls) {
    if (l.sign < 0) ++m.inverses;
  }
  if (m.inverses == 0 && squarefree(ls)) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (ls[i].index > ls[j].index) ++m.inversions;
      }
    }
  }
  return m;
}

std::pair<RewriteRule, TracePolynomial> Reducer::class_step(const ConjClass& c) const {
  if (c.trivial()) {
    return {RewriteRule::TrivialClass, TracePolynomial::constant(2)};
  }
  const auto& ls = c.word().letters();
  const std::size_t n = ls.size();

  auto check_smaller = [&](const TracePolynomial& repl) {
    ClassMeasure bound = class_measure(c);
    for (const TraceVar& v : repl.variables()) {
      if (v.is_coordinate()) continue;
      if (!(class_measure(v.cls()) < bound)) {
        throw std::logic_error("termination measure did not decrease for " + format_var(v));
      }
    }
    return repl;
  };

  // R3: eliminate the last inverse letter.
  std::optional<std::size_t> last_inverse;
  for (std::size_t i = 0; i < n; ++i) {
    if (ls[i].sign < 0) last_inverse = i;
  }
  if (last_inverse) {
    std::size_t p = *last_inverse;
    Word u = slice(ls, 0, p);
    Word v = slice(ls, p + 1, n);
    Word gen = Word::generator(ls[p].index);
    TracePolynomial repl =
        class_var(gen) * class_var(word_concat(v, u)) -
        class_var(word_concat(word_concat(u, gen), v));
    return {RewriteRule::InverseElim, check_smaller(repl)};
  }

  // R4: split at the first two occurrences of the smallest repeated index.
  std::optional<int> repeated;
  for (const Letter& l : ls) {
    int count = 0;
    for (const Letter& o : ls) {
      if (o.index == l.index) ++count;
    }
    if (count >= 2 && (!repeated || l.index < *repeated)) repeated = l.index;
  }
  if (repeated) {
    std::size_t p1 = n, p2 = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (ls[i].index == *repeated) {
        if (p1 == n) {
          p1 = i;
        } else {
          p2 = i;
          break;
        }
      }
    }
    Word x = slice(ls, 0, p1);
    Word y = slice(ls, p1 + 1, p2);
    Word z = slice(ls, p2 + 1, n);
    Word u = word_concat(z, x);
    Word gen = Word::generator(*repeated);
    TracePolynomial repl = class_var(word_concat(u, gen)) * class_var(word_concat(y, gen)) -
                           class_var(word_concat(u, word_inverse(y)));
    return {RewriteRule::DuplicateElim, check_smaller(repl)};
  }

  // R5: the word is positive and square-free; swap the first descent. The
  // canonical rotation starts at the smallest index, so the swap lowers the
  // inversion count by exactly one and never moves the first letter.
  std::size_t p = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ls[i].index > ls[i + 1].index) {
      p = i;
      break;
    }
  }
  if (p == n) {
    throw std::logic_error("class_step called on an ascending coordinate word");
  }
  assert(p >= 1);
  Word u = slice(ls, 0, p);
  Word A = Word::generator(ls[p].index);
  Word B = Word::generator(ls[p + 1].index);
  Word v = slice(ls, p + 2, n);
  Word vu = word_concat(v, u);
  TracePolynomial repl =
      -class_var(word_concat(word_concat(u, B), word_concat(A, v))) +
      class_var(A) * class_var(word_concat(B, vu)) +
      class_var(B) * class_var(word_concat(A, vu)) +
      class_var(word_concat(A, B)) * class_var(vu) -
      class_var(A) * class_var(B) * class_var(vu);
  return {RewriteRule::AdjacentSwap, check_smaller(repl)};
}

TracePolynomial Reducer::reduce_class(const ConjClass& c) {
  if (c.trivial()) return TracePolynomial::constant(2);
  if (ascending_coordinate(c.word())) {
    return TracePolynomial::variable(TraceVar::of_class(c));
  }
  {
    std::lock_guard lock(mutex_);
    auto it = class_memo_.find(c);
    if (it != class_memo_.end()) return it->second;
  }
  TracePolynomial result = reduce_to_T(class_step(c).second);
  std::lock_guard lock(mutex_);
  return class_memo_.emplace(c, std::move(result)).first->second;
}

TracePolynomial Reducer::reduce_to_T(const TracePolynomial& p) {
  TracePolynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    TracePolynomial piece = TracePolynomial::constant(coeff);
    for (const TraceVar& v : m.factors()) {
      piece = piece * (v.is_coordinate() ? TracePolynomial::variable(v) : reduce_class(v.cls()));
    }
    out += piece;
  }
  return out;
}

TracePolynomial Reducer::quad_expansion(const std::vector<int>& idx) const {
  if (idx.size() <= 3) throw std::invalid_argument("expansion needs more than three indices");
  int i = idx[0], j = idx[1], k = idx[2];
  std::vector<Letter> tail;
  for (std::size_t t = 3; t < idx.size(); ++t) tail.push_back(Letter{idx[t], +1});
  Word al(std::move(tail));  // the trailing block
  Word ai = Word::generator(i), aj = Word::generator(j), ak = Word::generator(k);

  auto w = [](std::initializer_list<const Word*> parts) {
    Word acc;
    for (const Word* p : parts) acc = word_concat(acc, *p);
    return acc;
  };

  TracePolynomial sum =
      class_var(w({&ai, &ak})) * class_var(aj) * class_var(al) -
      class_var(ai) * class_var(aj) * class_var(w({&ak, &al})) -
      class_var(aj) * class_var(ak) * class_var(w({&al, &ai})) -
      class_var(w({&ai, &ak})) * class_var(w({&aj, &al})) +
      class_var(w({&ai, &aj})) * class_var(w({&ak, &al})) +
      class_var(w({&aj, &ak})) * class_var(w({&al, &ai})) -
      class_var(w({&ai, &ak, &aj})) * class_var(al) +
      class_var(ai) * class_var(w({&aj, &ak, &al})) +
      class_var(aj) * class_var(w({&ak, &al, &ai})) +
      class_var(ak) * class_var(w({&al, &ai, &aj}));
  return sum.scaled(Rat(1, 2));
}

TracePolynomial Reducer::expand_coordinate(const std::vector<int>& idx) {
  {
    std::lock_guard lock(mutex_);
    auto it = coord_memo_.find(idx);
    if (it != coord_memo_.end()) return it->second;
  }
  TracePolynomial result = reduce_to_T0(reduce_to_T(quad_expansion(idx)));
  std::lock_guard lock(mutex_);
  return coord_memo_.emplace(idx, std::move(result)).first->second;
}

TracePolynomial Reducer::reduce_to_T0(const TracePolynomial& p) {
  TracePolynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    TracePolynomial piece = TracePolynomial::constant(coeff);
    for (const TraceVar& v : m.factors()) {
      if (!v.is_coordinate()) {
        throw std::invalid_argument("reduce_to_T0 requires a coordinate polynomial");
      }
      piece = piece * (v.indices().size() <= 3 ? TracePolynomial::variable(v)
                                               : expand_coordinate(v.indices()));
    }
    out += piece;
  }
  return out;
}

TracePolynomial Reducer::psi_normal_form(const TracePolynomial& p) {
  return reduce_to_T0(reduce_to_T(p));
}

namespace {

// The largest class variable of the largest monomial that has one.
std::optional<TraceVar> pick_class_target(const TracePolynomial& p) {
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& fs = it->first.factors();
    for (std::size_t i = fs.size(); i-- > 0;) {
      if (!fs[i].is_coordinate()) return fs[i];
    }
  }
  return std::nullopt;
}

// The lexicographically least among the longest coordinates above three
// indices.
std::optional<TraceVar> pick_long_coordinate(const TracePolynomial& p) {
  std::optional<std::vector<int>> best;
  for (const TraceVar& v : p.variables()) {
    if (!v.is_coordinate() || v.indices().size() <= 3) continue;
    const auto& idx = v.indices();
    if (!best || idx.size() > best->size() ||
        (idx.size() == best->size() && idx < *best)) {
      best = idx;
    }
  }
  if (!best) return std::nullopt;
  return TraceVar::coordinate(*best);
}

}  // namespace

ReductionTrace Reducer::traced_reduce_to_T(const TracePolynomial& p) {
  ReductionTrace trace;
  trace.input = p;
  TracePolynomial cur = p;
  while (auto target = pick_class_target(cur)) {
    auto [rule, repl] = class_step(target->cls());
    cur = cur.substitute(*target, repl);
    trace.steps.push_back({rule, *target, repl});
  }
  trace.output = cur;
  return trace;
}

ReductionTrace Reducer::traced_reduce_to_T0(const TracePolynomial& p) {
  for (const TraceVar& v : p.variables()) {
    if (!v.is_coordinate()) {
      throw std::invalid_argument("reduce_to_T0 requires a coordinate polynomial");
    }
  }
  ReductionTrace trace;
  trace.input = p;
  TracePolynomial cur = p;
  while (true) {
    if (auto cls = pick_class_target(cur)) {
      // Only length-3 sorting classes are ever introduced here.
      auto [rule, repl] = class_step(cls->cls());
      assert(rule == RewriteRule::AdjacentSwap && cls->cls().length() == 3);
      (void)rule;
      cur = cur.substitute(*cls, repl);
      trace.steps.push_back({RewriteRule::TripleSort, *cls, repl});
      continue;
    }
    auto target = pick_long_coordinate(cur);
    if (!target) break;
    TracePolynomial repl = quad_expansion(target->indices());
    cur = cur.substitute(*target, repl);
    trace.steps.push_back({RewriteRule::QuadExpand, *target, repl});
  }
  trace.output = cur;
  return trace;
}

ReductionTrace Reducer::traced_normal_form(const TracePolynomial& p) {
  ReductionTrace first = traced_reduce_to_T(p);
  ReductionTrace second = traced_reduce_to_T0(first.output);
  ReductionTrace trace;
  trace.input = p;
  trace.steps = std::move(first.steps);
  trace.steps.insert(trace.steps.end(), second.steps.begin(), second.steps.end());
  trace.output = second.output;
  return trace;
}

TracePolynomial replay(const ReductionTrace& trace) {
  TracePolynomial cur = trace.input;
  for (const ReductionStep& s : trace.steps) {
    cur = cur.substitute(s.variable, s.replacement);
  }
  return cur;
}

Reducer& default_reducer() {
  static Reducer reducer;
  return reducer;
}

TracePolynomial reduce_class(const ConjClass& c) { return default_reducer().reduce_class(c); }
TracePolynomial reduce_to_T(const TracePolynomial& p) { return default_reducer().reduce_to_T(p); }
TracePolynomial reduce_to_T0(const TracePolynomial& p) {
  return default_reducer().reduce_to_T0(p);
}
TracePolynomial psi_normal_form(const TracePolynomial& p) {
  return default_reducer().psi_normal_form(p);
}

TracePolynomial fundamental_relation(const Word& w1, const Word& w2) {
  return class_var(word_concat(w1, w2)) + class_var(word_concat(w1, word_inverse(w2))) -
         class_var(w1) * class_var(w2);
}

}  // namespace skein
