#include "skein/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <list>
#include <map>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::GrevLex ? "grevlex" : "lex";
}

std::optional<MonomialOrder> parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::GrevLex;
  if (name == "lex") return MonomialOrder::Lex;
  return std::nullopt;
}

namespace {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Exponent vectors are indexed by rank, most significant variable first.
int compare(const Exponents& a, const Exponents& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Reverse-lex tie break: the rightmost difference decides, and the
  // monomial with the smaller entry there is the larger one.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponents& a, const Exponents& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents subtract(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

// Terms sorted descending in the monomial order; leading term first.
// Coefficients are kept integer and primitive (content 1, positive lead).
struct GPoly {
  std::vector<std::pair<Exponents, mpz_class>> terms;
  bool zero() const { return terms.empty(); }
  const Exponents& lead_exp() const { return terms.front().first; }
  const mpz_class& lead_coeff() const { return terms.front().second; }
};

class Engine {
 public:
  Engine(std::vector<TraceVar> ranked_vars, const GroebnerOptions& options)
      : vars_(std::move(ranked_vars)), options_(options) {
    for (std::size_t i = 0; i < vars_.size(); ++i) rank_.emplace(vars_[i], i);
  }

  const std::vector<TraceVar>& vars() const { return vars_; }

  GPoly to_gpoly(const TracePolynomial& p) const {
    // Clear denominators, then make primitive.
    mpz_class denom = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
                                                 c.get_den_mpz_t());
    GPoly out;
    for (const auto& [m, c] : p.terms()) {
      Exponents e(vars_.size(), 0);
      for (const TraceVar& v : m.factors()) {
        auto it = rank_.find(v);
        if (it == rank_.end()) {
          throw std::invalid_argument("polynomial uses a variable outside the ideal's alphabet: " +
                                      format_var(v));
        }
        ++e[it->second];
      }
      Rat scaled = c * denom;
      out.terms.emplace_back(std::move(e), mpz_class(scaled.get_num()));
    }
    std::sort(out.terms.begin(), out.terms.end(), [&](const auto& x, const auto& y) {
      return compare(x.first, y.first, options_.order) > 0;
    });
    make_primitive(out);
    return out;
  }

  // The rational polynomial with monic leading coefficient.
  TracePolynomial from_gpoly(const GPoly& p) const {
    TracePolynomial out;
    if (p.zero()) return out;
    Rat lead(p.lead_coeff());
    for (const auto& [e, c] : p.terms) {
      std::vector<TraceVar> factors;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) factors.push_back(vars_[i]);
      }
      out += TracePolynomial::term(Rat(c) / lead, Monomial(std::move(factors)));
    }
    return out;
  }

  static void make_primitive(GPoly& p) {
    if (p.zero()) return;
    mpz_class content = 0;
    for (const auto& [e, c] : p.terms) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      if (content == 1) break;
    }
    bool flip = p.lead_coeff() < 0;
    if (content == 1 && !flip) return;
    if (flip) content = -content;
    for (auto& [e, c] : p.terms) c /= content;
  }

  void spend() {
    if (++steps_ > options_.step_budget) {
      throw BudgetError("reduction step budget exceeded (" +
                        std::to_string(options_.step_budget) + " steps)");
    }
  }

  void poll_cancel() const {
    if (options_.cancel && options_.cancel->load(std::memory_order_relaxed)) {
      throw CancelledError();
    }
  }

  // p := a*p - b*(x^shift * g), merged in one pass.
  GPoly combine(const GPoly& p, const mpz_class& a, const mpz_class& b, const Exponents& shift,
                const GPoly& g) const {
    GPoly out;
    out.terms.reserve(p.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms.size() || j < g.terms.size()) {
      if (j >= g.terms.size()) {
        out.terms.emplace_back(p.terms[i].first, a * p.terms[i].second);
        ++i;
        continue;
      }
      Exponents ge = add(g.terms[j].first, shift);
      if (i >= p.terms.size()) {
        mpz_class c = -b * g.terms[j].second;
        if (c != 0) out.terms.emplace_back(std::move(ge), std::move(c));
        ++j;
        continue;
      }
      int cmp = compare(p.terms[i].first, ge, options_.order);
      if (cmp > 0) {
        out.terms.emplace_back(p.terms[i].first, a * p.terms[i].second);
        ++i;
      } else if (cmp < 0) {
        mpz_class c = -b * g.terms[j].second;
        if (c != 0) out.terms.emplace_back(std::move(ge), std::move(c));
        ++j;
      } else {
        mpz_class c = a * p.terms[i].second - b * g.terms[j].second;
        if (c != 0) out.terms.emplace_back(std::move(ge), std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Among basis members dividing `e`, the one with the fewest terms.
  static int pick_reducer(const std::vector<GPoly>& basis, const std::vector<bool>& alive,
                          const Exponents& e) {
    int best = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!alive[k] || basis[k].zero()) continue;
      if (!divides(basis[k].lead_exp(), e)) continue;
      if (best < 0 || basis[k].terms.size() < basis[static_cast<std::size_t>(best)].terms.size()) {
        best = static_cast<int>(k);
      }
    }
    return best;
  }

  // Full normal form (head and tail), integer-primitive output.
  GPoly normal_form(GPoly p, const std::vector<GPoly>& basis, const std::vector<bool>& alive) {
    const bool verbose = std::getenv("SKEIN_GB_VERBOSE") != nullptr;
    std::uint64_t local = 0;
    GPoly out;
    make_primitive(p);
    while (!p.zero()) {
      if (verbose && ++local % 2000 == 0) {
        std::size_t maxbits = 0;
        for (const auto& [e, c] : p.terms) {
          maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
        }
        std::fprintf(stderr, "[nf] reductions=%llu work_terms=%zu out_terms=%zu bits=%zu\n",
                     static_cast<unsigned long long>(local), p.terms.size(), out.terms.size(),
                     maxbits);
      }
      int k = pick_reducer(basis, alive, p.lead_exp());
      if (k < 0) {
        out.terms.push_back(p.terms.front());
        p.terms.erase(p.terms.begin());
        continue;
      }
      const GPoly& g = basis[static_cast<std::size_t>(k)];
      mpz_class gc = g.lead_coeff();
      mpz_class pc = p.lead_coeff();
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), gc.get_mpz_t(), pc.get_mpz_t());
      mpz_class a = gc / d;      // multiply p by this
      mpz_class b = pc / d;      // multiply shifted g by this
      Exponents shift = subtract(p.lead_exp(), g.lead_exp());
      if (a != 1) {
        for (auto& [e, c] : out.terms) c *= a;
      }
      p = combine(p, a, b, shift, g);
      spend();
    }
    make_primitive(out);
    return out;
  }

  GPoly normal_form(GPoly p, const std::vector<GPoly>& basis) {
    return normal_form(std::move(p), basis, std::vector<bool>(basis.size(), true));
  }

  // Exact division over the rationals; returns the unique remainder.
  // Used for queries, not in the basis-completion loop.
  TracePolynomial rational_normal_form(const TracePolynomial& p, const std::vector<GPoly>& basis) {
    std::vector<std::pair<Exponents, Rat>> work;
    for (const auto& [m, c] : p.terms()) {
      Exponents e(vars_.size(), 0);
      for (const TraceVar& v : m.factors()) {
        auto it = rank_.find(v);
        if (it == rank_.end()) {
          throw std::invalid_argument("polynomial uses a variable outside the ideal's alphabet: " +
                                      format_var(v));
        }
        ++e[it->second];
      }
      work.emplace_back(std::move(e), c);
    }
    std::sort(work.begin(), work.end(), [&](const auto& x, const auto& y) {
      return compare(x.first, y.first, options_.order) > 0;
    });

    std::vector<bool> alive(basis.size(), true);
    TracePolynomial remainder;
    while (!work.empty()) {
      auto [e, c] = work.front();
      work.erase(work.begin());
      if (c == 0) continue;
      int k = pick_reducer(basis, alive, e);
      if (k < 0) {
        std::vector<TraceVar> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
          for (int x = 0; x < e[i]; ++x) factors.push_back(vars_[i]);
        }
        remainder += TracePolynomial::term(c, Monomial(std::move(factors)));
        continue;
      }
      const GPoly& g = basis[static_cast<std::size_t>(k)];
      Rat factor = c / Rat(g.lead_coeff());
      Exponents shift = subtract(e, g.lead_exp());
      // work -= factor * x^shift * g  (the leading terms cancel exactly).
      for (std::size_t t = 1; t < g.terms.size(); ++t) {
        Exponents ge = add(g.terms[t].first, shift);
        Rat gc = -factor * Rat(g.terms[t].second);
        auto it = std::lower_bound(work.begin(), work.end(), ge,
                                   [&](const auto& term, const Exponents& key) {
                                     return compare(term.first, key, options_.order) > 0;
                                   });
        if (it != work.end() && it->first == ge) {
          it->second += gc;
          if (it->second == 0) work.erase(it);
        } else if (gc != 0) {
          work.insert(it, {std::move(ge), std::move(gc)});
        }
      }
      spend();
    }
    return remainder;
  }

  GPoly s_poly(const GPoly& f, const GPoly& g) {
    Exponents l = lcm_exp(f.lead_exp(), g.lead_exp());
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), f.lead_coeff().get_mpz_t(), g.lead_coeff().get_mpz_t());
    mpz_class a = g.lead_coeff() / d;
    mpz_class b = f.lead_coeff() / d;
    GPoly fa;
    fa.terms.reserve(f.terms.size());
    Exponents shift_f = subtract(l, f.lead_exp());
    for (const auto& [e, c] : f.terms) fa.terms.emplace_back(add(e, shift_f), c);
    return combine(fa, a, b, subtract(l, g.lead_exp()), g);
  }

  struct Pair {
    std::size_t i, j;
    Exponents l;
    int degree;
  };

  // Gebauer-Moller update: add pairs of `t` against all alive members,
  // pruning with the M/F/B criteria, and retire alive pairs killed by t.
  void update_pairs(std::vector<Pair>& pending, const std::vector<GPoly>& basis,
                    const std::vector<bool>& alive, std::size_t t) {
    const Exponents& lt = basis[t].lead_exp();
    // B-criterion: drop old pairs strictly covered by the newcomer.
    std::erase_if(pending, [&](const Pair& p) {
      if (!divides(lt, p.l)) return false;
      if (lcm_exp(basis[p.i].lead_exp(), lt) == p.l) return false;
      if (lcm_exp(basis[p.j].lead_exp(), lt) == p.l) return false;
      return true;
    });
    // Candidate new pairs.
    struct Cand {
      std::size_t i;
      Exponents l;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (!alive[i] || basis[i].zero()) continue;
      cands.push_back({i, lcm_exp(basis[i].lead_exp(), lt)});
    }
    // M-criterion: drop a candidate whose lcm is a proper multiple of
    // another candidate's lcm.
    for (auto& a : cands) {
      for (auto& b : cands) {
        if (&a == &b || !b.keep) continue;
        if (a.l != b.l && divides(b.l, a.l)) {
          a.keep = false;
          break;
        }
      }
    }
    // F-criterion: among equal lcms keep one representative.
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].keep) continue;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].keep && cands[y].l == cands[x].l) cands[y].keep = false;
      }
    }
    // Product criterion last: coprime pairs are dropped outright.
    for (auto& c : cands) {
      if (c.keep && coprime(basis[c.i].lead_exp(), lt)) c.keep = false;
    }
    for (auto& c : cands) {
      if (c.keep) pending.push_back({c.i, t, c.l, total_degree(c.l)});
    }
  }

  std::vector<GPoly> buchberger_loop(std::vector<GPoly> gens) {
    std::vector<GPoly> basis;
    std::vector<bool> alive;
    std::vector<Pair> pending;

    auto insert = [&](GPoly p) {
      basis.push_back(std::move(p));
      alive.push_back(true);
      std::size_t t = basis.size() - 1;
      update_pairs(pending, basis, alive, t);
      // Retire members whose leading term the newcomer divides.
      for (std::size_t i = 0; i < t; ++i) {
        if (alive[i] && divides(basis[t].lead_exp(), basis[i].lead_exp())) alive[i] = false;
      }
    };

    // Seed with inter-reduced generators, smallest leading terms first.
    std::sort(gens.begin(), gens.end(), [&](const GPoly& a, const GPoly& b) {
      return compare(a.lead_exp(), b.lead_exp(), options_.order) < 0;
    });
    for (GPoly& g : gens) {
      GPoly r = basis.empty() ? std::move(g) : normal_form(std::move(g), basis, alive);
      if (!r.zero()) insert(std::move(r));
    }

    auto pair_less = [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (int c = compare(a.l, b.l, options_.order); c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    };

    const bool verbose = std::getenv("SKEIN_GB_VERBOSE") != nullptr;
    std::uint64_t handled = 0;
    while (!pending.empty()) {
      poll_cancel();
      auto best = std::min_element(pending.begin(), pending.end(), pair_less);
      Pair pair = *best;
      pending.erase(best);
      GPoly r = normal_form(s_poly(basis[pair.i], basis[pair.j]), basis, alive);
      if (verbose && ++handled % 25 == 0) {
        std::size_t nalive = 0, maxterms = 0, maxbits = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (!alive[i]) continue;
          ++nalive;
          maxterms = std::max(maxterms, basis[i].terms.size());
          for (const auto& [e, c] : basis[i].terms) {
            maxbits = std::max(maxbits, mpz_sizeinbase(c.get_mpz_t(), 2));
          }
        }
        std::fprintf(stderr, "[gb] pairs=%zu deg=%d basis=%zu maxterms=%zu maxbits=%zu steps=%llu\n",
                     pending.size(), pair.degree, nalive, maxterms, maxbits,
                     static_cast<unsigned long long>(steps_));
      }
      if (!r.zero()) insert(std::move(r));
    }

    std::vector<GPoly> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (alive[i]) out.push_back(std::move(basis[i]));
    }
    return out;
  }

  std::vector<GPoly> reduce_basis(std::vector<GPoly> basis) {
    // Remove members whose leading term is divisible by another's.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].zero()) {
        keep[i] = false;
        continue;
      }
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j || !keep[j] || basis[j].zero()) continue;
        if (divides(basis[j].lead_exp(), basis[i].lead_exp()) &&
            (basis[j].lead_exp() != basis[i].lead_exp() || j < i)) {
          keep[i] = false;
          break;
        }
      }
    }
    std::vector<GPoly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (keep[i]) kept.push_back(std::move(basis[i]));
    }
    // Tail-reduce each member against the others.
    std::vector<GPoly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<bool> alive(kept.size(), true);
      alive[i] = false;
      GPoly r = normal_form(kept[i], kept, alive);
      if (!r.zero()) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) {
      return compare(a.lead_exp(), b.lead_exp(), options_.order) > 0;
    });
    return out;
  }

  void assert_groebner(const std::vector<GPoly>& basis) {
    std::vector<bool> alive(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (coprime(basis[i].lead_exp(), basis[j].lead_exp())) continue;
        GPoly r = normal_form(s_poly(basis[i], basis[j]), basis, alive);
        if (!r.zero()) {
          throw std::logic_error("S-polynomial did not reduce to zero in the final basis");
        }
      }
    }
  }

 private:
  std::vector<TraceVar> vars_;
  std::map<TraceVar, std::size_t> rank_;
  GroebnerOptions options_;
  std::uint64_t steps_ = 0;
};

std::vector<TraceVar> ranked(std::vector<TraceVar> vars) {
  std::sort(vars.begin(), vars.end());
  const char* rank = std::getenv("SKEIN_GB_RANK");
  if (!rank || std::string(rank) != "shortest") {
    std::reverse(vars.begin(), vars.end());  // most significant first
  }
  return vars;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<TraceVar> ranked_variables, MonomialOrder order,
                             std::vector<TracePolynomial> basis)
    : variables_(std::move(ranked_variables)), order_(order), basis_(std::move(basis)) {}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& options) {
  Engine engine(ranked(ideal.variables), options);
  std::vector<GPoly> gens;
  for (const TracePolynomial& p : ideal.generators) {
    if (!p.is_zero()) gens.push_back(engine.to_gpoly(p));
  }
  std::vector<GPoly> reduced = engine.reduce_basis(engine.buchberger_loop(gens));
  // Postconditions checked unconditionally: every S-polynomial of the
  // returned basis reduces to zero, and every input generator does too.
  engine.assert_groebner(reduced);
  for (const GPoly& g : gens) {
    if (!engine.normal_form(g, reduced).zero()) {
      throw std::logic_error("input generator does not reduce to zero in the final basis");
    }
  }
  std::vector<TracePolynomial> basis;
  basis.reserve(reduced.size());
  for (const GPoly& g : reduced) basis.push_back(engine.from_gpoly(g));
  return GroebnerBasis(engine.vars(), options.order, std::move(basis));
}

TracePolynomial normal_form_mod(const GroebnerBasis& g, const TracePolynomial& p,
                                const GroebnerOptions& options) {
  GroebnerOptions opts = options;
  opts.order = g.order();
  Engine engine(g.ranked_variables(), opts);
  std::vector<GPoly> basis;
  for (const TracePolynomial& b : g.basis()) basis.push_back(engine.to_gpoly(b));
  return engine.rational_normal_form(p, basis);
}

bool member(const GroebnerBasis& g, const TracePolynomial& p, const GroebnerOptions& options) {
  return normal_form_mod(g, p, options).is_zero();
}

QuotientDimension quotient_dimension(const GroebnerBasis& g) {
  QuotientDimension out;
  if (g.is_unit_ideal()) {
    out.finite = true;
    out.dimension = 0;
    return out;
  }
  GroebnerOptions opts;
  opts.order = g.order();
  Engine engine(g.ranked_variables(), opts);
  std::vector<Exponents> leads;
  for (const TracePolynomial& b : g.basis()) leads.push_back(engine.to_gpoly(b).lead_exp());

  const std::size_t nvars = g.ranked_variables().size();
  std::vector<int> bound(nvars, -1);
  for (const Exponents& l : leads) {
    int nonzero = -1;
    bool pure = true;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (l[i] > 0) {
        if (nonzero >= 0) {
          pure = false;
          break;
        }
        nonzero = static_cast<int>(i);
      }
    }
    if (pure && nonzero >= 0) {
      int d = l[static_cast<std::size_t>(nonzero)];
      std::size_t at = static_cast<std::size_t>(nonzero);
      if (bound[at] < 0 || d < bound[at]) bound[at] = d;
    }
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (bound[i] < 0) return out;  // free direction: infinite dimension
  }

  // Count monomials under the staircase.
  std::uint64_t count = 0;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (at == nvars) {
      for (const Exponents& l : leads) {
        if (divides(l, e)) return;
      }
      ++count;
      return;
    }
    for (int k = 0; k < bound[at]; ++k) {
      e[at] = k;
      self(self, at + 1);
    }
    e[at] = 0;
  };
  rec(rec, 0);
  out.finite = true;
  out.dimension = count;
  return out;
}

std::string format_dimension(const QuotientDimension& d) {
  return d.finite ? std::to_string(d.dimension) : "INFINITE";
}

}  // namespace skein
