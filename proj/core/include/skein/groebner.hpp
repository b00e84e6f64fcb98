#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skein/trace_poly.hpp"

namespace skein {

enum class MonomialOrder { GrevLex, Lex };

std::string order_name(MonomialOrder o);
std::optional<MonomialOrder> parse_order(const std::string& name);

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::GrevLex;
  // Bound on elementary reduction steps; exceeding it raises BudgetError.
  std::uint64_t step_budget = 1'000'000;
  // Polled between S-polynomial reductions; raises CancelledError when set.
  const std::atomic<bool>* cancel = nullptr;
};

// A finite generating set over a declared coordinate alphabet.
struct Ideal {
  std::vector<TraceVar> variables;  // the allowed alphabet
  std::vector<TracePolynomial> generators;
};

// A reduced Groebner basis: inter-reduced, monic leading coefficients,
// every S-polynomial reducing to zero. Variables are ranked largest-first
// by (index count, tuple), so longer coordinates are eliminated first.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<TraceVar> ranked_variables, MonomialOrder order,
                std::vector<TracePolynomial> basis);

  const std::vector<TraceVar>& ranked_variables() const { return variables_; }
  MonomialOrder order() const { return order_; }
  const std::vector<TracePolynomial>& basis() const { return basis_; }
  bool is_unit_ideal() const;

 private:
  std::vector<TraceVar> variables_;  // most significant first
  MonomialOrder order_;
  std::vector<TracePolynomial> basis_;
};

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerOptions& options = {});

// Full multivariate division by the basis; the remainder is unique.
TracePolynomial normal_form_mod(const GroebnerBasis& g, const TracePolynomial& p,
                                const GroebnerOptions& options = {});
bool member(const GroebnerBasis& g, const TracePolynomial& p,
            const GroebnerOptions& options = {});

struct QuotientDimension {
  bool finite = false;
  std::uint64_t dimension = 0;  // meaningful when finite

  friend bool operator==(const QuotientDimension&, const QuotientDimension&) = default;
};

// Counts standard monomials outside the leading-term ideal; infinite when
// some variable has no pure power among the leading terms.
QuotientDimension quotient_dimension(const GroebnerBasis& g);

std::string format_dimension(const QuotientDimension& d);

}  // namespace skein
