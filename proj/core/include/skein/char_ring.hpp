#pragma once

#include <string>
#include <vector>

#include "skein/groebner.hpp"
#include "skein/reduce.hpp"
#include "skein/trace_poly.hpp"
#include "skein/words.hpp"

namespace skein {

// A finite group presentation on generators a1..an. Relators are stored
// cyclically reduced and must be nonempty with indices <= n.
class Presentation {
 public:
  Presentation(int n, std::vector<Word> relators);

  int generator_count() const { return n_; }
  const std::vector<Word>& relators() const { return relators_; }

  // File format: "generators: <n>" then one "relator: <word>" per line.
  // Blank lines and '#' comments are skipped.
  static Presentation parse(const std::string& text);
  std::string format() const;

 private:
  int n_;
  std::vector<Word> relators_;
};

// The coordinate alphabet on n generators: every ascending tuple of at most
// three indices.
std::vector<TraceVar> t0_alphabet(int n);

// The symmetric pairing polynomial: t_i^2 - 4 on the diagonal and
// 2 t_ij - t_i t_j off it.
TracePolynomial m_entry(int i, int j);

// The defining generators of the free-group character ring in the
// coordinate alphabet, instantiated over all admissible index tuples.
std::vector<TracePolynomial> gm_generators(int n);

// For each relator w: (w) - 2 together with (w g) - (g) for g every single
// generator and ascending generator pair, all in normal form.
std::vector<TracePolynomial> relator_polynomials(const Presentation& p,
                                                 Reducer& reducer = default_reducer());

Ideal handlebody_ideal(int n);
Ideal manifold_ideal(const Presentation& p, Reducer& reducer = default_reducer());

// Sound (not complete) certificate: true means the normal form of p lies in
// the manifold ideal; false means "not certified".
bool certifies_psi_zero(const TracePolynomial& p, const Presentation& pres,
                        const GroebnerOptions& options = {},
                        Reducer& reducer = default_reducer());

}  // namespace skein
