#include "skein/char_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Presentation::Presentation(int n, std::vector<Word> relators) : n_(n) {
  if (n < 1) throw std::invalid_argument("presentation needs at least one generator");
  for (const Word& r : relators) {
    ConjClass c = canonical_class(r);
    if (c.trivial()) throw std::invalid_argument("trivial relator");
    for (const Letter& l : c.word().letters()) {
      if (l.index > n) {
        throw std::invalid_argument("relator uses generator a" + std::to_string(l.index) +
                                    " beyond the declared count");
      }
    }
    relators_.push_back(c.word());
  }
}

Presentation Presentation::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Word> relators;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string body = line.substr(start);
    if (body.rfind("generators:", 0) == 0) {
      try {
        n = std::stoi(body.substr(11));
      } catch (const std::exception&) {
        throw ParseError("bad generator count", line_no);
      }
    } else if (body.rfind("relator:", 0) == 0) {
      if (n < 1) throw ParseError("'generators:' must come before relators", line_no);
      relators.push_back(parse_word(body.substr(8)));
    } else {
      throw ParseError("expected 'generators: <n>' or 'relator: <word>'", line_no);
    }
  }
  if (n < 1) throw ParseError("missing 'generators: <n>' line", line_no);
  return Presentation(n, std::move(relators));
}

std::string Presentation::format() const {
  std::string out = "generators: " + std::to_string(n_) + "\n";
  for (const Word& r : relators_) out += "relator: " + format_word(r) + "\n";
  return out;
}

std::vector<TraceVar> t0_alphabet(int n) {
  if (n < 1) throw std::invalid_argument("need at least one generator");
  std::vector<TraceVar> out;
  for (int i = 1; i <= n; ++i) out.push_back(TraceVar::coordinate({i}));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(TraceVar::coordinate({i, j}));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back(TraceVar::coordinate({i, j, k}));
    }
  }
  return out;
}

namespace {

TracePolynomial tvar(std::initializer_list<int> indices) {
  std::vector<int> idx(indices);
  std::sort(idx.begin(), idx.end());
  return coordinate_poly(std::move(idx));
}

// Pair coordinate with the convention that a repeated index means the trace
// of the square: t_mm = t_m^2 - 2.
TracePolynomial t_pair(int i, int j) {
  if (i == j) return tvar({i}) * tvar({i}) - TracePolynomial::constant(2);
  return tvar({i, j});
}

TracePolynomial q1_poly(int i, int j, int k) {
  TracePolynomial ti = tvar({i}), tj = tvar({j}), tk = tvar({k});
  TracePolynomial tij = tvar({i, j}), tik = tvar({i, k}), tjk = tvar({j, k});
  TracePolynomial tijk = tvar({i, j, k});
  return ti * ti + tj * tj + tk * tk + tij * tij + tik * tik + tjk * tjk + tijk * tijk +
         tij * tik * tjk + tijk * ti * tj * tk - tijk * ti * tjk - tijk * tj * tik -
         tijk * tk * tij - ti * tj * tij - ti * tk * tik - tj * tk * tjk -
         TracePolynomial::constant(4);
}

TracePolynomial det4_of(const std::vector<std::vector<TracePolynomial>>& m) {
  TracePolynomial out;
  std::vector<int> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (p[a] > p[b]) ++inversions;
      }
    }
    TracePolynomial prod = TracePolynomial::constant(inversions % 2 == 0 ? 1 : -1);
    for (int r = 0; r < 4; ++r) prod = prod * m[r][p[r]];
    out += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TracePolynomial q2_poly(int i, int j) {
  std::vector<int> rows = {1, 2, i, j};
  std::vector<std::vector<TracePolynomial>> m(4, std::vector<TracePolynomial>(4));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = m_entry(rows[r], rows[c]);
  }
  return det4_of(m);
}

TracePolynomial q3_poly(int i, int j) {
  std::vector<int> row_idx = {1, 2, 3, j};
  std::vector<int> col_idx = {1, 2, 3, i};
  std::vector<std::vector<TracePolynomial>> m(4, std::vector<TracePolynomial>(4));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = m_entry(row_idx[r], col_idx[c]);
  }
  return det4_of(m);
}

// 2 t_abc + t_a t_b t_c - t_a t_bc - t_b t_ac - t_c t_ab, the expansion of
// t_abc - t_acb through the length-three sorting identity.
TracePolynomial antisymmetric_triple(int a, int b, int c) {
  return tvar({a, b, c}).scaled(2) + tvar({a}) * tvar({b}) * tvar({c}) -
         tvar({a}) * tvar({b, c}) - tvar({b}) * tvar({a, c}) - tvar({c}) * tvar({a, b});
}

TracePolynomial q4_poly(int i, int j, int k) {
  TracePolynomial first = antisymmetric_triple(1, 2, 3);
  TracePolynomial second = antisymmetric_triple(i, j, k);
  std::vector<std::vector<TracePolynomial>> m(4, std::vector<TracePolynomial>(4));
  std::vector<int> cols = {i, j, k};
  for (int r = 0; r < 3; ++r) {
    m[r][0] = tvar({r + 1});
    for (int c = 0; c < 3; ++c) m[r][c + 1] = t_pair(r + 1, cols[c]);
  }
  m[3][0] = TracePolynomial::constant(2);
  for (int c = 0; c < 3; ++c) m[3][c + 1] = tvar({cols[c]});
  return first * second - det4_of(m);
}

}  // namespace

TracePolynomial m_entry(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("indices must be >= 1");
  if (i == j) return tvar({i}) * tvar({i}) - TracePolynomial::constant(4);
  return tvar({i, j}).scaled(2) - tvar({i}) * tvar({j});
}

std::vector<TracePolynomial> gm_generators(int n) {
  if (n < 1) throw std::invalid_argument("need at least one generator");
  std::vector<TracePolynomial> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back(q1_poly(i, j, k));
    }
  }
  for (int i = 3; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(q2_poly(i, j));
  }
  for (int i = 4; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(q3_poly(i, j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back(q4_poly(i, j, k));
    }
  }
  return out;
}

std::vector<TracePolynomial> relator_polynomials(const Presentation& p, Reducer& reducer) {
  const int n = p.generator_count();
  std::vector<Word> gammas;
  for (int i = 1; i <= n; ++i) gammas.push_back(Word::generator(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      gammas.push_back(Word({Letter{i, +1}, Letter{j, +1}}));
    }
  }
  std::vector<TracePolynomial> out;
  for (const Word& w : p.relators()) {
    out.push_back(reducer.psi_normal_form(class_var(w) - TracePolynomial::constant(2)));
    for (const Word& g : gammas) {
      out.push_back(reducer.psi_normal_form(class_var(word_concat(w, g)) - class_var(g)));
    }
  }
  return out;
}

Ideal handlebody_ideal(int n) { return Ideal{t0_alphabet(n), gm_generators(n)}; }

Ideal manifold_ideal(const Presentation& p, Reducer& reducer) {
  Ideal ideal = handlebody_ideal(p.generator_count());
  for (TracePolynomial& q : relator_polynomials(p, reducer)) {
    ideal.generators.push_back(std::move(q));
  }
  return ideal;
}

bool certifies_psi_zero(const TracePolynomial& p, const Presentation& pres,
                        const GroebnerOptions& options, Reducer& reducer) {
  TracePolynomial q = reducer.psi_normal_form(p);
  if (q.is_zero()) return true;
  GroebnerBasis g = buchberger(manifold_ideal(pres, reducer), options);
  return member(g, q, options);
}

}  // namespace skein
