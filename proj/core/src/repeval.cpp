#include "skein/repeval.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Representation::Representation(std::map<int, Matrix2> assignment, RepMode mode)
    : assignment_(std::move(assignment)), mode_(mode) {
  if (mode_ == RepMode::SL2) {
    for (const auto& [index, m] : assignment_) {
      if (m.det() != 1) {
        throw std::invalid_argument("SL2 representation requires det = 1 for a" +
                                    std::to_string(index));
      }
    }
  }
}

const Matrix2& Representation::matrix(int index) const {
  auto it = assignment_.find(index);
  if (it == assignment_.end()) {
    throw std::invalid_argument("no matrix assigned to a" + std::to_string(index));
  }
  return it->second;
}

Matrix2 random_sl2(Rng& rng, int size_bound) {
  if (size_bound < 1) throw std::invalid_argument("size_bound must be >= 1");
  int shears = static_cast<int>(rng.uniform(2, 6));
  Matrix2 m = Matrix2::identity();
  for (int i = 0; i < shears; ++i) {
    long off = rng.uniform(1, size_bound);
    if (rng.coin()) off = -off;
    m = m * (rng.coin() ? Matrix2::upper_shear(off) : Matrix2::lower_shear(off));
  }
  return m;
}

Matrix2 random_any(Rng& rng, int size_bound) {
  if (size_bound < 1) throw std::invalid_argument("size_bound must be >= 1");
  auto entry = [&] { return Rat(rng.uniform(-size_bound, size_bound)); };
  return {entry(), entry(), entry(), entry()};
}

Representation random_representation(const std::set<int>& indices, RepMode mode, Rng& rng,
                                     int size_bound) {
  std::map<int, Matrix2> assign;
  for (int i : indices) {
    assign.emplace(i, mode == RepMode::SL2 ? random_sl2(rng, size_bound)
                                           : random_any(rng, size_bound));
  }
  return Representation(std::move(assign), mode);
}

Matrix2 eval_word(const Representation& rep, const Word& w) {
  Matrix2 out = Matrix2::identity();
  for (const Letter& l : w.letters()) {
    const Matrix2& m = rep.matrix(l.index);
    if (l.sign > 0) {
      out = out * m;
    } else if (rep.mode() == RepMode::SL2) {
      out = out * m.adjugate();  // det = 1, so the adjugate is the inverse
    } else {
      out = out * m.inverse();
    }
  }
  return out;
}

Rat eval_poly(const Representation& rep, const TracePolynomial& p) {
  std::map<TraceVar, Rat> cache;
  return p.evaluate([&](const TraceVar& v) {
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    Rat t = eval_word(rep, v.word()).trace();
    cache.emplace(v, t);
    return t;
  });
}

VerifyReport verify_identity(const TracePolynomial& p, int trials, std::uint64_t seed,
                             RepMode mode, int size_bound) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::set<int> indices;
  for (const TraceVar& v : p.variables()) {
    const Word vw = v.word();
    for (const Letter& l : vw.letters()) {
      if (mode == RepMode::Any && l.sign < 0) {
        throw std::invalid_argument(
            "Any-mode verification requires an inverse-free polynomial");
      }
      indices.insert(l.index);
    }
  }

  VerifyReport report;
  report.trials = trials;
  report.seed = seed;
  report.mode = mode;

  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng trial_rng = root.split(static_cast<std::uint64_t>(t));
    Representation rep = random_representation(indices, mode, trial_rng, size_bound);
    Rat value = eval_poly(rep, p);
    if (value != 0) {
      report.passed = false;
      report.failed_trial = t;
      report.counterexample = rep;
      report.counterexample_value = value;
      return report;
    }
  }
  report.passed = true;
  return report;
}

namespace {

Rat parse_entry(const std::string& text, std::size_t line_no) {
  Rat out;
  if (!parse_rational(text, out)) {
    throw ParseError("bad rational '" + text + "' in representation file", line_no);
  }
  return out;
}

}  // namespace

bool parse_rational(const std::string& text, Rat& out) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) return false;
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      out = Rat(s);
    } else {
      std::string num = s.substr(0, slash);
      std::string den = s.substr(slash + 1);
      if (num.empty() || den.empty()) return false;
      out = Rat(num + "/" + den);
    }
    out.canonicalize();
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

Representation parse_representation(const std::string& text, RepMode mode) {
  std::map<int, Matrix2> assign;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty() || trimmed[0] == '#') continue;
    // a<k>=[[p,q],[r,s]]
    if (trimmed[0] != 'a') throw ParseError("expected 'a<k> = [[p,q],[r,s]]'", line_no);
    std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in representation line", line_no);
    int index = 0;
    try {
      index = std::stoi(trimmed.substr(1, eq - 1));
    } catch (const std::exception&) {
      throw ParseError("bad generator index", line_no);
    }
    if (index < 1) throw ParseError("generator index must be >= 1", line_no);
    std::string rhs = trimmed.substr(eq + 1);
    if (rhs.size() < 4 || rhs.substr(0, 2) != "[[" || rhs.substr(rhs.size() - 2) != "]]") {
      throw ParseError("expected [[p,q],[r,s]]", line_no);
    }
    std::string body = rhs.substr(2, rhs.size() - 4);  // p,q],[r,s
    std::size_t mid = body.find("],[");
    if (mid == std::string::npos) throw ParseError("expected [[p,q],[r,s]]", line_no);
    std::string row0 = body.substr(0, mid);
    std::string row1 = body.substr(mid + 3);
    auto split2 = [&](const std::string& row) {
      std::size_t comma = row.find(',');
      if (comma == std::string::npos) throw ParseError("expected two entries per row", line_no);
      return std::pair<std::string, std::string>(row.substr(0, comma), row.substr(comma + 1));
    };
    auto [p, q] = split2(row0);
    auto [r, s] = split2(row1);
    Matrix2 m{parse_entry(p, line_no), parse_entry(q, line_no), parse_entry(r, line_no),
              parse_entry(s, line_no)};
    if (!assign.emplace(index, m).second) {
      throw ParseError("duplicate assignment for a" + std::to_string(index), line_no);
    }
  }
  return Representation(std::move(assign), mode);
}

std::string format_representation(const Representation& rep) {
  std::string out;
  for (const auto& [index, m] : rep.assignment()) {
    out += "a" + std::to_string(index) + " = " + format_matrix2(m) + "\n";
  }
  return out;
}

}  // namespace skein
