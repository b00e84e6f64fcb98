#include "skein/matrices.hpp"

#include <stdexcept>

namespace skein {

Matrix2 Matrix2::inverse() const {
  Rat dt = det();
  if (dt == 0) throw std::domain_error("matrix is singular");
  Matrix2 adj = adjugate();
  return {adj.a / dt, adj.b / dt, adj.c / dt, adj.d / dt};
}

std::string format_matrix2(const Matrix2& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," +
         to_string(m.d) + "]]";
}

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
  return m;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
  Matrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Rat sum = 0;
      for (int k = 0; k < 4; ++k) sum += at(r, k) * o.at(k, c);
      out.at(r, c) = sum;
    }
  }
  return out;
}

Matrix4 Matrix4::operator-(const Matrix4& o) const {
  Matrix4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = e[i] - o.e[i];
  return out;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out.at(r, c) = at(c, r);
  }
  return out;
}

Matrix4 m4_of(const Matrix2& A1, const Matrix2& A2, const Matrix2& A3, const Matrix2& A4) {
  Matrix4 out;
  const Matrix2* rows[4] = {&A1, &A2, &A3, &A4};
  for (int r = 0; r < 4; ++r) {
    out.at(r, 0) = rows[r]->a;
    out.at(r, 1) = rows[r]->b;
    out.at(r, 2) = rows[r]->c;
    out.at(r, 3) = rows[r]->d;
  }
  return out;
}

Matrix4 j_const() {
  Matrix4 j;
  j.at(0, 0) = 1;
  j.at(1, 2) = 1;
  j.at(2, 1) = 1;
  j.at(3, 3) = 1;
  return j;
}

Matrix4 jstar_const() {
  Matrix4 j;
  j.at(0, 3) = 1;
  j.at(1, 1) = -1;
  j.at(2, 2) = -1;
  j.at(3, 0) = 1;
  return j;
}

namespace {

Rat det3(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e, const Rat& f,
         const Rat& g, const Rat& h, const Rat& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

Rat det4(const Matrix4& m) {
  Rat total = 0;
  for (int c = 0; c < 4; ++c) {
    // Minor of entry (0, c).
    Rat sub[9];
    int k = 0;
    for (int r = 1; r < 4; ++r) {
      for (int cc = 0; cc < 4; ++cc) {
        if (cc == c) continue;
        sub[k++] = m.at(r, cc);
      }
    }
    Rat minor = det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
    Rat piece = m.at(0, c) * minor;
    total += (c % 2 == 0) ? piece : -piece;
  }
  return total;
}

}  // namespace skein
