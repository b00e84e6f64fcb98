#pragma once

#include <array>
#include <string>

#include "skein/rational.hpp"

namespace skein {

// Exact rational 2x2 matrix, rows (a b / c d).
struct Matrix2 {
  Rat a, b, c, d;

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 upper_shear(const Rat& n) { return {1, n, 0, 1}; }
  static Matrix2 lower_shear(const Rat& m) { return {1, 0, m, 1}; }

  Rat trace() const { return a + d; }
  Rat det() const { return a * d - b * c; }
  Matrix2 adjugate() const { return {d, -b, -c, a}; }
  // Exact inverse via adjugate/determinant. Throws on determinant zero.
  Matrix2 inverse() const;

  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

std::string format_matrix2(const Matrix2& m);

// Exact rational 4x4 matrix (row-major).
struct Matrix4 {
  std::array<Rat, 16> e{};

  static Matrix4 identity();

  Rat& at(int r, int c) { return e[static_cast<std::size_t>(r) * 4 + c]; }
  const Rat& at(int r, int c) const { return e[static_cast<std::size_t>(r) * 4 + c]; }

  Matrix4 operator*(const Matrix4& o) const;
  Matrix4 operator-(const Matrix4& o) const;
  Matrix4 transpose() const;

  friend bool operator==(const Matrix4&, const Matrix4&) = default;
};

// Rows are the entries (a_i, b_i, c_i, d_i) of four 2x2 matrices.
Matrix4 m4_of(const Matrix2& A1, const Matrix2& A2, const Matrix2& A3, const Matrix2& A4);

// The constant pairing matrices: tr(XY) is the bilinear form m4 J m4^t, and
// J* relates it to tr(X)tr(Y).
Matrix4 j_const();
Matrix4 jstar_const();

// Exact determinant by cofactor expansion.
Rat det4(const Matrix4& m);

}  // namespace skein
