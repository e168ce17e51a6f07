#pragma once

// Exact matrices, projective points and elements of PGL3.

#include <array>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

/// Strict weak order on scalars of one field (numeric for Q, by residue for F_p).
bool scalar_less(const Scalar& a, const Scalar& b);

/// A point of P^2. Stored in canonical form: first nonzero coordinate is 1.
class ProjPoint {
 public:
  /// Throws InvalidArgument if all coordinates vanish.
  ProjPoint(Scalar x, Scalar y, Scalar z);
  explicit ProjPoint(const std::array<Scalar, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}
  /// The coordinate point e_i.
  static ProjPoint unit(const Field& f, int i);

  const Scalar& operator[](int i) const { return c_[i]; }
  const std::array<Scalar, 3>& coords() const { return c_; }
  Field field() const { return c_[0].field(); }

  std::string to_string() const;  // "[1:0:-2/3]"

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  std::array<Scalar, 3> c_;
};

/// Dense 3x3 matrix. Entry (i, j) is row i, column j.
class Mat3 {
 public:
  explicit Mat3(const Field& f);
  explicit Mat3(std::array<std::array<Scalar, 3>, 3> rows) : m_(std::move(rows)) {}

  static Mat3 identity(const Field& f);
  static Mat3 diagonal(const Scalar& a, const Scalar& b, const Scalar& c);
  /// Columns given as points or coordinate arrays.
  static Mat3 from_columns(const std::array<Scalar, 3>& c0, const std::array<Scalar, 3>& c1,
                           const std::array<Scalar, 3>& c2);
  /// Permutation matrix P with P e_j = e_{perm[j]}.
  static Mat3 permutation(const Field& f, const std::array<int, 3>& perm);

  Scalar& operator()(int i, int j) { return m_[i][j]; }
  const Scalar& operator()(int i, int j) const { return m_[i][j]; }
  Field field() const { return m_[0][0].field(); }
  std::array<Scalar, 3> column(int j) const { return {m_[0][j], m_[1][j], m_[2][j]}; }

  Scalar det() const;
  /// Inverse by the adjugate formula; throws SingularMatrix.
  Mat3 inverse() const;
  Mat3 transpose() const;
  Mat3 scaled(const Scalar& s) const;
  std::array<Scalar, 3> apply(const std::array<Scalar, 3>& v) const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m_ == b.m_; }
  friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

  std::string to_string() const;  // "[[1,0,0],[0,1,0],[0,0,1]]"

 private:
  std::array<std::array<Scalar, 3>, 3> m_;
};

/// Parses "[[a,b,c],[d,e,f],[g,h,i]]".
Mat3 parse_matrix(const Field& f, const std::string& text);

/// An element of PGL3: invertible matrix up to scalar, stored with its first
/// nonzero entry in row-major order equal to 1. As a map of P^2 it sends the
/// column vector v to M v, so component i of the map is sum_j M(i,j) var_j
/// and composition f o g corresponds to the product M_f M_g.
class LinMap {
 public:
  /// Throws SingularMatrix if det = 0.
  explicit LinMap(const Mat3& m);
  static LinMap identity(const Field& f) { return LinMap(Mat3::identity(f)); }

  const Mat3& matrix() const { return m_; }
  Field field() const { return m_.field(); }
  bool is_identity() const;
  LinMap inverse() const { return LinMap(m_.inverse()); }
  ProjPoint apply(const ProjPoint& p) const { return ProjPoint(m_.apply(p.coords())); }

  /// True if the map fixes [1:0:0] (the matrix has M(1,0) = M(2,0) = 0).
  bool in_dejonquieres() const;

  friend LinMap operator*(const LinMap& a, const LinMap& b) { return LinMap(a.m_ * b.m_); }
  friend bool operator==(const LinMap& a, const LinMap& b) { return a.m_ == b.m_; }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

  std::string to_string() const { return m_.to_string(); }

 private:
  Mat3 m_;
};

/// Dense square matrix of arbitrary size.
class Matrix {
 public:
  Matrix(const Field& f, int n);
  static Matrix identity(const Field& f, int n);

  int size() const { return n_; }
  Field field() const { return a_.front().field(); }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;

  /// Determinant by fraction-free Bareiss elimination.
  Scalar det() const;
  /// Inverse by Bareiss elimination on [A | I]; throws SingularMatrix.
  Matrix inverse() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int n_;
  std::vector<Scalar> a_;
};

}  // namespace cremona
