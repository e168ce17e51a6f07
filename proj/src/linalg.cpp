#include "cremona/linalg.hpp"

#include <cctype>

#include "cremona/error.hpp"

namespace cremona {

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.rational() < b.rational();
  return a.residue().value < b.residue().value;
}

// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(Scalar x, Scalar y, Scalar z) : c_{std::move(x), std::move(y), std::move(z)} {
  int k = 0;
  while (k < 3 && c_[k].is_zero()) ++k;
  if (k == 3) fail(ErrorCode::InvalidArgument, "all coordinates of a projective point vanish");
  if (!c_[k].is_one()) {
    Scalar inv = c_[k].inverse();
    for (auto& v : c_) v *= inv;
  }
}

ProjPoint ProjPoint::unit(const Field& f, int i) {
  std::array<Scalar, 3> c{f.zero(), f.zero(), f.zero()};
  c[i] = f.one();
  return ProjPoint(c);
}

std::string ProjPoint::to_string() const {
  return "[" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + "]";
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (int i = 0; i < 3; ++i) {
    if (scalar_less(a.c_[i], b.c_[i])) return true;
    if (scalar_less(b.c_[i], a.c_[i])) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------

Mat3::Mat3(const Field& f) {
  for (auto& row : m_) row.fill(f.zero());
}

Mat3 Mat3::identity(const Field& f) {
  Mat3 m(f);
  for (int i = 0; i < 3; ++i) m(i, i) = f.one();
  return m;
}

Mat3 Mat3::diagonal(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat3 m(a.field());
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

Mat3 Mat3::from_columns(const std::array<Scalar, 3>& c0, const std::array<Scalar, 3>& c1,
                        const std::array<Scalar, 3>& c2) {
  Mat3 m(c0[0].field());
  for (int i = 0; i < 3; ++i) {
    m(i, 0) = c0[i];
    m(i, 1) = c1[i];
    m(i, 2) = c2[i];
  }
  return m;
}

Mat3 Mat3::permutation(const Field& f, const std::array<int, 3>& perm) {
  Mat3 m(f);
  for (int j = 0; j < 3; ++j) m(perm[j], j) = f.one();
  return m;
}

Scalar Mat3::det() const {
  const auto& a = m_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 Mat3::inverse() const {
  Scalar d = det();
  if (d.is_zero()) fail(ErrorCode::SingularMatrix, "matrix is singular");
  Scalar inv = d.inverse();
  Mat3 r(field());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // Cofactor of (j, i).
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r(i, j) = (m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0]) * inv;
    }
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r(field());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m_[j][i];
  return r;
}

Mat3 Mat3::scaled(const Scalar& s) const {
  Mat3 r = *this;
  for (auto& row : r.m_)
    for (auto& v : row) v *= s;
  return r;
}

std::array<Scalar, 3> Mat3::apply(const std::array<Scalar, 3>& v) const {
  std::array<Scalar, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r(a.field());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

std::string Mat3::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + m_[i][j].to_string();
    s += "]";
  }
  return s + "]";
}

Mat3 parse_matrix(const Field& f, const std::string& text) {
  std::vector<std::string> entries;
  std::string cur;
  int depth = 0, rows = 0;
  bool saw_entry = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') {
      ++depth;
      if (depth > 2) fail(ErrorCode::ParseError, "matrix nested too deeply: " + text);
      if (depth == 2) ++rows;
      continue;
    }
    if (c == ']' || c == ',') {
      if (depth == 2 && (c == ']' || !cur.empty() || saw_entry)) {
        if (cur.empty()) fail(ErrorCode::ParseError, "empty matrix entry: " + text);
        entries.push_back(cur);
        cur.clear();
      }
      if (c == ']') --depth;
      saw_entry = false;
      continue;
    }
    if (depth != 2) fail(ErrorCode::ParseError, "unexpected character in matrix: " + text);
    cur += c;
    saw_entry = true;
  }
  if (depth != 0 || rows != 3 || entries.size() != 9)
    fail(ErrorCode::ParseError, "expected a 3x3 matrix literal, got: " + text);
  Mat3 m(f);
  for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = f.parse_scalar(entries[k]);
  return m;
}

// ---------------------------------------------------------------------------

LinMap::LinMap(const Mat3& m) : m_(m) {
  if (m.det().is_zero()) fail(ErrorCode::SingularMatrix, "linear map with zero determinant: " + m.to_string());
  for (int k = 0; k < 9; ++k) {
    const Scalar& v = m_(k / 3, k % 3);
    if (v.is_zero()) continue;
    if (!v.is_one()) m_ = m_.scaled(v.inverse());
    break;
  }
}

bool LinMap::is_identity() const { return m_ == Mat3::identity(field()); }

bool LinMap::in_dejonquieres() const { return m_(1, 0).is_zero() && m_(2, 0).is_zero(); }

// ---------------------------------------------------------------------------

Matrix::Matrix(const Field& f, int n) : n_(n), a_(static_cast<std::size_t>(n) * n, f.zero()) {
  if (n <= 0) fail(ErrorCode::InvalidArgument, "matrix size must be positive");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

bool Matrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(field(), n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

namespace {

void check_sizes(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "matrix sizes differ");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_sizes(a, b);
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_sizes(a, b);
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_sizes(a, b);
  int n = a.size();
  Matrix r(a.field(), n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Scalar& v = a(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n; ++j) r(i, j) += v * b(k, j);
    }
  return r;
}

Scalar Matrix::det() const {
  std::vector<std::vector<Scalar>> m(n_, std::vector<Scalar>(n_, field().zero()));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  Scalar prev = field().one();
  bool negate = false;
  for (int k = 0; k < n_; ++k) {
    int p = k;
    while (p < n_ && m[p][k].is_zero()) ++p;
    if (p == n_) return field().zero();
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = field().zero();
    }
    prev = m[k][k];
  }
  return negate ? -m[n_ - 1][n_ - 1] : m[n_ - 1][n_ - 1];
}

Matrix Matrix::inverse() const {
  // Fraction-free Gauss-Jordan on [A | I]: after the last step the left block
  // is d*I and the right block d*A^{-1}, where d is the final pivot.
  const int w = 2 * n_;
  std::vector<std::vector<Scalar>> m(n_, std::vector<Scalar>(w, field().zero()));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
    m[i][n_ + i] = field().one();
  }
  Scalar prev = field().one();
  for (int k = 0; k < n_; ++k) {
    int p = k;
    while (p < n_ && m[p][k].is_zero()) ++p;
    if (p == n_) fail(ErrorCode::SingularMatrix, "matrix is singular");
    if (p != k) std::swap(m[p], m[k]);
    for (int i = 0; i < n_; ++i) {
      if (i == k) continue;
      for (int j = 0; j < w; ++j) {
        if (j == k) continue;
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = field().zero();
    }
    prev = m[k][k];
  }
  Scalar inv = prev.inverse();
  Matrix r(field(), n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = m[i][n_ + j] * inv;
  return r;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < n_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

}  // namespace cremona
