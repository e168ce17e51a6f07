#pragma once

// The rational Cremona action on triples of symmetric matrices: linear maps
// act by linear combination, sigma by componentwise inversion.

#include <array>
#include <string>

#include "cremona/linalg.hpp"
#include "cremona/word.hpp"

namespace cremona {

/// Three symmetric n x n matrices, up to one common nonzero scalar. Stored
/// with the first nonzero entry (A1, A2, A3 in row-major order) equal to 1.
class SymTriple {
 public:
  /// Throws InvalidArgument for non-symmetric, mismatched or all-zero input.
  SymTriple(Matrix a1, Matrix a2, Matrix a3);

  int n() const { return a_[0].size(); }
  Field field() const { return a_[0].field(); }
  const Matrix& operator[](int i) const { return a_[i]; }
  const std::array<Matrix, 3>& matrices() const { return a_; }

  friend bool operator==(const SymTriple& a, const SymTriple& b) { return a.a_ == b.a_; }
  friend bool operator!=(const SymTriple& a, const SymTriple& b) { return !(a == b); }

 private:
  std::array<Matrix, 3> a_;
};

/// (n+1)(n+2)/2 - 1.
long giz_dim(int n);

/// A'_i = sum_j M(i, j) A_j.
SymTriple giz_act_lin(const LinMap& g, const SymTriple& t);

/// (A1^-1, A2^-1, A3^-1). Throws SingularComponent naming the component.
SymTriple giz_act_sigma(const SymTriple& t);

/// Applies the letters right to left. Throws SingularComponent naming the
/// letter index.
SymTriple giz_act_word(const Word& w, const SymTriple& t);

/// (A3^-1 - A1^-1)^-1 == A3 - A3 (A3 - A1)^-1 A3. Throws SingularInput.
bool giz_check_rel5_identity(const Matrix& a1, const Matrix& a3);

/// True if C A_i C^T = B_i for all i, up to one common scalar.
bool giz_congruent_via(const SymTriple& a, const SymTriple& b, const Matrix& c);

/// n, then the three matrices row by row, separated by blank lines.
SymTriple parse_triple(const Field& f, const std::string& text);
std::string format_triple(const SymTriple& t);

}  // namespace cremona
