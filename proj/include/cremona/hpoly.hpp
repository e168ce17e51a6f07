#pragma once

// Homogeneous polynomials in x, y, z over an exact field.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

/// Exponent triple (i, j, k) of x^i y^j z^k.
using Exponent = std::array<int, 3>;

/// A homogeneous polynomial. Terms are kept sorted by graded-lex order with
/// x > y > z (largest first) and never hold zero coefficients. The zero
/// polynomial has no terms and keeps whatever degree it was created with.
class HPoly {
 public:
  struct Term {
    Exponent e;
    Scalar c;
  };

  /// The zero polynomial of the given degree.
  HPoly(Field f, int degree);
  /// Combines like terms and drops zeros. Throws DegreeMismatch if an
  /// exponent does not sum to `degree`.
  HPoly(Field f, int degree, std::vector<Term> terms);

  static HPoly constant(const Scalar& c);
  static HPoly variable(Field f, int index);
  static HPoly monomial(const Scalar& c, Exponent e);
  /// a*x + b*y + c*z.
  static HPoly linear(const Scalar& a, const Scalar& b, const Scalar& c);

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Exponent& e) const;
  /// Coefficient of the graded-lex largest term; the polynomial must be nonzero.
  const Scalar& leading_coeff() const;

  HPoly operator-() const;
  HPoly scaled(const Scalar& s) const;
  /// Scales so the leading coefficient is 1 (zero stays zero).
  HPoly monic() const;
  HPoly pow(unsigned e) const;

  Scalar evaluate(const std::array<Scalar, 3>& p) const;

  /// Largest power of each variable dividing this polynomial.
  Exponent monomial_content() const;
  /// Divides by the monomial x^i y^j z^k; must divide exactly.
  HPoly divide_monomial(const Exponent& e) const;

  std::string to_string() const;
  /// Grammar: poly := term (('+'|'-') term)*, term := coeff? ('*'? var ('^' int)?)*
  static HPoly parse(const Field& f, std::string_view text);

  friend bool operator==(const HPoly& a, const HPoly& b);
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

 private:
  Field field_;
  int degree_;
  std::vector<Term> terms_;
};

/// Graded-lex comparison for equal-degree exponents: true if a > b.
bool grlex_greater(const Exponent& a, const Exponent& b);

HPoly hp_add(const HPoly& f, const HPoly& g);
HPoly hp_sub(const HPoly& f, const HPoly& g);
HPoly hp_mul(const HPoly& f, const HPoly& g);
/// f(gx, gy, gz). The three inputs must share one degree.
HPoly hp_substitute(const HPoly& f, const HPoly& gx, const HPoly& gy, const HPoly& gz);
/// Monic gcd. Not both inputs may be zero.
HPoly hp_gcd(const HPoly& f, const HPoly& g);
/// f / g; throws NotDivisible unless g divides f.
HPoly hp_divexact(const HPoly& f, const HPoly& g);
/// Vanishing order at the origin of the chart where variable `chart` is 1.
int hp_order_at_origin(const HPoly& f, int chart);

inline HPoly operator+(const HPoly& f, const HPoly& g) { return hp_add(f, g); }
inline HPoly operator-(const HPoly& f, const HPoly& g) { return hp_sub(f, g); }
inline HPoly operator*(const HPoly& f, const HPoly& g) { return hp_mul(f, g); }

}  // namespace cremona
