#pragma once

// Dense univariate polynomials over Scalar. Internal to the library: used by
// the bivariate gcd behind hp_gcd and by base-point root finding.

#include <vector>

#include "cremona/scalar.hpp"

namespace cremona::detail {

/// Coefficient i multiplies t^i. Always trimmed: no trailing zeros, so the
/// zero polynomial is the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Scalar& s) { return UPoly({s}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const Scalar& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Scalar& s) const;
  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& t) const;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Exact quotient; throws NotDivisible otherwise.
  UPoly divexact(const UPoly& b) const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic gcd (gcd(0, 0) = 0).
UPoly gcd(UPoly a, UPoly b);

/// Squarefree part, monic.
UPoly squarefree_part(const UPoly& p);

struct RootSet {
  std::vector<Scalar> roots;  // distinct roots in the working field
  bool split = true;          // every root of p lies in the working field
};

/// All roots of p lying in p's field. Over Q this reduces modulo a prime,
/// lifts each simple root with Newton-Hensel iteration and reconstructs the
/// rational candidate, which is then checked exactly.
RootSet find_roots(const UPoly& p);

}  // namespace cremona::detail
