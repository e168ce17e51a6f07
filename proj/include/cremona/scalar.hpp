#pragma once

// Exact field elements: arbitrary-precision rationals or residues modulo a
// prime. All symbolic computation in the library runs over one of these.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace cremona {

class Scalar;

/// Describes which exact field a computation runs over.
class Field {
 public:
  enum class Kind { Rational, Prime };

  /// The rationals Q.
  static Field rational() { return Field(Kind::Rational, 0); }
  /// The prime field F_p. Requires p prime with 2^20 < p < 2^62.
  static Field prime(std::uint64_t p);
  /// Parses `q` or `fp:<prime>`.
  static Field parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint64_t modulus() const { return prime_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Parses `-3`, `7/2`; in F_p mode integers are reduced mod p and a
  /// fraction is read as a quotient in the field.
  Scalar parse_scalar(std::string_view text) const;

  /// Uniform sample: numerator in [-bound, bound] and denominator in
  /// [1, bound] over Q; a uniform residue over F_p.
  Scalar random(std::mt19937_64& rng, long bound = 10000) const;
  /// Uniform nonzero sample from the same distribution.
  Scalar random_nonzero(std::mt19937_64& rng, long bound = 10000) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_;
  }

 private:
  friend class Scalar;
  Field(Kind k, std::uint64_t p) : kind_(k), prime_(p) {}

  Kind kind_;
  std::uint64_t prime_;
};

/// Residue class modulo a prime.
struct ModP {
  std::uint64_t value;
  std::uint64_t prime;
};

/// A tagged exact field element. Rationals are always reduced with a
/// positive denominator (mpq canonical form). Arithmetic between different
/// fields throws MixedFields; division by zero throws DivisionByZero.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  explicit Scalar(ModP m) : v_(m) {}

  Field field() const;
  bool is_rational() const { return v_.index() == 0; }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const ModP& residue() const { return std::get<ModP>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar zero_like() const;
  Scalar one_like() const;
  Scalar from_int_like(long long v) const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(unsigned e) const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, ModP> v_;
};

namespace modarith {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
}  // namespace modarith

}  // namespace cremona
