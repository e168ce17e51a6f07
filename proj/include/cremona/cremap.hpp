#pragma once

// Birational maps of the projective plane as normalized coprime triples.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/hpoly.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

/// f = [f0 : f1 : f2]. The components share one degree, have no common
/// factor, and the first nonzero coefficient of the first nonzero component
/// is 1, so projective equality is syntactic equality.
class CreMap {
 public:
  /// Divides out the common gcd and normalizes. Throws DegreeMismatch for
  /// unequal degrees, DegenerateComposition if the triple is zero or
  /// collapses to a constant, SingularMatrix for a singular linear triple.
  explicit CreMap(std::array<HPoly, 3> components);

  /// Skips the gcd; the caller guarantees the components are coprime.
  static CreMap from_coprime(std::array<HPoly, 3> components);

  const std::array<HPoly, 3>& components() const { return c_; }
  const HPoly& operator[](int i) const { return c_[i]; }
  int degree() const { return c_[0].degree(); }
  Field field() const { return c_[0].field(); }
  bool is_linear() const { return degree() == 1; }
  /// The matrix of a degree-1 map.
  LinMap as_lin() const;
  /// Image of a point that is not a base point; throws HypothesisFailed otherwise.
  ProjPoint apply(const ProjPoint& p) const;

  std::string to_string() const;  // "[y*z : x*z : x*y]"
  /// Parses "[f0 : f1 : f2]".
  static CreMap parse(const Field& f, const std::string& text);

  friend bool operator==(const CreMap& a, const CreMap& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CreMap& a, const CreMap& b) { return !(a == b); }

 private:
  struct Trusted {};
  CreMap(Trusted, std::array<HPoly, 3> components);
  void scale_canonically();

  std::array<HPoly, 3> c_;
};

CreMap cm_from_lin(const LinMap& g);
CreMap cm_sigma(const Field& f);
/// h = [z-x : z-y : z].
LinMap cm_h(const Field& f);
CreMap cm_identity(const Field& f);

/// f o g.
CreMap cm_compose(const CreMap& f, const CreMap& g);
int cm_degree(const CreMap& f);
/// Multiplicity of the linear system of f at p.
int cm_mult(const CreMap& f, const ProjPoint& p);
/// Rational common zeros of the components, sorted. Degree at most 2.
/// Throws UnsupportedDegree or IrrationalBasePoint.
std::vector<ProjPoint> cm_proper_base_points(const CreMap& f);
bool cm_equal(const CreMap& f, const CreMap& g);
/// True if f preserves the pencil of lines through [1:0:0].
bool cm_is_dejonquieres(const CreMap& f);
/// Inverse of a map of degree at most 2 whose base points are rational.
CreMap cm_inverse_quadratic(const CreMap& f);

enum class LinKind { Diagonal, Permutation, DiagonalTimesPermutation, General };
const char* lin_kind_name(LinKind k);

struct LinClassification {
  LinKind kind;
  /// For every kind except General: g = d * tau up to scalar.
  std::optional<Mat3> d;
  std::optional<Mat3> tau;
  /// tau sends e_j to e_{perm[j]}.
  std::array<int, 3> perm{0, 1, 2};
};
LinClassification lin_classify(const LinMap& g);

/// Throws DuplicatePoints if two of the points coincide.
bool cm_collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

struct DjCompositionData {
  int deg;
  int mult_at_p0;
  int mult_at_p1;
  int mult_at_p2;
  ProjPoint p1, p2;  // base points of tau other than [1:0:0]
  ProjPoint q1, q2;  // base points of tau^-1; lines through p_i go to lines through q_i
  int m_q1, m_q2;    // multiplicities of f at q1, q2
};

/// Predicted degree and multiplicities of f o tau for de Jonquieres maps f
/// and tau with deg tau = 2.
DjCompositionData dj_quadratic_composition_data(const CreMap& f, const CreMap& tau);

}  // namespace cremona
