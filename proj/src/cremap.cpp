#include "cremona/cremap.hpp"

#include <algorithm>

#include "cremona/error.hpp"
#include "univariate.hpp"

namespace cremona {

using detail::UPoly;

namespace {

bool is_sigma(const CreMap& f) {
  static const Exponent mono[3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  if (f.degree() != 2) return false;
  for (int i = 0; i < 3; ++i) {
    const auto& t = f[i].terms();
    if (t.size() != 1 || t[0].e != mono[i] || !t[0].c.is_one()) return false;
  }
  return true;
}

std::array<HPoly, 3> linear_forms(const Mat3& m) {
  return {HPoly::linear(m(0, 0), m(0, 1), m(0, 2)), HPoly::linear(m(1, 0), m(1, 1), m(1, 2)),
          HPoly::linear(m(2, 0), m(2, 1), m(2, 2))};
}

std::array<HPoly, 3> substitute_all(const std::array<HPoly, 3>& f, const std::array<HPoly, 3>& g) {
  return {hp_substitute(f[0], g[0], g[1], g[2]), hp_substitute(f[1], g[0], g[1], g[2]),
          hp_substitute(f[2], g[0], g[1], g[2])};
}

// f o M for a matrix M (not necessarily invertible), no normalization.
std::array<HPoly, 3> compose_matrix_right(const std::array<HPoly, 3>& f, const Mat3& m) {
  return substitute_all(f, linear_forms(m));
}

}  // namespace

// ---------------------------------------------------------------------------

CreMap::CreMap(Trusted, std::array<HPoly, 3> components) : c_(std::move(components)) { scale_canonically(); }

CreMap CreMap::from_coprime(std::array<HPoly, 3> components) { return CreMap(Trusted{}, std::move(components)); }

CreMap::CreMap(std::array<HPoly, 3> components) : c_(std::move(components)) {
  const Field f = c_[0].field();
  int deg = -1;
  for (const auto& p : c_) {
    if (!(p.field() == f)) fail(ErrorCode::MixedFields, "map components over different fields");
    if (p.is_zero()) continue;
    if (deg >= 0 && p.degree() != deg) fail(ErrorCode::DegreeMismatch, "map components differ in degree");
    deg = p.degree();
  }
  if (deg < 0) fail(ErrorCode::DegenerateComposition, "all components vanish");
  for (auto& p : c_)
    if (p.is_zero()) p = HPoly(f, deg);
  HPoly g = HPoly(f, deg);
  for (const auto& p : c_) {
    g = hp_gcd(g, p);
    if (g.degree() == 0) break;
  }
  if (g.degree() > 0)
    for (auto& p : c_) p = hp_divexact(p, g);
  if (c_[0].degree() == 0)
    fail(ErrorCode::DegenerateComposition, "components are proportional: the map is not dominant");
  scale_canonically();
  if (degree() == 1) (void)as_lin();
}

void CreMap::scale_canonically() {
  for (const auto& p : c_) {
    if (p.is_zero()) continue;
    if (!p.leading_coeff().is_one()) {
      Scalar inv = p.leading_coeff().inverse();
      for (auto& q : c_) q = q.scaled(inv);
    }
    return;
  }
}

LinMap CreMap::as_lin() const {
  if (degree() != 1) fail(ErrorCode::InvalidArgument, "map of degree " + std::to_string(degree()) + " is not linear");
  Mat3 m(field());
  for (int i = 0; i < 3; ++i)
    for (const auto& t : c_[i].terms()) {
      int j = t.e[0] ? 0 : (t.e[1] ? 1 : 2);
      m(i, j) = t.c;
    }
  return LinMap(m);
}

ProjPoint CreMap::apply(const ProjPoint& p) const {
  std::array<Scalar, 3> v{c_[0].evaluate(p.coords()), c_[1].evaluate(p.coords()), c_[2].evaluate(p.coords())};
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    fail(ErrorCode::HypothesisFailed, "point " + p.to_string() + " is a base point");
  return ProjPoint(v);
}

std::string CreMap::to_string() const {
  return "[" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + "]";
}

CreMap CreMap::parse(const Field& f, const std::string& text) {
  auto open = text.find('['), close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(ErrorCode::ParseError, "map literal must look like [f0 : f1 : f2]: " + text);
  for (std::size_t i = 0; i < text.size(); ++i)
    if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(text[i])))
      fail(ErrorCode::ParseError, "trailing characters in map literal: " + text);
  std::string body = text.substr(open + 1, close - open - 1);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto colon = body.find(':', start);
    parts.push_back(body.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) fail(ErrorCode::ParseError, "map literal needs three components: " + text);
  return CreMap({HPoly::parse(f, parts[0]), HPoly::parse(f, parts[1]), HPoly::parse(f, parts[2])});
}

// ---------------------------------------------------------------------------

CreMap cm_from_lin(const LinMap& g) { return CreMap::from_coprime(linear_forms(g.matrix())); }

CreMap cm_sigma(const Field& f) {
  Scalar one = f.one();
  return CreMap::from_coprime(
      {HPoly::monomial(one, {0, 1, 1}), HPoly::monomial(one, {1, 0, 1}), HPoly::monomial(one, {1, 1, 0})});
}

LinMap cm_h(const Field& f) {
  Scalar o = f.one(), z = f.zero(), m = -f.one();
  return LinMap(Mat3({{{m, z, o}, {z, m, o}, {z, z, o}}}));
}

CreMap cm_identity(const Field& f) { return cm_from_lin(LinMap::identity(f)); }

CreMap cm_compose(const CreMap& f, const CreMap& g) {
  if (!(f.field() == g.field())) fail(ErrorCode::MixedFields, "composing maps over different fields");
  // An automorphism on either side cannot create a common factor.
  if (g.is_linear()) return CreMap::from_coprime(substitute_all(f.components(), g.components()));
  if (f.is_linear()) {
    const LinMap fl = f.as_lin();
    const Mat3& m = fl.matrix();
    std::array<HPoly, 3> out{HPoly(f.field(), g.degree()), HPoly(f.field(), g.degree()), HPoly(f.field(), g.degree())};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!m(i, j).is_zero()) out[i] = hp_add(out[i], g[j].scaled(m(i, j)));
    return CreMap::from_coprime(std::move(out));
  }
  if (is_sigma(g)) {
    // sigma is an isomorphism off the coordinate triangle, so the only
    // possible common factors of f o sigma are monomials.
    std::array<HPoly, 3> out{HPoly(f.field(), 0), HPoly(f.field(), 0), HPoly(f.field(), 0)};
    Exponent content{1 << 30, 1 << 30, 1 << 30};
    for (int l = 0; l < 3; ++l) {
      std::vector<HPoly::Term> terms;
      for (const auto& t : f[l].terms())
        terms.push_back({{t.e[1] + t.e[2], t.e[0] + t.e[2], t.e[0] + t.e[1]}, t.c});
      out[l] = HPoly(f.field(), 2 * f.degree(), std::move(terms));
      if (out[l].is_zero()) continue;
      Exponent m = out[l].monomial_content();
      for (int v = 0; v < 3; ++v) content[v] = std::min(content[v], m[v]);
    }
    for (auto& p : out) p = p.is_zero() ? HPoly(f.field(), 2 * f.degree() - content[0] - content[1] - content[2])
                                        : p.divide_monomial(content);
    return CreMap::from_coprime(std::move(out));
  }
  if (is_sigma(f)) {
    // gcd(g1 g2, g0 g2, g0 g1) = gcd(g1,g2) gcd(g0,g2) gcd(g0,g1) for a coprime triple.
    HPoly c01 = hp_gcd(g[0], g[1]), c02 = hp_gcd(g[0], g[2]), c12 = hp_gcd(g[1], g[2]);
    HPoly common = c12 * c02 * c01;
    std::array<HPoly, 3> out{hp_divexact(g[1] * g[2], common), hp_divexact(g[0] * g[2], common),
                             hp_divexact(g[0] * g[1], common)};
    return CreMap::from_coprime(std::move(out));
  }
  return CreMap(substitute_all(f.components(), g.components()));
}

int cm_degree(const CreMap& f) { return f.degree(); }

int cm_mult(const CreMap& f, const ProjPoint& p) {
  const Field fld = f.field();
  int k = 0;
  while (p[k].is_zero()) ++k;
  // Columns: the two unit vectors other than e_k, then p. Then A e_2 = p.
  std::array<std::array<Scalar, 3>, 3> cols;
  int c = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    std::array<Scalar, 3> e{fld.zero(), fld.zero(), fld.zero()};
    e[j] = fld.one();
    cols[c++] = e;
  }
  cols[2] = p.coords();
  Mat3 a = Mat3::from_columns(cols[0], cols[1], cols[2]);
  auto moved = compose_matrix_right(f.components(), a);
  int best = f.degree();
  for (const auto& comp : moved)
    if (!comp.is_zero()) best = std::min(best, hp_order_at_origin(comp, 2));
  return best;
}

// ---------------------------------------------------------------------------
// Base points of quadratic maps. After a shear A with C1(A e0) != 0 the common
// zeros project from A e0 to the roots of gcd_u Res_x(C1, C2 + u C3), where
// the C_k span the net of conics. Each root gives a line through A e0 that is
// cut by the components in the remaining coordinate.

namespace {

// Coefficient of x^k as a form in y, z.
HPoly x_coeff(const HPoly& f, int k) {
  std::vector<HPoly::Term> terms;
  for (const auto& t : f.terms())
    if (t.e[0] == k) terms.push_back({{0, t.e[1], t.e[2]}, t.c});
  return HPoly(f.field(), f.degree() - k, std::move(terms));
}

// Resultant in x of two conics with formal degree 2.
HPoly conic_resultant(const HPoly& c, const HPoly& d) {
  HPoly a = x_coeff(c, 2), b = x_coeff(c, 1), e = x_coeff(c, 0);
  HPoly a2 = x_coeff(d, 2), b2 = x_coeff(d, 1), e2 = x_coeff(d, 0);
  HPoly t1 = a * e2 - a2 * e;
  HPoly t2 = a * b2 - a2 * b;
  HPoly t3 = b * e2 - b2 * e;
  return t1 * t1 - t2 * t3;
}

UPoly restrict_to_line(const HPoly& f, const Scalar& y0, const Scalar& z0) {
  std::vector<Scalar> c(f.degree() + 1, f.field().zero());
  for (const auto& t : f.terms()) c[t.e[0]] += t.c * y0.pow(t.e[1]) * z0.pow(t.e[2]);
  return UPoly(std::move(c));
}

}  // namespace

std::vector<ProjPoint> cm_proper_base_points(const CreMap& f) {
  const Field fld = f.field();
  if (f.degree() == 1) return {};
  if (f.degree() > 2)
    fail(ErrorCode::UnsupportedDegree, "base points are computed for degree at most 2, got " + std::to_string(f.degree()));
  for (int attempt = 0; attempt < 24; ++attempt) {
    Mat3 a = Mat3::identity(fld);
    a(1, 0) = fld.from_int(attempt % 5 - 2 + (attempt / 5) * 3);
    a(2, 0) = fld.from_int(attempt % 3 + 1 + attempt / 3);
    auto g = compose_matrix_right(f.components(), a);
    auto comb = [&](long c0, long c1, long c2) {
      return hp_add(hp_add(g[0].scaled(fld.from_int(c0)), g[1].scaled(fld.from_int(c1))),
                    g[2].scaled(fld.from_int(c2)));
    };
    HPoly c1 = comb(1, 2 + attempt, 3 + 2 * attempt);
    HPoly c2 = comb(0, 1, attempt % 2);
    HPoly c3 = comb(attempt % 3 == 0 ? 0 : 1, attempt % 2, 1);
    if (x_coeff(c1, 2).is_zero()) continue;
    HPoly gres = conic_resultant(c1, c2);
    for (int u = 1; u <= 2 && !gres.is_zero(); ++u) {
      HPoly r = conic_resultant(c1, hp_add(c2, c3.scaled(fld.from_int(u))));
      gres = r.is_zero() ? r : hp_gcd(gres, r);
    }
    if (gres.is_zero()) continue;

    std::vector<std::pair<Scalar, Scalar>> lines;  // (y0, z0)
    Exponent mono = gres.monomial_content();
    if (mono[2] > 0) lines.push_back({fld.one(), fld.zero()});
    if (mono[1] > 0) lines.push_back({fld.zero(), fld.one()});
    HPoly rest = gres.divide_monomial(mono);
    if (rest.degree() > 0) {
      std::vector<Scalar> coeffs(rest.degree() + 1, fld.zero());
      for (const auto& t : rest.terms()) coeffs[t.e[1]] = t.c;
      auto roots = detail::find_roots(UPoly(std::move(coeffs)));
      if (!roots.split) fail(ErrorCode::IrrationalBasePoint, "base points of " + f.to_string() + " are not rational");
      for (const auto& r : roots.roots) lines.push_back({r, fld.one()});
    }

    std::vector<ProjPoint> points;
    for (const auto& [y0, z0] : lines) {
      UPoly common = detail::gcd(detail::gcd(restrict_to_line(g[0], y0, z0), restrict_to_line(g[1], y0, z0)),
                                 restrict_to_line(g[2], y0, z0));
      if (common.degree() <= 0) continue;
      auto xs = detail::find_roots(common);
      if (!xs.split) fail(ErrorCode::IrrationalBasePoint, "base points of " + f.to_string() + " are not rational");
      for (const auto& x0 : xs.roots) points.emplace_back(a.apply({x0, y0, z0}));
    }
    for (const auto& p : points)
      for (int i = 0; i < 3; ++i)
        if (!f[i].evaluate(p.coords()).is_zero())
          fail(ErrorCode::GenericityFailure, "internal: recovered point " + p.to_string() + " is not a base point");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
  }
  fail(ErrorCode::GenericityFailure, "no admissible projection found for " + f.to_string());
}

bool cm_equal(const CreMap& f, const CreMap& g) { return f == g; }

bool cm_is_dejonquieres(const CreMap& f) {
  if (f[1].is_zero() || f[2].is_zero()) return false;
  HPoly g = hp_gcd(f[1], f[2]);
  HPoly n = hp_divexact(f[1], g), d = hp_divexact(f[2], g);
  if (n.degree() != 1 || d.degree() != 1) return false;
  return n.coeff({1, 0, 0}).is_zero() && d.coeff({1, 0, 0}).is_zero();
}

CreMap cm_inverse_quadratic(const CreMap& f) {
  if (f.is_linear()) return cm_from_lin(f.as_lin().inverse());
  if (f.degree() != 2) fail(ErrorCode::UnsupportedDegree, "inverse is computed for degree at most 2");
  auto bp = cm_proper_base_points(f);
  if (bp.size() != 3) fail(ErrorCode::HypothesisFailed, "quadratic map has infinitely near base points: " + f.to_string());
  Mat3 b = Mat3::from_columns(bp[0].coords(), bp[1].coords(), bp[2].coords());
  if (b.det().is_zero()) fail(ErrorCode::HypothesisFailed, "base points are collinear");
  auto moved = compose_matrix_right(f.components(), b);
  Mat3 m(f.field());
  static const Exponent mono[3] = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  for (int i = 0; i < 3; ++i) {
    for (const auto& t : moved[i].terms()) {
      int j = 0;
      while (j < 3 && t.e != mono[j]) ++j;
      if (j == 3) fail(ErrorCode::HypothesisFailed, "internal: map is not a net of conics through its base points");
      m(i, j) = t.c;
    }
  }
  // f = M sigma B^-1, so f^-1 = B sigma M^-1.
  return cm_compose(cm_from_lin(LinMap(b)), cm_compose(cm_sigma(f.field()), cm_from_lin(LinMap(m).inverse())));
}

// ---------------------------------------------------------------------------

const char* lin_kind_name(LinKind k) {
  switch (k) {
    case LinKind::Diagonal: return "Diagonal";
    case LinKind::Permutation: return "Permutation";
    case LinKind::DiagonalTimesPermutation: return "DiagonalTimesPermutation";
    case LinKind::General: return "General";
  }
  return "General";
}

LinClassification lin_classify(const LinMap& g) {
  const Mat3& m = g.matrix();
  const Field fld = g.field();
  LinClassification out{LinKind::General, std::nullopt, std::nullopt, {0, 1, 2}};
  std::array<int, 3> perm{};
  std::array<bool, 3> used{false, false, false};
  for (int j = 0; j < 3; ++j) {
    int row = -1;
    for (int i = 0; i < 3; ++i) {
      if (m(i, j).is_zero()) continue;
      if (row >= 0) return out;
      row = i;
    }
    if (row < 0 || used[row]) return out;
    used[row] = true;
    perm[j] = row;
  }
  std::array<Scalar, 3> d;
  for (int j = 0; j < 3; ++j) d[perm[j]] = m(perm[j], j);
  out.perm = perm;
  out.d = Mat3::diagonal(d[0], d[1], d[2]);
  out.tau = Mat3::permutation(fld, perm);
  bool identity_perm = perm == std::array<int, 3>{0, 1, 2};
  bool scalar_d = d[0] == d[1] && d[1] == d[2];
  if (identity_perm)
    out.kind = LinKind::Diagonal;
  else if (scalar_d)
    out.kind = LinKind::Permutation;
  else
    out.kind = LinKind::DiagonalTimesPermutation;
  return out;
}

bool cm_collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (p == q || p == r || q == r) fail(ErrorCode::DuplicatePoints, "collinearity test needs three distinct points");
  return Mat3::from_columns(p.coords(), q.coords(), r.coords()).det().is_zero();
}

DjCompositionData dj_quadratic_composition_data(const CreMap& f, const CreMap& tau) {
  const Field fld = f.field();
  if (tau.degree() != 2) fail(ErrorCode::HypothesisFailed, "tau must be quadratic");
  if (!cm_is_dejonquieres(f) || !cm_is_dejonquieres(tau))
    fail(ErrorCode::HypothesisFailed, "composition data needs de Jonquieres maps");
  ProjPoint p0 = ProjPoint::unit(fld, 0);
  auto bp = cm_proper_base_points(tau);
  if (bp.size() != 3 || std::find(bp.begin(), bp.end(), p0) == bp.end())
    fail(ErrorCode::HypothesisFailed, "tau needs three proper base points including [1:0:0]");
  std::vector<ProjPoint> others;
  for (const auto& p : bp)
    if (p != p0) others.push_back(p);
  const ProjPoint& p1 = others[0];
  const ProjPoint& p2 = others[1];
  auto on_line = [&](const ProjPoint& p) {
    return ProjPoint(p0[0] + p[0], p0[1] + p[1], p0[2] + p[2]);
  };
  // tau contracts the line p0 p_j onto the base point q_i of tau^-1 (i != j).
  ProjPoint q1 = tau.apply(on_line(p2));
  ProjPoint q2 = tau.apply(on_line(p1));
  int mq1 = cm_mult(f, q1), mq2 = cm_mult(f, q2);
  int d = f.degree();
  return {d + 1 - mq1 - mq2, d - mq1 - mq2, 1 - mq2, 1 - mq1, p1, p2, q1, q2, mq1, mq2};
}

}  // namespace cremona
