#include <algorithm>
#include <functional>
#include <random>

#include "cremona/cremap.hpp"
#include "cremona/error.hpp"
#include "cremona/sampling.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const Field Q = Field::rational();
const Field P = Field::prime(1000000007);

CreMap map(const char* s, const Field& f = Q) { return CreMap::parse(f, s); }
ProjPoint pt(long a, long b, long c, const Field& f = Q) {
  return ProjPoint(f.from_int(a), f.from_int(b), f.from_int(c));
}
CreMap lin(const char* s, const Field& f = Q) { return cm_from_lin(LinMap(parse_matrix(f, s))); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Quadratic de Jonquieres map with base points [1:0:0], p1, p2.
CreMap quadratic_through(const ProjPoint& p1, const ProjPoint& p2) {
  const Field f = p1.field();
  Mat3 a = Mat3::from_columns(ProjPoint::unit(f, 0).coords(), p1.coords(), p2.coords());
  CreMap alpha = cm_from_lin(LinMap(a));
  return cm_compose(alpha, cm_compose(cm_sigma(f), cm_from_lin(LinMap(a).inverse())));
}

// Random de Jonquieres map built as L1 sigma L2 (sigma L3)^k.
CreMap random_dj(const Field& f, std::mt19937_64& rng, int sigmas) {
  CreMap m = cm_from_lin(random_dejonquieres_linmap(f, rng, 3));
  for (int i = 0; i < sigmas; ++i)
    m = cm_compose(m, cm_compose(cm_sigma(f), cm_from_lin(random_dejonquieres_linmap(f, rng, 3))));
  return m;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(cm_sigma(Q).to_string() == "[y*z : x*z : x*y]");
  CHECK(cm_sigma(Q).degree() == 2);
  CHECK(cm_identity(Q).to_string() == "[x : y : z]");
  LinMap h = cm_h(Q);
  CHECK((h * h).is_identity());
  CHECK(code_of([] { (void)lin("[[1,1,0],[1,1,0],[0,0,1]]"); }) == ErrorCode::SingularMatrix);
}

TEST_CASE("normalization") {
  CreMap scaled = map("[x*y^2*z^2 : x^2*y*z^2 : x^2*y^2*z]");
  CHECK(scaled == cm_sigma(Q));
  CHECK(map("[2*y*z : 2*x*z : 2*x*y]") == cm_sigma(Q));
  CreMap once = map("[x*y - x*z : 3*x^2 - 3*x*z : x*y]");
  CHECK(CreMap(once.components()) == once);
  CHECK(code_of([] { (void)map("[x*y : x*y : x*y]"); }) == ErrorCode::DegenerateComposition);
  CHECK(code_of([] { (void)map("[x : y^2 : z]"); }) == ErrorCode::DegreeMismatch);
  CHECK(code_of([] { (void)map("[x : x : z]"); }) == ErrorCode::SingularMatrix);
}

TEST_CASE("composition examples") {
  CreMap s = cm_sigma(Q);
  CreMap h = cm_from_lin(cm_h(Q));
  CHECK(cm_compose(s, s) == cm_identity(Q));
  // Generic path, normalized independently of the fast paths.
  CHECK(cm_compose(s, h) == CreMap({HPoly::parse(Q, "z^2 - y*z"),
                                    HPoly::parse(Q, "z^2 - x*z"), HPoly::parse(Q, "z^2 - x*z - y*z + x*y")}));
  CreMap d = lin("[[3,0,0],[0,-5,0],[0,0,1]]");
  CreMap dinv = lin("[[1/3,0,0],[0,-1/5,0],[0,0,1]]");
  CHECK(cm_compose(cm_compose(s, d), s) == dinv);
  CreMap sh = cm_compose(s, h);
  CHECK(cm_degree(cm_compose(sh, sh)) == 2);
  CHECK(cm_compose(sh, cm_compose(sh, sh)) == cm_identity(Q));
}

TEST_CASE("fast paths agree with the generic substitute-and-divide route") {
  std::mt19937_64 rng(21);
  for (const Field& f : {Q, P}) {
    for (int i = 0; i < 15; ++i) {
      CreMap a = random_dj(f, rng, 1 + i % 2);
      CreMap s = cm_sigma(f);
      auto generic = [](const CreMap& x, const CreMap& y) {
        const auto& c = y.components();
        return CreMap({hp_substitute(x[0], c[0], c[1], c[2]), hp_substitute(x[1], c[0], c[1], c[2]),
                       hp_substitute(x[2], c[0], c[1], c[2])});
      };
      CHECK(cm_compose(a, s) == generic(a, s));
      CHECK(cm_compose(s, a) == generic(s, a));
      CreMap l = cm_from_lin(random_linmap(f, rng));
      CHECK(cm_compose(a, l) == generic(a, l));
      CHECK(cm_compose(l, a) == generic(l, a));
    }
  }
}

TEST_CASE("composition is associative on generator words") {
  std::mt19937_64 rng(22);
  for (const Field& f : {Q, P})
    for (int i = 0; i < 10; ++i) {
      CreMap a = random_dj(f, rng, 1), b = cm_from_lin(random_linmap(f, rng, 2)), c = random_dj(f, rng, 1);
      CHECK(cm_compose(cm_compose(a, b), c) == cm_compose(a, cm_compose(b, c)));
    }
}

TEST_CASE("multiplicities") {
  CreMap s = cm_sigma(Q);
  CHECK(cm_mult(s, pt(1, 0, 0)) == 1);
  CHECK(cm_mult(s, pt(1, 1, 1)) == 0);
  CHECK(cm_mult(cm_identity(Q), pt(2, 3, 5)) == 0);
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 10) {
    LinMap g = random_dejonquieres_linmap(Q, rng);
    CreMap c = cm_compose(s, cm_compose(cm_from_lin(g), s));
    if (c.degree() != 3) continue;
    CHECK(cm_mult(c, pt(1, 0, 0)) == 2);
    ++checked;
  }
}

TEST_CASE("base points of quadratic maps") {
  CHECK(cm_proper_base_points(cm_sigma(Q)) == std::vector<ProjPoint>{pt(0, 0, 1), pt(0, 1, 0), pt(1, 0, 0)});
  CHECK(cm_proper_base_points(cm_identity(Q)).empty());
  CreMap sh = cm_compose(cm_sigma(Q), cm_from_lin(cm_h(Q)));
  CHECK(cm_proper_base_points(sh) == std::vector<ProjPoint>{pt(0, 1, 0), pt(1, 0, 0), pt(1, 1, 1)});
  CreMap irr = map("[x*y : x*z : y^2 + z^2]");
  CHECK(code_of([&] { (void)cm_proper_base_points(irr); }) == ErrorCode::IrrationalBasePoint);
  // Over F_p with p = 1 mod 4 the same points are rational.
  Field f = Field::prime(998244353);
  auto bp = cm_proper_base_points(map("[x*y : x*z : y^2 + z^2]", f));
  CHECK(bp.size() == 3);
  CreMap cubic = cm_compose(cm_sigma(Q), cm_compose(lin("[[1,1,1],[0,1,2],[0,1,-1]]"), cm_sigma(Q)));
  CHECK(code_of([&] { (void)cm_proper_base_points(cubic); }) == ErrorCode::UnsupportedDegree);
  std::mt19937_64 rng(5);
  for (const Field& fld : {Q, P})
    for (int i = 0; i < 30; ++i) {
      ProjPoint a = random_point(fld, rng), b = random_point(fld, rng), c = random_point(fld, rng);
      if (!in_general_position(a, b, c)) continue;
      Mat3 m = Mat3::from_columns(a.coords(), b.coords(), c.coords());
      CreMap q = cm_compose(cm_from_lin(random_linmap(fld, rng)),
                            cm_compose(cm_sigma(fld), cm_from_lin(LinMap(m).inverse())));
      std::vector<ProjPoint> expect{a, b, c};
      std::sort(expect.begin(), expect.end());
      CHECK(cm_proper_base_points(q) == expect);
      CreMap qi = cm_inverse_quadratic(q);
      CHECK(cm_compose(q, qi) == cm_identity(fld));
    }
}

TEST_CASE("de Jonquieres predicate") {
  CHECK(cm_is_dejonquieres(cm_sigma(Q)));
  CHECK(cm_is_dejonquieres(cm_from_lin(cm_h(Q))));
  CHECK_FALSE(cm_is_dejonquieres(map("[z : y : x]")));
  CHECK_FALSE(cm_is_dejonquieres(cm_compose(cm_sigma(Q), map("[z : y : x]"))));
}

TEST_CASE("linear classification") {
  auto c = lin_classify(LinMap(parse_matrix(Q, "[[1,0,0],[0,2,0],[0,0,3]]")));
  CHECK(c.kind == LinKind::Diagonal);
  CHECK(*c.d == parse_matrix(Q, "[[1,0,0],[0,2,0],[0,0,3]]"));
  auto s = lin_classify(LinMap(parse_matrix(Q, "[[0,1,0],[1,0,0],[0,0,1]]")));
  CHECK(s.kind == LinKind::Permutation);
  CHECK(s.perm == std::array<int, 3>{1, 0, 2});
  CHECK(lin_classify(cm_h(Q)).kind == LinKind::General);
  auto m = lin_classify(LinMap(parse_matrix(Q, "[[0,0,2],[0,5,0],[7,0,0]]")));
  CHECK(m.kind == LinKind::DiagonalTimesPermutation);
  CHECK(LinMap(*m.d * *m.tau) == LinMap(parse_matrix(Q, "[[0,0,2],[0,5,0],[7,0,0]]")));
}

TEST_CASE("collinearity") {
  CHECK_FALSE(cm_collinear(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)));
  CHECK(cm_collinear(pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)));
  CHECK(code_of([] { (void)cm_collinear(pt(1, 0, 0), pt(1, 1, 1), pt(2, 2, 2)); }) == ErrorCode::DuplicatePoints);
}

TEST_CASE("composition data examples") {
  CreMap s = cm_sigma(Q);
  auto d = dj_quadratic_composition_data(s, s);
  CHECK(d.deg == 1);
  CHECK(d.mult_at_p0 == 0);
  CHECK(dj_quadratic_composition_data(cm_identity(Q), s).deg == 2);
  CreMap tau = quadratic_through(pt(1, 2, 3), pt(2, -1, 5));
  auto d3 = dj_quadratic_composition_data(s, tau);
  CHECK(d3.deg == 3);
  CHECK(cm_compose(s, tau).degree() == 3);
}

TEST_CASE("composition data predicts degree and multiplicities") {
  std::mt19937_64 rng(31);
  int samples = 0;
  int trichotomy[3] = {0, 0, 0};
  while (samples < 200) {
    const Field& f = samples % 2 ? P : Q;
    int mode = samples % 3;  // how many base points tau^-1 shares with g
    CreMap g = random_dj(f, rng, mode == 0 ? 1 + samples % 2 : 1);
    if (g.degree() < 2) continue;
    ProjPoint e0 = ProjPoint::unit(f, 0);
    ProjPoint p1 = random_point(f, rng, 3), p2 = random_point(f, rng, 3);
    if (mode > 0) {
      std::vector<ProjPoint> bp;
      for (const auto& b : cm_proper_base_points(g))
        if (b != e0) bp.push_back(b);
      p1 = bp[0];
      if (mode == 2) p2 = bp[1];
    }
    if (!in_general_position(e0, p1, p2)) continue;
    // quadratic_through builds an involution, so its inverse has the same base points.
    CreMap tau = quadratic_through(p1, p2);
    auto data = dj_quadratic_composition_data(g, tau);
    CreMap gt = cm_compose(g, tau);
    CHECK(data.deg == gt.degree());
    CHECK(data.mult_at_p0 == cm_mult(gt, e0));
    CHECK(data.mult_at_p1 == cm_mult(gt, data.p1));
    CHECK(data.mult_at_p2 == cm_mult(gt, data.p2));
    CHECK(data.m_q1 + data.m_q2 == mode);
    CHECK(gt.degree() - g.degree() == 1 - data.m_q1 - data.m_q2);
    ++trichotomy[data.m_q1 + data.m_q2];
    ++samples;
  }
  CHECK(trichotomy[1] > 0);
  CHECK(trichotomy[2] > 0);
  CHECK(trichotomy[0] > 0);
}
