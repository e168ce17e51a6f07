#include <algorithm>
#include <numeric>
#include <random>

#include "cremona/error.hpp"
#include "cremona/linalg.hpp"
#include "cremona/sampling.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const Field Q = Field::rational();
const Field P = Field::prime(1000000007);

// Leibniz expansion over all permutations.
Scalar leibniz_det(const Matrix& m) {
  int n = m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m.field().zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = m.field().one();
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_matrix(const Field& f, int n, std::mt19937_64& rng, int zero_pct = 30) {
  Matrix m(f, n);
  std::uniform_int_distribution<int> pct(0, 99);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pct(rng) >= zero_pct) m(i, j) = random_entry(f, rng, 7);
  return m;
}

}  // namespace

TEST_CASE("projective points are canonical") {
  ProjPoint p(Q.from_int(2), Q.from_int(4), Q.from_int(-6));
  CHECK(p.to_string() == "[1:2:-3]");
  CHECK(ProjPoint(Q.zero(), Q.from_int(3), Q.from_int(1)).to_string() == "[0:1:1/3]");
  CHECK_THROWS_AS(ProjPoint(Q.zero(), Q.zero(), Q.zero()), Error);
}

TEST_CASE("matrix literal parsing") {
  Mat3 m = parse_matrix(Q, "[[1, 0, -1/2],[0,1,0],[0,0,1]]");
  CHECK(m(0, 2) == Q.parse_scalar("-1/2"));
  CHECK(m.to_string() == "[[1,0,-1/2],[0,1,0],[0,0,1]]");
  CHECK_THROWS_AS(parse_matrix(Q, "[[1,0],[0,1]]"), Error);
  CHECK_THROWS_AS(parse_matrix(Q, "[[1,0,0],[0,1,0],[0,0,]]"), Error);
}

TEST_CASE("linear maps normalize and compose") {
  LinMap a(parse_matrix(Q, "[[2,0,0],[0,4,0],[0,0,6]]"));
  CHECK(a.matrix() == parse_matrix(Q, "[[1,0,0],[0,2,0],[0,0,3]]"));
  CHECK_THROWS_AS(LinMap(parse_matrix(Q, "[[1,2,3],[2,4,6],[0,0,1]]")), Error);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    LinMap g = random_linmap(Q, rng);
    CHECK((g * g.inverse()).is_identity());
    LinMap j = random_dejonquieres_linmap(Q, rng);
    CHECK(j.in_dejonquieres());
    CHECK(j.inverse().in_dejonquieres());
  }
}

TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
  std::mt19937_64 rng(2);
  for (const Field& f : {Q, P})
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(f, n, rng);
        CHECK(m.det() == leibniz_det(m));
      }
}

TEST_CASE("Bareiss inverse matches the adjugate inverse") {
  std::mt19937_64 rng(4);
  for (const Field& f : {Q, P})
    for (int t = 0; t < 40; ++t) {
      Matrix m = random_matrix(f, 3, rng, 20);
      Mat3 m3(f);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m3(i, j) = m(i, j);
      if (m3.det().is_zero()) {
        CHECK_THROWS_AS(m.inverse(), Error);
        continue;
      }
      Matrix inv = m.inverse();
      Mat3 inv3 = m3.inverse();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(inv(i, j) == inv3(i, j));
    }
  for (int n = 1; n <= 6; ++n) {
    Matrix m = random_matrix(Q, n, rng, 10);
    if (m.det().is_zero()) continue;
    CHECK(m * m.inverse() == Matrix::identity(Q, n));
  }
}
