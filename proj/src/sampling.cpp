#include "cremona/sampling.hpp"

namespace cremona {

Scalar random_entry(const Field& f, std::mt19937_64& rng, long bound) {
  if (!f.is_rational()) return f.random(rng);
  std::uniform_int_distribution<long> d(-bound, bound);
  return f.from_int(d(rng));
}

Scalar random_nonzero_entry(const Field& f, std::mt19937_64& rng, long bound) {
  for (;;) {
    Scalar s = random_entry(f, rng, bound);
    if (!s.is_zero()) return s;
  }
}

LinMap random_linmap(const Field& f, std::mt19937_64& rng, long bound) {
  for (;;) {
    Mat3 m(f);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = random_entry(f, rng, bound);
    if (!m.det().is_zero()) return LinMap(m);
  }
}

LinMap random_dejonquieres_linmap(const Field& f, std::mt19937_64& rng, long bound) {
  for (;;) {
    Mat3 m(f);
    m(0, 0) = random_nonzero_entry(f, rng, bound);
    for (int j = 1; j < 3; ++j) m(0, j) = random_entry(f, rng, bound);
    for (int i = 1; i < 3; ++i)
      for (int j = 1; j < 3; ++j) m(i, j) = random_entry(f, rng, bound);
    if (!m.det().is_zero()) return LinMap(m);
  }
}

LinMap random_diagonal(const Field& f, std::mt19937_64& rng, long bound) {
  return LinMap(Mat3::diagonal(random_nonzero_entry(f, rng, bound), random_nonzero_entry(f, rng, bound), f.one()));
}

ProjPoint random_point(const Field& f, std::mt19937_64& rng, long bound) {
  for (;;) {
    Scalar a = random_entry(f, rng, bound), b = random_entry(f, rng, bound), c = random_entry(f, rng, bound);
    if (!(a.is_zero() && b.is_zero() && c.is_zero())) return ProjPoint(a, b, c);
  }
}

bool in_general_position(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (p == q || p == r || q == r) return false;
  return !Mat3::from_columns(p.coords(), q.coords(), r.coords()).det().is_zero();
}

}  // namespace cremona

namespace cremona {

std::optional<SquareInstance> try_random_square(const Field& f, std::mt19937_64& rng, long bound) {
  const ProjPoint e0 = ProjPoint::unit(f, 0);
  LinMap g1 = random_dejonquieres_linmap(f, rng, bound);
  // sigma g2 has base points [1:0:0] and the images under sigma of g1 e1, g1 e2.
  auto sig = [](const std::array<Scalar, 3>& v) {
    return std::array<Scalar, 3>{v[1] * v[2], v[0] * v[2], v[0] * v[1]};
  };
  std::array<Scalar, 3> u = sig(g1.matrix().column(1)), v = sig(g1.matrix().column(2));
  Scalar s1 = random_nonzero_entry(f, rng, bound), s2 = random_nonzero_entry(f, rng, bound);
  for (auto& x : u) x *= s1;
  for (auto& x : v) x *= s2;
  Mat3 g2i = Mat3::from_columns(e0.coords(), u, v);
  if (g2i.det().is_zero()) return std::nullopt;
  LinMap g2 = LinMap(g2i).inverse();
  CreMap s = cm_sigma(f);
  CreMap F = cm_compose(cm_compose(cm_compose(s, cm_from_lin(g2)), s), cm_from_lin(g1));
  if (F.degree() != 3) return std::nullopt;
  CreMap Q = cm_compose(F, s);
  if (Q.degree() != 2) return std::nullopt;
  std::vector<ProjPoint> bp;
  try {
    bp = cm_proper_base_points(Q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (bp.size() != 3) return std::nullopt;
  std::vector<ProjPoint> rest;
  for (const auto& p : bp)
    if (p != e0) rest.push_back(p);
  if (rest.size() != 2) return std::nullopt;
  Mat3 g3i = Mat3::from_columns(e0.coords(), rest[0].coords(), rest[1].coords());
  if (g3i.det().is_zero()) return std::nullopt;
  LinMap g3 = LinMap(g3i).inverse();
  CreMap g4 = cm_compose(cm_compose(Q, cm_from_lin(LinMap(g3i))), s);
  if (!g4.is_linear()) return std::nullopt;
  return SquareInstance{g1, g2, g3, g4.as_lin()};
}

SquareInstance random_square(const Field& f, std::mt19937_64& rng, long bound) {
  for (;;)
    if (auto sq = try_random_square(f, rng, bound)) return *sq;
}

Word relator_word(const Field& f, Relator r, std::mt19937_64& rng, long bound) {
  const Letter s = Letter::sigma();
  switch (r) {
    case Relator::Linear: {
      LinMap a = random_dejonquieres_linmap(f, rng, bound), b = random_dejonquieres_linmap(f, rng, bound);
      return Word(f, {Letter::lin(a), Letter::lin(b), Letter::lin((a * b).inverse())});
    }
    case Relator::SigmaSquared:
      return Word(f, {s, s});
    case Relator::SigmaPermutation: {
      Letter t = Letter::lin(LinMap(Mat3::permutation(f, {0, 2, 1})));
      return Word(f, {s, t, s, t});
    }
    case Relator::SigmaDiagonal: {
      Letter d = Letter::lin(random_diagonal(f, rng, bound));
      return Word(f, {s, d, s, d});
    }
    case Relator::SigmaH: {
      Letter h = Letter::lin(cm_h(f));
      return Word(f, {h, s, h, s, h, s});
    }
  }
  return Word(f);
}

Word random_conjugated_relator(const Field& f, Relator r, std::mt19937_64& rng, int max_u, long bound) {
  std::uniform_int_distribution<int> len(1, max_u);
  Word u(f);
  int n = len(rng);
  bool sigma = std::bernoulli_distribution(0.5)(rng);
  for (int i = 0; i < n; ++i, sigma = !sigma)
    u.letters.push_back(sigma ? Letter::sigma() : Letter::lin(random_dejonquieres_linmap(f, rng, bound)));
  return concat(concat(u, relator_word(f, r, rng, bound)), word_inverse(u));
}

}  // namespace cremona

namespace cremona {

Matrix random_symmetric(const Field& f, int n, std::mt19937_64& rng, bool invertible, long bound) {
  for (;;) {
    Matrix m(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = random_entry(f, rng, bound);
    if (!invertible || !m.det().is_zero()) return m;
  }
}

SymTriple random_sym_triple(const Field& f, int n, std::mt19937_64& rng, long bound) {
  Matrix a = random_symmetric(f, n, rng, true, bound);
  Matrix b = random_symmetric(f, n, rng, true, bound);
  Matrix c = random_symmetric(f, n, rng, true, bound);
  return SymTriple(a, b, c);
}

}  // namespace cremona

namespace cremona {

LinMap random_deg1_linmap(const Field& f, std::mt19937_64& rng, long bound) {
  LinMap d(Mat3::diagonal(random_nonzero_entry(f, rng, bound), random_nonzero_entry(f, rng, bound),
                          random_nonzero_entry(f, rng, bound)));
  if (std::bernoulli_distribution(0.5)(rng)) return d;
  return d * LinMap(Mat3::permutation(f, {0, 2, 1}));
}

LinMap random_deg2_linmap(const Field& f, std::mt19937_64& rng, long bound) {
  // [a1 x + a2 z : b1 y + b2 z : c z] with all coefficients nonzero, then a
  // coordinate swap on either side.
  Mat3 m(f);
  m(0, 0) = random_nonzero_entry(f, rng, bound);
  m(0, 2) = random_nonzero_entry(f, rng, bound);
  m(1, 1) = random_nonzero_entry(f, rng, bound);
  m(1, 2) = random_nonzero_entry(f, rng, bound);
  m(2, 2) = random_nonzero_entry(f, rng, bound);
  LinMap g(m);
  LinMap swap(Mat3::permutation(f, {0, 2, 1}));
  std::uniform_int_distribution<int> side(0, 3);
  int s = side(rng);
  if (s & 1) g = swap * g;
  if (s & 2) g = g * swap;
  return g;
}

}  // namespace cremona
