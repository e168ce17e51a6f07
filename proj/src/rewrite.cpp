#include <algorithm>
#include <random>

#include "cremona/error.hpp"
#include "cremona/rewrite.hpp"
#include "cremona/sampling.hpp"
#include "rewrite_internal.hpp"

namespace cremona {

namespace {

Word make_word(const Field& f, std::vector<Letter> letters) { return Word(f, std::move(letters)); }

Letter S() { return Letter::sigma(); }
Letter L(const LinMap& g) { return Letter::lin(g); }

// Accumulates validated steps on a working word.
class Rewriter {
 public:
  explicit Rewriter(Word w) : cur_(std::move(w)) {}

  const Word& word() const { return cur_; }
  const std::vector<RewriteStep>& steps() const { return steps_; }

  void apply(RewriteStep s) {
    cur_ = apply_move(cur_, s);
    steps_.push_back(std::move(s));
  }

  void replace(std::size_t pos, std::size_t len, MoveKind kind, std::vector<Letter> after,
               std::vector<NamedMatrix> params = {}) {
    RewriteStep s(pos, kind, cur_.span(pos, len), make_word(cur_.field, std::move(after)));
    s.params = std::move(params);
    apply(std::move(s));
  }

  void merge(std::size_t pos) {
    replace(pos, 2, MoveKind::M1MergeLin, {L(cur_[pos].map() * cur_[pos + 1].map())});
  }
  void split(std::size_t pos, const LinMap& a, const LinMap& b) {
    replace(pos, 1, MoveKind::M1MergeLin, {L(a), L(b)});
  }
  void erase_identity(std::size_t pos) { replace(pos, 1, MoveKind::M1MergeLin, {}); }
  void insert_identity(std::size_t pos) {
    replace(pos, 0, MoveKind::M1MergeLin, {L(LinMap::identity(cur_.field))});
  }
  // [] -> [a, a^-1]
  void insert_pair(std::size_t pos, const LinMap& a) {
    replace(pos, 0, MoveKind::M1MergeLin, {L(a), L(a.inverse())});
  }
  void insert_sigmas(std::size_t pos) { replace(pos, 0, MoveKind::M2SigmaSigma, {S(), S()}); }
  void delete_sigmas(std::size_t pos) { replace(pos, 2, MoveKind::M2SigmaSigma, {}); }
  // Swaps sigma with the permutation next to it.
  void m3(std::size_t pos) {
    if (cur_[pos].is_sigma()) {
      const LinMap t = cur_[pos + 1].map();
      replace(pos, 2, MoveKind::M3SigmaPerm, {L(t), S()}, {{"tau", t.matrix()}});
    } else {
      const LinMap t = cur_[pos].map();
      replace(pos, 2, MoveKind::M3SigmaPerm, {S(), L(t)}, {{"tau", t.matrix()}});
    }
  }
  // [sigma, d, sigma] -> [d^-1]
  void m4(std::size_t pos) {
    const LinMap d = cur_[pos + 1].map();
    replace(pos, 3, MoveKind::M4SigmaDiag, {L(d.inverse())}, {{"d", d.matrix()}});
  }
  // [sigma, h, sigma] -> [h, sigma, h]
  void m5(std::size_t pos) {
    const LinMap h = cur_[pos + 1].map();
    replace(pos, 3, MoveKind::M5SigmaH, {L(h), S(), L(h)}, {{"h", h.matrix()}});
  }
  void lemma(std::size_t pos, MoveKind kind, const RewriteCertificate& c, std::vector<NamedMatrix> params) {
    RewriteStep s(pos, kind, c.initial, c.final_word);
    s.substeps = c.steps;
    s.params = std::move(params);
    apply(std::move(s));
  }

  // Merges adjacent linear letters, drops identities and cancels sigma pairs.
  void normalize() {
    for (;;) {
      const auto& w = cur_.letters;
      std::size_t n = w.size();
      bool changed = false;
      for (std::size_t i = 0; i + 1 < n && !changed; ++i)
        if (w[i].is_lin() && w[i + 1].is_lin()) {
          merge(i);
          changed = true;
        }
      for (std::size_t i = 0; i < n && !changed; ++i)
        if (w[i].is_lin() && w[i].map().is_identity()) {
          erase_identity(i);
          changed = true;
        }
      for (std::size_t i = 0; i + 1 < n && !changed; ++i)
        if (w[i].is_sigma() && w[i + 1].is_sigma()) {
          delete_sigmas(i);
          changed = true;
        }
      if (!changed) return;
    }
  }

  RewriteCertificate certificate(const Word& initial) const {
    RewriteCertificate c(initial);
    c.steps = steps_;
    c.final_word = cur_;
    return c;
  }

 private:
  Word cur_;
  std::vector<RewriteStep> steps_;
};

int sigma_conj_degree(const LinMap& g) {
  CreMap s = cm_sigma(g.field());
  return cm_compose(cm_compose(s, cm_from_lin(g)), s).degree();
}

// The coordinate index k with v proportional to e_k, or -1.
int unit_index(const std::array<Scalar, 3>& v) {
  int k = -1;
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) {
      if (k >= 0) return -1;
      k = i;
    }
  return k;
}

LinMap swap_yz(const Field& f) { return LinMap(Mat3::permutation(f, {0, 2, 1})); }

struct Deg2Factors {
  LinMap tau1, d1, h, d2, tau2;
  Scalar a1, a2, b1, b2, c;
};

// Writes g = tau1 d1 h d2 tau2. Returns nullopt when a2 b2 = 0.
// Requires g in J with deg(sigma g sigma) = 2.
std::optional<Deg2Factors> deg2_factor(const LinMap& g) {
  const Field f = g.field();
  int jj = -1, kk = -1;
  for (int j = 1; j <= 2; ++j) {
    int k = unit_index(g.matrix().column(j));
    if (k == 1 || k == 2) {
      if (jj >= 0) fail(ErrorCode::HypothesisFailed, "sigma and sigma g share all base points");
      jj = j;
      kk = k;
    }
  }
  if (jj < 0) fail(ErrorCode::HypothesisFailed, "sigma and sigma g share only [1:0:0]");
  LinMap id = LinMap::identity(f);
  LinMap tau1 = kk == 2 ? swap_yz(f) : id;
  LinMap tau2 = jj == 2 ? swap_yz(f) : id;
  Mat3 G = (tau1 * g * tau2).matrix();
  Scalar a1 = G(0, 0), a2 = G(0, 2), b1 = G(1, 1), b2 = G(1, 2), c = G(2, 2);
  if (a2.is_zero() || b2.is_zero()) return std::nullopt;
  LinMap d1(Mat3::diagonal(a2, b2, c));
  LinMap d2(Mat3::diagonal(-a1 / a2, -b1 / b2, f.one()));
  return Deg2Factors{tau1, d1, cm_h(f), d2, tau2, a1, a2, b1, b2, c};
}

std::vector<ProjPoint> sigma_pair_base_points(const LinMap& g) {
  const Field f = g.field();
  std::vector<ProjPoint> pts;
  LinMap gi = g.inverse();
  for (int i = 0; i < 3; ++i) pts.push_back(ProjPoint::unit(f, i));
  for (int i = 0; i < 3; ++i) pts.push_back(gi.apply(ProjPoint::unit(f, i)));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// A collinear triple among the base points of sigma and sigma g, if any.
std::optional<std::string> collinear_triple(const LinMap& g) {
  auto pts = sigma_pair_base_points(g);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (cm_collinear(pts[i], pts[j], pts[k]))
          return pts[i].to_string() + ", " + pts[j].to_string() + ", " + pts[k].to_string();
  return std::nullopt;
}

void require_dejonquieres(const LinMap& g, const char* what) {
  if (!g.in_dejonquieres())
    fail(ErrorCode::HypothesisFailed, std::string(what) + " = " + g.to_string() + " does not fix [1:0:0]");
}

using LemmaResult = std::pair<RewriteCertificate, std::vector<NamedMatrix>>;

LemmaResult deg1_impl(const LinMap& g) {
  require_dejonquieres(g, "g");
  int deg = sigma_conj_degree(g);
  if (deg != 1)
    fail(ErrorCode::HypothesisFailed, "sigma g sigma has degree " + std::to_string(deg) + ", expected 1");
  LinClassification cls = lin_classify(g);
  if (cls.kind == LinKind::General) fail(ErrorCode::HypothesisFailed, "g is not monomial");
  LinMap d(*cls.d), tau(*cls.tau);
  const Field f = g.field();
  Word start = make_word(f, {S(), L(g), S()});
  Rewriter rw(start);
  if (tau.is_identity()) {
    rw.m4(0);
  } else if (d.is_identity()) {
    rw.m3(0);
    rw.delete_sigmas(1);
  } else {
    rw.split(1, d, tau);  // sigma d tau sigma
    rw.m3(2);             // sigma d sigma tau
    rw.m4(0);             // d^-1 tau
    rw.merge(0);
  }
  std::vector<NamedMatrix> params{{"g", g.matrix()}, {"d", d.matrix()}, {"tau", tau.matrix()}};
  return {rw.certificate(start), params};
}

LemmaResult deg2_impl(const LinMap& g) {
  require_dejonquieres(g, "g");
  int deg = sigma_conj_degree(g);
  if (deg != 2)
    fail(ErrorCode::HypothesisFailed, "sigma g sigma has degree " + std::to_string(deg) + ", expected 2");
  auto fac = deg2_factor(g);
  if (!fac) {
    auto triple = collinear_triple(g);
    fail(ErrorCode::HypothesisFailed,
         "a2*b2 = 0: base points of sigma and sigma g are collinear" + (triple ? ": " + *triple : std::string()));
  }
  const Field f = g.field();
  Word start = make_word(f, {S(), L(g), S()});
  Rewriter rw(start);

  // sigma [tau1 d1 h d2 tau2] sigma, skipping identity factors.
  std::vector<LinMap> factors;
  for (const LinMap* m : {&fac->tau1, &fac->d1, &fac->h, &fac->d2, &fac->tau2})
    if (!m->is_identity()) factors.push_back(*m);
  std::size_t pos = 1;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    LinMap rest = LinMap::identity(f);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
    rw.split(pos++, factors[i], rest);
  }
  if (!fac->tau1.is_identity()) rw.m3(0);
  if (!fac->tau2.is_identity()) rw.m3(rw.word().size() - 2);
  auto first_sigma = [&] {
    const auto& w = rw.word().letters;
    return static_cast<std::size_t>(std::find_if(w.begin(), w.end(), [](const Letter& l) { return l.is_sigma(); }) -
                                    w.begin());
  };
  if (!fac->d1.is_identity()) {
    std::size_t s = first_sigma();  // sigma d1 h ...
    rw.insert_sigmas(s + 2);
    rw.m4(s);
  }
  if (!fac->d2.is_identity()) {
    std::size_t s = first_sigma();  // sigma h d2 sigma
    rw.insert_sigmas(s + 2);
    rw.m4(s + 3);
  }
  rw.m5(first_sigma());
  rw.normalize();
  std::vector<NamedMatrix> params{{"g", g.matrix()},       {"tau1", fac->tau1.matrix()},
                                  {"d1", fac->d1.matrix()}, {"h", fac->h.matrix()},
                                  {"d2", fac->d2.matrix()}, {"tau2", fac->tau2.matrix()}};
  RewriteCertificate c = rw.certificate(start);
  if (c.final_word.size() != 3) fail(ErrorCode::HypothesisFailed, "unexpected shape after the deg2 rewrite");
  params.push_back({"g'", c.final_word[0].map().matrix()});
  params.push_back({"g''", c.final_word[2].map().matrix()});
  return {c, params};
}

// Rewrites sigma L sigma at pos with a lemma move if deg <= 2 and the
// hypotheses hold. Returns false if no lemma applies.
bool try_lemma_at(Rewriter& rw, std::size_t pos) {
  const LinMap g = rw.word()[pos + 1].map();
  int deg = sigma_conj_degree(g);
  if (deg == 1) {
    auto [c, p] = deg1_impl(g);
    rw.lemma(pos, MoveKind::LDeg1, c, p);
    return true;
  }
  if (deg == 2 && deg2_factor(g)) {
    auto [c, p] = deg2_impl(g);
    rw.lemma(pos, MoveKind::LDeg2, c, p);
    return true;
  }
  return false;
}

// Reduces a word evaluating to a quadratic map to the shape [a, sigma, b].
bool reduce_to_quadratic(Rewriter& rw) {
  rw.normalize();
  while (rw.word().sigma_count() > 1) {
    auto sig = detail::sigma_positions_from_right(rw.word());
    bool done = false;
    for (std::size_t k = 0; k + 1 < sig.size() && !done; ++k)
      if (sig[k] == sig[k + 1] + 2) done = try_lemma_at(rw, sig[k + 1]);
    if (!done) return false;
    rw.normalize();
  }
  if (rw.word().sigma_count() != 1) return false;
  if (rw.word()[0].is_sigma()) rw.insert_identity(0);
  if (rw.word()[rw.word().size() - 1].is_sigma()) rw.insert_identity(rw.word().size());
  return rw.word().size() == 3;
}

std::optional<RewriteCertificate> square_via(const Word& lhs, const Word& rhs, const LinMap& alpha) {
  const Field f = lhs.field;
  Word tau = make_word(f, {L(alpha), S(), L(alpha.inverse())});

  // Both sides followed by tau1 reduce to the same quadratic map.
  Rewriter left(concat(lhs, tau)), right(concat(rhs, tau));
  if (!reduce_to_quadratic(left) || !reduce_to_quadratic(right)) return std::nullopt;
  const LinMap a = left.word()[0].map(), b = left.word()[2].map();
  const LinMap c = right.word()[0].map(), d = right.word()[2].map();

  Rewriter rw(lhs);
  // Append tau1 tau1 = id.
  std::size_t n = lhs.size();
  rw.insert_pair(n, alpha);
  rw.insert_sigmas(n + 1);
  rw.insert_pair(n + 2, alpha.inverse());
  rw.lemma(0, MoveKind::LSquareTriangle, left.certificate(concat(lhs, tau)), {{"alpha", alpha.matrix()}});

  // a sigma b = c sigma d, so sigma (c^-1 a) sigma = d b^-1 is linear.
  const LinMap e = c.inverse() * a;
  if (e.is_identity()) {
    if (b != d) return std::nullopt;
  } else {
    if (sigma_conj_degree(e) != 1) return std::nullopt;
    rw.split(0, c, e);
    rw.insert_sigmas(1);
    auto [cert, p] = deg1_impl(e);
    rw.lemma(2, MoveKind::LDeg1, cert, p);
    rw.merge(2);
  }

  RewriteStep back(0, MoveKind::LSquareTriangle, concat(rhs, tau), right.word());
  back.substeps = right.steps();
  back.params = {{"alpha", alpha.matrix()}};
  rw.apply(reverse_step(back));

  Rewriter ins(rhs);
  std::size_t m = rhs.size();
  ins.insert_pair(m, alpha);
  ins.insert_sigmas(m + 1);
  ins.insert_pair(m + 2, alpha.inverse());
  for (auto it = ins.steps().rbegin(); it != ins.steps().rend(); ++it) rw.apply(reverse_step(*it));
  return rw.certificate(lhs);
}

}  // namespace

RewriteCertificate rewrite_deg1(const LinMap& g) { return deg1_impl(g).first; }

RewriteCertificate rewrite_deg2(const LinMap& g) { return deg2_impl(g).first; }

Word make_quadratic_with_base_points(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  Mat3 a = Mat3::from_columns(p.coords(), q.coords(), r.coords());
  if (a.det().is_zero())
    fail(ErrorCode::CollinearBasePoints, p.to_string() + ", " + q.to_string() + ", " + r.to_string() + " are collinear");
  LinMap alpha(a);
  return make_word(p.field(), {L(alpha), S(), L(alpha.inverse())});
}

RewriteCertificate rewrite_square(const LinMap& g1, const LinMap& g2, const LinMap& g3, const LinMap& g4,
                                  std::uint64_t seed) {
  const Field f = g1.field();
  for (const LinMap* g : {&g2, &g3, &g4})
    if (!(g->field() == f)) fail(ErrorCode::MixedFields, "square over mixed fields");
  require_dejonquieres(g1, "g1");
  require_dejonquieres(g2, "g2");
  require_dejonquieres(g3, "g3");
  require_dejonquieres(g4, "g4");
  Word lhs = make_word(f, {S(), L(g2), S(), L(g1)});
  Word rhs = make_word(f, {L(g4), S(), L(g3), S()});
  CreMap F = word_eval(lhs);
  if (!cm_equal(F, word_eval(rhs))) fail(ErrorCode::HypothesisFailed, "the two sides of the square differ");
  if (F.degree() != 3)
    fail(ErrorCode::HypothesisFailed, "the square has degree " + std::to_string(F.degree()) + ", expected 3");
  for (const auto& [g, name] : {std::pair{&g1, "sigma g1"}, std::pair{&g2, "sigma g2"}})
    if (auto t = collinear_triple(*g))
      fail(ErrorCode::HypothesisFailed, std::string("collinear base points of sigma and ") + name + ": " + *t);

  // tau1 has base points [1:0:0], r1 and r2 where r1 is a base point of
  // sigma g1 only and r2 one of sigma (= of g3 sigma) only.
  std::vector<ProjPoint> s1, s3{ProjPoint::unit(f, 1), ProjPoint::unit(f, 2)};
  LinMap g1i = g1.inverse();
  for (int i = 1; i <= 2; ++i) s1.push_back(g1i.apply(ProjPoint::unit(f, i)));
  std::vector<std::pair<ProjPoint, ProjPoint>> pairs;
  for (const auto& r1 : s1)
    for (const auto& r2 : s3)
      if (std::find(s3.begin(), s3.end(), r1) == s3.end() && std::find(s1.begin(), s1.end(), r2) == s1.end())
        pairs.emplace_back(r1, r2);
  if (pairs.empty()) fail(ErrorCode::GenericityFailure, "no admissible pair of base points for the mediating map");

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto& [r1, r2] = pairs[static_cast<std::size_t>(attempt) % pairs.size()];
    Scalar c1 = random_nonzero_entry(f, rng, 10000), c2 = random_nonzero_entry(f, rng, 10000);
    std::array<Scalar, 3> v1 = r1.coords(), v2 = r2.coords();
    for (auto& x : v1) x *= c1;
    for (auto& x : v2) x *= c2;
    Mat3 a = Mat3::from_columns(ProjPoint::unit(f, 0).coords(), v1, v2);
    if (a.det().is_zero()) continue;
    try {
      if (auto c = square_via(lhs, rhs, LinMap(a))) return *c;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisFailed && e.code() != ErrorCode::PatternMismatch) throw;
    }
  }
  fail(ErrorCode::GenericityFailure, "no mediating quadratic map found after " + std::to_string(kAttempts) + " attempts");
}

const char* stuck_reason_name(StuckReason r) {
  switch (r) {
    case StuckReason::InfinitelyNearBasePoint:
      return "InfinitelyNearBasePoint";
    case StuckReason::IrrationalBasePoint:
      return "IrrationalBasePoint";
    case StuckReason::GenericityFailure:
      return "GenericityFailure";
  }
  return "?";
}

SimplifyResult simplify_identity_word(const Word& w, std::uint64_t seed) {
  const Field f = w.field;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].is_lin() && !w[i].map().in_dejonquieres())
      fail(ErrorCode::NotDeJonquieres, "letter " + std::to_string(i) + " = " + w[i].map().to_string() +
                                           " does not fix [1:0:0]");
  if (!cm_equal(word_eval(w), cm_identity(f))) fail(ErrorCode::NotIdentity, "the word does not evaluate to the identity");

  std::mt19937_64 rng(seed);
  Rewriter rw(w);
  std::vector<ProgressEntry> progress;
  auto stuck = [&](StuckReason r, int n, std::string detail) {
    RewriteCertificate partial = rw.certificate(w);
    partial.progress = progress;
    return Stuck{r, n, std::move(detail), std::move(partial)};
  };

  for (;;) {
    rw.normalize();
    const Word cur = rw.word();
    auto inv = detail::partial_inverses(cur);
    auto [D, n] = word_measure(cur);
    if (!progress.empty() && !(std::pair{D, n} < std::pair{progress.back().D, progress.back().n}))
      return stuck(StuckReason::GenericityFailure, n, "(D, n) did not decrease");
    ProgressEntry entry{rw.steps().size(), D, n, ""};
    if (D == 1) {
      entry.case_label = "end";
      progress.push_back(entry);
      break;
    }
    auto sig = detail::sigma_positions_from_right(cur);
    // The triple sigma g_n sigma spans the n-th and (n-1)-th sigma from the right.
    std::size_t left = sig[static_cast<std::size_t>(n) - 1];
    const LinMap gn = cur[left + 1].map();
    int deg = sigma_conj_degree(gn);
    if (deg == 1) {
      entry.case_label = "a";
      progress.push_back(entry);
      auto [c, p] = deg1_impl(gn);
      rw.lemma(left, MoveKind::LDeg1, c, p);
      continue;
    }
    if (deg == 2) {
      entry.case_label = "b1";
      if (!deg2_factor(gn)) {
        auto t = collinear_triple(gn);
        return stuck(StuckReason::InfinitelyNearBasePoint, n,
                     "a2*b2 = 0 for sigma g_n sigma" + (t ? ", collinear: " + *t : std::string()));
      }
      progress.push_back(entry);
      auto [c, p] = deg2_impl(gn);
      rw.lemma(left, MoveKind::LDeg2, c, p);
      continue;
    }

    entry.case_label = "c";
    progress.push_back(entry);
    const CreMap& Q = inv[static_cast<std::size_t>(n) - 1];
    LinMap gni = gn.inverse();
    ProjPoint e0 = ProjPoint::unit(f, 0);
    std::vector<ProjPoint> qs{gni.apply(ProjPoint::unit(f, 1)), gni.apply(ProjPoint::unit(f, 2))};
    for (const auto& q : qs)
      if (cm_mult(Q, q) != 1)
        return stuck(StuckReason::InfinitelyNearBasePoint, n,
                     "multiplicity " + std::to_string(cm_mult(Q, q)) + " at base point " + q.to_string());
    std::vector<std::pair<ProjPoint, ProjPoint>> candidates;
    for (int i = 1; i <= 2; ++i) {
      ProjPoint p = ProjPoint::unit(f, i);
      if (cm_mult(Q, p) == 1)
        for (const auto& q : qs) candidates.emplace_back(p, q);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    bool advanced = false, applicable = false;
    for (const auto& [p, q] : candidates) {
      Mat3 gpi = Mat3::from_columns(e0.coords(), p.coords(), q.coords());
      if (gpi.det().is_zero()) continue;
      LinMap gp = LinMap(gpi).inverse();
      LinMap a = gn * LinMap(gpi);  // g_n = a g'
      if (sigma_conj_degree(gp) != 2 || sigma_conj_degree(a) != 2 || !deg2_factor(gp) || !deg2_factor(a)) continue;
      applicable = true;
      Rewriter t = rw;
      t.split(left + 1, a, gp);  // sigma a g' sigma
      t.insert_sigmas(left + 2);  // sigma a sigma sigma g' sigma
      auto [c2, p2] = deg2_impl(gp);
      t.lemma(left + 3, MoveKind::LDeg2, c2, p2);
      auto [c1, p1] = deg2_impl(a);
      t.lemma(left, MoveKind::LDeg2, c1, p1);
      t.normalize();
      if (word_measure(t.word()) < std::pair{D, n}) {
        rw = std::move(t);
        advanced = true;
        break;
      }
    }
    if (!advanced)
      return stuck(applicable ? StuckReason::GenericityFailure : StuckReason::InfinitelyNearBasePoint, n,
                   applicable ? "no choice of g' decreases (D, n)"
                              : "no choice of g' satisfies the hypotheses of the deg2 rewrite");
  }
  RewriteCertificate c = rw.certificate(w);
  c.progress = std::move(progress);
  return c;
}

}  // namespace cremona
