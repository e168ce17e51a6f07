#include <algorithm>
#include <functional>
#include <random>

#include "cremona/error.hpp"
#include "cremona/rewrite.hpp"
#include "cremona/sampling.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const Field Q = Field::rational();
const Field P = Field::prime(1000000007);

Letter S() { return Letter::sigma(); }
Letter L(const Field& f, const char* m) { return Letter::lin(LinMap(parse_matrix(f, m))); }
LinMap lin(const Field& f, const char* m) { return LinMap(parse_matrix(f, m)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

// sigma g sigma computed directly from the formulas, independent of words.
CreMap conj_by_sigma(const LinMap& g) {
  CreMap s = cm_sigma(g.field());
  return cm_compose(s, cm_compose(cm_from_lin(g), s));
}

}  // namespace

TEST_CASE("word evaluation and inversion") {
  Word s(Q, {S()});
  CHECK(word_eval(s) == cm_sigma(Q));
  CHECK(word_inverse(s) == s);
  Word d(Q, {L(Q, "[[1,0,0],[0,2,0],[0,0,3]]")});
  CHECK(word_inverse(d)[0].map() == lin(Q, "[[6,0,0],[0,3,0],[0,0,2]]"));
  LinMap h = cm_h(Q);
  CHECK((h * h).is_identity());
  Word sh(Q, {S(), Letter::lin(h)});
  CHECK(word_inverse(sh) == Word(Q, {Letter::lin(h), S()}));
  CHECK(cm_equal(word_eval(concat(sh, word_inverse(sh))), cm_identity(Q)));
  Word e(Q);
  CHECK(word_eval(e) == cm_identity(Q));
}

TEST_CASE("word text format round trips") {
  Word w(Q, {S(), L(Q, "[[1,0,-1/2],[0,1,0],[0,0,3]]"), S()});
  std::string text = format_word(w);
  CHECK(text == "sigma\nlin [[1,0,-1/2],[0,1,0],[0,0,3]]\nsigma\n");
  CHECK(parse_word(Q, "# comment\n\nsigma\n  lin [[1,0,-1/2],[0,1,0],[0,0,3]]  \nsigma\n") == w);
  CHECK(code_of([] { parse_word(Q, "sigmaa\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_word(Q, "lin [[1,2,3],[2,4,6],[0,0,1]]\n"); }) == ErrorCode::SingularMatrix);
}

TEST_CASE("elementary moves") {
  Word w(Q, {L(Q, "[[1,0,0],[0,2,0],[0,0,1]]"), S(), S(), L(Q, "[[1,0,0],[0,2,0],[0,0,1]]")});
  RewriteStep m2(1, MoveKind::M2SigmaSigma, Word(Q, {S(), S()}), Word(Q));
  Word r = apply_move(w, m2);
  CHECK(r.size() == 2);
  CHECK(r.sigma_count() == 0);

  Word m4w(Q, {S(), L(Q, "[[2,0,0],[0,5,0],[0,0,1]]"), S()});
  RewriteStep m4(0, MoveKind::M4SigmaDiag, m4w, Word(Q, {L(Q, "[[1/2,0,0],[0,1/5,0],[0,0,1]]")}));
  Word r4 = apply_move(m4w, m4);
  CHECK(r4.size() == 1);
  CHECK(cm_equal(word_eval(r4), word_eval(m4w)));

  Word hw(Q, {S(), Letter::lin(cm_h(Q))});
  RewriteStep m3(0, MoveKind::M3SigmaPerm, hw, Word(Q, {Letter::lin(cm_h(Q)), S()}));
  CHECK(code_of([&] { apply_move(hw, m3); }) == ErrorCode::PatternMismatch);

  // Wrong inverse diagonal.
  RewriteStep bad(0, MoveKind::M4SigmaDiag, m4w, Word(Q, {L(Q, "[[1,0,0],[0,5,0],[0,0,2]]")}));
  CHECK(code_of([&] { apply_move(m4w, bad); }) == ErrorCode::PatternMismatch);
  // Before-span does not match the word.
  RewriteStep off(1, MoveKind::M2SigmaSigma, Word(Q, {S(), S()}), Word(Q));
  CHECK(code_of([&] { apply_move(m4w, off); }) == ErrorCode::PatternMismatch);
  // M5 two-sided form.
  Word s5(Q, {S(), Letter::lin(cm_h(Q)), S()});
  RewriteStep m5(0, MoveKind::M5SigmaH, s5, Word(Q, {Letter::lin(cm_h(Q)), S(), Letter::lin(cm_h(Q))}));
  CHECK(apply_move(s5, m5).size() == 3);
  CHECK(apply_move(apply_move(s5, m5), reverse_step(m5)) == s5);
}

TEST_CASE("every move preserves evaluation on random instances") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Q, P}) {
    for (int t = 0; t < 100; ++t) {
      LinMap a = random_dejonquieres_linmap(f, rng), b = random_dejonquieres_linmap(f, rng);
      LinMap d = random_diagonal(f, rng);
      std::array<int, 3> perm{0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng);
      LinMap tau(Mat3::permutation(f, perm));
      LinMap h = cm_h(f);
      // A random context around each pattern.
      Word pre(f, {Letter::lin(random_dejonquieres_linmap(f, rng)), S()});
      Word post(f, {S(), Letter::lin(random_dejonquieres_linmap(f, rng))});
      std::vector<std::pair<Word, RewriteStep>> cases;
      auto add = [&](MoveKind k, Word before, Word after) {
        Word w = concat(concat(pre, before), post);
        cases.emplace_back(w, RewriteStep(pre.size(), k, before, after));
      };
      add(MoveKind::M1MergeLin, Word(f, {Letter::lin(a), Letter::lin(b)}), Word(f, {Letter::lin(a * b)}));
      add(MoveKind::M2SigmaSigma, Word(f, {S(), S()}), Word(f));
      add(MoveKind::M3SigmaPerm, Word(f, {S(), Letter::lin(tau)}), Word(f, {Letter::lin(tau), S()}));
      add(MoveKind::M4SigmaDiag, Word(f, {S(), Letter::lin(d), S()}), Word(f, {Letter::lin(d.inverse())}));
      add(MoveKind::M5SigmaH, Word(f, {S(), Letter::lin(h), S()}), Word(f, {Letter::lin(h), S(), Letter::lin(h)}));
      for (const auto& [w, step] : cases) {
        Word r = apply_move(w, step);
        CHECK(cm_equal(word_eval(r), word_eval(w)));
        CHECK(apply_move(r, reverse_step(step)) == w);
      }
    }
  }
}

TEST_CASE("lemma deg1") {
  LinMap g = lin(Q, "[[1,0,0],[0,2,0],[0,0,3]]");
  RewriteCertificate c = rewrite_deg1(g);
  REQUIRE(c.final_word.size() == 1);
  CHECK(c.final_word[0].map() == lin(Q, "[[6,0,0],[0,3,0],[0,0,2]]"));
  CHECK(c.final_word[0].map() == lin(Q, "[[1,0,0],[0,1/2,0],[0,0,1/3]]"));
  CHECK(verify_certificate(c).ok);

  LinMap swap = lin(Q, "[[1,0,0],[0,0,1],[0,1,0]]");
  RewriteCertificate cs = rewrite_deg1(swap);
  REQUIRE(cs.final_word.size() == 1);
  CHECK(cs.final_word[0].map() == swap);
  CHECK(verify_certificate(cs).ok);

  CHECK(code_of([] { rewrite_deg1(cm_h(Q)); }) == ErrorCode::HypothesisFailed);
  CHECK(code_of([] { rewrite_deg1(lin(Q, "[[0,1,0],[1,0,0],[0,0,1]]")); }) == ErrorCode::HypothesisFailed);

  // Monomial maps in J: the output is sigma g sigma computed directly.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    LinMap d = random_diagonal(Q, rng);
    LinMap m = t % 2 ? d * swap : d;
    RewriteCertificate cm = rewrite_deg1(m);
    CHECK(verify_certificate(cm).ok);
    CHECK(cm_from_lin(cm.final_word[0].map()) == conj_by_sigma(m));
  }
}

TEST_CASE("lemma deg2") {
  LinMap h = cm_h(Q);
  RewriteCertificate c = rewrite_deg2(h);
  REQUIRE(c.final_word.size() == 3);
  CHECK(c.final_word[0].map() == h);
  CHECK(c.final_word[2].map() == h);
  CHECK(verify_certificate(c).ok);

  LinMap g = lin(Q, "[[1,0,1],[0,1,1],[0,0,1]]");
  RewriteCertificate cg = rewrite_deg2(g);
  CHECK(verify_certificate(cg).ok);
  bool saw_d2 = false;
  for (const auto& s : cg.steps)
    if (s.move == MoveKind::M4SigmaDiag)
      for (const auto& p : s.params)
        if (p.name == "d" && LinMap(p.value) == lin(Q, "[[-1,0,0],[0,-1,0],[0,0,1]]")) saw_d2 = true;
  CHECK(saw_d2);
  CHECK(cm_equal(word_eval(cg.final_word), conj_by_sigma(g)));

  try {
    rewrite_deg2(lin(Q, "[[1,0,1],[0,1,0],[0,0,1]]"));
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisFailed);
    CHECK(std::string(e.what()).find("collinear") != std::string::npos);
  }
  CHECK(code_of([] { rewrite_deg2(lin(Q, "[[1,0,0],[0,2,0],[0,0,3]]")); }) == ErrorCode::HypothesisFailed);
}

TEST_CASE("lemma deg2 on random maps") {
  std::mt19937_64 rng(8);
  for (const Field& f : {Q, P}) {
    int done = 0;
    while (done < 30) {
      // g in J fixing [0:1:0] up to a coordinate swap on either side.
      Mat3 m(f);
      m(0, 0) = random_nonzero_entry(f, rng, 5);
      m(0, 2) = random_nonzero_entry(f, rng, 5);
      m(1, 1) = random_nonzero_entry(f, rng, 5);
      m(1, 2) = random_nonzero_entry(f, rng, 5);
      m(2, 2) = random_nonzero_entry(f, rng, 5);
      LinMap swap(Mat3::permutation(f, {0, 2, 1}));
      LinMap g(m);
      if (done % 3 == 1) g = swap * g;
      if (done % 3 == 2) g = g * swap;
      if (cm_degree(conj_by_sigma(g)) != 2) continue;
      RewriteCertificate c = rewrite_deg2(g);
      CHECK(verify_certificate(c).ok);
      REQUIRE(c.final_word.size() == 3);
      CHECK(c.final_word.sigma_count() == 1);
      CHECK(c.final_word[0].map().in_dejonquieres());
      CHECK(c.final_word[2].map().in_dejonquieres());
      CHECK(cm_equal(word_eval(c.final_word), conj_by_sigma(g)));
      ++done;
    }
  }
}

TEST_CASE("quadratic maps with prescribed base points") {
  Field f = Q;
  Word w = make_quadratic_with_base_points(ProjPoint::unit(f, 0), ProjPoint::unit(f, 1), ProjPoint::unit(f, 2));
  CHECK(w[0].map().is_identity());
  CHECK(w[2].map().is_identity());
  CHECK(word_eval(w) == cm_sigma(f));

  ProjPoint p = ProjPoint::unit(f, 0), q = ProjPoint::unit(f, 1), r(f.one(), f.one(), f.one());
  CreMap m = word_eval(make_quadratic_with_base_points(p, q, r));
  CHECK(m.degree() == 2);
  auto bp = cm_proper_base_points(m);
  std::vector<ProjPoint> expected{p, q, r};
  std::sort(expected.begin(), expected.end());
  CHECK(bp == expected);
  CHECK(cm_equal(cm_compose(m, m), cm_identity(f)));

  ProjPoint a(f.one(), f.zero(), f.zero()), b(f.zero(), f.one(), f.zero()), c(f.one(), f.one(), f.zero());
  CHECK(code_of([&] { make_quadratic_with_base_points(a, b, c); }) == ErrorCode::CollinearBasePoints);
}

TEST_CASE("square lemma") {
  LinMap h = cm_h(Q);
  // sigma h sigma h and h sigma h sigma are not even equal, and both have degree 2.
  CHECK(code_of([&] { rewrite_square(h, h, h, h); }) == ErrorCode::HypothesisFailed);
  // g1 = g3 = id, g2 = g4: the sides differ since sigma g2 sigma has degree 3.
  std::mt19937_64 rng(3);
  LinMap g2 = random_dejonquieres_linmap(Q, rng);
  while (cm_degree(conj_by_sigma(g2)) != 3) g2 = random_dejonquieres_linmap(Q, rng);
  LinMap id = LinMap::identity(Q);
  CHECK(code_of([&] { rewrite_square(id, g2, id, g2); }) == ErrorCode::HypothesisFailed);
  CHECK(code_of([&] { rewrite_square(lin(Q, "[[0,1,0],[1,0,0],[0,0,1]]"), h, h, h); }) ==
        ErrorCode::HypothesisFailed);

  for (const Field& f : {Q, P}) {
    for (int t = 0; t < 8; ++t) {
      SquareInstance sq = random_square(f, rng);
      Word lhs(f, {S(), Letter::lin(sq.g2), S(), Letter::lin(sq.g1)});
      Word rhs(f, {Letter::lin(sq.g4), S(), Letter::lin(sq.g3), S()});
      REQUIRE(cm_equal(word_eval(lhs), word_eval(rhs)));
      REQUIRE(word_eval(lhs).degree() == 3);
      RewriteCertificate c = rewrite_square(sq.g1, sq.g2, sq.g3, sq.g4, static_cast<std::uint64_t>(t));
      CHECK(c.initial == lhs);
      CHECK(c.final_word == rhs);
      VerifyResult v = verify_certificate(c);
      CHECK_MESSAGE(v.ok, v.message);
      CHECK(rewrite_square(sq.g1, sq.g2, sq.g3, sq.g4, static_cast<std::uint64_t>(t)) == c);
    }
  }
}

TEST_CASE("simplifier on small relator words") {
  SUBCASE("sigma sigma") {
    Word w(Q, {S(), S()});
    auto res = simplify_identity_word(w, 1);
    REQUIRE(std::holds_alternative<RewriteCertificate>(res));
    const auto& c = std::get<RewriteCertificate>(res);
    REQUIRE(c.steps.size() == 1);
    CHECK(c.steps[0].move == MoveKind::M2SigmaSigma);
    CHECK(c.final_word.empty());
    CHECK(verify_certificate(c).ok);
  }
  SUBCASE("(h sigma)^3") {
    Letter h = Letter::lin(cm_h(Q));
    Word w(Q, {h, S(), h, S(), h, S()});
    auto res = simplify_identity_word(w, 1);
    REQUIRE(std::holds_alternative<RewriteCertificate>(res));
    const auto& c = std::get<RewriteCertificate>(res);
    CHECK(c.final_word.empty());
    CHECK(verify_certificate(c).ok);
    int m5 = 0;
    std::function<void(const std::vector<RewriteStep>&)> count = [&](const std::vector<RewriteStep>& steps) {
      for (const auto& s : steps) {
        m5 += s.move == MoveKind::M5SigmaH;
        count(s.substeps);
      }
    };
    count(c.steps);
    CHECK(m5 == 1);
  }
  SUBCASE("empty word") {
    auto res = simplify_identity_word(Word(Q), 0);
    REQUIRE(std::holds_alternative<RewriteCertificate>(res));
    CHECK(std::get<RewriteCertificate>(res).steps.empty());
  }
  SUBCASE("errors") {
    CHECK(code_of([] { simplify_identity_word(Word(Q, {S()}), 0); }) == ErrorCode::NotIdentity);
    Word nj(Q, {L(Q, "[[0,1,0],[1,0,0],[0,0,1]]"), L(Q, "[[0,1,0],[1,0,0],[0,0,1]]")});
    CHECK(code_of([&] { simplify_identity_word(nj, 0); }) == ErrorCode::NotDeJonquieres);
  }
}

TEST_CASE("simplifier reports an infinitely near base point") {
  // sigma g (sigma d sigma d) g^-1 sigma with a2*b2 = 0 for g.
  LinMap g = lin(Q, "[[1,0,1],[0,1,0],[0,0,1]]");
  LinMap d = lin(Q, "[[2,0,0],[0,3,0],[0,0,1]]");
  Word w(Q, {S(), Letter::lin(g), S(), Letter::lin(d), S(), Letter::lin(d * g.inverse()), S()});
  auto res = simplify_identity_word(w, 0);
  REQUIRE(std::holds_alternative<Stuck>(res));
  const Stuck& s = std::get<Stuck>(res);
  CHECK(s.reason == StuckReason::InfinitelyNearBasePoint);
  CHECK(s.index == 4);
  CHECK(verify_certificate(s.partial).ok);
}

TEST_CASE("simplifier on conjugated relators") {
  std::mt19937_64 rng(21);
  for (const Field& f : {Q, P}) {
    for (int t = 0; t < 15; ++t) {
      auto r = static_cast<Relator>(t % kRelatorCount);
      Word w = random_conjugated_relator(f, r, rng);
      auto res = simplify_identity_word(w, static_cast<std::uint64_t>(t));
      if (auto* st = std::get_if<Stuck>(&res)) {
        FAIL_CHECK("stuck: " << stuck_reason_name(st->reason) << " at " << st->index << ": " << st->detail
                             << " on " << word_summary(w));
        continue;
      }
      const auto& c = std::get<RewriteCertificate>(res);
      CHECK(c.final_word.empty());
      VerifyResult v = verify_certificate(c);
      CHECK_MESSAGE(v.ok, v.message);
      for (std::size_t i = 1; i < c.progress.size(); ++i)
        CHECK(std::pair{c.progress[i].D, c.progress[i].n} < std::pair{c.progress[i - 1].D, c.progress[i - 1].n});
      auto again = simplify_identity_word(w, static_cast<std::uint64_t>(t));
      CHECK(std::get<RewriteCertificate>(again) == c);
    }
  }
}

TEST_CASE("simplifier on square words uses case c") {
  std::mt19937_64 rng(4);
  int case_c = 0;
  for (int t = 0; t < 6; ++t) {
    SquareInstance sq = random_square(Q, rng);
    Word w(Q, {S(), Letter::lin(sq.g3.inverse()), S(), Letter::lin(sq.g4.inverse()), S(), Letter::lin(sq.g2), S(),
               Letter::lin(sq.g1)});
    REQUIRE(cm_equal(word_eval(w), cm_identity(Q)));
    auto res = simplify_identity_word(w, static_cast<std::uint64_t>(t));
    if (auto* st = std::get_if<Stuck>(&res)) {
      FAIL_CHECK("stuck: " << stuck_reason_name(st->reason) << " at " << st->index << ": " << st->detail);
      continue;
    }
    const auto& c = std::get<RewriteCertificate>(res);
    CHECK(verify_certificate(c).ok);
    for (const auto& p : c.progress) case_c += p.case_label == "c";
  }
  CHECK(case_c > 0);
}

TEST_CASE("certificate verification detects tampering") {
  Letter h = Letter::lin(cm_h(Q));
  Word w(Q, {h, S(), h, S(), h, S()});
  auto c = std::get<RewriteCertificate>(simplify_identity_word(w, 0));
  REQUIRE(verify_certificate(c).ok);

  // Perturb one matrix entry in the after-span of some step with a Lin letter.
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Word& a = c.steps[i].after;
    auto it = std::find_if(a.letters.begin(), a.letters.end(), [](const Letter& l) { return l.is_lin(); });
    if (it == a.letters.end()) continue;
    RewriteCertificate bad = c;
    Mat3 m = it->map().matrix();
    m(2, 2) = m(2, 2) + Q.one();
    if (m.det().is_zero()) m(2, 2) = m(2, 2) + Q.one();
    bad.steps[i].after.letters[static_cast<std::size_t>(it - a.letters.begin())] = Letter::lin(LinMap(m));
    VerifyResult v = verify_certificate(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.failed_step == static_cast<long>(i));
    break;
  }

  RewriteCertificate wrong_final = c;
  wrong_final.final_word = Word(Q, {S(), S()});
  CHECK_FALSE(verify_certificate(wrong_final).ok);

  RewriteCertificate bad_progress = c;
  REQUIRE(!bad_progress.progress.empty());
  bad_progress.progress[0].D += 1;
  VerifyResult vp = verify_certificate(bad_progress);
  CHECK_FALSE(vp.ok);

  RewriteCertificate trivial(Word(Q, {S(), h}));
  CHECK(verify_certificate(trivial).ok);
}
