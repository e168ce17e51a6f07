#include "cremona/checks.hpp"

#include <functional>
#include <random>

#include "cremona/error.hpp"
#include "cremona/gizaction.hpp"
#include "cremona/rewrite.hpp"
#include "cremona/sampling.hpp"
#include "cremona/serialize.hpp"

namespace cremona {

namespace {

// Runs `body` once per sample; the body returns an empty string on success.
CheckResult run_check(const std::string& name, int samples, const std::function<std::string(int)>& body) {
  CheckResult r{name, true, 0, ""};
  for (int i = 0; i < samples; ++i) {
    std::string why;
    try {
      why = body(i);
    } catch (const std::exception& e) {
      why = e.what();
    }
    ++r.samples;
    if (!why.empty()) {
      r.passed = false;
      r.detail = "sample " + std::to_string(i) + ": " + why;
      break;
    }
  }
  return r;
}

CreMap compose_all(const std::vector<CreMap>& maps) {
  CreMap acc = cm_identity(maps.front().field());
  for (const auto& m : maps) acc = cm_compose(acc, m);
  return acc;
}

std::string expect_identity(const CreMap& m) {
  return cm_equal(m, cm_identity(m.field())) ? "" : "composition is " + m.to_string();
}

}  // namespace

std::vector<CheckResult> relations_check(const Field& f, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const CreMap s = cm_sigma(f);
  const CreMap h = cm_from_lin(cm_h(f));
  std::vector<CheckResult> out;
  out.push_back(run_check("relation 1: g1 g2 (g1 g2)^-1 = id", samples, [&](int) {
    LinMap a = random_linmap(f, rng), b = random_linmap(f, rng);
    return expect_identity(compose_all({cm_from_lin(a), cm_from_lin(b), cm_from_lin((a * b).inverse())}));
  }));
  out.push_back(run_check("relation 2: sigma^2 = id", 1, [&](int) { return expect_identity(cm_compose(s, s)); }));
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  out.push_back(run_check("relation 3: sigma tau = tau sigma", 6, [&](int i) {
    CreMap t = cm_from_lin(LinMap(Mat3::permutation(f, perms[static_cast<std::size_t>(i)])));
    return cm_equal(cm_compose(s, t), cm_compose(t, s)) ? "" : "fails for " + t.to_string();
  }));
  out.push_back(run_check("relation 4: sigma d sigma d = id", samples, [&](int) {
    CreMap d = cm_from_lin(random_diagonal(f, rng));
    return expect_identity(compose_all({s, d, s, d}));
  }));
  out.push_back(run_check("relation 5: (sigma h)^3 = id", 1,
                          [&](int) { return expect_identity(compose_all({s, h, s, h, s, h})); }));
  return out;
}

std::vector<CheckResult> run_selftest(const Field& f, std::uint64_t seed) {
  std::vector<CheckResult> out = relations_check(f, seed, 20);
  std::mt19937_64 rng(seed ^ 0x5eedULL);

  out.push_back(run_check("word text round trip", 20, [&](int) {
    Word w = random_conjugated_relator(f, Relator::SigmaDiagonal, rng);
    Word back = parse_word(f, format_word(w));
    return back == w ? "" : "round trip changed the word";
  }));
  out.push_back(run_check("deg1 rewrite replays", 20, [&](int) {
    LinMap g = random_deg1_linmap(f, rng);
    RewriteCertificate c = rewrite_deg1(g);
    VerifyResult v = verify_certificate(c);
    return v.ok ? "" : v.message;
  }));
  out.push_back(run_check("deg2 rewrite replays", 20, [&](int) -> std::string {
    LinMap g = random_deg2_linmap(f, rng);
    RewriteCertificate c = rewrite_deg2(g);
    if (c.final_word.size() != 3 || c.final_word.sigma_count() != 1) return "output is not Lin sigma Lin";
    VerifyResult v = verify_certificate(c);
    return v.ok ? "" : v.message;
  }));
  out.push_back(run_check("square rewrite replays", 3, [&](int i) -> std::string {
    SquareInstance sq = random_square(f, rng);
    RewriteCertificate c = rewrite_square(sq.g1, sq.g2, sq.g3, sq.g4, seed + static_cast<std::uint64_t>(i));
    VerifyResult v = verify_certificate(c);
    return v.ok ? "" : v.message;
  }));
  out.push_back(run_check("identity words simplify", 10, [&](int i) -> std::string {
    Word w = random_conjugated_relator(f, static_cast<Relator>(i % kRelatorCount), rng);
    auto res = simplify_identity_word(w, seed + static_cast<std::uint64_t>(i));
    if (auto* st = std::get_if<Stuck>(&res)) return std::string("stuck: ") + stuck_reason_name(st->reason);
    const auto& c = std::get<RewriteCertificate>(res);
    if (!c.final_word.empty()) return "final word is not empty";
    VerifyResult v = verify_certificate(c);
    if (!v.ok) return v.message;
    std::string json = certificate_to_json(c);
    if (certificate_to_json(certificate_from_json(json)) != json) return "certificate JSON does not round trip";
    auto again = simplify_identity_word(w, seed + static_cast<std::uint64_t>(i));
    if (certificate_to_json(std::get<RewriteCertificate>(again)) != json) return "not deterministic";
    return "";
  }));
  out.push_back(run_check("action relators 1-4", 12, [&](int i) -> std::string {
    int n = 1 + i % 3;
    SymTriple t = random_sym_triple(f, n, rng);
    Letter sg = Letter::sigma(), d = Letter::lin(random_diagonal(f, rng));
    Letter tau = Letter::lin(LinMap(Mat3::permutation(f, {1, 2, 0})));
    Letter tau_inv = Letter::lin(LinMap(Mat3::permutation(f, {1, 2, 0})).inverse());
    LinMap a = random_linmap(f, rng), b = random_linmap(f, rng);
    std::vector<Word> rels{Word(f, {Letter::lin(a), Letter::lin(b), Letter::lin((a * b).inverse())}),
                           Word(f, {sg, sg}), Word(f, {sg, tau, sg, tau_inv}), Word(f, {sg, d, sg, d})};
    for (std::size_t k = 0; k < rels.size(); ++k)
      if (giz_act_word(rels[k], t) != t) return "relator " + std::to_string(k + 1) + " moves the triple";
    return "";
  }));
  out.push_back(run_check("action relator 5 up to congruence", 12, [&](int i) -> std::string {
    int n = 1 + i % 3;
    SymTriple t = random_sym_triple(f, n, rng);
    Letter sg = Letter::sigma(), h = Letter::lin(cm_h(f));
    SymTriple r = t;
    try {
      r = giz_act_word(Word(f, {sg, h, sg, h, sg, h}), t);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularComponent) return "";
      throw;
    }
    return giz_congruent_via(r, t, t[2]) ? "" : "not congruent to the input";
  }));
  out.push_back(run_check("relation 5 matrix identity", 12, [&](int i) -> std::string {
    int n = 1 + i % 4;
    for (;;) {
      Matrix a1 = random_symmetric(f, n, rng), a3 = random_symmetric(f, n, rng);
      try {
        return giz_check_rel5_identity(a1, a3) ? "" : "identity fails";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularInput) throw;
      }
    }
  }));
  out.push_back(run_check("triple text round trip", 8, [&](int i) {
    SymTriple t = random_sym_triple(f, 1 + i % 4, rng);
    return parse_triple(f, format_triple(t)) == t ? "" : "round trip changed the triple";
  }));
  return out;
}

}  // namespace cremona
