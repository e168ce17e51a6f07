#include <random>

#include "cremona/checks.hpp"
#include "cremona/error.hpp"
#include "cremona/sampling.hpp"
#include "cremona/serialize.hpp"
#include "doctest.h"

using namespace cremona;

namespace {

const Field Q = Field::rational();
const Field P = Field::prime(1000000007);

}  // namespace

TEST_CASE("certificates round trip byte for byte") {
  std::mt19937_64 rng(9);
  for (const Field& f : {Q, P}) {
    std::vector<RewriteCertificate> certs;
    certs.push_back(rewrite_deg1(random_deg1_linmap(f, rng)));
    certs.push_back(rewrite_deg2(random_deg2_linmap(f, rng)));
    SquareInstance sq = random_square(f, rng);
    certs.push_back(rewrite_square(sq.g1, sq.g2, sq.g3, sq.g4, 1));
    Word w = random_conjugated_relator(f, Relator::SigmaH, rng);
    certs.push_back(std::get<RewriteCertificate>(simplify_identity_word(w, 2)));
    for (const auto& c : certs) {
      std::string json = certificate_to_json(c);
      RewriteCertificate back = certificate_from_json(json);
      CHECK(back == c);
      CHECK(certificate_to_json(back) == json);
      CHECK(verify_certificate(back).ok);
    }
  }
}

TEST_CASE("certificate documents have the published fields") {
  auto c = std::get<RewriteCertificate>(simplify_identity_word(Word(Q, {Letter::sigma(), Letter::sigma()}), 0));
  std::string json = certificate_to_json(c);
  for (const char* key : {"\"field\"", "\"initial\"", "\"steps\"", "\"final\"", "\"position\"", "\"move\"",
                          "\"params\"", "\"before\"", "\"after\"", "\"M2-sigma-sigma\"", "\"progress\""})
    CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("malformed certificates are parse errors") {
  auto code = [](const std::string& s) {
    try {
      certificate_from_json(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code("{") == ErrorCode::ParseError);
  CHECK(code("{}") == ErrorCode::ParseError);
  CHECK(code(R"({"field":"q","initial":["sigma"],"steps":[],"final":["sigmaa"]})") == ErrorCode::ParseError);
  CHECK(code(R"({"field":"q","initial":[],"steps":[{"position":0,"move":"M9","params":{},"before":[],"after":[]}],"final":[]})") ==
        ErrorCode::ParseError);
  CHECK(code(R"({"field":"q","initial":[{"lin":[["1","0"],["0","1"]]}],"steps":[],"final":[]})") ==
        ErrorCode::ParseError);
  // A parsable certificate that does not verify.
  RewriteCertificate c = certificate_from_json(R"({"field":"q","initial":["sigma"],"steps":[],"final":[]})");
  CHECK_FALSE(verify_certificate(c).ok);
}

TEST_CASE("maps, words and triples round trip through text") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const Field& f = i % 2 ? P : Q;
    Word w = random_conjugated_relator(f, static_cast<Relator>(i % kRelatorCount), rng, 4);
    CHECK(parse_word(f, format_word(w)) == w);
    CreMap m = word_eval(Word(f, {w[0], Letter::sigma(), Letter::lin(random_dejonquieres_linmap(f, rng))}));
    CHECK(CreMap::parse(f, m.to_string()) == m);
    SymTriple t = random_sym_triple(f, 1 + i % 4, rng);
    CHECK(parse_triple(f, format_triple(t)) == t);
  }
}

TEST_CASE("selftest battery passes") {
  for (const Field& f : {Q, P}) {
    auto results = run_selftest(f, 7);
    CHECK(results.size() > 5);
    for (const auto& r : results) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
  }
  auto rel = relations_check(Q, 7);
  CHECK(rel.size() == 5);
  for (const auto& r : rel) CHECK(r.passed);
}
