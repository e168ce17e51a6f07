#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>
#include <string>

#include "cremona/cremona.h"

namespace {

struct Ctx {
  crm_context* p = nullptr;
  explicit Ctx(const char* field) { REQUIRE(crm_context_new(field, &p) == CRM_OK); }
  ~Ctx() { crm_context_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  crm_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("context creation validates the field") {
  crm_context* c = nullptr;
  CHECK(crm_context_new("fp:1000000007", &c) == CRM_OK);
  crm_context_free(c);
  CHECK(crm_context_new("fp:12", &c) == CRM_INVALID_ARGUMENT);
  CHECK(c == nullptr);
  CHECK(crm_context_new(nullptr, &c) == CRM_NULL_ARGUMENT);
  CHECK(std::string(crm_status_name(CRM_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(crm_status_name(CRM_STUCK)) == "Stuck");
}

TEST_CASE("maps through the C interface") {
  Ctx c("q");
  crm_map *s = nullptr, *id = nullptr, *ss = nullptr;
  REQUIRE(crm_map_parse(c.p, "[y*z : x*z : x*y]", &s) == CRM_OK);
  REQUIRE(crm_map_parse(c.p, "[x : y : z]", &id) == CRM_OK);
  REQUIRE(crm_map_compose(c.p, s, s, &ss) == CRM_OK);
  int eq = 0, deg = 0, m = -1;
  CHECK(crm_map_equal(c.p, ss, id, &eq) == CRM_OK);
  CHECK(eq == 1);
  CHECK(crm_map_degree(c.p, s, &deg) == CRM_OK);
  CHECK(deg == 2);
  CHECK(crm_map_mult(c.p, s, "[0:1:0]", &m) == CRM_OK);
  CHECK(m == 1);
  CHECK(crm_map_mult(c.p, s, "[1:1:1]", &m) == CRM_OK);
  CHECK(m == 0);
  CHECK(crm_map_mult(c.p, s, "[1:1]", &m) == CRM_PARSE_ERROR);
  char* bp = nullptr;
  CHECK(crm_map_base_points(c.p, s, &bp) == CRM_OK);
  CHECK(take(bp) == R"(["[0:0:1]","[0:1:0]","[1:0:0]"])");
  char* text = nullptr;
  CHECK(crm_map_to_string(c.p, s, &text) == CRM_OK);
  CHECK(take(text) == "[y*z : x*z : x*y]");

  crm_map* bad = nullptr;
  CHECK(crm_map_parse(c.p, "[x : y]", &bad) == CRM_PARSE_ERROR);
  CHECK(std::string(crm_last_error(c.p)).size() > 0);
  CHECK(crm_map_degree(c.p, nullptr, &deg) == CRM_NULL_ARGUMENT);
  crm_map_free(s);
  crm_map_free(id);
  crm_map_free(ss);
}

TEST_CASE("simplify, serialize and verify through the C interface") {
  Ctx c("q");
  crm_word* w = nullptr;
  REQUIRE(crm_word_parse(c.p, "sigma\nsigma\n", &w) == CRM_OK);
  crm_cert* cert = nullptr;
  char* stuck = nullptr;
  REQUIRE(crm_simplify(c.p, w, 1, &cert, &stuck) == CRM_OK);
  CHECK(stuck == nullptr);
  char* json = nullptr;
  REQUIRE(crm_cert_to_json(c.p, cert, &json) == CRM_OK);
  std::string doc = take(json);
  auto j = nlohmann::json::parse(doc);
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["move"] == "M2-sigma-sigma");
  CHECK(j["final"].empty());

  crm_cert* back = nullptr;
  REQUIRE(crm_cert_parse_json(c.p, doc.c_str(), &back) == CRM_OK);
  int ok = 0;
  long failed = 0;
  char* msg = nullptr;
  CHECK(crm_cert_verify(c.p, back, &ok, &failed, &msg) == CRM_OK);
  CHECK(ok == 1);
  CHECK(failed == -1);
  take(msg);

  crm_word* single = nullptr;
  REQUIRE(crm_word_parse(c.p, "sigma\n", &single) == CRM_OK);
  crm_cert* none = nullptr;
  CHECK(crm_simplify(c.p, single, 1, &none, nullptr) == CRM_NOT_IDENTITY);
  CHECK(none == nullptr);
  crm_cert* junk = nullptr;
  CHECK(crm_cert_parse_json(c.p, "{", &junk) == CRM_PARSE_ERROR);

  crm_word_free(w);
  crm_word_free(single);
  crm_cert_free(cert);
  crm_cert_free(back);
}

TEST_CASE("stuck words report through the C interface") {
  Ctx c("q");
  crm_word* w = nullptr;
  REQUIRE(crm_word_parse(c.p,
                         "sigma\nlin [[1,0,1],[0,1,0],[0,0,1]]\nsigma\nlin [[2,0,0],[0,3,0],[0,0,1]]\n"
                         "sigma\nlin [[2,0,-2],[0,3,0],[0,0,1]]\nsigma\n",
                         &w) == CRM_OK);
  crm_cert* cert = nullptr;
  char* stuck = nullptr;
  CHECK(crm_simplify(c.p, w, 5, &cert, &stuck) == CRM_STUCK);
  CHECK(cert == nullptr);
  auto j = nlohmann::json::parse(take(stuck));
  CHECK(j["status"] == "stuck");
  CHECK(j["reason"] == "InfinitelyNearBasePoint");
  crm_word_free(w);
}

TEST_CASE("action and check batteries through the C interface") {
  Ctx c("fp:1000000007");
  crm_triple* t = nullptr;
  REQUIRE(crm_triple_parse(c.p, "1\n\n2\n\n3\n\n5\n", &t) == CRM_OK);
  crm_word* w = nullptr;
  REQUIRE(crm_word_parse(c.p, "sigma\n", &w) == CRM_OK);
  crm_triple* r = nullptr;
  REQUIRE(crm_giz_act(c.p, w, t, &r) == CRM_OK);
  char* text = nullptr;
  REQUIRE(crm_triple_to_string(c.p, r, &text) == CRM_OK);
  // (1/2, 1/3, 1/5) scaled so the first entry is 1: (1, 2/3, 2/5) mod p.
  CHECK(take(text) == "1\n\n1\n\n666666672\n\n800000006\n");
  char* report = nullptr;
  int passed = 0;
  REQUIRE(crm_giz_check(c.p, t, &report, &passed) == CRM_OK);
  CHECK(passed == 1);
  take(report);

  char* results = nullptr;
  REQUIRE(crm_relations_check(c.p, 7, &results, &passed) == CRM_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(take(results)).size() == 5);
  crm_triple_free(t);
  crm_triple_free(r);
  crm_word_free(w);
}
