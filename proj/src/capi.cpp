#include "cremona/cremona.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <optional>
#include <string>

#include "cremona/checks.hpp"
#include "cremona/cremap.hpp"
#include "cremona/error.hpp"
#include "cremona/gizaction.hpp"
#include "cremona/rewrite.hpp"
#include "cremona/serialize.hpp"
#include "cremona/word.hpp"

using namespace cremona;
using Json = nlohmann::ordered_json;

struct crm_context {
  Field field;
  std::string last_error;
};
struct crm_map {
  CreMap value;
};
struct crm_word {
  Word value;
};
struct crm_cert {
  RewriteCertificate value;
};
struct crm_triple {
  SymTriple value;
};

namespace {

crm_status status_of(ErrorCode c) { return static_cast<crm_status>(static_cast<int>(c) + 1); }

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs body, translating exceptions into a status and recording the message.
template <class F>
crm_status guarded(crm_context* ctx, F&& body) {
  if (!ctx) return CRM_NULL_ARGUMENT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CRM_INTERNAL_ERROR;
  } catch (...) {
    ctx->last_error = "unknown failure";
    return CRM_INTERNAL_ERROR;
  }
}

crm_status null_arg(crm_context* ctx) {
  ctx->last_error = "required argument is null";
  return CRM_NULL_ARGUMENT;
}

ProjPoint parse_point(const Field& f, std::string s) {
  auto l = s.find('['), r = s.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l)
    fail(ErrorCode::ParseError, "point must look like [a:b:c]");
  s = s.substr(l + 1, r - l - 1);
  std::array<Scalar, 3> c{f.zero(), f.zero(), f.zero()};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t colon = s.find(':', start);
    if ((i < 2) != (colon != std::string::npos)) fail(ErrorCode::ParseError, "point must have three coordinates");
    c[static_cast<std::size_t>(i)] = f.parse_scalar(s.substr(start, i < 2 ? colon - start : std::string::npos));
    start = colon + 1;
  }
  return ProjPoint(c);
}

Json checks_json(const std::vector<CheckResult>& results, int* all_passed) {
  Json a = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    a.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"samples", r.samples}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  if (all_passed) *all_passed = ok ? 1 : 0;
  return a;
}

}  // namespace

extern "C" {

const char* crm_status_name(crm_status s) {
  switch (s) {
    case CRM_OK:
      return "Ok";
    case CRM_STUCK:
      return "Stuck";
    case CRM_NULL_ARGUMENT:
      return "NullArgument";
    case CRM_INTERNAL_ERROR:
      return "InternalError";
    default:
      break;
  }
  int c = static_cast<int>(s) - 1;
  if (c >= 0 && c <= static_cast<int>(ErrorCode::InvalidArgument))
    return error_code_name(static_cast<ErrorCode>(c)).data();
  return "Unknown";
}

void crm_string_free(char* s) { std::free(s); }

crm_status crm_context_new(const char* field_mode, crm_context** out) {
  if (!field_mode || !out) return CRM_NULL_ARGUMENT;
  *out = nullptr;
  try {
    *out = new crm_context{Field::parse(field_mode), ""};
    return CRM_OK;
  } catch (const Error& e) {
    return status_of(e.code());
  } catch (...) {
    return CRM_INTERNAL_ERROR;
  }
}

void crm_context_free(crm_context* ctx) { delete ctx; }

const char* crm_last_error(const crm_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

crm_status crm_map_parse(crm_context* ctx, const char* text, crm_map** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return null_arg(ctx);
    *out = new crm_map{CreMap::parse(ctx->field, text)};
    return CRM_OK;
  });
}

crm_status crm_map_to_string(crm_context* ctx, const crm_map* m, char** out) {
  return guarded(ctx, [&] {
    if (!m || !out) return null_arg(ctx);
    *out = dup_string(m->value.to_string());
    return CRM_OK;
  });
}

crm_status crm_map_compose(crm_context* ctx, const crm_map* f, const crm_map* g, crm_map** out) {
  return guarded(ctx, [&] {
    if (!f || !g || !out) return null_arg(ctx);
    *out = new crm_map{cm_compose(f->value, g->value)};
    return CRM_OK;
  });
}

crm_status crm_map_degree(crm_context* ctx, const crm_map* m, int* out) {
  return guarded(ctx, [&] {
    if (!m || !out) return null_arg(ctx);
    *out = cm_degree(m->value);
    return CRM_OK;
  });
}

crm_status crm_map_base_points(crm_context* ctx, const crm_map* m, char** out_json) {
  return guarded(ctx, [&] {
    if (!m || !out_json) return null_arg(ctx);
    Json a = Json::array();
    for (const auto& p : cm_proper_base_points(m->value)) a.push_back(p.to_string());
    *out_json = dup_string(a.dump());
    return CRM_OK;
  });
}

crm_status crm_map_mult(crm_context* ctx, const crm_map* m, const char* point, int* out) {
  return guarded(ctx, [&] {
    if (!m || !point || !out) return null_arg(ctx);
    *out = cm_mult(m->value, parse_point(ctx->field, point));
    return CRM_OK;
  });
}

crm_status crm_map_equal(crm_context* ctx, const crm_map* a, const crm_map* b, int* out) {
  return guarded(ctx, [&] {
    if (!a || !b || !out) return null_arg(ctx);
    *out = cm_equal(a->value, b->value) ? 1 : 0;
    return CRM_OK;
  });
}

void crm_map_free(crm_map* m) { delete m; }

crm_status crm_word_parse(crm_context* ctx, const char* text, crm_word** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return null_arg(ctx);
    *out = new crm_word{parse_word(ctx->field, text)};
    return CRM_OK;
  });
}

crm_status crm_word_to_string(crm_context* ctx, const crm_word* w, char** out) {
  return guarded(ctx, [&] {
    if (!w || !out) return null_arg(ctx);
    *out = dup_string(format_word(w->value));
    return CRM_OK;
  });
}

crm_status crm_word_eval(crm_context* ctx, const crm_word* w, crm_map** out) {
  return guarded(ctx, [&] {
    if (!w || !out) return null_arg(ctx);
    *out = new crm_map{word_eval(w->value)};
    return CRM_OK;
  });
}

void crm_word_free(crm_word* w) { delete w; }

crm_status crm_simplify(crm_context* ctx, const crm_word* w, uint64_t seed, crm_cert** out, char** stuck_json) {
  return guarded(ctx, [&] {
    if (!w || !out) return null_arg(ctx);
    *out = nullptr;
    if (stuck_json) *stuck_json = nullptr;
    auto res = simplify_identity_word(w->value, seed);
    if (auto* st = std::get_if<Stuck>(&res)) {
      ctx->last_error = std::string(stuck_reason_name(st->reason)) + " at index " + std::to_string(st->index);
      if (stuck_json) *stuck_json = dup_string(stuck_to_json(*st));
      return CRM_STUCK;
    }
    *out = new crm_cert{std::get<RewriteCertificate>(std::move(res))};
    return CRM_OK;
  });
}

crm_status crm_cert_parse_json(crm_context* ctx, const char* json, crm_cert** out) {
  return guarded(ctx, [&] {
    if (!json || !out) return null_arg(ctx);
    *out = new crm_cert{certificate_from_json(json)};
    return CRM_OK;
  });
}

crm_status crm_cert_to_json(crm_context* ctx, const crm_cert* c, char** out) {
  return guarded(ctx, [&] {
    if (!c || !out) return null_arg(ctx);
    *out = dup_string(certificate_to_json(c->value));
    return CRM_OK;
  });
}

crm_status crm_cert_verify(crm_context* ctx, const crm_cert* c, int* ok, long* failed_step, char** message) {
  return guarded(ctx, [&] {
    if (!c || !ok) return null_arg(ctx);
    VerifyResult v = verify_certificate(c->value);
    *ok = v.ok ? 1 : 0;
    if (failed_step) *failed_step = v.ok ? -1 : static_cast<long>(v.failed_step);
    if (message) *message = dup_string(v.message);
    return CRM_OK;
  });
}

void crm_cert_free(crm_cert* c) { delete c; }

crm_status crm_relations_check(crm_context* ctx, uint64_t seed, char** out_json, int* all_passed) {
  return guarded(ctx, [&] {
    if (!out_json) return null_arg(ctx);
    *out_json = dup_string(checks_json(relations_check(ctx->field, seed), all_passed).dump());
    return CRM_OK;
  });
}

crm_status crm_selftest(crm_context* ctx, uint64_t seed, char** out_json, int* all_passed) {
  return guarded(ctx, [&] {
    if (!out_json) return null_arg(ctx);
    *out_json = dup_string(checks_json(run_selftest(ctx->field, seed), all_passed).dump());
    return CRM_OK;
  });
}

crm_status crm_triple_parse(crm_context* ctx, const char* text, crm_triple** out) {
  return guarded(ctx, [&] {
    if (!text || !out) return null_arg(ctx);
    *out = new crm_triple{parse_triple(ctx->field, text)};
    return CRM_OK;
  });
}

crm_status crm_triple_to_string(crm_context* ctx, const crm_triple* t, char** out) {
  return guarded(ctx, [&] {
    if (!t || !out) return null_arg(ctx);
    *out = dup_string(format_triple(t->value));
    return CRM_OK;
  });
}

crm_status crm_giz_act(crm_context* ctx, const crm_word* w, const crm_triple* t, crm_triple** out) {
  return guarded(ctx, [&] {
    if (!w || !t || !out) return null_arg(ctx);
    *out = new crm_triple{giz_act_word(w->value, t->value)};
    return CRM_OK;
  });
}

crm_status crm_giz_check(crm_context* ctx, const crm_triple* t, char** out_json, int* all_passed) {
  return guarded(ctx, [&] {
    if (!t || !out_json) return null_arg(ctx);
    const SymTriple& a = t->value;
    const Field& f = a.field();
    Letter s = Letter::sigma(), h = Letter::lin(cm_h(f));
    Letter d = Letter::lin(LinMap(Mat3::diagonal(f.from_int(2), f.from_int(3), f.one())));
    LinMap tau(Mat3::permutation(f, {1, 2, 0}));
    LinMap g1(Mat3::diagonal(f.from_int(2), f.one(), f.one()));
    LinMap g2(parse_matrix(f, "[[1,1,0],[0,1,0],[0,0,1]]"));
    std::vector<std::pair<std::string, Word>> rels{
        {"relation 1", Word(f, {Letter::lin(g1), Letter::lin(g2), Letter::lin((g1 * g2).inverse())})},
        {"relation 2", Word(f, {s, s})},
        {"relation 3", Word(f, {s, Letter::lin(tau), s, Letter::lin(tau.inverse())})},
        {"relation 4", Word(f, {s, d, s, d})},
        {"relation 5", Word(f, {s, h, s, h, s, h})},
    };
    Json out = Json::object();
    out["n"] = a.n();
    Json results = Json::array();
    bool ok = true;
    for (const auto& [name, w] : rels) {
      Json r;
      r["relator"] = name;
      try {
        SymTriple b = giz_act_word(w, a);
        r["up_to_scalar"] = (b == a);
        r["up_to_congruence"] = (b == a) || giz_congruent_via(b, a, a[2]);
        ok = ok && r["up_to_congruence"].get<bool>();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularComponent) throw;
        r["undefined"] = e.what();
      }
      results.push_back(r);
    }
    out["relators"] = results;
    try {
      bool id = giz_check_rel5_identity(a[0], a[2]);
      out["rel5_identity"] = id;
      ok = ok && id;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularInput) throw;
      out["rel5_identity"] = nullptr;
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out_json = dup_string(out.dump());
    return CRM_OK;
  });
}

void crm_triple_free(crm_triple* t) { delete t; }

}  // extern "C"
