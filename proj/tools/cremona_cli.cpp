// Command-line front end over the C interface. Every invocation writes one
// JSON document to stdout or --output; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 stuck.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "cremona/cremona.h"

using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kStuck = 3;

struct InputError {
  std::string message;
};

struct Ctx {
  crm_context* ctx = nullptr;
  ~Ctx() { crm_context_free(ctx); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  ~Handle() { Free(p); }
};
using MapH = Handle<crm_map, crm_map_free>;
using WordH = Handle<crm_word, crm_word_free>;
using CertH = Handle<crm_cert, crm_cert_free>;
using TripleH = Handle<crm_triple, crm_triple_free>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  crm_string_free(s);
  return out;
}

void check(crm_context* ctx, crm_status st) {
  if (st != CRM_OK) throw InputError{std::string(crm_status_name(st)) + ": " + crm_last_error(ctx)};
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string field_mode = "q";
  std::optional<std::uint64_t> seed;
  std::string output;
};

void emit(const Options& o, const std::string& doc) {
  if (o.output.empty()) {
    std::cout << doc;
    std::cout.flush();
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError{"cannot write " + o.output};
  out << doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t require_seed(const Options& o, const char* command) {
  if (!o.seed) throw InputError{std::string(command) + " is randomized and requires --seed"};
  return *o.seed;
}

MapH parse_map(crm_context* ctx, const std::string& text) {
  MapH m;
  check(ctx, crm_map_parse(ctx, text.c_str(), &m.p));
  return m;
}

std::string map_text(crm_context* ctx, const crm_map* m) {
  char* s = nullptr;
  check(ctx, crm_map_to_string(ctx, m, &s));
  return take(s);
}

int map_degree(crm_context* ctx, const crm_map* m) {
  int d = 0;
  check(ctx, crm_map_degree(ctx, m, &d));
  return d;
}

WordH parse_word_file(crm_context* ctx, const std::string& path) {
  WordH w;
  check(ctx, crm_word_parse(ctx, read_input(path).c_str(), &w.p));
  return w;
}

TripleH parse_triple_file(crm_context* ctx, const std::string& path) {
  TripleH t;
  check(ctx, crm_triple_parse(ctx, read_input(path).c_str(), &t.p));
  return t;
}

int report_checks(const Options& o, const char* command, std::uint64_t seed, const std::string& results, int passed) {
  Json j;
  j["command"] = command;
  j["field"] = o.field_mode;
  j["seed"] = seed;
  j["passed"] = passed != 0;
  j["results"] = Json::parse(results);
  emit(o, dump(j));
  return passed ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with plane Cremona maps"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field-mode", o.field_mode, "q or fp:<prime>")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized commands");
  app.add_option("--output", o.output, "write the result document here instead of stdout");

  std::string a1, a2;
  auto* compose = app.add_subcommand("compose", "compose two maps, f o g");
  compose->add_option("f", a1, "map text")->required();
  compose->add_option("g", a2, "map text")->required();
  auto* degree = app.add_subcommand("degree", "degree of a map");
  degree->add_option("map", a1, "map text")->required();
  auto* basepoints = app.add_subcommand("basepoints", "proper base points of a map of degree at most 2");
  basepoints->add_option("map", a1, "map text")->required();
  auto* mult = app.add_subcommand("mult", "multiplicity of a map at a point");
  mult->add_option("map", a1, "map text")->required();
  mult->add_option("point", a2, "point [a:b:c]")->required();
  auto* eval_word = app.add_subcommand("eval-word", "evaluate a word file");
  eval_word->add_option("word", a1, "word file, - for stdin")->required();
  auto* simplify = app.add_subcommand("simplify", "reduce an identity word to the empty word");
  simplify->add_option("word", a1, "word file, - for stdin")->required();
  auto* verify = app.add_subcommand("verify-cert", "replay a certificate");
  verify->add_option("certificate", a1, "certificate JSON file, - for stdin")->required();
  auto* relations = app.add_subcommand("relations-check", "verify the defining relations");
  auto* giz_act = app.add_subcommand("giz-act", "act with a word on a triple of symmetric matrices");
  giz_act->add_option("word", a1, "word file")->required();
  giz_act->add_option("triple", a2, "triple file")->required();
  auto* giz_check = app.add_subcommand("giz-check", "check the relators at a triple");
  giz_check->add_option("triple", a1, "triple file, - for stdin")->required();
  auto* selftest = app.add_subcommand("selftest", "run the property suite");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  Ctx c;
  if (crm_status st = crm_context_new(o.field_mode.c_str(), &c.ctx); st != CRM_OK) {
    std::cerr << "error: " << crm_status_name(st) << ": invalid --field-mode \"" << o.field_mode << "\"\n";
    return kInputError;
  }
  crm_context* ctx = c.ctx;

  try {
    if (compose->parsed()) {
      MapH f = parse_map(ctx, a1), g = parse_map(ctx, a2), h;
      check(ctx, crm_map_compose(ctx, f.p, g.p, &h.p));
      Json j;
      j["command"] = "compose";
      j["field"] = o.field_mode;
      j["result"] = map_text(ctx, h.p);
      j["degree"] = map_degree(ctx, h.p);
      emit(o, dump(j));
    } else if (degree->parsed()) {
      MapH f = parse_map(ctx, a1);
      Json j;
      j["command"] = "degree";
      j["map"] = map_text(ctx, f.p);
      j["degree"] = map_degree(ctx, f.p);
      emit(o, dump(j));
    } else if (basepoints->parsed()) {
      MapH f = parse_map(ctx, a1);
      char* s = nullptr;
      check(ctx, crm_map_base_points(ctx, f.p, &s));
      Json j;
      j["command"] = "basepoints";
      j["map"] = map_text(ctx, f.p);
      j["base_points"] = Json::parse(take(s));
      emit(o, dump(j));
    } else if (mult->parsed()) {
      MapH f = parse_map(ctx, a1);
      int m = 0;
      check(ctx, crm_map_mult(ctx, f.p, a2.c_str(), &m));
      Json j;
      j["command"] = "mult";
      j["map"] = map_text(ctx, f.p);
      j["point"] = a2;
      j["multiplicity"] = m;
      emit(o, dump(j));
    } else if (eval_word->parsed()) {
      WordH w = parse_word_file(ctx, a1);
      MapH f;
      check(ctx, crm_word_eval(ctx, w.p, &f.p));
      Json j;
      j["command"] = "eval-word";
      j["result"] = map_text(ctx, f.p);
      j["degree"] = map_degree(ctx, f.p);
      emit(o, dump(j));
    } else if (simplify->parsed()) {
      std::uint64_t seed = require_seed(o, "simplify");
      WordH w = parse_word_file(ctx, a1);
      CertH cert;
      char* stuck = nullptr;
      crm_status st = crm_simplify(ctx, w.p, seed, &cert.p, &stuck);
      if (st == CRM_STUCK) {
        emit(o, take(stuck));
        std::cerr << "stuck: " << crm_last_error(ctx) << "\n";
        return kStuck;
      }
      check(ctx, st);
      char* s = nullptr;
      check(ctx, crm_cert_to_json(ctx, cert.p, &s));
      emit(o, take(s));
    } else if (verify->parsed()) {
      CertH cert;
      check(ctx, crm_cert_parse_json(ctx, read_input(a1).c_str(), &cert.p));
      int ok = 0;
      long failed = -1;
      char* msg = nullptr;
      check(ctx, crm_cert_verify(ctx, cert.p, &ok, &failed, &msg));
      Json j;
      j["command"] = "verify-cert";
      j["ok"] = ok != 0;
      j["failed_step"] = ok ? Json(nullptr) : Json(failed);
      j["message"] = take(msg);
      emit(o, dump(j));
      return ok ? kOk : kVerifyFailed;
    } else if (relations->parsed()) {
      std::uint64_t seed = require_seed(o, "relations-check");
      char* s = nullptr;
      int passed = 0;
      check(ctx, crm_relations_check(ctx, seed, &s, &passed));
      return report_checks(o, "relations-check", seed, take(s), passed);
    } else if (selftest->parsed()) {
      std::uint64_t seed = require_seed(o, "selftest");
      char* s = nullptr;
      int passed = 0;
      check(ctx, crm_selftest(ctx, seed, &s, &passed));
      return report_checks(o, "selftest", seed, take(s), passed);
    } else if (giz_act->parsed()) {
      WordH w = parse_word_file(ctx, a1);
      TripleH t = parse_triple_file(ctx, a2), r;
      check(ctx, crm_giz_act(ctx, w.p, t.p, &r.p));
      char* s = nullptr;
      check(ctx, crm_triple_to_string(ctx, r.p, &s));
      Json j;
      j["command"] = "giz-act";
      j["field"] = o.field_mode;
      j["triple"] = take(s);
      emit(o, dump(j));
    } else if (giz_check->parsed()) {
      TripleH t = parse_triple_file(ctx, a1);
      char* s = nullptr;
      int passed = 0;
      check(ctx, crm_giz_check(ctx, t.p, &s, &passed));
      Json j;
      j["command"] = "giz-check";
      j["field"] = o.field_mode;
      j["passed"] = passed != 0;
      j["report"] = Json::parse(take(s));
      emit(o, dump(j));
      return passed ? kOk : kVerifyFailed;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  }
  return kOk;
}
