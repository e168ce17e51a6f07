#include "cremona/serialize.hpp"

#include <json.hpp>

#include "cremona/error.hpp"

namespace cremona {

using Json = nlohmann::ordered_json;

namespace {

Json matrix_json(const Mat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Mat3 matrix_from(const Field& f, const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::ParseError, "matrix must have three rows");
  Mat3 m(f);
  for (int i = 0; i < 3; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) fail(ErrorCode::ParseError, "matrix row must have three entries");
    for (int k = 0; k < 3; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_string()) fail(ErrorCode::ParseError, "matrix entries must be strings");
      m(i, k) = f.parse_scalar(e.get<std::string>());
    }
  }
  return m;
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (const auto& l : w.letters) {
    if (l.is_sigma())
      a.push_back("sigma");
    else
      a.push_back(Json{{"lin", matrix_json(l.map().matrix())}});
  }
  return a;
}

Word word_from(const Field& f, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "word must be an array");
  Word w(f);
  for (const auto& l : j) {
    if (l.is_string() && l.get<std::string>() == "sigma") {
      w.letters.push_back(Letter::sigma());
    } else if (l.is_object() && l.size() == 1 && l.contains("lin")) {
      Mat3 m = matrix_from(f, l["lin"]);
      LinMap g(m);
      if (g.matrix() != m) fail(ErrorCode::ParseError, "linear letter is not in canonical form");
      w.letters.push_back(Letter::lin(g));
    } else {
      fail(ErrorCode::ParseError, "letter must be \"sigma\" or {\"lin\": matrix}");
    }
  }
  return w;
}

Json step_json(const RewriteStep& s) {
  Json j;
  j["position"] = s.position;
  j["move"] = move_name(s.move);
  Json params = Json::object();
  for (const auto& p : s.params) params[p.name] = matrix_json(p.value);
  j["params"] = params;
  j["before"] = word_json(s.before);
  j["after"] = word_json(s.after);
  if (!s.substeps.empty()) {
    Json sub = Json::array();
    for (const auto& t : s.substeps) sub.push_back(step_json(t));
    j["substeps"] = sub;
  }
  return j;
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j[key];
}

RewriteStep step_from(const Field& f, const Json& j) {
  const Json& pos = field_of(j, "position");
  if (!pos.is_number_unsigned()) fail(ErrorCode::ParseError, "position must be a non-negative integer");
  const Json& mv = field_of(j, "move");
  if (!mv.is_string()) fail(ErrorCode::ParseError, "move must be a string");
  auto kind = parse_move_name(mv.get<std::string>());
  if (!kind) fail(ErrorCode::ParseError, "unknown move \"" + mv.get<std::string>() + "\"");
  RewriteStep s(pos.get<std::size_t>(), *kind, word_from(f, field_of(j, "before")), word_from(f, field_of(j, "after")));
  const Json& params = field_of(j, "params");
  if (!params.is_object()) fail(ErrorCode::ParseError, "params must be an object");
  for (auto it = params.begin(); it != params.end(); ++it) s.params.push_back({it.key(), matrix_from(f, it.value())});
  if (j.contains("substeps")) {
    const Json& sub = j["substeps"];
    if (!sub.is_array()) fail(ErrorCode::ParseError, "substeps must be an array");
    for (const auto& t : sub) s.substeps.push_back(step_from(f, t));
  }
  return s;
}

Json certificate_json(const RewriteCertificate& c) {
  Json j;
  j["field"] = c.initial.field.to_string();
  j["initial"] = word_json(c.initial);
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(step_json(s));
  j["steps"] = steps;
  j["final"] = word_json(c.final_word);
  Json progress = Json::array();
  for (const auto& p : c.progress)
    progress.push_back(Json{{"step_index", p.step_index}, {"D", p.D}, {"n", p.n}, {"case", p.case_label}});
  j["progress"] = progress;
  return j;
}

}  // namespace

std::string certificate_to_json(const RewriteCertificate& c) { return certificate_json(c).dump(2) + "\n"; }

RewriteCertificate certificate_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    const Json& fj = field_of(j, "field");
    if (!fj.is_string()) fail(ErrorCode::ParseError, "field must be a string");
    Field f = Field::parse(fj.get<std::string>());
    RewriteCertificate c(word_from(f, field_of(j, "initial")));
    const Json& steps = field_of(j, "steps");
    if (!steps.is_array()) fail(ErrorCode::ParseError, "steps must be an array");
    for (const auto& s : steps) c.steps.push_back(step_from(f, s));
    c.final_word = word_from(f, field_of(j, "final"));
    if (j.contains("progress")) {
      for (const auto& p : j["progress"]) {
        ProgressEntry e;
        e.step_index = field_of(p, "step_index").get<std::size_t>();
        e.D = field_of(p, "D").get<int>();
        e.n = field_of(p, "n").get<int>();
        e.case_label = field_of(p, "case").get<std::string>();
        c.progress.push_back(e);
      }
    }
    return c;
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

std::string stuck_to_json(const Stuck& s) {
  Json j;
  j["status"] = "stuck";
  j["reason"] = stuck_reason_name(s.reason);
  j["index"] = s.index;
  j["detail"] = s.detail;
  j["partial"] = certificate_json(s.partial);
  return j.dump(2) + "\n";
}

}  // namespace cremona
