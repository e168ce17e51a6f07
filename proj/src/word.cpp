#include "cremona/word.hpp"

#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

const LinMap& Letter::map() const {
  if (!g_) fail(ErrorCode::InvalidArgument, "sigma has no matrix");
  return *g_;
}

std::string Letter::to_string() const { return g_ ? "lin " + g_->to_string() : "sigma"; }

std::size_t Word::sigma_count() const {
  std::size_t n = 0;
  for (const auto& l : letters) n += l.is_sigma();
  return n;
}

Word Word::span(std::size_t pos, std::size_t len) const {
  if (pos + len > letters.size()) fail(ErrorCode::InvalidArgument, "span out of range");
  return Word(field, std::vector<Letter>(letters.begin() + static_cast<long>(pos),
                                         letters.begin() + static_cast<long>(pos + len)));
}

CreMap word_eval(const Word& w) {
  // Fold from the left so sigma always lands on the right of the
  // accumulated map, where composition reduces to a monomial substitution.
  CreMap acc = cm_identity(w.field);
  for (const auto& l : w.letters) {
    if (!l.is_sigma() && !(l.map().field() == w.field)) fail(ErrorCode::MixedFields, "letter from another field");
    acc = cm_compose(acc, l.is_sigma() ? cm_sigma(w.field) : cm_from_lin(l.map()));
  }
  return acc;
}

Word word_inverse(const Word& w) {
  Word r(w.field);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->is_sigma() ? Letter::sigma() : Letter::lin(it->map().inverse()));
  return r;
}

Word concat(const Word& a, const Word& b) {
  if (!(a.field == b.field)) fail(ErrorCode::MixedFields, "concatenating words over different fields");
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word parse_word(const Field& f, const std::string& text) {
  Word w(f);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    auto end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(start, end - start + 1);
    if (body == "sigma") {
      w.letters.push_back(Letter::sigma());
    } else if (body.rfind("lin", 0) == 0) {
      try {
        w.letters.push_back(Letter::lin(LinMap(parse_matrix(f, body.substr(3)))));
      } catch (const Error& e) {
        fail(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'sigma' or 'lin [[...]]'");
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (const auto& l : w.letters) s += l.to_string() + "\n";
  return s;
}

std::string word_summary(const Word& w) {
  if (w.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " . ";
    s += w[i].is_sigma() ? "sigma" : "lin" + w[i].map().to_string();
  }
  return s;
}

}  // namespace cremona
