#pragma once

// Words in the generators sigma and PGL3.

#include <optional>
#include <string>
#include <vector>

#include "cremona/cremap.hpp"

namespace cremona {

/// Either sigma or a linear map.
class Letter {
 public:
  static Letter sigma() { return Letter(); }
  static Letter lin(LinMap g) { return Letter(std::move(g)); }

  bool is_sigma() const { return !g_.has_value(); }
  bool is_lin() const { return g_.has_value(); }
  /// The linear map of a Lin letter.
  const LinMap& map() const;

  std::string to_string() const;  // "sigma" or "lin [[...]]"

  friend bool operator==(const Letter& a, const Letter& b) { return a.g_ == b.g_; }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }

 private:
  Letter() = default;
  explicit Letter(LinMap g) : g_(std::move(g)) {}
  std::optional<LinMap> g_;
};

/// A sequence of letters acting right to left: [L1, ..., Ln] evaluates to
/// L1 o ... o Ln, so the last letter is applied first.
struct Word {
  Field field;
  std::vector<Letter> letters;

  explicit Word(Field f) : field(f) {}
  Word(Field f, std::vector<Letter> l) : field(f), letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }
  std::size_t sigma_count() const;
  /// Subword [pos, pos + len).
  Word span(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word& a, const Word& b) { return a.field == b.field && a.letters == b.letters; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

CreMap word_eval(const Word& w);
Word word_inverse(const Word& w);
/// Concatenation a followed by b (as letters, so a acts after b).
Word concat(const Word& a, const Word& b);

/// One letter per line: `sigma` or `lin [[r,r,r],[r,r,r],[r,r,r]]`. Blank
/// lines and lines starting with '#' are ignored.
Word parse_word(const Field& f, const std::string& text);
std::string format_word(const Word& w);
/// Compact one-line form, e.g. "sigma . lin[[...]] . sigma".
std::string word_summary(const Word& w);

}  // namespace cremona
