#include <algorithm>

#include "cremona/error.hpp"
#include "cremona/rewrite.hpp"
#include "rewrite_internal.hpp"

namespace cremona {

namespace {

struct MoveInfo {
  MoveKind kind;
  const char* name;
};

constexpr MoveInfo kMoves[] = {
    {MoveKind::M1MergeLin, "M1-merge-lin"},   {MoveKind::M2SigmaSigma, "M2-sigma-sigma"},
    {MoveKind::M3SigmaPerm, "M3-sigma-perm"}, {MoveKind::M4SigmaDiag, "M4-sigma-diag"},
    {MoveKind::M5SigmaH, "M5-sigma-h"},       {MoveKind::LDeg1, "L-deg1"},
    {MoveKind::LDeg2, "L-deg2"},              {MoveKind::LSquareTriangle, "L-square-triangle"},
};

[[noreturn]] void mismatch(const RewriteStep& s, const std::string& why) {
  fail(ErrorCode::PatternMismatch, std::string(move_name(s.move)) + " at " + std::to_string(s.position) + ": " + why);
}

bool all_lin(const Word& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& l) { return l.is_lin(); });
}

LinMap lin_product(const Word& w) {
  LinMap p = LinMap::identity(w.field);
  for (const auto& l : w.letters) p = p * l.map();
  return p;
}

// Shape: 's' for sigma, 'L' for a Lin letter.
bool shape_is(const Word& w, const char* shape) {
  std::size_t n = std::char_traits<char>::length(shape);
  if (w.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if ((shape[i] == 's') != w[i].is_sigma()) return false;
  return true;
}

// Orients a symmetric move: returns true if (before, after) matches
// (left-shape, right-shape) directly, false if reversed; fails otherwise.
bool orient(const RewriteStep& s, const char* lhs, const char* rhs) {
  if (shape_is(s.before, lhs) && shape_is(s.after, rhs)) return true;
  if (shape_is(s.before, rhs) && shape_is(s.after, lhs)) return false;
  mismatch(s, std::string("spans do not have the shape ") + lhs + " <-> " + rhs);
}

void check_pattern(const RewriteStep& s) {
  const Word& b = s.before;
  const Word& a = s.after;
  if (!is_lemma_move(s.move) && !s.substeps.empty()) mismatch(s, "elementary move with substeps");
  switch (s.move) {
    case MoveKind::M1MergeLin:
      if (!all_lin(b) || !all_lin(a)) mismatch(s, "spans must consist of linear letters");
      if (b.size() > 2 || a.size() > 2) mismatch(s, "spans longer than two letters");
      if (b.empty() && a.empty()) mismatch(s, "both spans empty");
      if (lin_product(b) != lin_product(a)) mismatch(s, "products of the linear letters differ");
      return;
    case MoveKind::M2SigmaSigma:
      orient(s, "ss", "");
      return;
    case MoveKind::M3SigmaPerm: {
      bool fwd = orient(s, "sL", "Ls");
      const LinMap& t1 = fwd ? b[1].map() : b[0].map();
      const LinMap& t2 = fwd ? a[0].map() : a[1].map();
      if (t1 != t2) mismatch(s, "the permutation differs on the two sides");
      if (!detail::is_permutation_matrix(t1.matrix())) mismatch(s, t1.to_string() + " is not a permutation");
      return;
    }
    case MoveKind::M4SigmaDiag: {
      bool fwd = orient(s, "sLs", "L");
      const LinMap& d = fwd ? b[1].map() : a[1].map();
      const LinMap& dinv = fwd ? a[0].map() : b[0].map();
      if (!detail::is_diagonal_matrix(d.matrix())) mismatch(s, d.to_string() + " is not diagonal");
      if (d.inverse() != dinv) mismatch(s, "the other side is not the inverse diagonal");
      return;
    }
    case MoveKind::M5SigmaH: {
      bool fwd = orient(s, "sLs", "LsL");
      const Word& one = fwd ? b : a;
      const Word& two = fwd ? a : b;
      LinMap h = cm_h(b.field);
      if (one[1].map() != h || two[0].map() != h || two[2].map() != h) mismatch(s, "linear letters must all be h");
      return;
    }
    case MoveKind::LDeg1:
      orient(s, "sLs", "L");
      break;
    case MoveKind::LDeg2:
      orient(s, "sLs", "LsL");
      break;
    case MoveKind::LSquareTriangle:
      break;
  }
  if (s.substeps.empty()) mismatch(s, "lemma move without substeps");
  Word cur = b;
  for (std::size_t i = 0; i < s.substeps.size(); ++i) {
    try {
      cur = apply_move(cur, s.substeps[i]);
    } catch (const Error& e) {
      mismatch(s, "substep " + std::to_string(i) + ": " + e.what());
    }
  }
  if (cur != a) mismatch(s, "substeps do not produce the after-span");
}

}  // namespace

const char* move_name(MoveKind m) {
  for (const auto& i : kMoves)
    if (i.kind == m) return i.name;
  return "?";
}

std::optional<MoveKind> parse_move_name(const std::string& s) {
  for (const auto& i : kMoves)
    if (s == i.name) return i.kind;
  return std::nullopt;
}

bool is_lemma_move(MoveKind m) {
  return m == MoveKind::LDeg1 || m == MoveKind::LDeg2 || m == MoveKind::LSquareTriangle;
}

Word apply_move(const Word& w, const RewriteStep& step) {
  if (!(step.before.field == w.field) || !(step.after.field == w.field))
    mismatch(step, "spans are over a different field");
  if (step.position + step.before.size() > w.size()) mismatch(step, "span runs past the end of the word");
  for (std::size_t i = 0; i < step.before.size(); ++i)
    if (w[step.position + i] != step.before[i])
      mismatch(step, "letter " + std::to_string(step.position + i) + " does not match the before-span");
  check_pattern(step);
  if (!cm_equal(word_eval(step.before), word_eval(step.after))) mismatch(step, "evaluation is not preserved");
  Word r(w.field);
  r.letters.reserve(w.size() - step.before.size() + step.after.size());
  auto pos = w.letters.begin() + static_cast<long>(step.position);
  r.letters.insert(r.letters.end(), w.letters.begin(), pos);
  r.letters.insert(r.letters.end(), step.after.letters.begin(), step.after.letters.end());
  r.letters.insert(r.letters.end(), pos + static_cast<long>(step.before.size()), w.letters.end());
  return r;
}

RewriteStep reverse_step(const RewriteStep& s) {
  RewriteStep r(s.position, s.move, s.after, s.before);
  r.params = s.params;
  for (auto it = s.substeps.rbegin(); it != s.substeps.rend(); ++it) r.substeps.push_back(reverse_step(*it));
  return r;
}

VerifyResult verify_certificate(const RewriteCertificate& c) {
  VerifyResult res;
  auto bad = [&](long idx, std::string msg) {
    res.ok = false;
    res.failed_step = idx;
    res.message = std::move(msg);
    return res;
  };
  std::vector<ProgressEntry> progress = c.progress;
  std::stable_sort(progress.begin(), progress.end(),
                   [](const ProgressEntry& a, const ProgressEntry& b) { return a.step_index < b.step_index; });
  std::size_t next = 0;
  std::optional<std::pair<int, int>> last;
  Word cur = c.initial;
  for (std::size_t i = 0; i <= c.steps.size(); ++i) {
    while (next < progress.size() && progress[next].step_index == i) {
      const ProgressEntry& e = progress[next++];
      std::pair<int, int> m;
      try {
        m = word_measure(cur);
      } catch (const Error& ex) {
        return bad(static_cast<long>(i), std::string("cannot measure word: ") + ex.what());
      }
      if (m.first != e.D || m.second != e.n)
        return bad(static_cast<long>(i), "recorded (D, n) = (" + std::to_string(e.D) + ", " + std::to_string(e.n) +
                                             ") but the word has (" + std::to_string(m.first) + ", " +
                                             std::to_string(m.second) + ")");
      if (last && !(m < *last)) return bad(static_cast<long>(i), "(D, n) does not decrease");
      last = m;
    }
    if (i == c.steps.size()) break;
    try {
      cur = apply_move(cur, c.steps[i]);
    } catch (const Error& e) {
      return bad(static_cast<long>(i), e.what());
    } catch (const std::exception& e) {
      return bad(static_cast<long>(i), e.what());
    }
  }
  if (next != progress.size()) return bad(static_cast<long>(c.steps.size()), "progress entry past the last step");
  if (cur != c.final_word) return bad(static_cast<long>(c.steps.size()), "replay does not end in the final word");
  return res;
}

std::pair<int, int> word_measure(const Word& w) {
  auto inv = detail::partial_inverses(w);
  int D = 0, n = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    int d = inv[i].degree();
    if (d >= D) {
      D = d;
      n = static_cast<int>(i) + 1;
    }
  }
  return {D, n};
}

namespace detail {

std::vector<CreMap> partial_inverses(const Word& w) {
  std::vector<CreMap> out;
  CreMap acc = cm_identity(w.field);
  out.push_back(acc);
  CreMap s = cm_sigma(w.field);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->is_sigma()) {
      acc = cm_compose(acc, s);
      out.push_back(acc);
    } else {
      acc = cm_compose(acc, cm_from_lin(it->map().inverse()));
    }
  }
  return out;
}

std::vector<std::size_t> sigma_positions_from_right(const Word& w) {
  std::vector<std::size_t> pos;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i].is_sigma()) pos.push_back(i);
  return pos;
}

bool is_permutation_matrix(const Mat3& m) {
  Field f = m.field();
  for (int i = 0; i < 3; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 3; ++j) {
      if (!m(i, j).is_zero()) ++row;
      if (!m(j, i).is_zero()) ++col;
    }
    if (row != 1 || col != 1) return false;
  }
  // Canonical scaling makes the first nonzero entry 1; the rest must match it.
  Scalar first = f.zero();
  for (int i = 0; i < 3 && first.is_zero(); ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) {
        first = m(i, j);
        break;
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero() && m(i, j) != first) return false;
  return true;
}

bool is_diagonal_matrix(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace detail

}  // namespace cremona
