#pragma once

// Rewriting words with the defining relations and checkable certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cremona/word.hpp"

namespace cremona {

/// Elementary moves M1-M5 and the composite lemma moves. Lemma moves carry
/// the elementary steps that justify them in RewriteStep::substeps.
enum class MoveKind {
  M1MergeLin,       // Lin spans of length <= 2 with equal products
  M2SigmaSigma,     // [sigma, sigma] <-> []
  M3SigmaPerm,      // [sigma, tau] <-> [tau, sigma], tau a permutation
  M4SigmaDiag,      // [sigma, d, sigma] <-> [d^-1], d diagonal
  M5SigmaH,         // [sigma, h, sigma] <-> [h, sigma, h]
  LDeg1,            // [sigma, g, sigma] <-> [g']
  LDeg2,            // [sigma, g, sigma] <-> [g', sigma, g'']
  LSquareTriangle,  // any equal-valued spans, justified by substeps
};

const char* move_name(MoveKind m);
std::optional<MoveKind> parse_move_name(const std::string& s);
bool is_lemma_move(MoveKind m);

struct NamedMatrix {
  std::string name;
  Mat3 value;
  friend bool operator==(const NamedMatrix& a, const NamedMatrix& b) { return a.name == b.name && a.value == b.value; }
};

struct RewriteStep {
  std::size_t position = 0;
  MoveKind move = MoveKind::M1MergeLin;
  std::vector<NamedMatrix> params;
  /// For lemma moves: steps rewriting `before` into `after`, with positions
  /// relative to the start of the span.
  std::vector<RewriteStep> substeps;
  Word before;
  Word after;

  RewriteStep(std::size_t pos, MoveKind m, Word b, Word a)
      : position(pos), move(m), before(std::move(b)), after(std::move(a)) {}

  friend bool operator==(const RewriteStep& a, const RewriteStep& b) {
    return a.position == b.position && a.move == b.move && a.params == b.params && a.substeps == b.substeps &&
           a.before == b.before && a.after == b.after;
  }
};

/// Measure of the simplifier at the start of an outer iteration: the word
/// after `step_index` steps has maximal partial degree D, attained last at n.
struct ProgressEntry {
  std::size_t step_index = 0;
  int D = 1;
  int n = 1;
  std::string case_label;  // "a", "b1", "c" or "end"
  friend bool operator==(const ProgressEntry&, const ProgressEntry&) = default;
};

struct RewriteCertificate {
  Word initial;
  std::vector<RewriteStep> steps;
  Word final_word;
  std::vector<ProgressEntry> progress;

  explicit RewriteCertificate(Word w) : initial(w), final_word(std::move(w)) {}
  friend bool operator==(const RewriteCertificate& a, const RewriteCertificate& b) {
    return a.initial == b.initial && a.steps == b.steps && a.final_word == b.final_word && a.progress == b.progress;
  }
};

/// Applies one step. Throws PatternMismatch naming the failed side condition.
Word apply_move(const Word& w, const RewriteStep& step);

/// The step that undoes `s`.
RewriteStep reverse_step(const RewriteStep& s);

struct VerifyResult {
  bool ok = true;
  long failed_step = -1;  // index into steps, or steps.size() for the final word
  std::string message;
};

/// Replays the certificate from its initial word. Never throws.
VerifyResult verify_certificate(const RewriteCertificate& c);

/// Maximal degree D of the partial compositions sigma g_{i-1} ... sigma g_1
/// of w = g_m sigma ... sigma g_1, and the last index n attaining it.
std::pair<int, int> word_measure(const Word& w);

/// [sigma, g, sigma] -> [sigma g sigma] for g in J with deg(sigma g sigma) = 1.
RewriteCertificate rewrite_deg1(const LinMap& g);

/// [sigma, g, sigma] -> [g', sigma, g''] for g in J with deg(sigma g sigma) = 2
/// and no three base points of sigma and sigma g collinear.
RewriteCertificate rewrite_deg2(const LinMap& g);

/// [alpha, sigma, alpha^-1] with alpha = (p | q | r): a quadratic involution
/// with base points p, q, r. Throws CollinearBasePoints.
Word make_quadratic_with_base_points(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// [sigma, g2, sigma, g1] -> [g4, sigma, g3, sigma] for a cubic square.
RewriteCertificate rewrite_square(const LinMap& g1, const LinMap& g2, const LinMap& g3, const LinMap& g4,
                                  std::uint64_t seed = 0);

enum class StuckReason { InfinitelyNearBasePoint, IrrationalBasePoint, GenericityFailure };
const char* stuck_reason_name(StuckReason r);

struct Stuck {
  StuckReason reason;
  int index;  // partial composition index n where progress halted
  std::string detail;
  RewriteCertificate partial;
};

using SimplifyResult = std::variant<RewriteCertificate, Stuck>;

/// Reduces a word in sigma and J-linear letters that evaluates to the
/// identity to the empty word. Throws NotIdentity or NotDeJonquieres.
SimplifyResult simplify_identity_word(const Word& w, std::uint64_t seed = 0);

}  // namespace cremona
