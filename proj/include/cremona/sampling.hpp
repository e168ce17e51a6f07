#pragma once

// Seeded random generators for linear maps, points and de Jonquieres maps.

#include <random>

#include <optional>

#include "cremona/gizaction.hpp"
#include "cremona/word.hpp"

namespace cremona {

/// Entries are integers in [-bound, bound] over Q and uniform residues over F_p.
Scalar random_entry(const Field& f, std::mt19937_64& rng, long bound);
Scalar random_nonzero_entry(const Field& f, std::mt19937_64& rng, long bound);

/// Invertible matrix with random entries.
LinMap random_linmap(const Field& f, std::mt19937_64& rng, long bound = 5);
/// Invertible matrix fixing [1:0:0]: first column proportional to e0.
LinMap random_dejonquieres_linmap(const Field& f, std::mt19937_64& rng, long bound = 5);
/// diag(a, b, 1) with a, b nonzero.
LinMap random_diagonal(const Field& f, std::mt19937_64& rng, long bound = 5);
ProjPoint random_point(const Field& f, std::mt19937_64& rng, long bound = 5);
/// Three points in general position: pairwise distinct and not collinear.
bool in_general_position(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Linear maps with sigma g2 sigma g1 = g4 sigma g3 sigma of degree 3.
struct SquareInstance {
  LinMap g1, g2, g3, g4;
};

/// One sampling attempt; nullopt if the sample is degenerate.
std::optional<SquareInstance> try_random_square(const Field& f, std::mt19937_64& rng, long bound = 5);
SquareInstance random_square(const Field& f, std::mt19937_64& rng, long bound = 5);

enum class Relator { Linear, SigmaSquared, SigmaPermutation, SigmaDiagonal, SigmaH };
constexpr int kRelatorCount = 5;

/// A defining relator as a word: g1 g2 (g1 g2)^-1, sigma sigma,
/// sigma tau sigma tau, sigma d sigma d, or (h sigma)^3.
Word relator_word(const Field& f, Relator r, std::mt19937_64& rng, long bound = 5);

/// u r u^-1 with u a random word of at most max_u letters in sigma and
/// J-linear maps.
Word random_conjugated_relator(const Field& f, Relator r, std::mt19937_64& rng, int max_u = 6, long bound = 5);

/// g in J with sigma g sigma linear: d tau with d diagonal, tau in {id, y<->z}.
LinMap random_deg1_linmap(const Field& f, std::mt19937_64& rng, long bound = 5);
/// g in J with deg(sigma g sigma) = 2 and a2 b2 != 0 after the permutation
/// normalization, so the deg2 rewrite applies.
LinMap random_deg2_linmap(const Field& f, std::mt19937_64& rng, long bound = 5);

/// Random symmetric n x n matrix; invertible if requested.
Matrix random_symmetric(const Field& f, int n, std::mt19937_64& rng, bool invertible = true, long bound = 5);
/// Triple of random invertible symmetric matrices.
SymTriple random_sym_triple(const Field& f, int n, std::mt19937_64& rng, long bound = 5);

}  // namespace cremona
