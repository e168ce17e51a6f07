#pragma once

#include <vector>

#include "cremona/rewrite.hpp"

namespace cremona::detail {

/// For w = g_m sigma ... sigma g_1, the maps P_i^-1 for i = 1..m where
/// P_i = sigma g_{i-1} ... sigma g_1 (so P_1 = id). Entry k is P_{k+1}^-1.
std::vector<CreMap> partial_inverses(const Word& w);

/// Positions of the sigma letters, rightmost first.
std::vector<std::size_t> sigma_positions_from_right(const Word& w);

bool is_permutation_matrix(const Mat3& m);
bool is_diagonal_matrix(const Mat3& m);

}  // namespace cremona::detail
