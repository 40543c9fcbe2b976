#pragma once

#include <cstdint>
#include <vector>

#include "bitaln/nucseq.hpp"

namespace bitaln::oracle {

// Plain dynamic-programming edit distance, kept deliberately simple so it
// can serve as ground truth for the bit-parallel implementation. Wildcard
// positions match nothing on either side.

// Bottom row of the semi-global Levenshtein matrix (free target prefix):
// DP[0][j] = 0, DP[i][0] = i, and the usual min-of-three recurrence.
// Returns DP[m][j] for j = 1..n.
std::vector<std::int32_t> dp_semiglobal_row(const nuc_seq& query, const nuc_seq& target);

// Global Levenshtein distance (DP[0][j] = j).
std::int32_t dp_global(const nuc_seq& query, const nuc_seq& target);

}  // namespace bitaln::oracle
