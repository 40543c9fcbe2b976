#include "bitaln/oracle.hpp"

#include <algorithm>

namespace bitaln::oracle {

namespace {

bool mismatch_at(const nuc_seq& q, std::uint32_t i, const nuc_seq& t, std::uint32_t j) {
    if (q.is_wild(i) || t.is_wild(j)) return true;
    return q.code_at(i) != t.code_at(j);
}

// One column per target character over a rolling column vector.
// init0 is DP[0][j] for j >= 1: 0 for semi-global, j for global.
std::vector<std::int32_t> dp_bottom_row(const nuc_seq& q, const nuc_seq& t, bool global) {
    const std::uint32_t m = q.size();
    const std::uint32_t n = t.size();
    std::vector<std::int32_t> col(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) col[i] = static_cast<std::int32_t>(i);

    std::vector<std::int32_t> row;
    row.reserve(n);
    for (std::uint32_t j = 1; j <= n; ++j) {
        std::int32_t diag = col[0];
        col[0] = global ? static_cast<std::int32_t>(j) : 0;
        for (std::uint32_t i = 1; i <= m; ++i) {
            std::int32_t up = col[i - 1];
            std::int32_t left = col[i];
            std::int32_t sub = diag + (mismatch_at(q, i - 1, t, j - 1) ? 1 : 0);
            diag = col[i];
            col[i] = std::min({up + 1, left + 1, sub});
        }
        row.push_back(col[m]);
    }
    return row;
}

}  // namespace

std::vector<std::int32_t> dp_semiglobal_row(const nuc_seq& query, const nuc_seq& target) {
    return dp_bottom_row(query, target, false);
}

std::int32_t dp_global(const nuc_seq& query, const nuc_seq& target) {
    return dp_bottom_row(query, target, true).back();
}

}  // namespace bitaln::oracle
