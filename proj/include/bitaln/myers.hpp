#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitaln/nucseq.hpp"

namespace bitaln {

// Bit-parallel semi-global edit distance after G. Myers, "A fast bit-vector
// algorithm for approximate string matching based on dynamic programming",
// J. ACM 46(3), 1999. Queries longer than 64 bases are handled by chaining
// machine words so the recurrence behaves like one m-bit-wide integer.

// Per-symbol position masks for a query: mask(sigma) bit i is set iff
// query base i+1 has code sigma. Bit 0 is the first base of the query.
class peq_table {
public:
    explicit peq_table(const nuc_seq& query);

    std::uint32_t query_len() const noexcept { return m_; }
    std::uint32_t words() const noexcept { return words_; }

    const std::uint64_t* mask(std::uint8_t code) const noexcept {
        return masks_.data() + std::size_t(code) * words_;
    }
    std::span<const std::uint64_t> mask_span(std::uint8_t code) const noexcept {
        return {mask(code), words_};
    }

private:
    std::uint32_t m_ = 0;
    std::uint32_t words_ = 0;
    std::vector<std::uint64_t> masks_;  // 4 x words, symbol-major
};

inline peq_table build_peq(const nuc_seq& query) { return peq_table(query); }

// Vertical delta vectors plus the running bottom-row score.
// Invariant between columns: vp & vn == 0 and bits >= m are zero.
struct column_state {
    std::vector<std::uint64_t> vp;
    std::vector<std::uint64_t> vn;
    std::int32_t score = 0;
};

// VP = 1^m, VN = 0, score = m.
column_state init_column_state(std::uint32_t m);

// Consumes one target character (its query-match vector `eq`) and updates
// the state in place. `eq` must have bits >= m clear. Addition carries and
// the two left shifts propagate word to word in ascending order.
void advance_column(column_state& state, std::span<const std::uint64_t> eq, std::uint32_t m);

// The `eq` vector for target column j (1-based): the peq mask of the target
// character, or all-zero when that position is a wildcard. `scratch` must
// hold peq.words() words and backs the wildcard case.
std::span<const std::uint64_t> column_eq(const peq_table& peq, const nuc_seq& target,
                                         std::uint32_t j, std::span<std::uint64_t> scratch);

struct scan_result {
    std::int32_t final_score = 0;   // score after the last column
    std::int32_t min_score = 0;     // minimum over all columns
    std::uint32_t best_end = 0;     // smallest 1-based column attaining min_score
    std::uint64_t match_count = 0;  // columns with score <= k
    std::vector<std::int32_t> per_column_scores;  // filled only on request
};

struct scan_options {
    // Report threshold; defaults to m ("report everything").
    std::optional<std::int32_t> k;
    // Materialize the score after every column (O(n) memory).
    bool record_column_scores = false;
    // Route through the word-generic loop even when an unrolled kernel
    // exists; used to cross-check the two code paths.
    bool force_generic = false;
};

// Scans the whole target, one column per character.
scan_result myers_scan(const peq_table& peq, const nuc_seq& target,
                       const scan_options& options = {});
scan_result myers_scan(const peq_table& peq, const nuc_seq& target, std::int32_t k);

// Best semi-global score over all end positions.
std::int32_t edit_distance(const nuc_seq& query, const nuc_seq& target);

}  // namespace bitaln
