#include "bitaln/myers.hpp"

#include <array>
#include <cassert>
#include <limits>

namespace bitaln {

namespace {

inline std::uint64_t top_word_mask(std::uint32_t m) {
    const std::uint32_t rem = m & 63u;
    return rem == 0 ? ~std::uint64_t(0) : (std::uint64_t(1) << rem) - 1;
}

}  // namespace

peq_table::peq_table(const nuc_seq& query)
    : m_(query.size()), words_((query.size() + 63u) / 64u) {
    masks_.assign(std::size_t(4) * words_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (query.is_wild(i)) continue;  // wildcard rows match nothing
        masks_[std::size_t(query.code_at(i)) * words_ + (i >> 6)] |=
            std::uint64_t(1) << (i & 63u);
    }
}

column_state init_column_state(std::uint32_t m) {
    if (m == 0) throw empty_sequence_error();
    const std::uint32_t words = (m + 63u) / 64u;
    column_state s;
    s.vp.assign(words, ~std::uint64_t(0));
    s.vp.back() = top_word_mask(m);
    s.vn.assign(words, 0);
    s.score = static_cast<std::int32_t>(m);
    return s;
}

void advance_column(column_state& state, std::span<const std::uint64_t> eq, std::uint32_t m) {
    const std::uint32_t words = (m + 63u) / 64u;
    assert(state.vp.size() == words && state.vn.size() == words);
    assert(eq.size() >= words);

    std::uint64_t add_carry = 0;
    std::uint64_t hp_carry = 0;
    std::uint64_t hn_carry = 0;
    std::uint64_t hp_top = 0;
    std::uint64_t hn_top = 0;

    for (std::uint32_t w = 0; w < words; ++w) {
        const std::uint64_t vp = state.vp[w];
        const std::uint64_t vn = state.vn[w];
        assert((vp & vn) == 0);

        const std::uint64_t x = eq[w] | vn;
        const std::uint64_t t = x & vp;
        const std::uint64_t s1 = vp + t;
        const std::uint64_t c1 = static_cast<std::uint64_t>(s1 < vp);
        const std::uint64_t s2 = s1 + add_carry;
        const std::uint64_t c2 = static_cast<std::uint64_t>(s2 < s1);
        add_carry = c1 | c2;

        const std::uint64_t d0 = (s2 ^ vp) | x;
        const std::uint64_t hn = vp & d0;
        const std::uint64_t hp = vn | ~(vp | d0);
        assert((hp & hn) == 0);

        const std::uint64_t hp_s = (hp << 1) | hp_carry;
        hp_carry = hp >> 63;
        const std::uint64_t hn_s = (hn << 1) | hn_carry;
        hn_carry = hn >> 63;

        state.vn[w] = hp_s & d0;
        state.vp[w] = hn_s | ~(hp_s | d0);
        hp_top = hp;
        hn_top = hn;
    }

    const std::uint64_t mask = top_word_mask(m);
    state.vp[words - 1] &= mask;
    state.vn[words - 1] &= mask;

    const std::uint32_t score_bit = (m - 1) & 63u;
    state.score += static_cast<std::int32_t>((hp_top >> score_bit) & 1);
    state.score -= static_cast<std::int32_t>((hn_top >> score_bit) & 1);
}

std::span<const std::uint64_t> column_eq(const peq_table& peq, const nuc_seq& target,
                                         std::uint32_t j, std::span<std::uint64_t> scratch) {
    assert(j >= 1 && j <= target.size());
    assert(scratch.size() >= peq.words());
    if (target.is_wild(j - 1)) {
        for (std::uint32_t w = 0; w < peq.words(); ++w) scratch[w] = 0;
        return scratch.subspan(0, peq.words());
    }
    return peq.mask_span(target.code_at(j - 1));
}

namespace {

struct scan_tracker {
    std::int32_t k;
    bool record;
    scan_result res;

    explicit scan_tracker(std::int32_t k_, bool record_, std::uint32_t n) : k(k_), record(record_) {
        res.min_score = std::numeric_limits<std::int32_t>::max();
        if (record) res.per_column_scores.reserve(n);
    }

    void column(std::uint32_t j, std::int32_t score) {
        if (score < res.min_score) {
            res.min_score = score;
            res.best_end = j;
        }
        if (score <= k) ++res.match_count;
        if (record) res.per_column_scores.push_back(score);
    }

    scan_result take(std::int32_t final_score) {
        res.final_score = final_score;
        return std::move(res);
    }
};

// One column of the recurrence over a fixed word count, fully unrolled.
template <unsigned Words>
inline std::int32_t advance_fixed(std::array<std::uint64_t, Words>& vp,
                                  std::array<std::uint64_t, Words>& vn,
                                  const std::uint64_t* eq, std::uint64_t top_mask,
                                  std::uint32_t score_bit) {
    std::uint64_t add_carry = 0;
    std::uint64_t hp_carry = 0;
    std::uint64_t hn_carry = 0;
    std::uint64_t hp_top = 0;
    std::uint64_t hn_top = 0;

    for (unsigned w = 0; w < Words; ++w) {
        const std::uint64_t x = eq[w] | vn[w];
        const std::uint64_t t = x & vp[w];
        const std::uint64_t s1 = vp[w] + t;
        const std::uint64_t c1 = static_cast<std::uint64_t>(s1 < vp[w]);
        const std::uint64_t s2 = s1 + add_carry;
        const std::uint64_t c2 = static_cast<std::uint64_t>(s2 < s1);
        add_carry = c1 | c2;

        const std::uint64_t d0 = (s2 ^ vp[w]) | x;
        const std::uint64_t hn = vp[w] & d0;
        const std::uint64_t hp = vn[w] | ~(vp[w] | d0);

        const std::uint64_t hp_s = (hp << 1) | hp_carry;
        hp_carry = hp >> 63;
        const std::uint64_t hn_s = (hn << 1) | hn_carry;
        hn_carry = hn >> 63;

        vn[w] = hp_s & d0;
        vp[w] = hn_s | ~(hp_s | d0);
        hp_top = hp;
        hn_top = hn;
    }

    vp[Words - 1] &= top_mask;
    vn[Words - 1] &= top_mask;
    return static_cast<std::int32_t>((hp_top >> score_bit) & 1) -
           static_cast<std::int32_t>((hn_top >> score_bit) & 1);
}

// Fast path for queries that fit one machine word.
scan_result scan_word(const peq_table& peq, const nuc_seq& target, std::int32_t k,
                      bool record) {
    const std::uint32_t m = peq.query_len();
    const std::uint32_t n = target.size();
    const std::uint64_t top_mask = top_word_mask(m);
    const std::uint32_t score_bit = (m - 1) & 63u;

    std::array<std::uint64_t, 1> vp{top_mask};
    std::array<std::uint64_t, 1> vn{0};
    std::int32_t score = static_cast<std::int32_t>(m);

    static constexpr std::uint64_t zero_eq = 0;
    const bool wild = target.has_wildcards();
    const std::uint64_t* target_words = target.packed_words().data();

    scan_result res;
    if (record) res.per_column_scores.reserve(n);
    std::int32_t min_score = std::numeric_limits<std::int32_t>::max();
    std::uint32_t best_end = 0;
    std::uint64_t match_count = 0;

    std::uint64_t code_reg = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
        if ((j & 31u) == 0) code_reg = target_words[j >> 5];
        const std::uint64_t code = code_reg & 3u;
        code_reg >>= 2;
        const std::uint64_t* eq = peq.mask(static_cast<std::uint8_t>(code));
        if (wild && target.is_wild(j)) eq = &zero_eq;
        score += advance_fixed<1>(vp, vn, eq, top_mask, score_bit);
        // Branch-free bookkeeping keeps the per-column constant small.
        const bool better = score < min_score;
        min_score = better ? score : min_score;
        best_end = better ? j + 1 : best_end;
        match_count += score <= k;
        if (record) res.per_column_scores.push_back(score);
    }
    res.final_score = score;
    res.min_score = min_score;
    res.best_end = best_end;
    res.match_count = match_count;
    return res;
}

// Multi-word path: the column recurrence loops over the chained words, so
// per-pair cost grows with n * ceil(m / 64).
scan_result scan_multi(const peq_table& peq, const nuc_seq& target, std::int32_t k,
                       bool record) {
    const std::uint32_t m = peq.query_len();
    const std::uint32_t n = target.size();
    const std::uint32_t words = peq.words();
    const std::uint64_t top_mask = top_word_mask(m);
    const std::uint32_t score_bit = (m - 1) & 63u;

    // Queries up to 1024 bases run off the stack.
    constexpr std::uint32_t stack_words = 16;
    std::array<std::uint64_t, stack_words> vp_stack;
    std::array<std::uint64_t, stack_words> vn_stack;
    std::vector<std::uint64_t> vp_heap;
    std::vector<std::uint64_t> vn_heap;
    std::uint64_t* vp = vp_stack.data();
    std::uint64_t* vn = vn_stack.data();
    std::vector<std::uint64_t> zero_heap;
    if (words > stack_words) {
        vp_heap.resize(words);
        vn_heap.resize(words);
        vp = vp_heap.data();
        vn = vn_heap.data();
        zero_heap.resize(words, 0);
    }
    static constexpr std::array<std::uint64_t, stack_words> zero_stack{};
    const std::uint64_t* zero_eq =
        words > stack_words ? zero_heap.data() : zero_stack.data();

    for (std::uint32_t w = 0; w < words; ++w) {
        vp[w] = ~std::uint64_t(0);
        vn[w] = 0;
    }
    vp[words - 1] = top_mask;
    std::int32_t score = static_cast<std::int32_t>(m);

    const bool wild = target.has_wildcards();
    const std::uint64_t* target_words = target.packed_words().data();
    const std::uint64_t* mask_base = peq.mask(0);

    scan_result res;
    if (record) res.per_column_scores.reserve(n);
    std::int32_t min_score = std::numeric_limits<std::int32_t>::max();
    std::uint32_t best_end = 0;
    std::uint64_t match_count = 0;

    std::uint64_t code_reg = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
        if ((j & 31u) == 0) code_reg = target_words[j >> 5];
        const std::uint64_t code = code_reg & 3u;
        code_reg >>= 2;
        const std::uint64_t* eq = mask_base + code * words;
        if (wild && target.is_wild(j)) eq = zero_eq;

        std::uint64_t add_carry = 0;
        std::uint64_t hp_carry = 0;
        std::uint64_t hn_carry = 0;
        std::uint64_t hp_top = 0;
        std::uint64_t hn_top = 0;
        for (std::uint32_t w = 0; w < words; ++w) {
            const std::uint64_t x = eq[w] | vn[w];
            const std::uint64_t t = x & vp[w];
            const std::uint64_t s1 = vp[w] + t;
            const std::uint64_t c1 = static_cast<std::uint64_t>(s1 < vp[w]);
            const std::uint64_t s2 = s1 + add_carry;
            const std::uint64_t c2 = static_cast<std::uint64_t>(s2 < s1);
            add_carry = c1 | c2;

            const std::uint64_t d0 = (s2 ^ vp[w]) | x;
            const std::uint64_t hn = vp[w] & d0;
            const std::uint64_t hp = vn[w] | ~(vp[w] | d0);

            const std::uint64_t hp_s = (hp << 1) | hp_carry;
            hp_carry = hp >> 63;
            const std::uint64_t hn_s = (hn << 1) | hn_carry;
            hn_carry = hn >> 63;

            vn[w] = hp_s & d0;
            vp[w] = hn_s | ~(hp_s | d0);
            hp_top = hp;
            hn_top = hn;
        }
        vp[words - 1] &= top_mask;
        vn[words - 1] &= top_mask;
        score += static_cast<std::int32_t>((hp_top >> score_bit) & 1);
        score -= static_cast<std::int32_t>((hn_top >> score_bit) & 1);

        const bool better = score < min_score;
        min_score = better ? score : min_score;
        best_end = better ? j + 1 : best_end;
        match_count += score <= k;
        if (record) res.per_column_scores.push_back(score);
    }
    res.final_score = score;
    res.min_score = min_score;
    res.best_end = best_end;
    res.match_count = match_count;
    return res;
}

scan_result scan_any(const peq_table& peq, const nuc_seq& target, std::int32_t k,
                     bool record) {
    const std::uint32_t n = target.size();
    column_state state = init_column_state(peq.query_len());
    std::vector<std::uint64_t> scratch(peq.words());

    scan_tracker tracker(k, record, n);
    for (std::uint32_t j = 1; j <= n; ++j) {
        advance_column(state, column_eq(peq, target, j, scratch), peq.query_len());
        tracker.column(j, state.score);
    }
    return tracker.take(state.score);
}

}  // namespace

scan_result myers_scan(const peq_table& peq, const nuc_seq& target,
                       const scan_options& options) {
    const std::int32_t k =
        options.k ? *options.k : static_cast<std::int32_t>(peq.query_len());
    const bool record = options.record_column_scores;

    if (options.force_generic) return scan_any(peq, target, k, record);
    if (peq.words() == 1) return scan_word(peq, target, k, record);
    return scan_multi(peq, target, k, record);
}

scan_result myers_scan(const peq_table& peq, const nuc_seq& target, std::int32_t k) {
    scan_options opts;
    opts.k = k;
    return myers_scan(peq, target, opts);
}

std::int32_t edit_distance(const nuc_seq& query, const nuc_seq& target) {
    return myers_scan(peq_table(query), target).min_score;
}

}  // namespace bitaln
