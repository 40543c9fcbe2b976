#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "bitaln/myers.hpp"
#include "bitaln/oracle.hpp"
#include "test_util.hpp"

using namespace bitaln;

namespace {

nuc_seq seq(const std::string& s) { return encode_sequence("s", s); }

// Direct transcription of the column recurrence on one 128-bit integer,
// used as an independent reference for word-boundary carry behavior.
struct wide_state {
    unsigned __int128 vp;
    unsigned __int128 vn;
    int score;
};

wide_state wide_init(unsigned m) {
    const unsigned __int128 ones = ~static_cast<unsigned __int128>(0);
    const unsigned __int128 mask = m == 128 ? ones : ((static_cast<unsigned __int128>(1) << m) - 1);
    return {mask, 0, static_cast<int>(m)};
}

void wide_advance(wide_state& s, unsigned __int128 eq, unsigned m) {
    const unsigned __int128 ones = ~static_cast<unsigned __int128>(0);
    const unsigned __int128 mask = m == 128 ? ones : ((static_cast<unsigned __int128>(1) << m) - 1);
    const unsigned __int128 x = eq | s.vn;
    const unsigned __int128 d0 = (((s.vp + (x & s.vp)) & mask) ^ s.vp) | x;
    const unsigned __int128 hn = s.vp & d0;
    const unsigned __int128 hp = (s.vn | ~(s.vp | d0)) & mask;
    const unsigned __int128 hp_s = (hp << 1) & mask;
    s.vn = hp_s & d0;
    s.vp = ((hn << 1) | ~(hp_s | d0)) & mask;
    const unsigned __int128 top = static_cast<unsigned __int128>(1) << (m - 1);
    if (hp & top)
        ++s.score;
    else if (hn & top)
        --s.score;
}

unsigned __int128 to_wide(std::span<const std::uint64_t> words) {
    unsigned __int128 v = words[0];
    if (words.size() > 1) v |= static_cast<unsigned __int128>(words[1]) << 64;
    return v;
}

}  // namespace

TEST_CASE("peq masks mark query positions, bit 0 first") {
    const auto peq = build_peq(seq("AATC"));
    CHECK(peq.query_len() == 4);
    CHECK(peq.words() == 1);
    CHECK(peq.mask(code_A)[0] == 0b0011);
    CHECK(peq.mask(code_T)[0] == 0b0100);
    CHECK(peq.mask(code_C)[0] == 0b1000);
    CHECK(peq.mask(code_G)[0] == 0);
}

TEST_CASE("peq on a uniform 64-base query fills a whole word") {
    const auto peq = build_peq(seq(std::string(64, 'A')));
    CHECK(peq.words() == 1);
    CHECK(peq.mask(code_A)[0] == ~std::uint64_t(0));
    CHECK(peq.mask(code_C)[0] == 0);
    CHECK(peq.mask(code_T)[0] == 0);
    CHECK(peq.mask(code_G)[0] == 0);
}

TEST_CASE("peq crosses the word boundary at m = 65") {
    const auto peq = build_peq(seq("AATC" + std::string(61, 'G')));
    CHECK(peq.query_len() == 65);
    CHECK(peq.words() == 2);
    std::uint64_t word0_expect = 0;
    for (int bit = 4; bit < 64; ++bit) word0_expect |= std::uint64_t(1) << bit;
    CHECK(peq.mask(code_G)[0] == word0_expect);
    CHECK(peq.mask(code_G)[1] == 1);
    CHECK(peq.mask(code_A)[1] == 0);
}

TEST_CASE("peq partition property") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        const auto q = testutil::random_seq(rng, 1 + rng() % 200);
        const auto peq = build_peq(q);
        for (std::uint32_t p = 0; p < q.size(); ++p) {
            int owners = 0;
            for (std::uint8_t sigma = 0; sigma < 4; ++sigma) {
                owners += (peq.mask(sigma)[p >> 6] >> (p & 63)) & 1;
            }
            CHECK(owners == 1);
        }
        // Bits at and above m stay clear in every mask.
        const std::uint32_t rem = q.size() & 63;
        if (rem != 0) {
            for (std::uint8_t sigma = 0; sigma < 4; ++sigma) {
                CHECK((peq.mask(sigma)[peq.words() - 1] >> rem) == 0);
            }
        }
    }
}

TEST_CASE("advance_column forced evaluations at m = 4") {
    SUBCASE("all-match column") {
        auto state = init_column_state(4);
        REQUIRE(state.vp[0] == 0b1111);
        REQUIRE(state.vn[0] == 0);
        REQUIRE(state.score == 4);
        const std::uint64_t eq[1] = {0b1111};
        advance_column(state, eq, 4);
        CHECK(state.vp[0] == 0b1110);
        CHECK(state.vn[0] == 0);
        CHECK(state.score == 3);
    }
    SUBCASE("all-mismatch first column") {
        auto state = init_column_state(4);
        const std::uint64_t eq[1] = {0};
        advance_column(state, eq, 4);
        CHECK(state.vp[0] == 0b1111);
        CHECK(state.vn[0] == 0);
        CHECK(state.score == 4);
    }
}

TEST_CASE("multi-word carries match a 128-bit reference") {
    SUBCASE("uniform 65-base query against a matching column") {
        const auto q = seq(std::string(65, 'A'));
        const auto peq = build_peq(q);
        auto state = init_column_state(65);
        auto wide = wide_init(65);
        advance_column(state, peq.mask_span(code_A), 65);
        wide_advance(wide, to_wide(peq.mask_span(code_A)), 65);
        CHECK(state.score == 64);
        CHECK(state.score == wide.score);
        CHECK(to_wide(state.vp) == wide.vp);
        CHECK(to_wide(state.vn) == wide.vn);
    }
    SUBCASE("random queries with m in (64, 128]") {
        std::mt19937_64 rng(22);
        for (int it = 0; it < 60; ++it) {
            const unsigned m = 65 + rng() % 64;
            const auto q = testutil::random_seq(rng, m);
            const auto t = testutil::random_seq(rng, 1 + rng() % 150);
            const auto peq = build_peq(q);
            auto state = init_column_state(m);
            auto wide = wide_init(m);
            std::vector<std::uint64_t> scratch(peq.words());
            for (std::uint32_t j = 1; j <= t.size(); ++j) {
                const auto eq = column_eq(peq, t, j, scratch);
                advance_column(state, eq, m);
                wide_advance(wide, to_wide(eq), m);
                REQUIRE(to_wide(state.vp) == wide.vp);
                REQUIRE(to_wide(state.vn) == wide.vn);
                REQUIRE(state.score == wide.score);
            }
        }
    }
}

TEST_CASE("myers_scan frozen cases") {
    {
        const auto r = myers_scan(build_peq(seq("ACGT")), seq("ACGT"), 4);
        CHECK(r.final_score == 0);
        CHECK(r.min_score == 0);
        CHECK(r.best_end == 4);
    }
    {
        const auto q = seq("AATC");
        const auto t = seq("GGAATCGG");
        const auto row = oracle::dp_semiglobal_row(q, t);
        const auto r = myers_scan(build_peq(q), t);
        CHECK(r.min_score == 0);
        CHECK(r.best_end == 6);
        CHECK(r.final_score == 2);
        CHECK(r.min_score == *std::min_element(row.begin(), row.end()));
        CHECK(r.final_score == row.back());
    }
    {
        const auto r = myers_scan(build_peq(seq("AATC")), seq("AGTC"));
        CHECK(r.min_score == 1);
        CHECK(r.best_end == 4);
    }
}

TEST_CASE("match_count counts columns at or under k") {
    const auto q = seq("AATC");
    const auto t = seq("GGAATCGG");
    scan_options opts;
    opts.k = 1;
    opts.record_column_scores = true;
    const auto r = myers_scan(build_peq(q), t, opts);
    std::uint64_t expected = 0;
    for (auto s : r.per_column_scores) expected += s <= 1;
    CHECK(r.match_count == expected);
    CHECK(r.match_count > 0);
}

TEST_CASE("edit_distance frozen cases") {
    CHECK(edit_distance(seq("A"), seq("A")) == 0);
    CHECK(edit_distance(seq("AATC"), seq("GGAATCGG")) == 0);
    CHECK(edit_distance(seq("ACGT"), seq("TTTT")) == 3);
}

TEST_CASE("per-column scores equal the DP oracle exactly") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 400; ++it) {
        const auto q = testutil::random_seq(rng, 1 + rng() % 300);
        const auto t = testutil::random_seq(rng, 1 + rng() % 300);
        scan_options opts;
        opts.record_column_scores = true;
        const auto r = myers_scan(build_peq(q), t, opts);
        const auto row = oracle::dp_semiglobal_row(q, t);
        REQUIRE(r.per_column_scores == row);
        CHECK(r.min_score == *std::min_element(row.begin(), row.end()));
        CHECK(r.per_column_scores[r.best_end - 1] == r.min_score);
        CHECK(r.final_score == row.back());
    }
}

TEST_CASE("oracle equivalence holds with wildcards in play") {
    std::mt19937_64 rng(29);
    static constexpr char alphabet[] = "ACGTN";
    auto random_wild = [&](std::size_t len) {
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % 5]);
        return encode_sequence("w", s, base_policy::lenient);
    };
    for (int it = 0; it < 100; ++it) {
        const auto q = random_wild(1 + rng() % 120);
        const auto t = random_wild(1 + rng() % 120);
        scan_options opts;
        opts.record_column_scores = true;
        const auto r = myers_scan(build_peq(q), t, opts);
        CHECK(r.per_column_scores == oracle::dp_semiglobal_row(q, t));
    }
}

TEST_CASE("unrolled kernels agree with the generic path") {
    std::mt19937_64 rng(24);
    for (int it = 0; it < 200; ++it) {
        // Cover both the single-word and several multi-word widths.
        const std::size_t m = 1 + rng() % 560;
        const auto q = testutil::random_seq(rng, m);
        const auto t = testutil::random_seq(rng, 1 + rng() % 200);
        const auto peq = build_peq(q);
        scan_options fast;
        fast.record_column_scores = true;
        scan_options generic = fast;
        generic.force_generic = true;
        const auto a = myers_scan(peq, t, fast);
        const auto b = myers_scan(peq, t, generic);
        REQUIRE(a.per_column_scores == b.per_column_scores);
        CHECK(a.final_score == b.final_score);
        CHECK(a.min_score == b.min_score);
        CHECK(a.best_end == b.best_end);
        CHECK(a.match_count == b.match_count);
    }
}

TEST_CASE("state invariants hold after every column") {
    std::mt19937_64 rng(25);
    for (int it = 0; it < 150; ++it) {
        const auto q = testutil::random_seq(rng, 1 + rng() % 200);
        const auto t = testutil::random_seq(rng, 1 + rng() % 200);
        const std::uint32_t m = q.size();
        const auto peq = build_peq(q);
        auto state = init_column_state(m);
        std::vector<std::uint64_t> scratch(peq.words());
        std::int32_t prev = state.score;
        for (std::uint32_t j = 1; j <= t.size(); ++j) {
            advance_column(state, column_eq(peq, t, j, scratch), m);
            for (std::uint32_t w = 0; w < peq.words(); ++w) {
                REQUIRE((state.vp[w] & state.vn[w]) == 0);
            }
            REQUIRE(std::abs(state.score - prev) <= 1);
            // Lower bound: j edits can erase at most j of the m query bases.
            REQUIRE(state.score >= std::max<std::int32_t>(0, static_cast<std::int32_t>(m) - j));
            REQUIRE(state.score <= static_cast<std::int32_t>(m));
            prev = state.score;
        }
    }
}

TEST_CASE("scan bounds") {
    std::mt19937_64 rng(26);
    for (int it = 0; it < 200; ++it) {
        const auto q = testutil::random_seq(rng, 1 + rng() % 100);
        const auto t = testutil::random_seq(rng, 1 + rng() % 100);
        const auto r = myers_scan(build_peq(q), t);
        CHECK(r.min_score <= std::min<std::int32_t>(q.size(), r.final_score));
        CHECK(r.min_score >= 0);
        CHECK(r.best_end >= 1);
        CHECK(r.best_end <= t.size());
    }
}
