#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "bitaln/nucseq.hpp"
#include "bitaln/oracle.hpp"
#include "test_util.hpp"

using namespace bitaln;

namespace {
nuc_seq seq(const std::string& s) { return encode_sequence("s", s); }
}  // namespace

TEST_CASE("semi-global bottom row, direct evaluation") {
    CHECK(oracle::dp_semiglobal_row(seq("A"), seq("A")) == std::vector<std::int32_t>{0});
    CHECK(oracle::dp_semiglobal_row(seq("ACGT"), seq("ACGT")) ==
          std::vector<std::int32_t>{3, 2, 1, 0});

    const auto row = oracle::dp_semiglobal_row(seq("AATC"), seq("GGAATCGG"));
    REQUIRE(row.size() == 8);
    const auto min_it = std::min_element(row.begin(), row.end());
    CHECK(*min_it == 0);
    CHECK(std::distance(row.begin(), min_it) + 1 == 6);
}

TEST_CASE("global distance, direct evaluation") {
    CHECK(oracle::dp_global(seq("ACGT"), seq("ACGT")) == 0);
    CHECK(oracle::dp_global(seq("AATC"), seq("AGTC")) == 1);
    // |m - n| = 3 plus the unavoidable substitution of the lone base.
    CHECK(oracle::dp_global(seq("A"), seq("TTTT")) == 4);
    CHECK(oracle::dp_global(seq("T"), seq("TTTT")) == 3);
    CHECK(oracle::dp_global(seq("ACGT"), seq("TGCA")) == 4);
}

TEST_CASE("row values move by at most one between neighboring columns") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const auto q = testutil::random_seq(rng, 1 + rng() % 40);
        const auto t = testutil::random_seq(rng, 1 + rng() % 40);
        const auto row = oracle::dp_semiglobal_row(q, t);
        for (std::size_t j = 1; j < row.size(); ++j) {
            CHECK(std::abs(row[j] - row[j - 1]) <= 1);
        }
        // Free prefix can only help: semi-global <= global.
        CHECK(row.back() <= oracle::dp_global(q, t));
        // And every cell is bounded by deleting the whole query.
        for (auto v : row) {
            CHECK(v >= 0);
            CHECK(v <= static_cast<std::int32_t>(q.size()));
        }
    }
}

TEST_CASE("wildcards match nothing on either side") {
    const auto q = encode_sequence("q", "ANT", base_policy::lenient);
    const auto t = encode_sequence("t", "ANT", base_policy::lenient);
    // N vs N is still a mismatch, so the best alignment needs one edit.
    CHECK(oracle::dp_global(q, t) == 1);
    CHECK(oracle::dp_global(q, seq("AGT")) == 1);
}
