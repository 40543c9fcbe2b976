#pragma once

#include <cstdint>
#include <vector>

#include "bitaln/nucseq.hpp"

namespace bitaln {

// Synthetic read-set description: `count` reads whose lengths are either
// fixed (min_len == max_len) or drawn uniformly from [min_len, max_len],
// with bases i.i.d. uniform over {A,C,G,T}. Identical (spec, seed) pairs
// produce byte-identical output on every platform.
struct dataset_spec {
    std::uint64_t count = 0;
    std::uint32_t min_len = 0;
    std::uint32_t max_len = 0;
    std::uint64_t seed = 0;

    static dataset_spec fixed(std::uint64_t count, std::uint32_t len, std::uint64_t seed) {
        return {count, len, len, seed};
    }
    static dataset_spec uniform_range(std::uint64_t count, std::uint32_t min_len,
                                      std::uint32_t max_len, std::uint64_t seed) {
        return {count, min_len, max_len, seed};
    }
};

// splitmix64 step (Steele, Lea & Flood; public-domain reference constants).
// Frozen here so generated datasets stay reproducible.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Generates spec.count reads with ids "read_0", "read_1", ...
// Throws error on an invalid spec (count == 0, min_len == 0 or > max_len).
std::vector<nuc_seq> generate_dataset(const dataset_spec& spec);

}  // namespace bitaln
