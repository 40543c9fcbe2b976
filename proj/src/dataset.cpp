#include "bitaln/dataset.hpp"

namespace bitaln {

std::vector<nuc_seq> generate_dataset(const dataset_spec& spec) {
    if (spec.count == 0) throw error("dataset spec: count must be >= 1");
    if (spec.min_len == 0 || spec.min_len > spec.max_len)
        throw error("dataset spec: need 1 <= min_len <= max_len");

    std::uint64_t rng = spec.seed;
    std::vector<nuc_seq> out;
    out.reserve(spec.count);
    std::vector<std::uint8_t> codes;
    codes.reserve(spec.max_len);

    const std::uint64_t span = std::uint64_t(spec.max_len) - spec.min_len + 1;
    for (std::uint64_t r = 0; r < spec.count; ++r) {
        std::uint32_t len = spec.min_len;
        if (span > 1) len += static_cast<std::uint32_t>(splitmix64_next(rng) % span);
        codes.clear();
        for (std::uint32_t i = 0; i < len; ++i) {
            codes.push_back(static_cast<std::uint8_t>(splitmix64_next(rng) & 3u));
        }
        out.emplace_back("read_" + std::to_string(r), codes);
    }
    return out;
}

}  // namespace bitaln
