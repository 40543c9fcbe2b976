#include "bitaln/nucseq.hpp"

#include <array>

namespace bitaln {

namespace {

// 256-entry base -> code table; 0xff marks non-ACGT input.
constexpr std::array<std::uint8_t, 256> make_code_table() {
    std::array<std::uint8_t, 256> t{};
    for (auto& v : t) v = 0xff;
    t['A'] = code_A;
    t['a'] = code_A;
    t['C'] = code_C;
    t['c'] = code_C;
    t['T'] = code_T;
    t['t'] = code_T;
    t['G'] = code_G;
    t['g'] = code_G;
    return t;
}

constexpr auto code_table = make_code_table();

}  // namespace

nuc_seq::nuc_seq(std::string id, std::span<const std::uint8_t> codes)
    : nuc_seq(std::move(id), codes, {}) {}

nuc_seq::nuc_seq(std::string id, std::span<const std::uint8_t> codes,
                 std::span<const std::uint32_t> wildcard_positions)
    : id_(std::move(id)), len_(static_cast<std::uint32_t>(codes.size())) {
    if (codes.empty()) throw empty_sequence_error();
    packed_.assign((len_ + 31u) / 32u, 0);
    for (std::uint32_t i = 0; i < len_; ++i) {
        packed_[i >> 5] |= std::uint64_t(codes[i] & 3u) << ((i & 31u) << 1);
    }
    if (!wildcard_positions.empty()) {
        wild_.assign((len_ + 63u) / 64u, 0);
        for (std::uint32_t p : wildcard_positions) {
            wild_[p >> 6] |= std::uint64_t(1) << (p & 63u);
        }
    }
}

nuc_seq encode_sequence(std::string id, const std::string& bases, base_policy policy) {
    if (bases.empty()) throw empty_sequence_error();
    std::vector<std::uint8_t> codes;
    codes.reserve(bases.size());
    std::vector<std::uint32_t> wild;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        std::uint8_t c = code_table[static_cast<unsigned char>(bases[i])];
        if (c == 0xff) {
            if (policy == base_policy::strict) throw invalid_base_error(i, bases[i]);
            wild.push_back(static_cast<std::uint32_t>(i));
            c = 0;
        }
        codes.push_back(c);
    }
    return nuc_seq(std::move(id), codes, wild);
}

std::string decode_sequence(const nuc_seq& seq) {
    std::string out;
    out.reserve(seq.size());
    for (std::uint32_t i = 0; i < seq.size(); ++i) {
        out.push_back(seq.is_wild(i) ? 'N' : base_from_code_table[seq.code_at(i)]);
    }
    return out;
}

}  // namespace bitaln
