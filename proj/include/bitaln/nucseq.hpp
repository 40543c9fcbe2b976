#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bitaln/errors.hpp"

namespace bitaln {

// 2-bit nucleotide codes: A=00, C=01, T=10, G=11.
inline constexpr std::uint8_t code_A = 0;
inline constexpr std::uint8_t code_C = 1;
inline constexpr std::uint8_t code_T = 2;
inline constexpr std::uint8_t code_G = 3;

inline constexpr char base_from_code_table[4] = {'A', 'C', 'T', 'G'};

// How to treat characters outside {A,C,G,T} (case-insensitive).
// strict rejects them; lenient turns them into wildcard positions that
// match nothing during alignment and decode back to 'N'.
enum class base_policy { strict, lenient };

// A nucleotide sequence packed 2 bits per base into 64-bit words.
// Base i occupies bits [2i mod 64, 2i mod 64 + 1] of word i/32; bits past
// the last base are zero. Wildcard ('N') positions carry code 0 plus a set
// bit in a 1-bit-per-base side mask.
class nuc_seq {
public:
    nuc_seq(std::string id, std::span<const std::uint8_t> codes);
    nuc_seq(std::string id, std::span<const std::uint8_t> codes,
            std::span<const std::uint32_t> wildcard_positions);

    const std::string& id() const noexcept { return id_; }
    std::uint32_t size() const noexcept { return len_; }

    std::uint8_t code_at(std::uint32_t i) const noexcept {
        return static_cast<std::uint8_t>((packed_[i >> 5] >> ((i & 31u) << 1)) & 3u);
    }

    bool has_wildcards() const noexcept { return !wild_.empty(); }
    bool is_wild(std::uint32_t i) const noexcept {
        return !wild_.empty() && ((wild_[i >> 6] >> (i & 63u)) & 1u);
    }

    std::span<const std::uint64_t> packed_words() const noexcept { return packed_; }

private:
    std::string id_;
    std::vector<std::uint64_t> packed_;
    std::vector<std::uint64_t> wild_;  // empty when no wildcard positions
    std::uint32_t len_ = 0;
};

// Builds a nuc_seq from ACGT text (case-insensitive). Throws
// empty_sequence_error on empty input and invalid_base_error for non-ACGT
// characters under base_policy::strict.
nuc_seq encode_sequence(std::string id, const std::string& bases,
                        base_policy policy = base_policy::strict);

// Inverse of encode_sequence: uppercase ACGT text, 'N' at wildcard positions.
std::string decode_sequence(const nuc_seq& seq);

}  // namespace bitaln
