#pragma once

#include <random>
#include <string>

#include "bitaln/nucseq.hpp"

namespace testutil {

inline std::string random_bases(std::mt19937_64& rng, std::size_t len) {
    static constexpr char alphabet[] = "ACGT";
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[pick(rng)]);
    return s;
}

inline bitaln::nuc_seq random_seq(std::mt19937_64& rng, std::size_t len,
                                  const std::string& id = "s") {
    return bitaln::encode_sequence(id, random_bases(rng, len));
}

}  // namespace testutil
