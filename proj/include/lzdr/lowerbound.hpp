#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lzdr {

/// delta_i = a^i bb a^(k-i).
std::string sk_delta(std::size_t k, std::size_t i);

/// The string S_k for a power of two k >= 4; throws std::invalid_argument
/// otherwise.
std::string generate_sk(std::size_t k);

/// |S_k| from the closed form of its four blocks.
std::size_t sk_length(std::size_t k);

/// Reference factor counts of S_k for k = 4, 8, ..., 256 (0 if unknown).
std::size_t expected_lzd_count(std::size_t k);
std::size_t expected_lzdr_count(std::size_t k);

struct SkCountRow {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t lzd = 0;
    std::size_t lzdp = 0;
    std::size_t lzdr = 0;
    bool matches_table = false;  ///< all three counts equal the reference counts
    bool matches_linear = false; ///< lzdr == 6k+3 (only meaningful for k >= 8)
};

/// Parses S_k for k = 4, 8, ..., k_max with LZD, LZD+ and LZDR.
std::vector<SkCountRow> verify_sk_counts(std::size_t k_max);

}  // namespace lzdr
