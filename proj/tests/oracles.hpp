#pragma once

// Brute-force reference implementations. They work on plain strings and
// enumerate candidates directly from the scheme definitions; none of them
// uses the radix trie or the library's LCE.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lzdr/factor.hpp"

namespace oracle {

std::size_t naive_lce(const std::string& t, std::size_t i, std::size_t j);  // 1-based, clipped at n

/// Length of the longest common prefix of a and b.
std::size_t lcp(std::string_view a, std::string_view b);

/// One greedy step over an explicit dictionary (dict[y-1] is the string of
/// F_y). `rest` is the remaining input.
struct Step {
    std::size_t length = 0;
    lzdr::Rule rule = lzdr::Rule::combination;
    lzdr::Reference first;  // exact expected first reference of a combination
    std::size_t combination = 0;
    std::size_t truncation = 0;
    std::size_t repetition = 0;
};

Step lzd_step(std::string_view rest, const std::vector<std::string>& dict, lzdr::Reference* second = nullptr);
Step lzdp_step(std::string_view rest, const std::vector<std::string>& dict);
Step lzdr_step(std::string_view rest, const std::vector<std::string>& dict);

/// Compares every step of `p` (an LZD, LZD+ or LZDR parsing of t) against the
/// brute-force step on the same history. Returns "" or a mismatch report.
std::string compare_greedy(const std::string& t, const lzdr::Parsing& p);

/// Full brute-force parsings (factor lengths only).
std::vector<std::size_t> lzdr_lengths(const std::string& t);
std::vector<std::size_t> lz78_lengths(const std::string& t);
std::vector<std::size_t> lzw_lengths(const std::string& t);
std::vector<std::size_t> lz78r_lengths(const std::string& t);

struct FlexResult {
    std::vector<std::size_t> lengths;
    std::vector<std::size_t> references;  // greedy reference lengths (stdflex, altmax)
};
FlexResult stdflex(const std::string& t);
FlexResult altflex(const std::string& t);
FlexResult altmax(const std::string& t);

/// Greedy LZDR length at 0-based offset k over dictionary strings given as
/// [begin, end) pairs of t.
std::size_t lzdr_len(const std::string& t, std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& dict);

std::vector<std::size_t> lengths_of(const lzdr::Parsing& p);

/// Test inputs.
std::string random_string(std::mt19937_64& rng, std::size_t n, unsigned sigma);
std::string fibonacci_word(std::size_t n);
std::string de_bruijn_like(std::size_t n, unsigned sigma);

/// The mixed fuzz corpus used by the round-trip and collage checks.
std::vector<std::string> fuzz_corpus(std::size_t count, std::uint64_t seed);

}  // namespace oracle
