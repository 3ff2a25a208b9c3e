#pragma once

#include <span>

#include "lzdr/factor.hpp"
#include "lzdr/radix_trie.hpp"
#include "lzdr/text.hpp"

namespace lzdr {

/// A reference together with the number of text bytes it matches.
struct RefMatch {
    Reference ref;
    Length length = 0;

    friend bool operator==(const RefMatch&, const RefMatch&) = default;
};

/// Longest factor (length >= 2) that is a prefix of T[k..], else the literal
/// T[k], else empty at k = n+1.
RefMatch longest_factor_ref(const Text& t, Position k, const RadixTrie& trie);

/// Longest prefix of T[k..] that is a prefix of a stored factor, with the
/// succ-index of the node where the descent stopped.
RefMatch longest_factor_truncation(const Text& t, Position k, const RadixTrie& trie);

/// Longest (F_y^inf)[1..l] or (c^inf)[1..l] that is a prefix of T[k..].
RefMatch longest_factor_repetition(const Text& t, Position k, const RadixTrie& trie);

Factor next_lzd_factor(const Text& t, Position k, const RadixTrie& trie);
Factor next_lzdp_factor(const Text& t, Position k, const RadixTrie& trie);
Factor next_lzdr_factor(const Text& t, Position k, const RadixTrie& trie);

/// A dictionary string that is not stored in the trie, given by its span.
struct ExtraFactor {
    FactorIndex index = 0;
    Position begin = 0;
    Position end = 0;
};

/// Restricts a trie to the factors ending before `threshold` and adds
/// `extras` on top.
struct DictView {
    Position threshold = kUnbounded;
    std::span<const ExtraFactor> extras;
};

/// The three LZDR candidates at one position.
struct LzdrCandidates {
    RefMatch first;
    RefMatch second;
    RefMatch truncation;
    RefMatch repetition;

    Length combination() const { return first.length + second.length; }
    /// Greedy LZDR length (0 at k = n+1).
    Length best() const;
    /// Greedy LZD+ length.
    Length best_without_repetition() const;
};

/// Computes all LZDR candidates at k with a single descent at k and one at
/// k + |first|. With `with_repetition` false, repetition is left empty.
LzdrCandidates lzdr_candidates(const Text& t, Position k, const RadixTrie& trie, const DictView& view = {},
                               bool with_repetition = true);

/// A factor of length `len` starting at k, preferring combination, then
/// truncation, then repetition. Requires 1 <= len <= c.best().
Factor realize(const LzdrCandidates& c, Position k, Length len);

struct GreedyOptions {
    TrieOptions trie;
    /// One descent per candidate set instead of one per helper call.
    bool fused = true;
};

/// Greedy LZD, LZD+ or LZDR parsing.
Parsing parse_greedy(const Text& t, Scheme scheme, const GreedyOptions& options = {});

/// Parsing under any scheme.
Parsing parse(const Text& t, Scheme scheme, const GreedyOptions& options = {});

}  // namespace lzdr
