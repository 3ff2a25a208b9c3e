#include "lzdr/flex.hpp"

#include <stdexcept>

namespace lzdr {

namespace {

/// Picks the factor length at k. `lookahead(l)` is the greedy length at k+l
/// after choosing length l, and is only called for k+l <= n.
template <typename Lookahead>
Length choose_length(const Text& t, Position k, Length greedy, Lookahead&& lookahead) {
    const Length remaining = t.size() - k + 1;
    Length best_len = 0;
    Length best_total = 0;
    for (Length l = greedy; l >= 1; --l) {
        const Length total = l + (k + l <= t.size() ? lookahead(l) : 0);
        if (total > best_total) {
            best_total = total;
            best_len = l;
            if (best_total == remaining) break;
        }
    }
    return best_len;
}

Parsing stdflex(const Text& t, TrieOptions options) {
    Parsing p;
    p.scheme = Scheme::stdflex;
    const Parsing greedy = parse_greedy(t, Scheme::lzdr, {options, true});
    RadixTrie trie(t, options);
    for (const Factor& r : greedy.factors) {
        p.references.push_back({r.begin, r.end()});
        trie.insert(r.begin, r.end(), p.references.size());
    }
    for (Position k = 1; k <= t.size();) {
        const LzdrCandidates c = lzdr_candidates(t, k, trie, {k, {}});
        const Length len = choose_length(t, k, c.best(), [&](Length l) {
            return greedy_len(t, k + l, trie, {k + l, {}});
        });
        p.factors.push_back(realize(c, k, len));
        k += len;
    }
    return p;
}

Parsing altflex(const Text& t, TrieOptions options) {
    Parsing p;
    p.scheme = Scheme::altflex;
    RadixTrie trie(t, options);
    for (Position k = 1; k <= t.size();) {
        const FactorIndex x = p.factors.size() + 1;
        const LzdrCandidates c = lzdr_candidates(t, k, trie);
        const Length len = choose_length(t, k, c.best(), [&](Length l) {
            const ExtraFactor self{x, k, k + l - 1};
            return greedy_len(t, k + l, trie, {kUnbounded, {&self, 1}});
        });
        p.factors.push_back(realize(c, k, len));
        trie.insert(k, k + len - 1, x);
        k += len;
    }
    return p;
}

Parsing altmax(const Text& t, TrieOptions options) {
    Parsing p;
    p.scheme = Scheme::altmax;
    RadixTrie trie(t, options);
    for (Position k = 1; k <= t.size();) {
        const FactorIndex x = p.factors.size() + 1;
        const LzdrCandidates c = lzdr_candidates(t, k, trie, {k, {}});
        const Length greedy = c.best();
        p.references.push_back({k, k + greedy - 1});
        trie.insert(k, k + greedy - 1, x);
        const Length len = choose_length(t, k, greedy, [&](Length l) {
            return greedy_len(t, k + l, trie, {k + l, {}});
        });
        p.factors.push_back(realize(c, k, len));
        k += len;
    }
    return p;
}

}  // namespace

Length greedy_len(const Text& t, Position k, const RadixTrie& trie, const DictView& view) {
    if (k > t.size()) return 0;
    return lzdr_candidates(t, k, trie, view).best();
}

Parsing flex_parse(const Text& t, Scheme mode, TrieOptions options) {
    switch (mode) {
        case Scheme::stdflex: return stdflex(t, options);
        case Scheme::altflex: return altflex(t, options);
        case Scheme::altmax: return altmax(t, options);
        default: throw std::invalid_argument("flex_parse: not a flexible scheme");
    }
}

}  // namespace lzdr
