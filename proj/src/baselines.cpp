#include "lzdr/baselines.hpp"

#include "lzdr/greedy.hpp"

namespace lzdr {

namespace {

/// Deepest factor node on the path of T[k..], of any length.
RefMatch deepest_factor(const Text& t, Position k, const RadixTrie& trie) {
    RefMatch y;
    NodeId u = trie.root();
    Length i = 0;
    while (k + i <= t.size()) {
        const NodeId v = trie.child(u, t[k + i]);
        if (v == kNoNode) break;
        const RadixTrie::Node& e = trie.node(v);
        if (limited_lce(t, k + i, e.edge_pos, e.edge_len) < e.edge_len) break;
        i += e.edge_len;
        u = v;
        if (trie.is_factor(u)) y = {Reference::factor(e.factor_index), i};
    }
    return y;
}

Factor lz78_factor(const Text& t, Position k, const RadixTrie& trie) {
    const RefMatch m = deepest_factor(t, k, trie);
    if (m.length == 0) return {Rule::combination, Reference::literal(t[k]), {}, 1, k};
    const Position c = k + m.length;
    if (c > t.size()) return {Rule::combination, m.ref, {}, m.length, k};
    return {Rule::combination, m.ref, Reference::literal(t[c]), m.length + 1, k};
}

}  // namespace

Parsing lz78_parse(const Text& t, TrieOptions options) {
    Parsing p;
    p.scheme = Scheme::lz78;
    RadixTrie trie(t, options);
    for (Position k = 1; k <= t.size();) {
        const Factor f = lz78_factor(t, k, trie);
        p.factors.push_back(f);
        trie.insert(k, f.end(), p.factors.size());
        k = f.end() + 1;
    }
    return p;
}

Parsing lzw_parse(const Text& t, TrieOptions options) {
    Parsing p;
    p.scheme = Scheme::lzw;
    RadixTrie trie(t, options);
    for (Position k = 1; k <= t.size();) {
        if (!p.factors.empty()) trie.insert(p.factors.back().begin, k, p.factors.size());
        const RefMatch m = deepest_factor(t, k, trie);
        Factor f;
        if (m.length < 2) {
            f = {Rule::combination, Reference::literal(t[k]), {}, 1, k};
        } else {
            f = {Rule::combination, Reference::factor(m.ref.value), Reference::literal(t[k + m.length - 1]),
                 m.length, k};
        }
        p.factors.push_back(f);
        k = f.end() + 1;
    }
    return p;
}

Parsing lz78r_parse(const Text& t, TrieOptions options) {
    Parsing p;
    p.scheme = Scheme::lz78r;
    RadixTrie trie(t, options);
    for (Position k = 1; k <= t.size();) {
        Factor f = lz78_factor(t, k, trie);
        const RefMatch tf = longest_factor_truncation(t, k, trie);
        const RefMatch rf = longest_factor_repetition(t, k, trie);
        if (tf.length > f.length && tf.length >= rf.length) {
            f = {Rule::truncation, tf.ref, {}, tf.length, k};
        } else if (rf.length > f.length && rf.length > tf.length) {
            f = {Rule::repetition, rf.ref, {}, rf.length, k};
        }
        p.factors.push_back(f);
        trie.insert(k, f.end(), p.factors.size());
        k = f.end() + 1;
    }
    return p;
}

}  // namespace lzdr
