#include "lzdr/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lzdr/baselines.hpp"
#include "lzdr/flex.hpp"

namespace lzdr {

namespace {

struct Descent {
    RefMatch first;
    RefMatch truncation;
    RefMatch repetition;
};

/// Repetition update at a factor node of depth i. With a current best of
/// period p and length r, a deeper period i satisfying p + i - gcd(p, i) <= r
/// cannot beat r (Fine and Wilf), so its LCE is skipped.
void update_repetition(const Text& t, Position k, Length i, FactorIndex x, RefMatch& best, Length& period) {
    if (best.length != 0 && period + i - std::gcd(period, i) <= best.length) return;
    const Length r = i + lce(t, k, k + i);
    if (r > best.length) {
        best = {Reference::factor(x), r};
        period = i;
    }
}

Descent descend(const Text& t, Position k, const RadixTrie& trie, const DictView& view, bool with_repetition) {
    const std::size_t n = t.size();
    const Position theta = view.threshold;
    const bool bounded = theta != kUnbounded;
    Descent d;
    Length period = 0;
    NodeId u = trie.root();
    Length i = 0;
    while (k + i <= n) {
        const NodeId v = trie.child(u, t[k + i]);
        if (v == kNoNode) break;
        const RadixTrie::Node& nv = trie.node(v);
        if (bounded && nv.min_end >= theta) break;
        const FactorIndex succ = bounded ? nv.min_end_index : nv.succ_index;
        const Length m = limited_lce(t, k + i, nv.edge_pos, nv.edge_len);
        if (m < nv.edge_len) {
            i += m;
            d.truncation = {Reference::factor(succ), i};
            break;
        }
        i += nv.edge_len;
        u = v;
        d.truncation = {Reference::factor(succ), i};
        if (nv.factor_index != 0 && (!bounded || nv.factor_end < theta)) {
            d.first = {Reference::factor(nv.factor_index), i};
            if (with_repetition) update_repetition(t, k, i, nv.factor_index, d.repetition, period);
        }
    }
    for (const ExtraFactor& x : view.extras) {
        const Length len = x.end - x.begin + 1;
        const Length m = limited_lce(t, k, x.begin, len);
        if (m > d.truncation.length) d.truncation = {Reference::factor(x.index), m};
        if (m < len) continue;
        if (len > d.first.length) d.first = {Reference::factor(x.index), len};
        if (with_repetition) {
            const Length r = len + lce(t, k, k + len);
            if (r > d.repetition.length) d.repetition = {Reference::factor(x.index), r};
        }
    }
    return d;
}

RefMatch literal_if_short(const Text& t, Position k, RefMatch m) {
    if (k <= t.size() && m.length <= 1) return {Reference::literal(t[k]), 1};
    return m;
}

RefMatch literal_repetition(const Text& t, Position k, RefMatch m) {
    if (k > t.size()) return m;
    const Length r = 1 + lce(t, k, k + 1);
    if (r >= m.length) return {Reference::literal(t[k]), r};
    return m;
}

Factor combination(const RefMatch& a, const RefMatch& b, Position k) {
    return {Rule::combination, a.ref, b.ref, a.length + b.length, k};
}

Factor pick(const RefMatch& a, const RefMatch& b, const RefMatch& tf, const RefMatch* rf, Position k) {
    const Length cl = a.length + b.length;
    const Length rl = rf ? rf->length : 0;
    if (cl >= tf.length && cl >= rl) return combination(a, b, k);
    if (tf.length >= rl) return {Rule::truncation, tf.ref, {}, tf.length, k};
    return {Rule::repetition, rf->ref, {}, rf->length, k};
}

}  // namespace

RefMatch longest_factor_ref(const Text& t, Position k, const RadixTrie& trie) {
    const std::size_t n = t.size();
    RefMatch y;
    NodeId u = trie.root();
    Length i = 0;
    while (k + i <= n) {
        const NodeId v = trie.child(u, t[k + i]);
        if (v == kNoNode) break;
        const RadixTrie::Node& e = trie.node(v);
        const Length common = limited_lce(t, k + i, e.edge_pos, e.edge_len);
        if (common < e.edge_len) break;
        i += e.edge_len;
        u = v;
        if (trie.is_factor(u)) y = {Reference::factor(trie.node(u).factor_index), i};
    }
    if (k <= n && y.length <= 1) y = {Reference::literal(t[k]), 1};
    return y;
}

RefMatch longest_factor_truncation(const Text& t, Position k, const RadixTrie& trie) {
    const std::size_t n = t.size();
    RefMatch y;
    NodeId u = trie.root();
    Length i = 0;
    while (k + i <= n) {
        const NodeId v = trie.child(u, t[k + i]);
        if (v == kNoNode) break;
        const RadixTrie::Node& e = trie.node(v);
        const Length common = limited_lce(t, k + i, e.edge_pos, e.edge_len);
        if (common >= e.edge_len) {
            i += e.edge_len;
            u = v;
            y = {Reference::factor(trie.node(u).succ_index), i};
        } else {
            i += common;
            y = {Reference::factor(e.succ_index), i};
            break;
        }
    }
    return y;
}

RefMatch longest_factor_repetition(const Text& t, Position k, const RadixTrie& trie) {
    const std::size_t n = t.size();
    RefMatch y;
    NodeId u = trie.root();
    Length i = 0;
    while (k + i <= n) {
        const NodeId v = trie.child(u, t[k + i]);
        if (v == kNoNode) break;
        const RadixTrie::Node& e = trie.node(v);
        const Length common = limited_lce(t, k + i, e.edge_pos, e.edge_len);
        if (common < e.edge_len) break;
        i += e.edge_len;
        u = v;
        if (trie.is_factor(u)) {
            const Length r = i + lce(t, k, k + i);
            if (r > y.length) y = {Reference::factor(trie.node(u).factor_index), r};
        }
    }
    if (k <= n) {
        const Length r = 1 + lce(t, k, k + 1);
        if (r >= y.length) y = {Reference::literal(t[k]), r};
    }
    return y;
}

Factor next_lzd_factor(const Text& t, Position k, const RadixTrie& trie) {
    const RefMatch cf1 = longest_factor_ref(t, k, trie);
    const RefMatch cf2 = longest_factor_ref(t, k + cf1.length, trie);
    return combination(cf1, cf2, k);
}

Factor next_lzdp_factor(const Text& t, Position k, const RadixTrie& trie) {
    const RefMatch cf1 = longest_factor_ref(t, k, trie);
    const Position q = k + cf1.length;
    const RefMatch cf2 = literal_if_short(t, q, longest_factor_truncation(t, q, trie));
    const RefMatch tf = longest_factor_truncation(t, k, trie);
    return pick(cf1, cf2, tf, nullptr, k);
}

Factor next_lzdr_factor(const Text& t, Position k, const RadixTrie& trie) {
    const RefMatch cf1 = longest_factor_ref(t, k, trie);
    const Position q = k + cf1.length;
    const RefMatch cf2 = literal_if_short(t, q, longest_factor_truncation(t, q, trie));
    const RefMatch tf = longest_factor_truncation(t, k, trie);
    const RefMatch rf = longest_factor_repetition(t, k, trie);
    return pick(cf1, cf2, tf, &rf, k);
}

Length LzdrCandidates::best() const { return std::max({combination(), truncation.length, repetition.length}); }

Length LzdrCandidates::best_without_repetition() const { return std::max(combination(), truncation.length); }

LzdrCandidates lzdr_candidates(const Text& t, Position k, const RadixTrie& trie, const DictView& view,
                               bool with_repetition) {
    LzdrCandidates c;
    const Descent d = descend(t, k, trie, view, with_repetition);
    c.first = literal_if_short(t, k, d.first);
    c.truncation = d.truncation;
    if (with_repetition) c.repetition = literal_repetition(t, k, d.repetition);
    const Position q = k + c.first.length;
    if (q <= t.size()) c.second = literal_if_short(t, q, descend(t, q, trie, view, false).truncation);
    return c;
}

Factor realize(const LzdrCandidates& c, Position k, Length len) {
    if (len == 0 || len > c.best()) throw std::invalid_argument("realize: length not producible");
    if (len <= c.combination()) {
        const Reference second = len <= c.first.length ? Reference::empty() : c.second.ref;
        return {Rule::combination, c.first.ref, second, len, k};
    }
    if (len <= c.truncation.length) return {Rule::truncation, c.truncation.ref, {}, len, k};
    return {Rule::repetition, c.repetition.ref, {}, len, k};
}

Parsing parse_greedy(const Text& t, Scheme scheme, const GreedyOptions& options) {
    if (scheme != Scheme::lzd && scheme != Scheme::lzdp && scheme != Scheme::lzdr) {
        throw std::invalid_argument("parse_greedy: not a greedy LZD-family scheme");
    }
    Parsing p;
    p.scheme = scheme;
    RadixTrie trie(t, options.trie);
    const std::size_t n = t.size();
    Position k = 1;
    while (k <= n) {
        Factor f;
        if (!options.fused) {
            switch (scheme) {
                case Scheme::lzd: f = next_lzd_factor(t, k, trie); break;
                case Scheme::lzdp: f = next_lzdp_factor(t, k, trie); break;
                default: f = next_lzdr_factor(t, k, trie); break;
            }
        } else if (scheme == Scheme::lzd) {
            const RefMatch a = literal_if_short(t, k, descend(t, k, trie, {}, false).first);
            const Position q = k + a.length;
            const RefMatch b = q <= n ? literal_if_short(t, q, descend(t, q, trie, {}, false).first) : RefMatch{};
            f = combination(a, b, k);
        } else {
            const bool rep = scheme == Scheme::lzdr;
            const LzdrCandidates c = lzdr_candidates(t, k, trie, {}, rep);
            f = realize(c, k, rep ? c.best() : c.best_without_repetition());
        }
        p.factors.push_back(f);
        trie.insert(k, f.end(), p.factors.size());
        k = f.end() + 1;
    }
    return p;
}

Parsing parse(const Text& t, Scheme scheme, const GreedyOptions& options) {
    switch (scheme) {
        case Scheme::lzd:
        case Scheme::lzdp:
        case Scheme::lzdr: return parse_greedy(t, scheme, options);
        case Scheme::lz78: return lz78_parse(t, options.trie);
        case Scheme::lzw: return lzw_parse(t, options.trie);
        case Scheme::lz78r: return lz78r_parse(t, options.trie);
        case Scheme::stdflex:
        case Scheme::altflex:
        case Scheme::altmax: return flex_parse(t, scheme, options.trie);
    }
    throw std::invalid_argument("parse: unknown scheme");
}

}  // namespace lzdr
