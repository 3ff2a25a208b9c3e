#include "lzdr/radix_trie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lzdr/counters.hpp"

namespace lzdr {

namespace {

std::uint64_t key(NodeId u, std::uint8_t c) { return (static_cast<std::uint64_t>(u) << 8) | c; }

}  // namespace

RadixTrie::RadixTrie(const Text& text, TrieOptions options) : text_(&text), options_(options) {
    nodes_.emplace_back();
    if (options_.store == ChildStore::ordered) ordered_.emplace_back();
}

NodeId RadixTrie::child(NodeId u, std::uint8_t c) const {
    ++work_counters().traversal_steps;
    if (options_.store == ChildStore::hashed) {
        auto it = hashed_.find(key(u, c));
        return it == hashed_.end() ? kNoNode : it->second;
    }
    const auto& kids = ordered_[u];
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [](const auto& p, std::uint8_t b) { return p.first < b; });
    return (it != kids.end() && it->first == c) ? it->second : kNoNode;
}

std::vector<std::pair<std::uint8_t, NodeId>> RadixTrie::children(NodeId u) const {
    if (options_.store == ChildStore::ordered) return ordered_[u];
    std::vector<std::pair<std::uint8_t, NodeId>> out;
    for (int c = 0; c < 256; ++c) {
        auto it = hashed_.find(key(u, static_cast<std::uint8_t>(c)));
        if (it != hashed_.end()) out.emplace_back(static_cast<std::uint8_t>(c), it->second);
    }
    return out;
}

NodeId RadixTrie::new_node(NodeId parent, Position pos, Length len) {
    const auto id = static_cast<NodeId>(nodes_.size());
    Node v;
    v.edge_pos = pos;
    v.edge_len = len;
    v.depth = nodes_[parent].depth + len;
    nodes_.push_back(v);
    if (options_.store == ChildStore::ordered) ordered_.emplace_back();
    return id;
}

void RadixTrie::attach(NodeId parent, std::uint8_t c, NodeId v) {
    if (options_.store == ChildStore::hashed) {
        hashed_.emplace(key(parent, c), v);
        return;
    }
    auto& kids = ordered_[parent];
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [](const auto& p, std::uint8_t b) { return p.first < b; });
    kids.insert(it, {c, v});
}

void RadixTrie::relink(NodeId parent, std::uint8_t c, NodeId v) {
    if (options_.store == ChildStore::hashed) {
        hashed_[key(parent, c)] = v;
        return;
    }
    auto& kids = ordered_[parent];
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [](const auto& p, std::uint8_t b) { return p.first < b; });
    it->second = v;
}

void RadixTrie::lower_min(Node& v, Position e, FactorIndex x) {
    if (e < v.min_end) {
        v.min_end = e;
        v.min_end_index = x;
    }
}

bool RadixTrie::insert(Position b, Position e, FactorIndex x) {
    if (e < b || x == 0) throw std::invalid_argument("RadixTrie::insert: empty string or index 0");
    const Text& t = *text_;
    const Length len = e - b + 1;
    NodeId u = root();
    Length i = 0;
    lower_min(nodes_[u], e, x);
    while (i < len) {
        const std::uint8_t c = t[b + i];
        const NodeId v = child(u, c);
        if (v == kNoNode) {
            const NodeId leaf = new_node(u, b + i, len - i);
            Node& w = nodes_[leaf];
            w.factor_index = w.succ_index = w.min_end_index = x;
            w.factor_end = w.min_end = e;
            attach(u, c, leaf);
            return true;
        }
        const Position vpos = nodes_[v].edge_pos;
        const Length vlen = nodes_[v].edge_len;
        const Length m = limited_lce(t, b + i, vpos, std::min(vlen, len - i));
        if (m == vlen) {
            i += vlen;
            u = v;
            lower_min(nodes_[u], e, x);
            continue;
        }
        const NodeId s = new_node(u, vpos, m);
        relink(u, c, s);
        nodes_[v].edge_pos = vpos + m;
        nodes_[v].edge_len = vlen - m;
        attach(s, t[vpos + m], v);
        Node& sn = nodes_[s];
        sn.succ_index = options_.split_succ == SplitSuccPolicy::newest ? x : nodes_[v].succ_index;
        sn.min_end = nodes_[v].min_end;
        sn.min_end_index = nodes_[v].min_end_index;
        lower_min(sn, e, x);
        if (i + m == len) {
            sn.factor_index = sn.succ_index = x;
            sn.factor_end = e;
        } else {
            const NodeId leaf = new_node(s, b + i + m, len - i - m);
            Node& w = nodes_[leaf];
            w.factor_index = w.succ_index = w.min_end_index = x;
            w.factor_end = w.min_end = e;
            attach(s, t[b + i + m], leaf);
        }
        return true;
    }
    Node& un = nodes_[u];
    if (un.factor_index == 0) {
        un.factor_index = un.succ_index = x;
        un.factor_end = e;
        return true;
    }
    if (e < un.factor_end) {
        un.factor_index = un.succ_index = x;
        un.factor_end = e;
    }
    return false;
}

std::string RadixTrie::dump() const {
    std::ostringstream out;
    struct Frame {
        NodeId u;
        Length depth;
    };
    std::vector<Frame> stack{{root(), 0}};
    while (!stack.empty()) {
        const auto [u, depth] = stack.back();
        stack.pop_back();
        const Node& v = nodes_[u];
        out << depth << ' ' << v.factor_index << ' ' << v.succ_index;
        if (v.edge_len > 0) out << ' ' << text_->substr(v.edge_pos, v.edge_pos + v.edge_len - 1);
        out << '\n';
        auto kids = children(u);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({it->second, depth + 1});
    }
    return out.str();
}

}  // namespace lzdr
