#pragma once

#include "lzdr/factor.hpp"
#include "lzdr/greedy.hpp"
#include "lzdr/radix_trie.hpp"
#include "lzdr/text.hpp"

namespace lzdr {

/// Length of the greedy LZDR factor at k over the factors visible in `view`.
Length greedy_len(const Text& t, Position k, const RadixTrie& trie, const DictView& view);

/// Flexible LZDR parsing (`mode` is stdflex, altflex or altmax). Each factor
/// maximizes its own length plus the length of the greedy factor after it;
/// ties go to the longer factor.
///
/// stdflex references the greedy LZDR factors R_y that end before the
/// current factor starts. altflex references its own previous factors.
/// altmax references R_y, the greedy factor at the start of F_y, again only
/// if R_y ends before the current factor starts.
Parsing flex_parse(const Text& t, Scheme mode, TrieOptions options = {});

}  // namespace lzdr
