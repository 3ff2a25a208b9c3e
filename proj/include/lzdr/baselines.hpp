#pragma once

#include "lzdr/factor.hpp"
#include "lzdr/radix_trie.hpp"
#include "lzdr/text.hpp"

namespace lzdr {

/// LZ78: longest previous factor (possibly none) followed by one literal.
/// Factors are (F_y, c), (c, F0), or (F_y, F0) for a final factor that
/// ends with the text.
Parsing lz78_parse(const Text& t, TrieOptions options = {});

/// LZW over a dictionary preloaded with all 256 bytes. Entry y is F_y
/// extended by the byte after it, so a factor reads (F_y, c) with c that
/// byte, or (c, F0) for a single byte.
Parsing lzw_parse(const Text& t, TrieOptions options = {});

/// LZ78 with an alternative candidate: the longer of the best truncation and
/// the best repetition over the same dictionary. The alternative is taken
/// only when strictly longer than the LZ78 factor (truncation wins ties
/// against repetition). The emitted string is inserted as is.
Parsing lz78r_parse(const Text& t, TrieOptions options = {});

}  // namespace lzdr
