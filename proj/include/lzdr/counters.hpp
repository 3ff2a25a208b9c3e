#pragma once

#include <cstdint>

namespace lzdr {

/// Instrumentation for the linear-work property. Every trie `child` lookup
/// counts as one traversal step; every LCE call counts its matched characters
/// plus the terminating comparison.
struct WorkCounters {
    std::uint64_t traversal_steps = 0;
    std::uint64_t char_comparisons = 0;

    std::uint64_t total() const { return traversal_steps + char_comparisons; }
};

/// Per-thread counters; parses on different threads do not interfere.
WorkCounters& work_counters();
void reset_work_counters();

}  // namespace lzdr
