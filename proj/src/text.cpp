#include "lzdr/text.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "lzdr/counters.hpp"

namespace lzdr {

namespace {
thread_local WorkCounters tls_counters;
}

WorkCounters& work_counters() { return tls_counters; }
void reset_work_counters() { tls_counters = {}; }

Length limited_lce(const Text& t, Position i, Position j, Length max_len) {
    const std::size_t n = t.size();
    if (i > n || j > n) return 0;
    const Length limit = std::min({max_len, n - i + 1, n - j + 1});
    if (i == j) {
        tls_counters.char_comparisons += limit;
        return limit;
    }
    const std::uint8_t* a = t.bytes().data() + (i - 1);
    const std::uint8_t* b = t.bytes().data() + (j - 1);
    Length m = 0;
    while (m + 8 <= limit) {
        std::uint64_t x;
        std::uint64_t y;
        std::memcpy(&x, a + m, 8);
        std::memcpy(&y, b + m, 8);
        if (const std::uint64_t d = x ^ y; d != 0) {
            if constexpr (std::endian::native == std::endian::little) {
                m += static_cast<Length>(std::countr_zero(d)) / 8;
            } else {
                m += static_cast<Length>(std::countl_zero(d)) / 8;
            }
            tls_counters.char_comparisons += m + 1;
            return m;
        }
        m += 8;
    }
    while (m < limit && a[m] == b[m]) ++m;
    tls_counters.char_comparisons += m < limit ? m + 1 : m;
    return m;
}

Length lce(const Text& t, Position i, Position j) { return limited_lce(t, i, j, t.size()); }

}  // namespace lzdr
