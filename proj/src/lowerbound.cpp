#include "lzdr/lowerbound.hpp"

#include <bit>
#include <stdexcept>

#include "lzdr/greedy.hpp"

namespace lzdr {

namespace {

struct KnownCounts {
    std::size_t k;
    std::size_t lzd;
    std::size_t lzdr;
};

constexpr KnownCounts kTable[] = {{4, 24, 24},     {8, 56, 51},     {16, 144, 99},    {32, 416, 195},
                                {64, 1344, 387}, {128, 4736, 771}, {256, 17664, 1539}};

void check_k(std::size_t k) {
    if (k < 4 || !std::has_single_bit(k)) throw std::invalid_argument("S_k needs a power of two k >= 4");
}

}  // namespace

std::string sk_delta(std::size_t k, std::size_t i) {
    return std::string(i, 'a') + "bb" + std::string(k - i, 'a');
}

std::string generate_sk(std::size_t k) {
    check_k(k);
    std::string s;
    s.reserve(sk_length(k));
    for (std::size_t i = 2; i <= k; ++i) {
        s.append(i, 'a');
        s.append(i, 'c');
    }
    for (std::size_t i = 0; i < k; ++i) {
        s.append(i, 'a');
        s += "bb";
    }
    for (std::size_t i = 0; i <= k; ++i) {
        s += sk_delta(k, i);
        s.append(i + 2, 'd');
    }
    std::string x;
    for (std::size_t j = k - 1; j >= k / 2 + 1; --j) {
        x += sk_delta(k, k);
        x += sk_delta(k, j);
    }
    x += sk_delta(k, k);
    x.append(k - 1, 'a');
    for (std::size_t r = 0; r < k / 2; ++r) s += x;
    return s;
}

std::size_t sk_length(std::size_t k) {
    check_k(k);
    const std::size_t part1 = k * (k + 1) - 2;
    const std::size_t part2 = k * (k - 1) / 2 + 2 * k;
    const std::size_t part3 = (k + 1) * (k + 4) + k * (k + 1) / 2;
    const std::size_t x = (k / 2 - 1) * 2 * (k + 2) + (k + 2) + (k - 1);
    return part1 + part2 + part3 + (k / 2) * x;
}

std::size_t expected_lzd_count(std::size_t k) {
    for (const auto& row : kTable) {
        if (row.k == k) return row.lzd;
    }
    return 0;
}

std::size_t expected_lzdr_count(std::size_t k) {
    for (const auto& row : kTable) {
        if (row.k == k) return row.lzdr;
    }
    return 0;
}

std::vector<SkCountRow> verify_sk_counts(std::size_t k_max) {
    std::vector<SkCountRow> rows;
    for (std::size_t k = 4; k <= k_max; k *= 2) {
        const std::string s = generate_sk(k);
        const Text t(s);
        SkCountRow row;
        row.k = k;
        row.n = s.size();
        row.lzd = parse(t, Scheme::lzd).size();
        row.lzdp = parse(t, Scheme::lzdp).size();
        row.lzdr = parse(t, Scheme::lzdr).size();
        const std::size_t lzd = expected_lzd_count(k);
        row.matches_table = lzd != 0 && row.lzd == lzd && row.lzdp == lzd && row.lzdr == expected_lzdr_count(k);
        row.matches_linear = row.lzdr == 6 * k + 3;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lzdr
