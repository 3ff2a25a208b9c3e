#include <gtest/gtest.h>

#include "lzdr/greedy.hpp"
#include "lzdr/lowerbound.hpp"

using namespace lzdr;

TEST(Sk, Delta) {
    EXPECT_EQ(sk_delta(4, 0), "bbaaaa");
    EXPECT_EQ(sk_delta(4, 4), "aaaabb");
    EXPECT_EQ(sk_delta(4, 1), "abbaaa");
}

TEST(Sk, RejectsInvalidK) {
    EXPECT_THROW(generate_sk(2), std::invalid_argument);
    EXPECT_THROW(generate_sk(12), std::invalid_argument);
}

TEST(Sk, LengthMatchesClosedForm) {
    for (std::size_t k = 4; k <= 128; k *= 2) EXPECT_EQ(generate_sk(k).size(), sk_length(k)) << k;
}

TEST(Sk, SmallTableRows) {
    const auto rows = verify_sk_counts(32);
    ASSERT_EQ(rows.size(), 4u);
    const std::size_t lzd[] = {24, 56, 144, 416};
    const std::size_t lzdr[] = {24, 51, 99, 195};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].lzd, lzd[i]);
        EXPECT_EQ(rows[i].lzdp, lzd[i]);
        EXPECT_EQ(rows[i].lzdr, lzdr[i]);
        EXPECT_TRUE(rows[i].matches_table);
        if (rows[i].k >= 8) EXPECT_TRUE(rows[i].matches_linear);
    }
}

TEST(Sk, ReferenceCounts) {
    EXPECT_EQ(expected_lzd_count(256), 17664u);
    EXPECT_EQ(expected_lzdr_count(256), 1539u);
    EXPECT_EQ(expected_lzd_count(512), 0u);
}
