#include <gtest/gtest.h>

#include "lzdr/collage.hpp"
#include "lzdr/greedy.hpp"
#include "lzdr/lowerbound.hpp"
#include "oracles.hpp"

using namespace lzdr;

TEST(Collage, SingleLiteral) {
    const std::string s = "a";
    const Text t(s);
    const CollageSystem cs = to_collage(parse(t, Scheme::lzdr));
    EXPECT_EQ(cs.size(), 2u);
    EXPECT_EQ(dump(cs), "X1 = 'a'\nS = X1\n");
}

TEST(Collage, WorkedExampleExpands) {
    const std::string s = "aabbaabbbaabbbbbababaabccccbababc";
    const Text t(s);
    for (const Scheme scheme : {Scheme::lzd, Scheme::lzdp, Scheme::lzdr}) {
        const Parsing p = parse(t, scheme);
        const CollageSystem cs = to_collage(p);
        EXPECT_EQ(expand(cs), s);
        EXPECT_EQ(cs.sequence.size(), p.size());
    }
}

TEST(Collage, DumpNotation) {
    const std::string s = "aaaaab";
    const Text t(s);
    const CollageSystem cs = to_collage(parse(t, Scheme::lzdr));
    EXPECT_EQ(dump(cs), "X1 = 'a'\nX2 = (X1)^5\nX3 = 'b'\nS = X2 X3\n");
}

TEST(Collage, NonPrintableBytes) {
    const std::string s("\x01'", 2);
    const Text t(s);
    EXPECT_EQ(dump(to_collage(parse(t, Scheme::lzd))), "X1 = '\\x01'\nX2 = '\\x27'\nX3 = X1 X2\nS = X3\n");
}

TEST(Collage, RejectsOtherSchemes) {
    const std::string s = "ab";
    const Text t(s);
    EXPECT_THROW(to_collage(parse(t, Scheme::lz78)), std::invalid_argument);
    EXPECT_THROW(to_collage(parse(t, Scheme::stdflex)), std::invalid_argument);
}

TEST(Collage, ExpandRejectsForwardReference) {
    CollageSystem cs;
    cs.dictionary.push_back({Assignment::Op::concatenation, 0, false, 1, 1});
    cs.sequence.push_back(1);
    EXPECT_THROW(expand(cs), std::invalid_argument);
}

TEST(Collage, FuzzRoundTripAndSizeBound) {
    for (const std::string& s : oracle::fuzz_corpus(300, 61)) {
        const Text t(s);
        for (const Scheme scheme : {Scheme::lzd, Scheme::lzdp, Scheme::lzdr}) {
            const Parsing p = parse(t, scheme);
            const CollageSystem cs = to_collage(p);
            ASSERT_EQ(expand(cs), s);
            std::size_t distinct[256] = {};
            std::size_t sigma = 0;
            for (const unsigned char c : s) sigma += distinct[c]++ == 0;
            ASSERT_LE(cs.dictionary.size(), 2 * p.size() + sigma + 1);
            for (std::size_t k = 0; k < cs.dictionary.size(); ++k) {
                const Assignment& a = cs.dictionary[k];
                ASSERT_NE(a.op, Assignment::Op::prefix_truncation);
                if (a.op != Assignment::Op::primitive) ASSERT_LE(a.i, k);
                if (a.op == Assignment::Op::concatenation) ASSERT_LE(a.j, k);
            }
        }
    }
}

TEST(Collage, LowerBoundStringIsLinearInK) {
    for (std::size_t k = 8; k <= 32; k *= 2) {
        const std::string s = generate_sk(k);
        const Text t(s);
        const CollageSystem cs = to_collage(parse(t, Scheme::lzdr));
        EXPECT_EQ(expand(cs), s);
        EXPECT_LE(cs.size(), 4 * (6 * k + 3));
    }
}
