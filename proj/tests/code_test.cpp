#include <gtest/gtest.h>

#include "bsphere/code.hpp"
#include "oracles.hpp"

namespace bsphere {
namespace {

TEST(GeneratorMatrixParse, WithAndWithoutHeader) {
    const auto g = parse_generator_matrix("# hamming\n4 7\n1000110\n0100101\n0010011\n0001111\n");
    EXPECT_EQ(g.k(), 4u);
    EXPECT_EQ(g.n(), 7u);
    EXPECT_EQ(g.rows(), oracle::hamming_7_4());
    EXPECT_EQ(parse_generator_matrix("1000110\n0100101\n0010011\n0001111\n"), g);
    EXPECT_EQ(parse_generator_matrix("1 0 0 0 1 1 0\n0100101\n0010 011\n0001111"), g);
}

TEST(GeneratorMatrixParse, HeaderLookalikeRow) {
    // "1 1" here is a row of two bits, not a header: nothing after it is 1 x 1.
    const auto g = parse_generator_matrix("1 1\n");
    EXPECT_EQ(g.k(), 1u);
    EXPECT_EQ(g.n(), 2u);
    EXPECT_EQ(g.rows(), (std::vector<Word>{0b11}));
    // A header followed by a matching row.
    const auto h = parse_generator_matrix("1 3\n111\n");
    EXPECT_EQ(h.k(), 1u);
    EXPECT_EQ(h.n(), 3u);
}

TEST(GeneratorMatrixParse, Rejects) {
    EXPECT_THROW(parse_generator_matrix(""), ParseError);
    EXPECT_THROW(parse_generator_matrix("# only comments\n"), ParseError);
    EXPECT_THROW(parse_generator_matrix("101\n11\n"), ParseError);
    EXPECT_THROW(parse_generator_matrix("1021\n"), ParseError);
    EXPECT_THROW(parse_generator_matrix("10\n01\n11\n"), ParseError);
}

TEST(GeneratorMatrixText, RoundTrip) {
    const GeneratorMatrix g(15, oracle::hamming_15_11());
    EXPECT_EQ(parse_generator_matrix(format_generator_matrix(g)), g);
}

TEST(GeneratorMatrix, RankAndEncode) {
    const GeneratorMatrix h(7, oracle::hamming_7_4());
    EXPECT_EQ(h.rank(), 4u);
    EXPECT_NO_THROW(h.require_full_rank());
    EXPECT_EQ(h.encode(0b0011), oracle::hamming_7_4()[0] ^ oracle::hamming_7_4()[1]);
    const GeneratorMatrix dup(4, {0b1011, 0b1011});
    EXPECT_EQ(dup.rank(), 1u);
    EXPECT_THROW(dup.require_full_rank(), RankDeficientError);
    EXPECT_THROW(GeneratorMatrix(3, {0b1000}), std::invalid_argument);
    EXPECT_THROW(GeneratorMatrix(0, {}), std::invalid_argument);
}

TEST(GeneratorMatrix, RankAgreesWithOracle) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(trial % 10);
        const unsigned k = 1 + static_cast<unsigned>(rng() % n);
        std::vector<Word> rows(k);
        // Sparse rows so rank deficiency actually happens.
        for (auto& r : rows) r = rng() & rng() & ((Word{1} << n) - 1);
        EXPECT_EQ(GeneratorMatrix(n, rows).rank() == k, oracle::full_rank(rows)) << trial;
    }
}

TEST(CodeMapParse, Example) {
    const auto f = parse_code_map("# a nonlinear map\n2 3\n00 000\n01 011\n10 110\n11 001\n");
    EXPECT_EQ(f.k(), 2u);
    EXPECT_EQ(f.n(), 3u);
    EXPECT_EQ(f(1), 0b011u);
    EXPECT_EQ(f(2), 0b110u);
    EXPECT_EQ(f(3), 0b001u);
    EXPECT_EQ(format_code_map(f), "2 3\n00 000\n01 011\n10 110\n11 001\n");
    // Lines may come in any order.
    EXPECT_EQ(parse_code_map("2 3\n11 001\n00 000\n10 110\n01 011\n").images(), f.images());
}

TEST(CodeMapParse, Rejects) {
    EXPECT_THROW(parse_code_map(""), ParseError);
    EXPECT_THROW(parse_code_map("2 3\n00 000\n01 011\n10 110\n"), ParseError);
    EXPECT_THROW(parse_code_map("2 3\n00 001\n01 011\n10 110\n11 001\n"), ParseError);
    EXPECT_THROW(parse_code_map("2 3\n00 000\n01 011\n01 110\n11 001\n"), ParseError);
    EXPECT_THROW(parse_code_map("2 3\n00 000\n01 011\n10 11\n11 001\n"), ParseError);
    EXPECT_THROW(parse_code_map("2 3\n00 000\n01 011\n10 112\n11 001\n"), ParseError);
    EXPECT_THROW(parse_code_map("0 3\n"), ParseError);
}

TEST(CodeMap, Validation) {
    EXPECT_THROW(CodeMap(1, 2, {0b01, 0b10}), std::invalid_argument);
    EXPECT_THROW(CodeMap(1, 2, {0, 0b100}), std::invalid_argument);
    EXPECT_THROW(CodeMap(2, 2, {0, 1}), std::invalid_argument);
    const auto f = CodeMap::from_generator(GeneratorMatrix(7, oracle::hamming_7_4()));
    EXPECT_EQ(f.images().size(), 16u);
    EXPECT_EQ(f(0b1000), oracle::hamming_7_4()[3]);
}

}  // namespace
}  // namespace bsphere
