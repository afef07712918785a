#include <gtest/gtest.h>

#include "locmem/kernels.hpp"
#include "test_support.hpp"

using namespace locmem;
using namespace locmem::kernels;
using locmem::testing::Rng;
using locmem::testing::uniform;

namespace {

ModMatrices random_mod(Rng& rng, std::uint64_t p, std::size_t n, std::size_t count, int zero_bias) {
    ModMatrices m{p, n, {}};
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::uint64_t> flat(n * n);
        for (auto& x : flat) x = uniform(rng, 0, zero_bias) == 0 ? static_cast<std::uint64_t>(uniform(rng, 0, long(p) - 1)) : 0;
        m.mats.push_back(flat);
    }
    return m;
}

// rank over F_p through the exact library, as an oracle for rank_mod_p
std::size_t exact_rank(const std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols, std::uint64_t p) {
    ScalarMatrix a(Field::prime(p), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a.set(i, j, mpz_class(static_cast<unsigned long>(m[i * cols + j])));
    return rank(a);
}

}  // namespace

TEST(Kernels, CheckedPower) {
    EXPECT_EQ(checked_power(5, 4), 625u);
    EXPECT_EQ(checked_power(7, 0), 1u);
    EXPECT_FALSE(checked_power(1u << 31, 3));
}

TEST(Kernels, DecodePointIsLexicographic) {
    EXPECT_EQ(decode_point(0, 5, 3), (std::vector<std::uint64_t>{0, 0, 0}));
    EXPECT_EQ(decode_point(1, 5, 3), (std::vector<std::uint64_t>{0, 0, 1}));
    EXPECT_EQ(decode_point(5, 5, 3), (std::vector<std::uint64_t>{0, 1, 0}));
    EXPECT_EQ(decode_point(124, 5, 3), (std::vector<std::uint64_t>{4, 4, 4}));
}

TEST(Kernels, RankModPMatchesExactRank) {
    Rng rng(1);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 50; ++i) {
            std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 5));
            std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 5));
            std::vector<std::uint64_t> m(rows * cols);
            for (auto& x : m) x = static_cast<std::uint64_t>(uniform(rng, 0, long(p) - 1));
            std::size_t expected = exact_rank(m, rows, cols, p);
            EXPECT_EQ(rank_mod_p(m, rows, cols, p), expected);
        }
    }
}

TEST(Kernels, RankJumpSerialEqualsParallel) {
    Rng rng(2);
    int found = 0;
    for (int i = 0; i < 60; ++i) {
        std::uint64_t p = i % 2 ? 3 : 5;
        std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
        auto coeffs = random_mod(rng, p, n, static_cast<std::size_t>(uniform(rng, 1, long(n) - 1)), 2);
        auto a = first_rank_jump(coeffs, Execution::serial);
        auto b = first_rank_jump(coeffs, Execution::parallel);
        EXPECT_EQ(a, b);
        found += a.has_value();
    }
    EXPECT_GT(found, 0);
}

TEST(Kernels, RankJumpOnIdentityNeverFires) {
    ModMatrices id{5, 3, {{1, 0, 0, 0, 1, 0, 0, 0, 1}}};
    EXPECT_FALSE(first_rank_jump(id, Execution::serial));
    EXPECT_FALSE(first_rank_jump(id, Execution::parallel));
}

TEST(Kernels, IdempotentSerialEqualsParallel) {
    Rng rng(3);
    int found = 0;
    for (int i = 0; i < 60; ++i) {
        std::uint64_t p = i % 2 ? 2 : 3;
        std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 3));
        auto ann = random_mod(rng, p, n, static_cast<std::size_t>(uniform(rng, 1, long(n * n) - 1)), 1);
        auto a = first_rank1_idempotent(ann, Execution::serial);
        auto b = first_rank1_idempotent(ann, Execution::parallel);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
            EXPECT_EQ(a->u, b->u);
            EXPECT_EQ(a->v, b->v);
            ++found;
            // v^T u = 1 and v^T c u = 0
            std::uint64_t dot = 0;
            for (std::size_t k = 0; k < n; ++k) dot += a->u[k] * a->v[k];
            EXPECT_EQ(dot % p, 1u);
            for (const auto& c : ann.mats) {
                std::uint64_t acc = 0;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t k = 0; k < n; ++k) acc += a->v[r] * c[r * n + k] * a->u[k];
                EXPECT_EQ(acc % p, 0u);
            }
        }
    }
    EXPECT_GT(found, 0);
}

TEST(Kernels, NoAnnihilatorsGivesFirstCandidate) {
    ModMatrices none{3, 2, {}};
    auto hit = first_rank1_idempotent(none, Execution::parallel);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->u, (std::vector<std::uint64_t>{0, 1}));
    EXPECT_EQ(hit->v, (std::vector<std::uint64_t>{0, 1}));
}
