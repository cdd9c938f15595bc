/*
 * Copyright 2026 The cmdp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "cmdp/polymatrix.hpp"
#include "oracles.hpp"

namespace cmdp {
namespace {

using oracle::code_from;
using oracle::ints;

PolyParityMatrix example_a(std::uint64_t p) { return code_from(oracle::prime(p), 3, 2, {{10, 5, 1}, {1, 5, 10}}); }

PolyParityMatrix example_b(std::uint64_t p) {
    return code_from(oracle::prime(p), 3, 1,
                     {{7, 1, 0, 21, 7, 1}, {35, 35, 21, 21, 35, 35}, {1, 7, 21, 0, 1, 7}});
}

TEST(Sliding, ExampleA) {
    const auto h = example_a(13);
    const Field& f = h.field();
    EXPECT_EQ(sliding_matrix(h, 0).entries, ints(f, 1, 3, {10, 5, 1}));
    EXPECT_EQ(sliding_matrix(h, 1).entries, ints(f, 2, 6, {10, 5, 1, 0, 0, 0, 1, 5, 10, 10, 5, 1}));
}

TEST(Partial, ExampleA) {
    const auto h = example_a(13);
    EXPECT_EQ(partial_parity_matrix(h, 1).entries,
              ints(h.field(), 2, 9, {1, 5, 10, 10, 5, 1, 0, 0, 0, 0, 0, 0, 1, 5, 10, 10, 5, 1}));
}

TEST(Partial, ExampleBShape) {
    const auto h = example_b(1000003);
    const auto m = partial_parity_matrix(h, 6);
    EXPECT_EQ(m.entries.rows(), 14u);
    EXPECT_EQ(m.entries.cols(), 27u);
    EXPECT_EQ(m.entries.block(0, 0, 2, 3), h.coeff(2));
    EXPECT_EQ(m.entries.block(12, 24, 2, 3), h.coeff(0));
}

TEST(Partial, DegenerateBand) {
    const auto h = code_from(oracle::prime(5), 2, 1, {{1, 2}});
    EXPECT_EQ(partial_parity_matrix(h, 0).entries, h.coeff(0));
}

TEST(Reversed, ExampleA) {
    const auto h = example_a(13);
    const Field& f = h.field();
    EXPECT_EQ(reversed_sliding_matrix(h, 0).entries, h.coeff(1));
    EXPECT_EQ(reversed_sliding_matrix(h, 1).entries, ints(f, 2, 6, {1, 5, 10, 10, 5, 1, 0, 0, 0, 1, 5, 10}));
    const auto r = reverse_coefficients(h);
    EXPECT_EQ(r.coeff(0), ints(f, 1, 3, {1, 5, 10}));
    EXPECT_EQ(r.coeff(1), ints(f, 1, 3, {10, 5, 1}));
}

// Entry-level oracle: block (r, c) from the defining index formulas.
Matrix expected_layout(const PolyParityMatrix& h, BlockKind kind, std::size_t L) {
    const Field& f = h.field();
    const std::size_t n = h.n(), r = h.redundancy(), nu = h.nu();
    const std::size_t cb = kind == BlockKind::partial ? nu + L + 1 : L + 1;
    Matrix m = Matrix::zeros(f, (L + 1) * r, cb * n);
    for (std::size_t x = 0; x <= L; ++x) {
        for (std::size_t y = 0; y < cb; ++y) {
            long long idx;
            if (kind == BlockKind::sliding) {
                idx = static_cast<long long>(x) - static_cast<long long>(y);
            } else {
                idx = static_cast<long long>(nu) - (static_cast<long long>(y) - static_cast<long long>(x));
                if (y < x) idx = -1;
            }
            if (idx < 0 || idx > static_cast<long long>(nu)) continue;
            m.set_block(x * r, y * n, h.coeff(static_cast<std::size_t>(idx)));
        }
    }
    return m;
}

TEST(Layout, AllKindsMatchIndexFormulas) {
    std::mt19937_64 rng(17);
    const auto f = oracle::prime(31);
    for (auto [n, k, nu] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
             {2, 1, 0}, {2, 1, 2}, {3, 1, 1}, {3, 2, 2}, {4, 2, 1}, {5, 3, 3}}) {
        std::vector<Matrix> coeffs;
        for (std::size_t i = 0; i <= nu; ++i) coeffs.push_back(oracle::random_matrix(*f, n - k, n, rng));
        const PolyParityMatrix h(f, n, k, coeffs);
        for (std::size_t L = 0; L <= 4; ++L) {
            const Matrix sliding = sliding_matrix(h, L).entries;
            const Matrix reversed = reversed_sliding_matrix(h, L).entries;
            const Matrix partial = partial_parity_matrix(h, L).entries;
            ASSERT_EQ(sliding, expected_layout(h, BlockKind::sliding, L));
            ASSERT_EQ(reversed, expected_layout(h, BlockKind::reversed_sliding, L));
            ASSERT_EQ(partial, expected_layout(h, BlockKind::partial, L));
            // Last (L+1)n columns of the partial matrix are the sliding matrix,
            // the first (L+1)n the reversed one.
            const std::size_t w = (L + 1) * n;
            ASSERT_EQ(partial.block(0, nu * n, partial.rows(), w), sliding);
            ASSERT_EQ(partial.block(0, 0, partial.rows(), w), reversed);
            // Reversing the block order of both axes turns the reversed code's
            // sliding matrix into the reversed sliding matrix.
            const Matrix bar = sliding_matrix(reverse_coefficients(h), L).entries;
            Matrix flipped = Matrix::zeros(*f, bar.rows(), bar.cols());
            for (std::size_t x = 0; x <= L; ++x) {
                for (std::size_t y = 0; y <= L; ++y) {
                    flipped.set_block((L - x) * (n - k), (L - y) * n, bar.block(x * (n - k), y * n, n - k, n));
                }
            }
            ASSERT_EQ(flipped, reversed);
            ASSERT_EQ(reverse_coefficients(reverse_coefficients(h)), h);
        }
    }
}

TEST(RowProper, Examples) {
    const auto f = oracle::prime(2);
    // Leading row coefficients [0,1,0] twice: dependent.
    const auto bad = code_from(f, 3, 1, {{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 0}});
    EXPECT_FALSE(is_row_proper(bad));
    EXPECT_TRUE(is_row_proper(example_a(13)));
    EXPECT_TRUE(is_row_proper(example_b(1000003)));
    // Row degrees differ: leading matrix mixes H_1 row 0 with H_0 row 1.
    const auto mixed = code_from(f, 3, 1, {{1, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}});
    EXPECT_TRUE(is_row_proper(mixed));
    EXPECT_EQ(mixed.row_degrees()[0], 1u);
    EXPECT_EQ(mixed.row_degrees()[1], 0u);
}

TEST(LeftPrime, Examples) {
    const auto f = oracle::prime(7);
    EXPECT_TRUE(is_left_prime(code_from(f, 2, 1, {{1, 3}, {0, 2}, {0, 5}})));  // [1, h(z)]
    EXPECT_FALSE(is_left_prime(code_from(f, 2, 1, {{0, 0}, {1, 0}, {0, 1}})));  // [z, z^2]
    EXPECT_TRUE(is_left_prime(example_a(13)));
    // [1+z, 1+z] over F_7: common factor.
    EXPECT_FALSE(is_left_prime(code_from(f, 2, 1, {{1, 1}, {1, 1}})));
    // 2x2 minors sharing (z - 1): rows [1, 0, z-1] and [0, 1, z-1]; minors 1, z-1, -(z-1).
    EXPECT_TRUE(is_left_prime(code_from(f, 3, 1, {{1, 0, 6, 0, 1, 6}, {0, 0, 1, 0, 0, 1}})));
    // rows [z-1, 0, 0] and [0, z-1, 0]: minors (z-1)^2, 0, 0.
    EXPECT_FALSE(is_left_prime(code_from(f, 3, 1, {{6, 0, 0, 0, 6, 0}, {1, 0, 0, 0, 1, 0}})));
}

TEST(LeftPrime, ExtensionFieldCoefficients) {
    auto f = std::make_shared<const Field>(make_extension_field(2, 4));
    const auto a = f->generator();
    // [1 + a z, a + a^2 z] = (1 + a z) [1, a]: not left prime.
    Matrix h0 = Matrix::zeros(*f, 1, 2), h1 = Matrix::zeros(*f, 1, 2);
    h0(0, 0) = f->one();
    h0(0, 1) = a;
    h1(0, 0) = a;
    h1(0, 1) = f->mul(a, a);
    EXPECT_FALSE(is_left_prime(PolyParityMatrix(f, 2, 1, {h0, h1})));
    h1(0, 1) = f->one();
    EXPECT_TRUE(is_left_prime(PolyParityMatrix(f, 2, 1, {h0, h1})));
}

TEST(LeftPrime, ImpliesFullStackedRank) {
    std::mt19937_64 rng(23);
    const auto f = oracle::prime(3);
    int prime_count = 0;
    for (int t = 0; t < 300; ++t) {
        std::vector<Matrix> coeffs;
        for (int i = 0; i < 2; ++i) coeffs.push_back(oracle::random_matrix(*f, 2, 3, rng));
        const PolyParityMatrix h(f, 3, 1, coeffs);
        if (is_left_prime(h)) {
            ++prime_count;
            ASSERT_EQ(stacked_rank(h), 2u);
        }
    }
    EXPECT_GT(prime_count, 50);
}

TEST(PolyParityMatrix, RejectsBadShapes) {
    const auto f = oracle::prime(5);
    EXPECT_THROW(PolyParityMatrix(f, 2, 2, {Matrix::zeros(*f, 0, 2)}), Error);
    EXPECT_THROW(PolyParityMatrix(f, 3, 1, {Matrix::zeros(*f, 1, 3)}), Error);
    EXPECT_THROW(PolyParityMatrix(f, 3, 1, {}), Error);
}

}  // namespace
}  // namespace cmdp
