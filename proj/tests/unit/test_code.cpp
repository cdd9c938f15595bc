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

#include "cmdp/code.hpp"
#include "cmdp/mdp_verify.hpp"
#include "oracles.hpp"

namespace cmdp {
namespace {

using oracle::code_from;

// Enumerates all of F_p^((j+1)n) directly; prime fields only.
std::uint64_t naive_column_distance(const PolyParityMatrix& h, std::size_t j) {
    const Field& f = h.field();
    const auto p = static_cast<std::uint64_t>(f.characteristic());
    const Matrix s = sliding_matrix(h, j).entries;
    const std::size_t w = s.cols();
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint64_t> digits(w, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < w && ++digits[i] == p) digits[i++] = 0;
        if (i == w) break;
        std::vector<FieldElement> v;
        for (auto d : digits) v.push_back(f.from_integer(Integer(d)));
        bool head = false;
        for (std::size_t c = 0; c < h.n(); ++c) head = head || digits[c] != 0;
        if (!head) continue;
        bool in_kernel = true;
        for (const auto& e : multiply(f, s, v)) in_kernel = in_kernel && f.is_zero(e);
        if (!in_kernel) continue;
        std::uint64_t weight = 0;
        for (auto d : digits) weight += d != 0;
        best = std::min(best, weight);
    }
    return best;
}

TEST(Params, WorkedExamples) {
    const CodeParams a = derive_params(3, 2, 1);
    EXPECT_EQ(a.nu, 1u);
    EXPECT_EQ(a.L, 1u);
    const CodeParams b = derive_params(3, 1, 4);
    EXPECT_EQ(b.nu, 2u);
    EXPECT_EQ(b.L, 6u);
    EXPECT_EQ(b.M, 6u);
    const CodeParams z = derive_params(2, 1, 0);
    EXPECT_EQ(z.L, 0u);
    EXPECT_EQ(z.M, 0u);
    try {
        derive_params(2, 2, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_rate);
    }
    EXPECT_THROW(derive_params(3, 0, 1), Error);
}

TEST(Params, ProfileLengthsAreOrdered) {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t d = 0; d <= 12; ++d) {
                const CodeParams p = derive_params(n, k, d);
                ASSERT_LE(p.L, p.M);
                ASSERT_LE(p.M, p.L + 1);
                ASSERT_EQ(p.uniform_rows, d % (n - k) == 0);
            }
        }
    }
}

TEST(Params, RequireUniformRows) {
    try {
        require_uniform_rows(derive_params(3, 1, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::rate_constraint);
    }
    EXPECT_NO_THROW(require_uniform_rows(derive_params(3, 1, 4)));
}

TEST(Bounds, SingletonAndColumn) {
    EXPECT_EQ(singleton_bound(derive_params(3, 2, 1)), 3u);
    EXPECT_EQ(singleton_bound(derive_params(3, 1, 4)), 15u);
    for (std::size_t n = 2; n < 6; ++n) {
        for (std::size_t k = 1; k < n; ++k) EXPECT_EQ(singleton_bound(derive_params(n, k, 0)), n - k + 1);
    }
    EXPECT_EQ(column_distance_bound(derive_params(3, 2, 1), 0), 2u);
    EXPECT_EQ(column_distance_bound(derive_params(3, 2, 1), 1), 3u);
    EXPECT_EQ(column_distance_bound(derive_params(3, 1, 4), 6), 15u);
}

TEST(ColumnDistance, RepetitionCode) {
    const auto h = code_from(oracle::prime(2), 2, 1, {{1, 1}});
    EXPECT_EQ(brute_force_column_distance(h, 0, 100), 2u);
}

TEST(ColumnDistance, PascalExampleMeetsBounds) {
    const auto h = code_from(oracle::prime(13), 3, 2, {{10, 5, 1}, {1, 5, 10}});
    const DistanceProfile prof = distance_profile(h, 1, 1000000);
    EXPECT_EQ(prof.values, (std::vector<std::uint64_t>{2, 3}));
    EXPECT_EQ(prof.bounds, (std::vector<std::uint64_t>{2, 3}));
    EXPECT_TRUE(prof.meets_bounds());
    EXPECT_EQ(prof.singleton_bound, 3u);
}

TEST(ColumnDistance, BudgetExceeded) {
    const auto h = code_from(oracle::prime(13), 3, 2, {{10, 5, 1}, {1, 5, 10}});
    try {
        brute_force_column_distance(h, 1, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::budget_exceeded);
    }
    EXPECT_THROW(brute_force_column_distance(h, 0, 0), Error);
}

TEST(ColumnDistance, AgreesWithFullEnumeration) {
    std::mt19937_64 rng(31);
    for (auto [p, n, k, nu] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t, std::size_t>>{
             {2, 2, 1, 1}, {3, 2, 1, 1}, {3, 3, 2, 1}, {2, 3, 1, 1}}) {
        const auto f = oracle::prime(p);
        for (int t = 0; t < 15; ++t) {
            std::vector<Matrix> coeffs;
            for (std::size_t i = 0; i <= nu; ++i) coeffs.push_back(oracle::random_matrix(*f, n - k, n, rng));
            if (rank(*f, coeffs.front()) != n - k) continue;  // keeps v_0 != 0 windows available
            const PolyParityMatrix h(f, n, k, coeffs);
            for (std::size_t j = 0; j <= 1; ++j) {
                ASSERT_EQ(brute_force_column_distance(h, j, 1000000), naive_column_distance(h, j));
            }
        }
    }
}

TEST(ColumnDistance, ExtensionFieldGenerators) {
    // Over F_4 the kernel span needs the x-multiples of the basis.
    auto f = std::make_shared<const Field>(make_extension_field(2, 2));
    Matrix h0 = Matrix::zeros(*f, 1, 2);
    h0(0, 0) = f->one();
    h0(0, 1) = f->generator();
    const PolyParityMatrix h(f, 2, 1, {h0});
    EXPECT_EQ(brute_force_column_distance(h, 0, 100), 2u);
}

// Random left-prime codes whose row degrees all equal nu.
std::vector<PolyParityMatrix> random_codes(std::uint64_t p, std::size_t n, std::size_t k, std::size_t nu, int want,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto f = oracle::prime(p);
    std::vector<PolyParityMatrix> out;
    for (int attempts = 0; static_cast<int>(out.size()) < want && attempts < 100000; ++attempts) {
        std::vector<Matrix> coeffs;
        for (std::size_t i = 0; i <= nu; ++i) coeffs.push_back(oracle::random_matrix(*f, n - k, n, rng));
        if (rank(*f, coeffs.back()) != n - k) continue;
        PolyParityMatrix h(f, n, k, coeffs);
        if (!is_left_prime(h)) continue;
        out.push_back(std::move(h));
    }
    return out;
}

TEST(OracleEquivalence, MinorCriterionMatchesDistances) {
    for (std::uint64_t p : {2, 3}) {
        for (auto [n, k, nu] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
                 {2, 1, 1}, {3, 1, 1}, {3, 2, 1}}) {
            int agree = 0, mdp = 0;
            const auto codes = random_codes(p, n, k, nu, 40, 1000 * p + 10 * n + k);
            ASSERT_EQ(codes.size(), 40u);
            for (const auto& h : codes) {
                const CodeParams params = params_of(h);
                const bool by_minors = is_mdp(h).verdict;
                const bool by_distance = distance_profile(h, params.L, 10000000).meets_bounds();
                agree += by_minors == by_distance;
                mdp += by_minors;
            }
            EXPECT_EQ(agree, 40) << "p=" << p << " n=" << n << " k=" << k;
            RecordProperty("mdp_hits_" + std::to_string(p) + std::to_string(n) + std::to_string(k), mdp);
        }
    }
}

TEST(PrefixProperty, FullProfileImpliesPrefix) {
    for (const auto& h : random_codes(3, 3, 2, 1, 30, 77)) {
        const DistanceProfile prof = distance_profile(h, params_of(h).L, 10000000);
        for (std::size_t t = 1; t < prof.values.size(); ++t) ASSERT_LE(prof.values[t - 1], prof.values[t]);
        for (std::size_t t = 0; t < prof.values.size(); ++t) ASSERT_LE(prof.values[t], prof.bounds[t]);
        if (prof.values.back() == prof.bounds.back()) {
            for (std::size_t t = 0; t < prof.values.size(); ++t) ASSERT_EQ(prof.values[t], prof.bounds[t]);
        }
    }
}

}  // namespace
}  // namespace cmdp
