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

#include <set>

#include "cmdp/mdp_verify.hpp"
#include "cmdp/selection.hpp"
#include "oracles.hpp"

namespace cmdp {
namespace {

// The inequalities written out independently of the library.
bool inequality_filter(SelectionMode mode, std::size_t n, std::size_t k, std::size_t nu, std::size_t L,
                       const std::vector<std::size_t>& j) {
    const std::size_t r = n - k;
    for (std::size_t s = 1; s <= L; ++s) {
        const bool low = j[s * r - 1] <= s * n;            // j_{s r} <= s n
        const bool high = j[s * r] > s * n;                // j_{s r + 1} > s n
        const bool band = j[s * r - 1] <= s * n + nu * n;  // j_{s r} <= s n + nu n
        if (mode == SelectionMode::mdp && !low) return false;
        if (mode == SelectionMode::reverse && !high) return false;
        if (mode == SelectionMode::complete && !(high && band)) return false;
    }
    return true;
}

std::size_t width_of(SelectionMode mode, std::size_t n, std::size_t nu, std::size_t L) {
    return (mode == SelectionMode::complete ? nu + L + 1 : L + 1) * n;
}

struct Case {
    std::size_t n, k, nu, L;
};

const std::vector<Case> kCases = {{3, 2, 1, 1}, {2, 1, 2, 4}, {2, 1, 1, 2}, {3, 1, 1, 3}, {3, 1, 2, 6},
                                  {4, 2, 1, 2}, {4, 1, 1, 4}, {2, 1, 0, 0}, {3, 2, 2, 3}, {5, 3, 1, 1}};

TEST(SelectionSpace, CountsMatchBruteForceFilter) {
    for (const auto& c : kCases) {
        for (SelectionMode mode : {SelectionMode::mdp, SelectionMode::reverse, SelectionMode::complete}) {
            const std::size_t w = width_of(mode, c.n, c.nu, c.L), rows = (c.L + 1) * (c.n - c.k);
            if (binomial(static_cast<unsigned>(w), static_cast<unsigned>(rows)) > 1000000) continue;
            const SelectionSpace space(mode, c.n, c.k, c.nu, c.L);
            std::vector<ColumnSelection> brute;
            oracle::for_each_subset(w, rows, [&](const std::vector<std::size_t>& s) {
                if (inequality_filter(mode, c.n, c.k, c.nu, c.L, s)) brute.push_back(ColumnSelection{s});
            });
            ASSERT_EQ(space.size(), brute.size()) << c.n << c.k << c.nu << c.L;
            // Lexicographic enumeration reproduces the filtered list in order.
            std::vector<ColumnSelection> listed;
            if (!space.empty()) {
                ColumnSelection sel = space.first();
                do {
                    listed.push_back(sel);
                } while (space.next(sel));
            }
            ASSERT_EQ(listed, brute);
            for (std::size_t i = 0; i < brute.size(); i += 1 + brute.size() / 50) {
                ASSERT_EQ(space.unrank(Integer(i)), brute[i]);
                ASSERT_EQ(space.rank(brute[i]), i);
                ASSERT_TRUE(space.contains(brute[i]));
            }
        }
    }
}

TEST(SelectionSpace, KnownCounts) {
    EXPECT_EQ(SelectionSpace(SelectionMode::complete, 3, 2, 1, 1).size(), 30);
    // L = 0: no constraint, all C(width, n-k).
    EXPECT_EQ(SelectionSpace(SelectionMode::complete, 3, 1, 2, 0).size(), binomial(9, 2));
    EXPECT_EQ(SelectionSpace(SelectionMode::mdp, 4, 1, 0, 0).size(), binomial(4, 3));
    std::size_t brute = 0;
    oracle::for_each_subset(14, 5, [&](const std::vector<std::size_t>& s) {
        brute += inequality_filter(SelectionMode::complete, 2, 1, 2, 4, s);
    });
    EXPECT_EQ(SelectionSpace(SelectionMode::complete, 2, 1, 2, 4).size(), brute);
}

TEST(SelectionSpace, EnumerateMatchesForParams) {
    const auto all = enumerate_selections(SelectionMode::complete, derive_params(3, 2, 1));
    EXPECT_EQ(all.size(), 30u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_THROW(SelectionSpace::for_params(SelectionMode::complete, derive_params(3, 1, 3)), Error);
}

TEST(SelectionSpace, MdpIsCompleteShiftedByNuN) {
    for (const auto& c : std::vector<Case>{{3, 2, 1, 1}, {2, 1, 2, 4}}) {
        const SelectionSpace mdp(SelectionMode::mdp, c.n, c.k, c.nu, c.L);
        const SelectionSpace complete(SelectionMode::complete, c.n, c.k, c.nu, c.L);
        std::set<ColumnSelection> shifted;
        ColumnSelection s = mdp.first();
        do {
            ColumnSelection t = s;
            for (auto& j : t.indices) j += c.nu * c.n;
            ASSERT_TRUE(complete.contains(t));
            shifted.insert(t);
        } while (mdp.next(s));
        // Conversely every complete selection inside the last (L+1)n columns
        // comes from an MDP selection.
        std::size_t inside = 0;
        ColumnSelection u = complete.first();
        do {
            if (u.indices.front() > c.nu * c.n) {
                ++inside;
                ASSERT_TRUE(shifted.count(u));
            }
        } while (complete.next(u));
        EXPECT_EQ(inside, shifted.size());
    }
}

TEST(SelectionSpace, RandomAccessIsUniformlyIndexed) {
    const SelectionSpace space(SelectionMode::complete, 3, 1, 2, 6);
    EXPECT_GT(space.size(), 1000000);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        const Integer r = uniform_below(space.size(), rng);
        const ColumnSelection s = space.unrank(r);
        ASSERT_TRUE(space.contains(s));
        ASSERT_TRUE(inequality_filter(SelectionMode::complete, 3, 1, 2, 6, s.indices));
        ASSERT_EQ(space.rank(s), r);
        ColumnSelection nxt = s;
        if (space.next(nxt)) {
            ASSERT_EQ(space.rank(nxt), r + 1);
        }
    }
}

// Membership by inequalities versus the randomized identity test.
TEST(SelectionSoundness, InequalitiesMatchTriviallyZeroOracle) {
    struct Mode {
        SelectionMode mode;
        BlockKind kind;
    };
    for (const auto& c : std::vector<Case>{{3, 2, 1, 1}, {2, 1, 2, 4}, {3, 1, 1, 3}}) {
        for (Mode m : {Mode{SelectionMode::mdp, BlockKind::sliding}, Mode{SelectionMode::reverse, BlockKind::reversed_sliding},
                       Mode{SelectionMode::complete, BlockKind::partial}}) {
            const BlockGeometry g{m.kind, c.n, c.n - c.k, c.nu, c.L};
            const SelectionSpace space(m.mode, c.n, c.k, c.nu, c.L);
            std::mt19937_64 rng(c.n * 100 + c.nu * 10 + c.L);
            std::size_t agree = 0, members = 0;
            for (int t = 0; t < 1000; ++t) {
                // Half the draws from the valid set, half uniform subsets.
                ColumnSelection sel;
                if (t % 2 == 0) {
                    sel = space.unrank(uniform_below(space.size(), rng));
                } else {
                    std::vector<std::size_t> pool(g.cols());
                    std::iota(pool.begin(), pool.end(), 1);
                    std::shuffle(pool.begin(), pool.end(), rng);
                    sel.indices.assign(pool.begin(), pool.begin() + static_cast<long>(g.rows()));
                    std::sort(sel.indices.begin(), sel.indices.end());
                }
                const bool member = space.contains(sel);
                members += member;
                const bool vanishes = selection_is_trivially_zero_oracle(g, sel, 20, rng());
                agree += member == !vanishes;
            }
            EXPECT_EQ(agree, 1000u) << "n=" << c.n << " nu=" << c.nu << " mode=" << static_cast<int>(m.mode);
            EXPECT_GE(members, 500u);
        }
    }
}

TEST(TriviallyZeroOracle, Examples) {
    const BlockGeometry g{BlockKind::partial, 3, 1, 1, 1};
    // Index conditions violated (j_2 <= 3): always zero.
    EXPECT_TRUE(selection_is_trivially_zero_oracle(g, ColumnSelection{{1, 2}}, 20, 1));
    EXPECT_FALSE(selection_is_trivially_zero_oracle(g, ColumnSelection{{1, 4}}, 20, 1));
    // Diagonal of H_nu blocks in the partial matrix.
    const BlockGeometry g2{BlockKind::partial, 2, 1, 2, 4};
    EXPECT_FALSE(selection_is_trivially_zero_oracle(g2, ColumnSelection{{1, 3, 5, 7, 9}}, 20, 2));
    EXPECT_THROW(selection_is_trivially_zero_oracle(g, ColumnSelection{{1, 4}}, 0, 1), Error);
}

}  // namespace
}  // namespace cmdp
