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

#include "cmdp/erasure_sim.hpp"
#include "oracles.hpp"

namespace cmdp {
namespace {

PolyParityMatrix code321() { return oracle::code_from(oracle::prime(13), 3, 2, {{10, 5, 1}, {1, 5, 10}}); }

std::vector<FieldElement> erase(const Field& f, std::vector<FieldElement> word, const ErasurePattern& p) {
    for (std::size_t pos : p.erased) word[pos - 1] = f.zero();
    return word;
}

void expect_sound(const std::vector<FieldElement>& sent, const DecodeResult& r) {
    for (std::size_t i = 0; i < sent.size(); ++i) {
        if (r.known[i]) ASSERT_EQ(r.symbols[i], sent[i]) << "position " << i + 1;
    }
}

TEST(Patterns, Models) {
    const auto b = make_burst_pattern(20, 18, 5);
    EXPECT_EQ(b.erased, (std::vector<std::size_t>{18, 19, 20}));
    EXPECT_TRUE(b.is_erased(19));
    EXPECT_FALSE(b.is_erased(17));
    const auto e = make_explicit_pattern(10, {7, 2, 7});
    EXPECT_EQ(e.erased, (std::vector<std::size_t>{2, 7}));
    EXPECT_THROW(make_explicit_pattern(10, {11}), Error);
    EXPECT_THROW(make_iid_pattern(10, 1.5, 1), Error);

    const auto iid = make_iid_pattern(200000, 0.15, 9);
    EXPECT_NEAR(static_cast<double>(iid.erased.size()) / 200000.0, 0.15, 0.005);
    EXPECT_EQ(iid, make_iid_pattern(200000, 0.15, 9));
    EXPECT_NE(iid.erased, make_iid_pattern(200000, 0.15, 10).erased);
}

TEST(Patterns, SerializationRoundTrip) {
    for (const auto& p : {make_iid_pattern(120, 0.1 + 1e-12, 77), make_burst_pattern(120, 31, 9),
                          make_explicit_pattern(30, {1, 5, 30}), make_explicit_pattern(4, {})}) {
        EXPECT_EQ(parse_pattern(serialize_pattern(p)), p);
    }
    EXPECT_THROW(parse_pattern("pattern 1\nlength 3\nmodel explicit\nerased 4\n"), Error);
    EXPECT_THROW(parse_pattern("garbage"), Error);
}

TEST(Codewords, SamplerProducesCodewords) {
    const auto h = code321();
    const CodewordSampler s(h, 40);
    EXPECT_EQ(s.dimension(), 80u);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) EXPECT_TRUE(satisfies_parity(h, s.sample(rng)));
    auto w = s.sample(rng);
    w[4] = h.field().add(w[4], h.field().one());
    EXPECT_FALSE(satisfies_parity(h, w));
    EXPECT_EQ(sample_codeword(h, 40, 5), sample_codeword(h, 40, 5));
}

TEST(Windows, Recoverability) {
    const auto h = code321();
    // One parity symbol per block: two equations per window.
    EXPECT_TRUE(window_recoverable(h, make_explicit_pattern(12, {1}), -1));
    EXPECT_TRUE(window_recoverable(h, make_explicit_pattern(12, {1, 4}), -1));
    EXPECT_FALSE(window_recoverable(h, make_explicit_pattern(12, {1, 2, 3}), -1));
    EXPECT_FALSE(window_recoverable(h, make_explicit_pattern(12, {1, 2, 4}), -1));
    EXPECT_TRUE(window_recoverable(h, make_explicit_pattern(12, {}), 0));
}

TEST(Windows, MonotoneUnderSubsets) {
    const auto h = code321();
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        const auto big = make_iid_pattern(18, 0.3, rng());
        std::vector<std::size_t> sub;
        for (std::size_t p : big.erased)
            if (rng() % 2) sub.push_back(p);
        const auto small = make_explicit_pattern(18, sub);
        for (std::ptrdiff_t w = -1; w < 6; ++w) {
            if (window_recoverable(h, big, w)) ASSERT_TRUE(window_recoverable(h, small, w));
        }
    }
}

TEST(Decoder, NoErasures) {
    const auto h = code321();
    const auto sent = sample_codeword(h, 10, 3);
    const auto r = sliding_decoder(h, sent, make_explicit_pattern(30, {}));
    EXPECT_EQ(r.symbols, sent);
    EXPECT_EQ(r.stats.recovered, 0u);
    EXPECT_EQ(r.stats.unrecovered, 0u);
    EXPECT_EQ(r.stats.max_waiting, 0u);
}

TEST(Decoder, SparseErasuresRecovered) {
    const auto h = code321();
    const auto sent = sample_codeword(h, 10, 3);
    const auto p = make_explicit_pattern(30, {2, 7, 14, 29});
    const auto r = sliding_decoder(h, erase(h.field(), sent, p), p);
    EXPECT_EQ(r.symbols, sent);
    EXPECT_EQ(r.stats.recovered, 4u);
    EXPECT_EQ(r.stats.unrecovered, 0u);
}

TEST(Decoder, RandomPatternsAreSoundAndValueIndependent) {
    const auto h = code321();
    const CodewordSampler s(h, 40);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const auto p = make_iid_pattern(120, 0.2, rng());
        const auto a = s.sample(rng), b = s.sample(rng);
        const auto ra = sliding_decoder(h, erase(h.field(), a, p), p);
        const auto rb = sliding_decoder(h, erase(h.field(), b, p), p);
        expect_sound(a, ra);
        expect_sound(b, rb);
        EXPECT_EQ(ra.known, rb.known);
        EXPECT_EQ(ra.stats.recovered + ra.stats.unrecovered, p.erased.size());
    }
}

TEST(Decoder, ResumesAfterBurst) {
    const auto h = code321();
    const auto sent = sample_codeword(h, 40, 8);
    std::vector<std::size_t> pos;
    for (std::size_t i = 31; i <= 39; ++i) pos.push_back(i);
    for (std::size_t i : {46, 55, 64, 100, 119}) pos.push_back(i);
    const auto p = make_explicit_pattern(120, pos);
    const auto r = sliding_decoder(h, erase(h.field(), sent, p), p);
    expect_sound(sent, r);
    for (std::size_t i : {46, 55, 64, 100, 119}) EXPECT_TRUE(r.known[i - 1]) << i;
    EXPECT_EQ(r.stats.recovered + r.stats.unrecovered, pos.size());
    EXPECT_GE(r.stats.unrecovered, 1u);
    EXPECT_EQ(r.stats.max_waiting, 46u - 31u);

    const auto only = make_burst_pattern(120, 31, 9);
    const auto ro = sliding_decoder(h, erase(h.field(), sent, only), only);
    EXPECT_EQ(ro.stats.max_waiting, 121u - 31u);
}

TEST(Decoder, InconsistentSyndrome) {
    const auto h = code321();
    auto word = sample_codeword(h, 10, 3);
    const auto p = make_explicit_pattern(30, {1});
    word[0] = h.field().zero();
    word[1] = h.field().add(word[1], h.field().one());
    try {
        sliding_decoder(h, word, p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::inconsistent_syndrome);
    }
}

}  // namespace
}  // namespace cmdp
