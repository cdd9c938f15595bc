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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmdp/polymatrix.hpp"

namespace cmdp {

enum class ErasureModel { iid, burst, explicit_set };

struct ErasurePattern {
    std::size_t length = 0;            // symbols
    std::vector<std::size_t> erased;   // sorted, 1-based
    ErasureModel model = ErasureModel::explicit_set;
    double rate = 0.0;                 // iid
    std::uint64_t seed = 0;            // iid
    std::size_t burst_start = 0;       // burst, 1-based
    std::size_t burst_length = 0;      // burst

    bool is_erased(std::size_t position) const;
    friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;
};

/// Each symbol erased independently with probability `rate`.
ErasurePattern make_iid_pattern(std::size_t length, double rate, std::uint64_t seed);
/// Positions start .. start+len-1 (clipped to the length).
ErasurePattern make_burst_pattern(std::size_t length, std::size_t start, std::size_t len);
ErasurePattern make_explicit_pattern(std::size_t length, std::vector<std::size_t> positions);

std::string serialize_pattern(const ErasurePattern& pattern);
ErasurePattern parse_pattern(const std::string& text);

/// Uniform sampler over the kernel of the blocks-long sliding matrix, i.e.
/// truncated codewords started from the zero state.
class CodewordSampler {
   public:
    CodewordSampler(const PolyParityMatrix& h, std::size_t blocks);

    std::size_t blocks() const noexcept { return blocks_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::vector<FieldElement> sample(std::mt19937_64& rng) const;

   private:
    FieldPtr field_;
    std::size_t n_;
    std::size_t blocks_;
    std::vector<std::vector<FieldElement>> basis_;
};

std::vector<FieldElement> sample_codeword(const PolyParityMatrix& h, std::size_t blocks, std::uint64_t seed);

/// True iff every window of (nu+1) consecutive blocks (history before the
/// start counts as zero) is annihilated by [H_nu ... H_0].
bool satisfies_parity(const PolyParityMatrix& h, const std::vector<FieldElement>& word);

/// A window starts at column block `first_block` (>= -nu; blocks before 0
/// are the known zero history) and carries the syndrome equations of blocks
/// first_block+nu .. first_block+nu+L, cut at the end of the sequence. It is
/// recoverable iff the partial-matrix columns of its erased positions are
/// linearly independent.
bool window_recoverable(const PolyParityMatrix& h, const ErasurePattern& pattern, std::ptrdiff_t first_block);

struct RecoveryStats {
    std::size_t recovered = 0;
    std::size_t unrecovered = 0;
    std::size_t windows_attempted = 0;
    std::size_t windows_solved = 0;
    /// Longest stretch, in symbols, from an erasure the decoder could not
    /// resolve to the next erasure it resolved again (or the end).
    std::size_t max_waiting = 0;
};

struct DecodeResult {
    std::vector<FieldElement> symbols;  // erased-and-unrecovered positions hold zero
    std::vector<bool> known;
    RecoveryStats stats;
};

/// Repeatedly solves the leftmost window whose unknowns are uniquely
/// determined, until no window makes progress. Throws
/// Errc::inconsistent_syndrome when a window system has no solution.
DecodeResult sliding_decoder(const PolyParityMatrix& h, const std::vector<FieldElement>& received,
                             const ErasurePattern& pattern);

}  // namespace cmdp
