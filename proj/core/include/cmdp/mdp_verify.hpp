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
#include <optional>
#include <string>
#include <vector>

#include "cmdp/code.hpp"
#include "cmdp/polymatrix.hpp"
#include "cmdp/selection.hpp"

namespace cmdp {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class Level { mdp, reverse_mdp, complete_mdp };

std::string_view level_name(Level level) noexcept;

struct VerifyOptions {
    /// Draw `sample_count` distinct selections instead of enumerating all.
    bool sampled = false;
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = kDefaultSeed;
    /// Exhaustive requests above this many minors fall back to sampling.
    std::uint64_t exhaustive_limit = 1000000;
    unsigned threads = 1;
    /// Skip the left-primeness / row-properness diagnostics (search loops).
    bool diagnostics = true;
};

struct Counterexample {
    BlockKind matrix;
    ColumnSelection selection;
    FieldElement determinant;
};

struct StructuralReport {
    std::size_t redundancy = 0;
    std::size_t rank_h0 = 0;
    std::size_t rank_hnu = 0;
    std::vector<std::optional<std::size_t>> row_degrees;
    std::size_t nu = 0;
    std::size_t delta = 0;  // sum of row degrees
    bool delta_consistent = false;  // delta == nu (n-k)

    bool passed() const noexcept { return rank_h0 == redundancy && rank_hnu == redundancy && delta_consistent; }
};

struct VerificationReport {
    Level level = Level::mdp;
    bool verdict = false;
    CodeParams params;
    Integer minors_total = 0;
    Integer minors_tested = 0;
    bool exhaustive = true;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t sample_count = 0;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> warnings;
    std::vector<std::string> assumptions;
};

/// Ranks of H_0 and H_nu, row degrees and delta = nu (n-k).
StructuralReport structural_check(const PolyParityMatrix& h);

/// Every MDP-mode minor of the sliding matrix H_L is nonzero.
VerificationReport is_mdp(const PolyParityMatrix& h, const VerifyOptions& options = {});
/// MDP plus every reverse-mode minor of the reversed sliding matrix.
/// Throws Errc::rate_constraint unless (n-k) | delta.
VerificationReport is_reverse_mdp(const PolyParityMatrix& h, const VerifyOptions& options = {});
/// Every complete-mode minor of the partial parity-check matrix. Throws
/// Errc::structural_failure when H_0 or H_nu is rank deficient and
/// Errc::rate_constraint unless (n-k) | delta.
VerificationReport is_complete_mdp(const PolyParityMatrix& h, const VerifyOptions& options = {});
VerificationReport verify(const PolyParityMatrix& h, Level level, const VerifyOptions& options = {});

/// Lexicographically first selection of `space` whose minor of `m` vanishes.
std::optional<ColumnSelection> find_zero_minor(const Field& field, const Matrix& m, const SelectionSpace& space,
                                               unsigned threads = 1);

/// Randomized identity test: substitutes uniform values over F_(2^31-1) for
/// the coefficient matrices behind `pattern` and reports whether the chosen
/// minor vanished in every trial.
bool selection_is_trivially_zero_oracle(const BlockGeometry& pattern, const ColumnSelection& sel, std::size_t trials,
                                        std::uint64_t seed);

std::string format_report(const VerificationReport& report, const Field& field);

}  // namespace cmdp
