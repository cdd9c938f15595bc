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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cmdp/code.hpp"
#include "cmdp/integer.hpp"

namespace cmdp {

/// Which family of full-size minors is being enumerated.
enum class SelectionMode {
    mdp,       // sliding matrix: j_{s(n-k)} <= sn
    reverse,   // reversed sliding matrix: j_{s(n-k)+1} > sn
    complete,  // partial parity-check matrix: both, with the upper bound shifted by nu*n
};

/// Strictly increasing 1-based column indices j_1 < ... < j_R.
struct ColumnSelection {
    std::vector<std::size_t> indices;

    /// Indices shifted to 0-based column positions.
    std::vector<std::size_t> zero_based() const;

    friend bool operator==(const ColumnSelection&, const ColumnSelection&) = default;
    friend auto operator<=>(const ColumnSelection&, const ColumnSelection&) = default;
};

/// The set of selections satisfying one mode's index inequalities, with
/// lexicographic enumeration, counting, ranking and unranking.
///
/// Each position l gets a feasible interval [lower(l), upper(l)] from the
/// inequalities plus monotonicity, so enumeration never produces (or
/// backtracks out of) an invalid selection.
class SelectionSpace {
   public:
    SelectionSpace(SelectionMode mode, std::size_t n, std::size_t k, std::size_t nu, std::size_t L);

    /// Complete mode needs (n-k) | delta; throws Errc::rate_constraint otherwise.
    static SelectionSpace for_params(SelectionMode mode, const CodeParams& params);

    SelectionMode mode() const noexcept { return mode_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t lower(std::size_t position) const { return lower_.at(position - 1); }
    std::size_t upper(std::size_t position) const { return upper_.at(position - 1); }

    const Integer& size() const noexcept { return total_; }
    bool empty() const noexcept { return total_.is_zero(); }

    /// Direct check of the mode's inequalities (independent of the intervals).
    bool contains(const ColumnSelection& sel) const;

    ColumnSelection first() const;
    /// Advances to the lexicographic successor; false at the end.
    bool next(ColumnSelection& sel) const;
    ColumnSelection unrank(Integer rank) const;
    Integer rank(const ColumnSelection& sel) const;

   private:
    SelectionMode mode_;
    std::size_t n_, k_, nu_, L_;
    std::size_t rows_, width_;
    std::vector<std::size_t> lower_, upper_;
    // counts_[l][v]: completions of positions l+1..R (1-based l+1) given j_l = v.
    std::vector<std::vector<Integer>> counts_;
    std::vector<std::vector<std::uint64_t>> small_counts_;
    bool small_ = false;
    Integer total_;
};

std::vector<ColumnSelection> enumerate_selections(SelectionMode mode, const CodeParams& params);

}  // namespace cmdp
