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
#include <vector>

#include "cmdp/integer.hpp"
#include "cmdp/polymatrix.hpp"

namespace cmdp {

/// (n, k, delta) with the derived memory and profile lengths.
struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t delta = 0;
    /// ceil(delta / (n-k)); equals delta / (n-k) when `uniform_rows`.
    std::size_t nu = 0;
    /// floor(delta/k) + floor(delta/(n-k)).
    std::size_t L = 0;
    /// floor(delta/k) + ceil(delta/(n-k)).
    std::size_t M = 0;
    /// (n-k) divides delta, i.e. all row degrees can equal nu.
    bool uniform_rows = false;

    std::size_t redundancy() const noexcept { return n - k; }
};

/// Throws Errc::invalid_rate unless 0 < k < n.
CodeParams derive_params(std::size_t n, std::size_t k, std::size_t delta);

/// Params for a given parity-check matrix, with delta = sum of row degrees.
CodeParams params_of(const PolyParityMatrix& h);

/// Throws Errc::rate_constraint unless (n-k) | delta.
void require_uniform_rows(const CodeParams& params);

/// Generalized Singleton bound (n-k)(floor(delta/k)+1) + delta + 1.
std::uint64_t singleton_bound(const CodeParams& params);

/// Upper bound (n-k)(j+1) + 1 on the j-th column distance.
std::uint64_t column_distance_bound(const CodeParams& params, std::size_t j);

/// Minimum of sum_{t<=j} wt(v_t) over kernel windows of the sliding matrix
/// with v_0 != 0. Enumerates all q^dim kernel vectors; throws
/// Errc::budget_exceeded when q^dim > budget.
std::uint64_t brute_force_column_distance(const PolyParityMatrix& h, std::size_t j, const Integer& budget);

struct DistanceProfile {
    std::vector<std::uint64_t> values;  // d_0 .. d_j
    std::vector<std::uint64_t> bounds;  // (n-k)(t+1)+1
    std::uint64_t singleton_bound = 0;

    bool meets_bounds() const;
};

DistanceProfile distance_profile(const PolyParityMatrix& h, std::size_t j, const Integer& budget);

}  // namespace cmdp
