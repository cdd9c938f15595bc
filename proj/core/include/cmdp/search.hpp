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
#include <vector>

#include "cmdp/code.hpp"
#include "cmdp/mdp_verify.hpp"
#include "cmdp/polymatrix.hpp"

namespace cmdp {

struct SearchResult {
    CodeParams params;
    FieldPtr field;
    bool exhaustive = false;
    /// Exhaustive: a witness exists (or, with count_all, at least one hit).
    /// Random: some draw was complete MDP.
    bool found = false;
    std::optional<PolyParityMatrix> witness;  // first hit in search order
    Integer candidates_total = 0;             // q^((nu+1)(n-k)n) when exhaustive, draws otherwise
    Integer candidates_tested = 0;
    Integer hits = 0;
};

/// Number of coefficient families H_0..H_nu over a field of order q.
Integer family_count(const CodeParams& params, const Integer& q);

/// The family with the given index (base-q digits, row-major over H_0..H_nu).
PolyParityMatrix family_at(const CodeParams& params, FieldPtr field, const Integer& index);

/// Complete-MDP check used by the searches: structural failures count as a miss.
bool is_complete_mdp_candidate(const PolyParityMatrix& h, unsigned threads = 1);

/// Enumerates every family over `field`. Throws Errc::budget_exceeded when
/// there are more than `budget` families. Stops at the first hit unless
/// `count_all`.
SearchResult exhaustive_search(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field, const Integer& budget,
                               bool count_all = false, unsigned threads = 1);

/// Up to `max_draws` uniform families; stops at the first hit unless `count_all`.
SearchResult random_search(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field, std::uint64_t max_draws,
                           std::uint64_t seed = kDefaultSeed, bool count_all = false, unsigned threads = 1);

struct MinimalFieldResult {
    std::optional<Integer> q;           // smallest order with a complete-MDP family
    std::vector<SearchResult> fields;   // one exhaustive run per order tried
};

/// Exhaustive searches over F_q for prime powers q = 2, 3, 4, ... <= q_max
/// until one succeeds. Each field must respect `budget`.
MinimalFieldResult minimal_field_search(std::size_t n, std::size_t k, std::size_t delta, const Integer& q_max,
                                        const Integer& budget, unsigned threads = 1);

/// (p, N) with p^N = q, or nullopt when q is not a prime power.
std::optional<std::pair<Integer, unsigned>> prime_power_decomposition(const Integer& q);

}  // namespace cmdp
