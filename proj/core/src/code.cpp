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

#include "cmdp/code.hpp"

#include <algorithm>
#include <limits>

#include "cmdp/detail/elimination.hpp"

namespace cmdp {

CodeParams derive_params(std::size_t n, std::size_t k, std::size_t delta) {
    if (k == 0 || k >= n) throw Error(Errc::invalid_rate, "rate k/n requires 0 < k < n");
    CodeParams p;
    p.n = n;
    p.k = k;
    p.delta = delta;
    const std::size_t r = n - k;
    p.uniform_rows = delta % r == 0;
    p.nu = (delta + r - 1) / r;
    p.L = delta / k + delta / r;
    p.M = delta / k + p.nu;
    return p;
}

CodeParams params_of(const PolyParityMatrix& h) {
    return derive_params(h.n(), h.k(), h.degree());
}

void require_uniform_rows(const CodeParams& params) {
    if (!params.uniform_rows) {
        throw Error(Errc::rate_constraint, "(n-k) = " + std::to_string(params.redundancy()) +
                                               " does not divide delta = " + std::to_string(params.delta));
    }
}

std::uint64_t singleton_bound(const CodeParams& params) {
    return params.redundancy() * (params.delta / params.k + 1) + params.delta + 1;
}

std::uint64_t column_distance_bound(const CodeParams& params, std::size_t j) {
    return params.redundancy() * (j + 1) + 1;
}

std::uint64_t brute_force_column_distance(const PolyParityMatrix& h, std::size_t j, const Integer& budget) {
    const Field& field = h.field();
    const BlockToeplitzMatrix sliding = sliding_matrix(h, j);
    const Matrix& a = sliding.entries;
    const std::size_t width = a.cols();
    const std::size_t first_block = h.n();

    const auto basis = null_space(field, a);
    // The F_q-span of the basis is the F_p-span of {x^m b : m < N}.
    const std::size_t generators = basis.size() * field.degree();
    const Integer count = ipow(field.characteristic(), static_cast<unsigned>(generators));
    if (count > budget) {
        throw Error(Errc::budget_exceeded, "column distance enumeration needs " + to_string(count) +
                                               " kernel vectors, budget is " + to_string(budget));
    }
    if (!detail::fits_word_prime(field.characteristic())) {
        throw Error(Errc::budget_exceeded, "characteristic too large for exhaustive enumeration");
    }
    const auto p = static_cast<std::uint64_t>(field.characteristic());

    return field.visit([&](const auto& ops) -> std::uint64_t {
        using T = typename std::decay_t<decltype(ops)>::value_type;
        std::vector<std::vector<T>> gens;
        FieldElement power = field.one();
        for (unsigned m = 0; m < field.degree(); ++m) {
            const T scale = ops.from_element(power);
            for (const auto& b : basis) {
                std::vector<T> g;
                g.reserve(width);
                for (const auto& e : b) g.push_back(ops.mul(scale, ops.from_element(e)));
                gens.push_back(std::move(g));
            }
            power = field.mul(power, field.generator());
        }

        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        std::vector<T> v(width, ops.zero());
        std::vector<std::uint64_t> digits(gens.size(), 0);
        for (;;) {
            std::size_t i = 0;
            for (; i < gens.size(); ++i) {
                for (std::size_t c = 0; c < width; ++c) v[c] = ops.add(v[c], gens[i][c]);
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
            if (i == gens.size()) break;
            bool head_nonzero = false;
            for (std::size_t c = 0; c < first_block && !head_nonzero; ++c) head_nonzero = !ops.is_zero(v[c]);
            if (!head_nonzero) continue;
            std::uint64_t weight = 0;
            for (const auto& e : v) weight += ops.is_zero(e) ? 0 : 1;
            best = std::min(best, weight);
        }
        if (best == std::numeric_limits<std::uint64_t>::max()) {
            throw Error(Errc::invalid_argument, "no kernel window with v_0 != 0");
        }
        return best;
    });
}

bool DistanceProfile::meets_bounds() const {
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (values[t] != bounds[t]) return false;
    }
    return true;
}

DistanceProfile distance_profile(const PolyParityMatrix& h, std::size_t j, const Integer& budget) {
    const CodeParams params = params_of(h);
    DistanceProfile profile;
    profile.singleton_bound = singleton_bound(params);
    for (std::size_t t = 0; t <= j; ++t) {
        profile.values.push_back(brute_force_column_distance(h, t, budget));
        profile.bounds.push_back(column_distance_bound(params, t));
    }
    return profile;
}

}  // namespace cmdp
