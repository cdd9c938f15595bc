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

#include "cmdp/search.hpp"

#include <limits>
#include <random>

#include "cmdp/error.hpp"

namespace cmdp {

namespace {

std::size_t entries_per_family(const CodeParams& p) { return (p.nu + 1) * p.redundancy() * p.n; }

CodeParams search_params(std::size_t n, std::size_t k, std::size_t delta) {
    CodeParams p = derive_params(n, k, delta);
    require_uniform_rows(p);
    return p;
}

PolyParityMatrix family_from_elements(const CodeParams& p, FieldPtr field, std::vector<FieldElement> values) {
    const std::size_t r = p.redundancy();
    std::vector<Matrix> coeffs;
    std::size_t at = 0;
    for (std::size_t i = 0; i <= p.nu; ++i) {
        Matrix h = Matrix::zeros(*field, r, p.n);
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < p.n; ++b) h(a, b) = std::move(values[at++]);
        }
        coeffs.push_back(std::move(h));
    }
    return PolyParityMatrix(std::move(field), p.n, p.k, std::move(coeffs));
}

}  // namespace

Integer family_count(const CodeParams& params, const Integer& q) {
    return ipow(q, static_cast<unsigned>(entries_per_family(params)));
}

PolyParityMatrix family_at(const CodeParams& params, FieldPtr field, const Integer& index) {
    const Integer q = field->order();
    Integer rest = index;
    std::vector<FieldElement> values;
    for (std::size_t i = 0; i < entries_per_family(params); ++i) {
        values.push_back(field->element_from_index(Integer(rest % q)));
        rest /= q;
    }
    if (!rest.is_zero()) throw Error(Errc::invalid_argument, "family index out of range");
    return family_from_elements(params, std::move(field), std::move(values));
}

bool is_complete_mdp_candidate(const PolyParityMatrix& h, unsigned threads) {
    VerifyOptions opts;
    opts.diagnostics = false;
    opts.threads = threads;
    opts.exhaustive_limit = std::numeric_limits<std::uint64_t>::max();
    try {
        return is_complete_mdp(h, opts).verdict;
    } catch (const Error& e) {
        if (e.code() == Errc::structural_failure || e.code() == Errc::rate_constraint) return false;
        throw;
    }
}

SearchResult exhaustive_search(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field, const Integer& budget,
                               bool count_all, unsigned threads) {
    SearchResult res;
    res.params = search_params(n, k, delta);
    res.field = field;
    res.exhaustive = true;
    res.candidates_total = family_count(res.params, field->order());
    if (res.candidates_total > budget) {
        throw Error(Errc::budget_exceeded, to_string(res.candidates_total) + " coefficient families exceed the budget of " +
                                               to_string(budget));
    }
    for (Integer i = 0; i < res.candidates_total; ++i) {
        ++res.candidates_tested;
        PolyParityMatrix h = family_at(res.params, field, i);
        if (!is_complete_mdp_candidate(h, threads)) continue;
        ++res.hits;
        if (!res.witness) res.witness = std::move(h);
        res.found = true;
        if (!count_all) break;
    }
    return res;
}

SearchResult random_search(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field, std::uint64_t max_draws,
                           std::uint64_t seed, bool count_all, unsigned threads) {
    SearchResult res;
    res.params = search_params(n, k, delta);
    res.field = field;
    res.candidates_total = max_draws;
    std::mt19937_64 rng(seed);
    for (std::uint64_t d = 0; d < max_draws; ++d) {
        ++res.candidates_tested;
        std::vector<FieldElement> values;
        for (std::size_t i = 0; i < entries_per_family(res.params); ++i) values.push_back(field->random(rng));
        PolyParityMatrix h = family_from_elements(res.params, field, std::move(values));
        if (!is_complete_mdp_candidate(h, threads)) continue;
        ++res.hits;
        if (!res.witness) res.witness = std::move(h);
        res.found = true;
        if (!count_all) break;
    }
    return res;
}

std::optional<std::pair<Integer, unsigned>> prime_power_decomposition(const Integer& q) {
    if (q < 2) return std::nullopt;
    Integer p = 0;
    if (is_probable_prime(q)) return std::make_pair(q, 1u);
    for (Integer d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned N = 0;
    Integer rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++N;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, N);
}

MinimalFieldResult minimal_field_search(std::size_t n, std::size_t k, std::size_t delta, const Integer& q_max,
                                        const Integer& budget, unsigned threads) {
    MinimalFieldResult out;
    for (Integer q = 2; q <= q_max; ++q) {
        const auto pp = prime_power_decomposition(q);
        if (!pp) continue;
        auto field = std::make_shared<const Field>(pp->second == 1 ? make_prime_field(pp->first)
                                                                    : make_extension_field(pp->first, pp->second));
        out.fields.push_back(exhaustive_search(n, k, delta, std::move(field), budget, false, threads));
        if (out.fields.back().found) {
            out.q = q;
            break;
        }
    }
    return out;
}

}  // namespace cmdp
