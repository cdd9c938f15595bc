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

// Independent reference implementations used only by the tests. They avoid
// the library's elimination and enumeration code paths on purpose.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <vector>

#include "cmdp/finite_field.hpp"
#include "cmdp/matrix.hpp"
#include "cmdp/polymatrix.hpp"

namespace cmdp::oracle {

inline FieldPtr prime(std::uint64_t p) { return std::make_shared<const Field>(make_prime_field(Integer(p))); }

/// Leibniz expansion over all permutations.
inline FieldElement leibniz_det(const Field& f, const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    FieldElement total = f.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        FieldElement term = f.one();
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
        total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Laplace expansion along the first row.
inline FieldElement cofactor_det(const Field& f, const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return f.one();
    if (n == 1) return m(0, 0);
    FieldElement total = f.zero();
    for (std::size_t c = 0; c < n; ++c) {
        Matrix minor = Matrix::zeros(f, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t cc = 0, out = 0; cc < n; ++cc) {
                if (cc != c) minor(r - 1, out++) = m(r, cc);
            }
        }
        const FieldElement term = f.mul(m(0, c), cofactor_det(f, minor));
        total = c % 2 ? f.sub(total, term) : f.add(total, term);
    }
    return total;
}

/// Calls fn on every strictly increasing 1-based r-subset of {1..w}.
inline void for_each_subset(std::size_t w, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> s(r);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == r) {
            fn(s);
            return;
        }
        for (std::size_t v = from; v + (r - pos - 1) <= w; ++v) {
            s[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m = Matrix::zeros(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.random(rng);
    }
    return m;
}

inline Matrix ints(const Field& f, std::size_t rows, std::size_t cols, std::vector<long long> v) {
    std::vector<Integer> big(v.begin(), v.end());
    return Matrix::from_integers(f, rows, cols, big);
}

inline PolyParityMatrix code_from(FieldPtr f, std::size_t n, std::size_t k, std::vector<std::vector<long long>> hs) {
    std::vector<Matrix> coeffs;
    for (auto& h : hs) coeffs.push_back(ints(*f, n - k, n, h));
    return PolyParityMatrix(std::move(f), n, k, std::move(coeffs));
}

}  // namespace cmdp::oracle
