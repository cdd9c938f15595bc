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

// Gaussian elimination over any field policy (prime word, prime big, or
// extension). Matrices are dense, row-major, and modified in place.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cmdp::detail {

template <class Ops>
using Dense = std::vector<typename Ops::value_type>;

template <class Ops>
void swap_rows(Dense<Ops>& a, std::size_t cols, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a[r1 * cols + c], a[r2 * cols + c]);
}

/// Determinant of the n x n matrix in `a`, destroying it.
template <class Ops, class T>
T determinant_inplace(const Ops& ops, std::span<T> a, std::size_t n) {
    T det = ops.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && ops.is_zero(a[pivot * n + col])) ++pivot;
        if (pivot == n) return ops.zero();
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            det = ops.neg(det);
        }
        det = ops.mul(det, a[col * n + col]);
        const T inv = ops.inv(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (ops.is_zero(a[r * n + col])) continue;
            const T factor = ops.mul(a[r * n + col], inv);
            for (std::size_t c = col + 1; c < n; ++c) {
                if (ops.is_zero(a[col * n + c])) continue;
                a[r * n + c] = ops.sub(a[r * n + c], ops.mul(factor, a[col * n + c]));
            }
        }
    }
    return det;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref_inplace(const Ops& ops, Dense<Ops>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && ops.is_zero(a[pivot * cols + col])) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) swap_rows<Ops>(a, cols, pivot, row);
        const auto inv = ops.inv(a[row * cols + col]);
        for (std::size_t c = col; c < cols; ++c) a[row * cols + c] = ops.mul(a[row * cols + c], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || ops.is_zero(a[r * cols + col])) continue;
            const auto factor = a[r * cols + col];
            for (std::size_t c = col; c < cols; ++c) {
                if (ops.is_zero(a[row * cols + c])) continue;
                a[r * cols + c] = ops.sub(a[r * cols + c], ops.mul(factor, a[row * cols + c]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Ops>
std::size_t rank_inplace(const Ops& ops, Dense<Ops>& a, std::size_t rows, std::size_t cols) {
    // Forward elimination only.
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && ops.is_zero(a[pivot * cols + col])) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) swap_rows<Ops>(a, cols, pivot, row);
        const auto inv = ops.inv(a[row * cols + col]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (ops.is_zero(a[r * cols + col])) continue;
            const auto factor = ops.mul(a[r * cols + col], inv);
            for (std::size_t c = col; c < cols; ++c) {
                if (ops.is_zero(a[row * cols + c])) continue;
                a[r * cols + c] = ops.sub(a[r * cols + c], ops.mul(factor, a[row * cols + c]));
            }
        }
        ++row;
    }
    return row;
}

/// Basis of {x : A x = 0}, one vector of length `cols` per free column.
template <class Ops>
std::vector<Dense<Ops>> null_space(const Ops& ops, Dense<Ops> a, std::size_t rows, std::size_t cols) {
    const auto pivots = rref_inplace(ops, a, rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Dense<Ops>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Dense<Ops> v(cols, ops.zero());
        v[free] = ops.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = ops.neg(a[i * cols + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A x = b when A (rows x cols) has full column rank. Returns nullopt
/// when the solution is not unique; sets `consistent` to false when the
/// system has no solution at all.
template <class Ops>
std::optional<Dense<Ops>> solve_unique(const Ops& ops, const Dense<Ops>& a, const Dense<Ops>& b, std::size_t rows,
                                       std::size_t cols, bool& consistent) {
    const std::size_t width = cols + 1;
    Dense<Ops> aug(rows * width, ops.zero());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug[r * width + c] = a[r * cols + c];
        aug[r * width + cols] = b[r];
    }
    const auto pivots = rref_inplace(ops, aug, rows, width);
    consistent = pivots.empty() || pivots.back() != cols;
    if (!consistent || pivots.size() != cols) return std::nullopt;
    Dense<Ops> x(cols, ops.zero());
    for (std::size_t i = 0; i < cols; ++i) x[i] = aug[i * width + cols];
    return x;
}

}  // namespace cmdp::detail
