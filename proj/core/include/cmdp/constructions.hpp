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
#include <optional>
#include <string>
#include <vector>

#include "cmdp/code.hpp"
#include "cmdp/integer.hpp"
#include "cmdp/polymatrix.hpp"

namespace cmdp {

/// Dense integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Integer(0)) {}

    Integer& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer int_determinant(IntMatrix m);

// ---- Binomial (Pascal) construction -------------------------------------

struct PascalPlan {
    CodeParams params;
    std::size_t a = 0;  // X is a x a, a = (nu+L+1) n
    std::size_t b = 0;  // power, b = nu n + k
    std::vector<std::size_t> rows;  // I = I_0 u ... u I_L, 1-based
    Integer char_bound;
};

/// Throws Errc::rate_constraint unless (n-k) | delta.
PascalPlan pascal_plan(std::size_t n, std::size_t k, std::size_t delta);

/// X^b for the a x a lower shift-plus-identity X: entry (i, j) = C(b, i-j).
IntMatrix pascal_power(std::size_t a, std::size_t b);

/// H_0..H_nu over the integers, read off rows I of X^b.
std::vector<IntMatrix> pascal_integer_coefficients(std::size_t n, std::size_t k, std::size_t delta);

/// Reduces the integer coefficients into `field`, which must be a prime field.
PolyParityMatrix pascal_construction(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field);

/// ceil(B^A * A^(A/2)) with B = C(nu n + k, floor((nu n + k)/2)), A = (n-k)(L+1).
Integer pascal_char_bound(std::size_t n, std::size_t k, std::size_t delta);

/// j_l in {i_l - b, ..., i_l} for every l (1-based, equal lengths).
bool pascal_minor_criterion(std::size_t b, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

/// Exact integer determinant of the rows x cols submatrix of X^b (a x a).
Integer pascal_minor(std::size_t a, std::size_t b, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

/// det >= 0 and (det > 0 iff the interval criterion holds).
bool verify_pascal_minor_lemma(std::size_t a, std::size_t b, const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols);

// ---- Power-of-alpha construction ----------------------------------------

struct AlphaPlan {
    CodeParams params;
    /// power_index[i](r, c): entry (r, c) of H_i is alpha^(2^power_index).
    std::vector<std::vector<std::vector<std::size_t>>> power_index;
    Integer N_bound;  // need degree N > N_bound
};

/// Throws Errc::rate_constraint unless (n-k) | delta.
AlphaPlan alpha_plan(std::size_t n, std::size_t k, std::size_t delta);

/// (L+1) * 2^((nu+2)n-k-1).
Integer alpha_N_bound(std::size_t n, std::size_t k, std::size_t delta);

/// (L+1) * 2^(nu n + k) * sum_{i<n-k} 4^i: the largest alpha exponent a
/// nontrivial term of a minor of the partial matrix can reach.
Integer alpha_exponent_bound(std::size_t n, std::size_t k, std::size_t delta);

/// Throws Errc::field_too_small when the field degree does not exceed the
/// bound, unless `force`, in which case a note is appended to `warnings`.
PolyParityMatrix alpha_construction(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field,
                                    bool force = false, std::vector<std::string>* warnings = nullptr);

/// Matrix of alpha exponents; nullopt marks a zero entry.
struct ExponentMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::optional<Integer>> entries;

    ExponentMatrix() = default;
    ExponentMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    std::optional<Integer>& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const std::optional<Integer>& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Positive exponents; every zero has only zeros below it or only zeros to
/// its left; exponents at least double left-to-right along rows and
/// top-to-bottom along columns.
bool check_proposition_conditions(const ExponentMatrix& b);

/// Exponents of the partial matrix of the alpha construction with its
/// column blocks in reverse order.
ExponentMatrix alpha_reversed_partial_exponents(std::size_t n, std::size_t k, std::size_t delta);

}  // namespace cmdp
