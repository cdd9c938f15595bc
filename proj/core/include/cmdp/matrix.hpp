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
#include <span>
#include <vector>

#include "cmdp/finite_field.hpp"

namespace cmdp {

/// Dense row-major matrix of field elements.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldElement& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    static Matrix zeros(const Field& field, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, field.zero()); }
    static Matrix identity(const Field& field, std::size_t n);
    /// Row-major integers mapped into the field.
    static Matrix from_integers(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Integer>& values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<FieldElement>& data() const noexcept { return data_; }

    /// Columns chosen by 0-based index, in the given order.
    Matrix columns(std::span<const std::size_t> cols) const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& m);
    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
std::vector<FieldElement> multiply(const Field& field, const Matrix& a, std::span<const FieldElement> x);
bool is_zero(const Field& field, const Matrix& m);

/// Exact determinant by elimination with pivot-swap sign tracking.
FieldElement determinant(const Field& field, const Matrix& m);
std::size_t rank(const Field& field, const Matrix& m);
/// Basis of the right kernel, one vector per free column of the echelon form.
std::vector<std::vector<FieldElement>> null_space(const Field& field, const Matrix& m);

/// Unique solution of A x = b, or nullopt when A lacks full column rank.
/// `consistent` is cleared when the system has no solution at all.
std::optional<std::vector<FieldElement>> solve_unique(const Field& field, const Matrix& a,
                                                      std::span<const FieldElement> b, bool& consistent);

}  // namespace cmdp
