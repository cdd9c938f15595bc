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
#include "cmdp/matrix.hpp"

namespace cmdp {

/// H(z) = H_0 + H_1 z + ... + H_nu z^nu with (n-k) x n coefficients.
class PolyParityMatrix {
   public:
    PolyParityMatrix(FieldPtr field, std::size_t n, std::size_t k, std::vector<Matrix> coeffs);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t redundancy() const noexcept { return n_ - k_; }
    std::size_t nu() const noexcept { return coeffs_.size() - 1; }

    /// H_i, or the zero matrix for i > nu.
    Matrix coeff(std::size_t i) const;
    const std::vector<Matrix>& coeffs() const noexcept { return coeffs_; }

    /// Degree of each row of H(z); nullopt for an identically zero row.
    std::vector<std::optional<std::size_t>> row_degrees() const;
    /// Sum of the row degrees (zero rows contribute 0).
    std::size_t degree() const;

    friend bool operator==(const PolyParityMatrix& a, const PolyParityMatrix& b) {
        return *a.field_ == *b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
    }

   private:
    FieldPtr field_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Matrix> coeffs_;
};

enum class BlockKind {
    sliding,           // block (r, c) = H_{r-c}
    reversed_sliding,  // block (r, c) = H_{nu-(c-r)}, square in blocks
    partial,           // block (r, c) = H_{nu-(c-r)}, (L+1) x (nu+L+1) blocks
};

struct BlockGeometry {
    BlockKind kind;
    std::size_t n;
    std::size_t redundancy;  // n - k, rows per block
    std::size_t nu;
    std::size_t L;  // number of row blocks minus one

    std::size_t row_blocks() const noexcept { return L + 1; }
    std::size_t col_blocks() const noexcept { return kind == BlockKind::partial ? nu + L + 1 : L + 1; }
    std::size_t rows() const noexcept { return row_blocks() * redundancy; }
    std::size_t cols() const noexcept { return col_blocks() * n; }

    /// Coefficient index placed at block (r, c), or nullopt for a zero block.
    std::optional<std::size_t> coefficient_at(std::size_t r, std::size_t c) const noexcept;
};

struct BlockToeplitzMatrix {
    BlockGeometry geometry;
    Matrix entries;
};

/// Lays out the given coefficients (H_i beyond the span are zero).
Matrix assemble_block_matrix(const Field& field, const BlockGeometry& geometry, std::span<const Matrix> coeffs);

BlockToeplitzMatrix sliding_matrix(const PolyParityMatrix& h, std::size_t j);
BlockToeplitzMatrix reversed_sliding_matrix(const PolyParityMatrix& h, std::size_t L);
BlockToeplitzMatrix partial_parity_matrix(const PolyParityMatrix& h, std::size_t L);

PolyParityMatrix reverse_coefficients(const PolyParityMatrix& h);

bool is_row_proper(const PolyParityMatrix& h);
/// True iff the (n-k) x (n-k) minors of H(z) have a nonzero constant gcd.
bool is_left_prime(const PolyParityMatrix& h);

/// Rank of the block row [H_0 H_1 ... H_nu]; equals n-k whenever H(z) has
/// full row rank.
std::size_t stacked_rank(const PolyParityMatrix& h);

}  // namespace cmdp
