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

#include "cmdp/polymatrix.hpp"

#include <numeric>

#include "cmdp/detail/elimination.hpp"
#include "cmdp/detail/poly_kernel.hpp"

namespace cmdp {

PolyParityMatrix::PolyParityMatrix(FieldPtr field, std::size_t n, std::size_t k, std::vector<Matrix> coeffs)
    : field_(std::move(field)), n_(n), k_(k), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error(Errc::invalid_argument, "parity-check matrix needs a field");
    if (k == 0 || k >= n) throw Error(Errc::invalid_rate, "code dimension must satisfy 0 < k < n");
    if (coeffs_.empty()) throw Error(Errc::invalid_argument, "parity-check matrix needs at least H_0");
    for (const auto& m : coeffs_) {
        if (m.rows() != n - k || m.cols() != n) {
            throw Error(Errc::invalid_argument, "coefficient matrices must be (n-k) x n");
        }
        for (const auto& e : m.data()) {
            if (!field_->contains(e)) throw Error(Errc::invalid_argument, "coefficient is not a canonical field element");
        }
    }
}

Matrix PolyParityMatrix::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return Matrix::zeros(*field_, redundancy(), n_);
}

std::vector<std::optional<std::size_t>> PolyParityMatrix::row_degrees() const {
    std::vector<std::optional<std::size_t>> out(redundancy());
    for (std::size_t r = 0; r < redundancy(); ++r) {
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            bool nonzero = false;
            for (std::size_t c = 0; c < n_ && !nonzero; ++c) nonzero = !field_->is_zero(coeffs_[i](r, c));
            if (nonzero) {
                out[r] = i;
                break;
            }
        }
    }
    return out;
}

std::size_t PolyParityMatrix::degree() const {
    std::size_t d = 0;
    for (const auto& rd : row_degrees()) d += rd.value_or(0);
    return d;
}

std::optional<std::size_t> BlockGeometry::coefficient_at(std::size_t r, std::size_t c) const noexcept {
    if (kind == BlockKind::sliding) {
        if (c > r || r - c > nu) return std::nullopt;
        return r - c;
    }
    if (c < r || c - r > nu) return std::nullopt;
    return nu - (c - r);
}

Matrix assemble_block_matrix(const Field& field, const BlockGeometry& g, std::span<const Matrix> coeffs) {
    Matrix out = Matrix::zeros(field, g.rows(), g.cols());
    for (std::size_t r = 0; r < g.row_blocks(); ++r) {
        for (std::size_t c = 0; c < g.col_blocks(); ++c) {
            const auto idx = g.coefficient_at(r, c);
            if (!idx || *idx >= coeffs.size()) continue;
            out.set_block(r * g.redundancy, c * g.n, coeffs[*idx]);
        }
    }
    return out;
}

namespace {

BlockToeplitzMatrix build(const PolyParityMatrix& h, BlockKind kind, std::size_t L) {
    BlockGeometry g{kind, h.n(), h.redundancy(), h.nu(), L};
    return BlockToeplitzMatrix{g, assemble_block_matrix(h.field(), g, h.coeffs())};
}

}  // namespace

BlockToeplitzMatrix sliding_matrix(const PolyParityMatrix& h, std::size_t j) {
    return build(h, BlockKind::sliding, j);
}

BlockToeplitzMatrix reversed_sliding_matrix(const PolyParityMatrix& h, std::size_t L) {
    return build(h, BlockKind::reversed_sliding, L);
}

BlockToeplitzMatrix partial_parity_matrix(const PolyParityMatrix& h, std::size_t L) {
    return build(h, BlockKind::partial, L);
}

PolyParityMatrix reverse_coefficients(const PolyParityMatrix& h) {
    std::vector<Matrix> rev(h.coeffs().rbegin(), h.coeffs().rend());
    return PolyParityMatrix(h.field_ptr(), h.n(), h.k(), std::move(rev));
}

bool is_row_proper(const PolyParityMatrix& h) {
    const auto degrees = h.row_degrees();
    Matrix leading = Matrix::zeros(h.field(), h.redundancy(), h.n());
    for (std::size_t r = 0; r < h.redundancy(); ++r) {
        if (!degrees[r]) return false;
        for (std::size_t c = 0; c < h.n(); ++c) leading(r, c) = h.coeffs()[*degrees[r]](r, c);
    }
    return rank(h.field(), leading) == h.redundancy();
}

namespace {

template <class Ops>
using PolyEntry = detail::Poly<Ops>;

// Laplace expansion along the first row; sizes here are n-k, which is small.
template <class Ops>
PolyEntry<Ops> poly_determinant(const Ops& ops, const std::vector<PolyEntry<Ops>>& m, std::size_t size) {
    if (size == 1) return m[0];
    PolyEntry<Ops> acc;
    std::vector<PolyEntry<Ops>> minor((size - 1) * (size - 1));
    for (std::size_t col = 0; col < size; ++col) {
        if (m[col].empty()) continue;
        for (std::size_t r = 1; r < size; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < size; ++c) {
                if (c == col) continue;
                minor[(r - 1) * (size - 1) + cc++] = m[r * size + c];
            }
        }
        auto term = detail::poly_mul(ops, m[col], poly_determinant(ops, minor, size - 1));
        acc = (col % 2 == 0) ? detail::poly_add(ops, acc, term) : detail::poly_sub(ops, acc, term);
    }
    return acc;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    for (std::size_t i = r; i-- > 0;) {
        if (idx[i] < n - r + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_left_prime(const PolyParityMatrix& h) {
    const std::size_t r = h.redundancy();
    return h.field().visit([&](const auto& ops) {
        using Ops = std::decay_t<decltype(ops)>;
        // Entry (row, col) of H(z) as a polynomial in z.
        std::vector<PolyEntry<Ops>> entries(r * h.n());
        for (std::size_t row = 0; row < r; ++row) {
            for (std::size_t col = 0; col < h.n(); ++col) {
                PolyEntry<Ops> p;
                for (const auto& hi : h.coeffs()) p.push_back(ops.from_element(hi(row, col)));
                detail::trim(ops, p);
                entries[row * h.n() + col] = std::move(p);
            }
        }
        std::vector<std::size_t> cols(r);
        std::iota(cols.begin(), cols.end(), 0);
        PolyEntry<Ops> g;
        std::vector<PolyEntry<Ops>> sub(r * r);
        do {
            for (std::size_t row = 0; row < r; ++row) {
                for (std::size_t c = 0; c < r; ++c) sub[row * r + c] = entries[row * h.n() + cols[c]];
            }
            g = detail::poly_gcd(ops, g, poly_determinant(ops, sub, r));
            if (g.size() == 1) return true;
        } while (next_combination(cols, h.n()));
        return false;
    });
}

std::size_t stacked_rank(const PolyParityMatrix& h) {
    Matrix row = Matrix::zeros(h.field(), h.redundancy(), h.n() * h.coeffs().size());
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) row.set_block(0, i * h.n(), h.coeffs()[i]);
    return rank(h.field(), row);
}

}  // namespace cmdp
