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

#include "cmdp/matrix.hpp"

#include "cmdp/detail/elimination.hpp"

namespace cmdp {
namespace {

template <class Ops>
detail::Dense<Ops> lower(const Ops& ops, const Matrix& m) {
    detail::Dense<Ops> out;
    out.reserve(m.data().size());
    for (const auto& e : m.data()) out.push_back(ops.from_element(e));
    return out;
}

}  // namespace

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m = zeros(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_integers(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Integer>& values) {
    if (values.size() != rows * cols) throw Error(Errc::invalid_argument, "matrix value count does not match shape");
    Matrix m = zeros(field, rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = field.from_integer(values[i]);
    return m;
}

Matrix Matrix::columns(std::span<const std::size_t> cols) const {
    Matrix out;
    out.rows_ = rows_;
    out.cols_ = cols.size();
    out.data_.reserve(rows_ * cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (auto c : cols) out.data_.push_back((*this)(r, c));
    }
    return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    Matrix out;
    out.rows_ = rows;
    out.cols_ = cols;
    out.data_.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) out.data_.push_back((*this)(row0 + r, col0 + c));
    }
    return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) (*this)(row0 + r, col0 + c) = m(r, c);
    }
}

Matrix Matrix::transpose() const {
    Matrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
        for (std::size_t r = 0; r < rows_; ++r) out.data_.push_back((*this)(r, c));
    }
    return out;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(Errc::invalid_argument, "matrix shapes do not match");
    return field.visit([&](const auto& ops) {
        const auto la = lower(ops, a);
        const auto lb = lower(ops, b);
        Matrix out = Matrix::zeros(field, a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                auto acc = ops.zero();
                for (std::size_t i = 0; i < a.cols(); ++i) {
                    acc = ops.add(acc, ops.mul(la[r * a.cols() + i], lb[i * b.cols() + c]));
                }
                out(r, c) = ops.to_element(acc);
            }
        }
        return out;
    });
}

std::vector<FieldElement> multiply(const Field& field, const Matrix& a, std::span<const FieldElement> x) {
    if (a.cols() != x.size()) throw Error(Errc::invalid_argument, "matrix/vector shapes do not match");
    return field.visit([&](const auto& ops) {
        const auto la = lower(ops, a);
        std::vector<FieldElement> out;
        out.reserve(a.rows());
        std::vector<typename std::decay_t<decltype(ops)>::value_type> lx;
        for (const auto& e : x) lx.push_back(ops.from_element(e));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            auto acc = ops.zero();
            for (std::size_t i = 0; i < a.cols(); ++i) acc = ops.add(acc, ops.mul(la[r * a.cols() + i], lx[i]));
            out.push_back(ops.to_element(acc));
        }
        return out;
    });
}

bool is_zero(const Field& field, const Matrix& m) {
    for (const auto& e : m.data()) {
        if (!field.is_zero(e)) return false;
    }
    return true;
}

FieldElement determinant(const Field& field, const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
    return field.visit([&](const auto& ops) {
        auto a = lower(ops, m);
        using T = typename std::decay_t<decltype(ops)>::value_type;
        return ops.to_element(detail::determinant_inplace(ops, std::span<T>(a), m.rows()));
    });
}

std::size_t rank(const Field& field, const Matrix& m) {
    return field.visit([&](const auto& ops) {
        auto a = lower(ops, m);
        return detail::rank_inplace(ops, a, m.rows(), m.cols());
    });
}

std::vector<std::vector<FieldElement>> null_space(const Field& field, const Matrix& m) {
    return field.visit([&](const auto& ops) {
        const auto basis = detail::null_space(ops, lower(ops, m), m.rows(), m.cols());
        std::vector<std::vector<FieldElement>> out;
        for (const auto& v : basis) {
            std::vector<FieldElement> row;
            for (const auto& e : v) row.push_back(ops.to_element(e));
            out.push_back(std::move(row));
        }
        return out;
    });
}

std::optional<std::vector<FieldElement>> solve_unique(const Field& field, const Matrix& a,
                                                      std::span<const FieldElement> b, bool& consistent) {
    if (b.size() != a.rows()) throw Error(Errc::invalid_argument, "right-hand side length does not match");
    return field.visit([&](const auto& ops) -> std::optional<std::vector<FieldElement>> {
        detail::Dense<std::decay_t<decltype(ops)>> rhs;
        for (const auto& e : b) rhs.push_back(ops.from_element(e));
        const auto x = detail::solve_unique(ops, lower(ops, a), rhs, a.rows(), a.cols(), consistent);
        if (!x) return std::nullopt;
        std::vector<FieldElement> out;
        for (const auto& e : *x) out.push_back(ops.to_element(e));
        return out;
    });
}

}  // namespace cmdp
