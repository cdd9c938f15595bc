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

#include "cmdp/constructions.hpp"

#include <boost/multiprecision/integer.hpp>

#include "cmdp/error.hpp"

namespace cmdp {

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error(Errc::invalid_argument, "inner dimensions differ");
    IntMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t t = 0; t < a.cols; ++t) {
            if (a(i, t).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, t) * b(t, j);
        }
    }
    return out;
}

Integer int_determinant(IntMatrix m) {
    if (m.rows != m.cols) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        if (m(c, c).is_zero()) {
            std::size_t r = c + 1;
            while (r < n && m(r, c).is_zero()) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(r, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(c, c) - m(i, c) * m(c, j)) / prev;  // exact
            }
            m(i, c) = 0;
        }
        prev = m(c, c);
    }
    return sign * m(n - 1, n - 1);
}

// ---- Pascal ----

namespace {

CodeParams divisible_params(std::size_t n, std::size_t k, std::size_t delta) {
    CodeParams p = derive_params(n, k, delta);
    require_uniform_rows(p);
    return p;
}

}  // namespace

PascalPlan pascal_plan(std::size_t n, std::size_t k, std::size_t delta) {
    PascalPlan plan;
    plan.params = divisible_params(n, k, delta);
    const auto& p = plan.params;
    plan.a = (p.nu + p.L + 1) * n;
    plan.b = p.nu * n + k;
    for (std::size_t j = 0; j <= p.L; ++j) {
        for (std::size_t i = (p.nu + j) * n + k + 1; i <= (p.nu + j + 1) * n; ++i) plan.rows.push_back(i);
    }
    plan.char_bound = pascal_char_bound(n, k, delta);
    return plan;
}

IntMatrix pascal_power(std::size_t a, std::size_t b) {
    IntMatrix x(a, a);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = i > b ? i - b : 0; j <= i; ++j) {
            x(i, j) = binomial(static_cast<unsigned>(b), static_cast<unsigned>(i - j));
        }
    }
    return x;
}

std::vector<IntMatrix> pascal_integer_coefficients(std::size_t n, std::size_t k, std::size_t delta) {
    const CodeParams p = divisible_params(n, k, delta);
    const std::size_t r = n - k;
    const unsigned b = static_cast<unsigned>(p.nu * n + k);
    // Row nu n + k + s of X^b (s = 1..n-k) carries H_i in column block nu - i,
    // so H_i(s, c) = C(b, i n + k + s - c).
    std::vector<IntMatrix> out;
    for (std::size_t i = 0; i <= p.nu; ++i) {
        IntMatrix h(r, n);
        for (std::size_t s = 1; s <= r; ++s) {
            for (std::size_t c = 1; c <= n; ++c) {
                const std::size_t top = i * n + k + s;
                if (top >= c && top - c <= b) h(s - 1, c - 1) = binomial(b, static_cast<unsigned>(top - c));
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

PolyParityMatrix pascal_construction(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field) {
    if (!field->is_prime_field()) {
        throw Error(Errc::invalid_argument, "the binomial construction needs a prime field");
    }
    std::vector<Matrix> coeffs;
    for (const auto& h : pascal_integer_coefficients(n, k, delta)) {
        coeffs.push_back(Matrix::from_integers(*field, h.rows, h.cols, h.data));
    }
    return PolyParityMatrix(std::move(field), n, k, std::move(coeffs));
}

Integer pascal_char_bound(std::size_t n, std::size_t k, std::size_t delta) {
    const CodeParams p = divisible_params(n, k, delta);
    const unsigned top = static_cast<unsigned>(p.nu * n + k);
    const Integer B = binomial(top, top / 2);
    const unsigned A = static_cast<unsigned>((n - k) * (p.L + 1));
    // B^A * A^(A/2) = sqrt(B^(2A) * A^A), rounded up.
    const Integer square = ipow(B, 2 * A) * ipow(Integer(A), A);
    Integer root = boost::multiprecision::sqrt(square);
    if (root * root != square) ++root;
    return root;
}

bool pascal_minor_criterion(std::size_t b, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw Error(Errc::invalid_argument, "row and column selections differ in size");
    for (std::size_t l = 0; l < rows.size(); ++l) {
        if (cols[l] > rows[l] || rows[l] - cols[l] > b) return false;
    }
    return true;
}

Integer pascal_minor(std::size_t a, std::size_t b, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw Error(Errc::invalid_argument, "row and column selections differ in size");
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::size_t i = rows[r], j = cols[c];
            if (i < 1 || i > a || j < 1 || j > a) throw Error(Errc::invalid_argument, "index outside X");
            if (j <= i && i - j <= b) sub(r, c) = binomial(static_cast<unsigned>(b), static_cast<unsigned>(i - j));
        }
    }
    return int_determinant(std::move(sub));
}

bool verify_pascal_minor_lemma(std::size_t a, std::size_t b, const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) {
    const Integer det = pascal_minor(a, b, rows, cols);
    return det >= 0 && (det > 0) == pascal_minor_criterion(b, rows, cols);
}

// ---- alpha ----

AlphaPlan alpha_plan(std::size_t n, std::size_t k, std::size_t delta) {
    AlphaPlan plan;
    plan.params = divisible_params(n, k, delta);
    const std::size_t r = n - k;
    // First row of H_i: 2^(in) .. 2^((i+1)n-1); each further row shifts by one.
    for (std::size_t i = 0; i <= plan.params.nu; ++i) {
        std::vector<std::vector<std::size_t>> grid(r, std::vector<std::size_t>(n));
        for (std::size_t row = 0; row < r; ++row) {
            for (std::size_t c = 0; c < n; ++c) grid[row][c] = i * n + row + c;
        }
        plan.power_index.push_back(std::move(grid));
    }
    plan.N_bound = alpha_N_bound(n, k, delta);
    return plan;
}

Integer alpha_N_bound(std::size_t n, std::size_t k, std::size_t delta) {
    const CodeParams p = divisible_params(n, k, delta);
    return Integer(p.L + 1) << ((p.nu + 2) * n - k - 1);
}

Integer alpha_exponent_bound(std::size_t n, std::size_t k, std::size_t delta) {
    const CodeParams p = divisible_params(n, k, delta);
    Integer sum = 0;
    for (std::size_t i = 0; i < n - k; ++i) sum += Integer(1) << (2 * i);
    return (Integer(p.L + 1) << (p.nu * n + k)) * sum;
}

PolyParityMatrix alpha_construction(std::size_t n, std::size_t k, std::size_t delta, FieldPtr field, bool force,
                                    std::vector<std::string>* warnings) {
    const AlphaPlan plan = alpha_plan(n, k, delta);
    if (Integer(field->degree()) <= plan.N_bound) {
        const std::string msg = "extension degree " + std::to_string(field->degree()) + " does not exceed " +
                                to_string(plan.N_bound);
        if (!force) throw Error(Errc::field_too_small, msg);
        if (warnings) warnings->push_back(msg + "; constructed anyway");
    }
    const Field& f = *field;
    std::size_t top = 0;
    for (const auto& grid : plan.power_index) {
        for (const auto& row : grid) {
            for (auto e : row) top = std::max(top, e);
        }
    }
    // alpha^(2^e) by repeated squaring.
    std::vector<FieldElement> powers{f.generator()};
    for (std::size_t e = 1; e <= top; ++e) powers.push_back(f.mul(powers.back(), powers.back()));

    std::vector<Matrix> coeffs;
    for (const auto& grid : plan.power_index) {
        Matrix h = Matrix::zeros(f, n - k, n);
        for (std::size_t r = 0; r < n - k; ++r) {
            for (std::size_t c = 0; c < n; ++c) h(r, c) = powers[grid[r][c]];
        }
        coeffs.push_back(std::move(h));
    }
    return PolyParityMatrix(std::move(field), n, k, std::move(coeffs));
}

bool check_proposition_conditions(const ExponentMatrix& b) {
    for (std::size_t i = 0; i < b.rows; ++i) {
        for (std::size_t l = 0; l < b.cols; ++l) {
            const auto& e = b(i, l);
            if (e) {
                if (*e <= 0) return false;
                for (std::size_t l2 = l + 1; l2 < b.cols; ++l2) {
                    if (b(i, l2) && 2 * *e > *b(i, l2)) return false;
                }
                for (std::size_t i2 = i + 1; i2 < b.rows; ++i2) {
                    if (b(i2, l) && 2 * *e > *b(i2, l)) return false;
                }
                continue;
            }
            bool below_zero = true;
            for (std::size_t i2 = i + 1; i2 < b.rows && below_zero; ++i2) below_zero = !b(i2, l);
            bool left_zero = true;
            for (std::size_t l2 = 0; l2 < l && left_zero; ++l2) left_zero = !b(i, l2);
            if (!below_zero && !left_zero) return false;
        }
    }
    return true;
}

ExponentMatrix alpha_reversed_partial_exponents(std::size_t n, std::size_t k, std::size_t delta) {
    const AlphaPlan plan = alpha_plan(n, k, delta);
    const std::size_t r = n - k, nu = plan.params.nu, L = plan.params.L;
    ExponentMatrix out((L + 1) * r, (nu + L + 1) * n);
    // Partial block (x, c) = H_{nu-(c-x)}; after reversing column blocks the
    // block in position c' = nu + L - c holds H_{c'+x-L}.
    for (std::size_t x = 0; x <= L; ++x) {
        for (std::size_t cb = 0; cb <= nu + L; ++cb) {
            if (cb + x < L || cb + x - L > nu) continue;
            const auto& grid = plan.power_index[cb + x - L];
            for (std::size_t row = 0; row < r; ++row) {
                for (std::size_t c = 0; c < n; ++c) out(x * r + row, cb * n + c) = Integer(1) << grid[row][c];
            }
        }
    }
    return out;
}

}  // namespace cmdp
