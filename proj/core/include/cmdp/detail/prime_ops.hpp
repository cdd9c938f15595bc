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

// Arithmetic policies for F_p. Algorithms that run in hot loops (elimination,
// polynomial reduction, irreducibility testing) are templates over one of
// these, so a characteristic that fits in a machine word never touches the
// big-integer path.

#include <cstdint>
#include <limits>

#include "cmdp/error.hpp"
#include "cmdp/integer.hpp"

namespace cmdp::detail {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// F_p with p < 2^63.
struct WordPrime {
    using value_type = std::uint64_t;

    std::uint64_t p;

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    bool is_zero(value_type a) const noexcept { return a == 0; }

    value_type add(value_type a, value_type b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + (p - b); }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        if (p <= 0xFFFFFFFFull) return a * b % p;
        return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
        i128 r0 = p, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            const i128 q = r0 / r1;
            const i128 r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            const i128 s2 = s0 - q * s1;
            s0 = s1;
            s1 = s2;
        }
        if (s0 < 0) s0 += p;
        return static_cast<std::uint64_t>(s0);
    }

    value_type from_integer(const Integer& v) const {
        Integer r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    }
    value_type from_u64(std::uint64_t v) const noexcept { return v % p; }
    Integer to_integer(value_type a) const { return Integer(a); }
    Integer characteristic() const { return Integer(p); }
};

/// F_p with arbitrary-precision p.
struct BigPrime {
    using value_type = Integer;

    Integer p;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return a.is_zero(); }

    value_type add(const value_type& a, const value_type& b) const {
        Integer s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        Integer s = a - b;
        if (s < 0) s += p;
        return s;
    }
    value_type neg(const value_type& a) const { return a.is_zero() ? Integer(0) : Integer(p - a); }
    value_type mul(const value_type& a, const value_type& b) const { return Integer(a * b % p); }
    value_type inv(const value_type& a) const {
        if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
        Integer r0 = p, r1 = a, s0 = 0, s1 = 1;
        while (!r1.is_zero()) {
            Integer q = r0 / r1;
            Integer r2 = r0 - q * r1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            Integer s2 = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (s0 < 0) s0 += p;
        return s0;
    }

    value_type from_integer(const Integer& v) const {
        Integer r = v % p;
        if (r < 0) r += p;
        return r;
    }
    value_type from_u64(std::uint64_t v) const { return Integer(Integer(v) % p); }
    Integer to_integer(const value_type& a) const { return a; }
    Integer characteristic() const { return p; }
};

inline bool fits_word_prime(const Integer& p) {
    return p < (Integer(1) << 63);
}

}  // namespace cmdp::detail
