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

// Dense univariate polynomials over a prime-field policy. Coefficients are
// little-endian and trimmed (no trailing zeros); the zero polynomial is empty.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "cmdp/detail/prime_ops.hpp"

namespace cmdp::detail {

template <class F>
using Poly = std::vector<typename F::value_type>;

template <class F>
void trim(const F& f, Poly<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(f, r);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::value_type& c) {
    if (f.is_zero(c)) return {};
    Poly<F> r(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    trim(f, r);
    return r;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (f.is_zero(b[j])) continue;
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(f, r);
    return r;
}

/// a := a mod m, optionally collecting the quotient. m must be nonzero.
template <class F>
void poly_divmod_inplace(const F& f, Poly<F>& a, const Poly<F>& m, Poly<F>* quotient = nullptr) {
    const std::size_t dm = m.size() - 1;
    if (quotient) quotient->clear();
    if (a.size() < m.size()) return;
    if (quotient) quotient->assign(a.size() - dm, f.zero());
    const auto lead_inv = f.inv(m.back());
    const bool monic = m.back() == f.one();
    for (std::size_t top = a.size(); top-- > dm;) {
        if (f.is_zero(a[top])) continue;
        const auto c = monic ? a[top] : f.mul(a[top], lead_inv);
        if (quotient) (*quotient)[top - dm] = c;
        const std::size_t shift = top - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            if (f.is_zero(m[i])) continue;
            a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        }
    }
    a.resize(dm);
    trim(f, a);
    if (quotient) trim(f, *quotient);
}

template <class F>
Poly<F> poly_mod(const F& f, Poly<F> a, const Poly<F>& m) {
    poly_divmod_inplace(f, a, m);
    return a;
}

template <class F>
Poly<F> poly_make_monic(const F& f, Poly<F> a) {
    if (a.empty()) return a;
    return poly_scale(f, a, f.inv(a.back()));
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
    while (!b.empty()) {
        poly_divmod_inplace(f, a, b);
        std::swap(a, b);
    }
    return poly_make_monic(f, std::move(a));
}

template <class F>
Poly<F> poly_mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    return poly_mod(f, poly_mul(f, a, b), m);
}

template <class F>
Poly<F> poly_powmod(const F& f, Poly<F> base, Integer e, const Poly<F>& m) {
    Poly<F> result{f.one()};
    result = poly_mod(f, std::move(result), m);
    base = poly_mod(f, std::move(base), m);
    while (e > 0) {
        if (bit_test(e, 0)) result = poly_mulmod(f, result, base, m);
        e >>= 1;
        if (e > 0) base = poly_mulmod(f, base, base, m);
    }
    return result;
}

/// Inverse of a modulo m, or empty optional-like result (size 0) when
/// gcd(a, m) != 1. The caller distinguishes via the returned flag.
template <class F>
bool poly_invmod(const F& f, const Poly<F>& a, const Poly<F>& m, Poly<F>& out) {
    Poly<F> r0 = m, r1 = poly_mod(f, a, m);
    Poly<F> s0{}, s1{f.one()};
    while (!r1.empty()) {
        Poly<F> q;
        Poly<F> r2 = r0;
        poly_divmod_inplace(f, r2, r1, &q);
        Poly<F> s2 = poly_sub(f, s0, poly_mul(f, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) return false;
    out = poly_mod(f, poly_scale(f, s0, f.inv(r0[0])), m);
    return true;
}

template <class F>
typename F::value_type poly_eval(const F& f, const Poly<F>& a, const typename F::value_type& x) {
    auto acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

inline std::vector<unsigned> distinct_prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Rabin's test: monic f of degree N is irreducible iff x^(p^N) = x mod f
/// and gcd(x^(p^(N/q)) - x, f) = 1 for every prime q dividing N.
template <class F>
bool poly_is_irreducible(const F& f, const Poly<F>& poly) {
    const std::size_t degree = poly.size() - 1;
    if (degree == 0) return false;
    if (degree == 1) return true;
    const Poly<F> m = poly_make_monic(f, poly);
    const Integer p = f.characteristic();
    const auto primes = distinct_prime_factors(static_cast<unsigned>(degree));

    const Poly<F> x{f.zero(), f.one()};
    // frob[i] = x^(p^i) mod m, computed by repeated p-th powering.
    Poly<F> h = poly_mod(f, x, m);
    std::vector<std::size_t> wanted;
    for (unsigned q : primes) wanted.push_back(degree / q);
    std::vector<Poly<F>> saved(degree + 1);
    for (std::size_t i = 1; i <= degree; ++i) {
        if (p == 2) {
            h = poly_mulmod(f, h, h, m);
        } else {
            h = poly_powmod(f, h, p, m);
        }
        if (std::find(wanted.begin(), wanted.end(), i) != wanted.end()) saved[i] = h;
    }
    if (h != poly_mod(f, x, m)) return false;
    for (std::size_t i : wanted) {
        const Poly<F> g = poly_gcd(f, poly_sub(f, saved[i], x), m);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace cmdp::detail
