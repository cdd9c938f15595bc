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
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cmdp/detail/poly_kernel.hpp"
#include "cmdp/detail/prime_ops.hpp"
#include "cmdp/error.hpp"
#include "cmdp/integer.hpp"

namespace cmdp {

/// Element of F_{p^N} in the polynomial basis 1, a, ..., a^(N-1).
/// Canonical form: exactly N coefficients, each in [0, p).
struct FieldElement {
    std::vector<Integer> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

template <class F>
struct PrimeField : F {
    using value_type = typename F::value_type;

    explicit PrimeField(F base) : F(std::move(base)) {}

    std::size_t degree() const noexcept { return 1; }
    const F& base() const noexcept { return *this; }
    value_type from_element(const FieldElement& e) const { return this->from_integer(e.coeffs.at(0)); }
    FieldElement to_element(const value_type& v) const { return FieldElement{{this->to_integer(v)}}; }
};

/// F_p[x]/(modulus) on top of a prime-field policy.
template <class F>
struct Extension {
    using value_type = Poly<F>;

    F prime;
    Poly<F> modulus;  // monic, degree N

    std::size_t degree() const noexcept { return modulus.size() - 1; }
    const F& base() const noexcept { return prime; }

    value_type zero() const { return {}; }
    value_type one() const { return {prime.one()}; }
    bool is_zero(const value_type& a) const { return a.empty(); }

    value_type add(const value_type& a, const value_type& b) const { return poly_add(prime, a, b); }
    value_type sub(const value_type& a, const value_type& b) const { return poly_sub(prime, a, b); }
    value_type neg(const value_type& a) const { return poly_sub(prime, value_type{}, a); }
    value_type mul(const value_type& a, const value_type& b) const {
        if (a.empty() || b.empty()) return {};
        return poly_mulmod(prime, a, b, modulus);
    }
    value_type inv(const value_type& a) const {
        value_type out;
        if (a.empty() || !poly_invmod(prime, a, modulus, out)) {
            throw Error(Errc::division_by_zero, "inverse of zero");
        }
        return out;
    }

    value_type from_element(const FieldElement& e) const {
        value_type v;
        v.reserve(e.coeffs.size());
        for (const auto& c : e.coeffs) v.push_back(prime.from_integer(c));
        trim(prime, v);
        return v;
    }
    FieldElement to_element(const value_type& v) const {
        FieldElement e;
        e.coeffs.assign(degree(), Integer(0));
        for (std::size_t i = 0; i < v.size(); ++i) e.coeffs[i] = prime.to_integer(v[i]);
        return e;
    }
};

template <class Ops>
typename Ops::value_type power(const Ops& ops, typename Ops::value_type base, Integer e) {
    auto result = ops.one();
    while (e > 0) {
        if (bit_test(e, 0)) result = ops.mul(result, base);
        e >>= 1;
        if (e > 0) base = ops.mul(base, base);
    }
    return result;
}

}  // namespace detail

/// A finite field F_{p^N}. Immutable once built; share freely across threads.
class Field {
   public:
    using Ops = std::variant<detail::PrimeField<detail::WordPrime>, detail::PrimeField<detail::BigPrime>,
                             detail::Extension<detail::WordPrime>, detail::Extension<detail::BigPrime>>;

    const Integer& characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return degree_; }
    /// Coefficients c_0..c_N of the monic modulus; empty for a prime field.
    const std::vector<Integer>& modulus() const noexcept { return modulus_; }
    /// p^N.
    Integer order() const;
    bool is_prime_field() const noexcept { return degree_ == 1; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Residue class of x for N > 1. For a prime field this is 2 (1 in F_2);
    /// multiplicative primitivity is never certified.
    FieldElement generator() const;
    /// Image of an integer under Z -> F_p -> F.
    FieldElement from_integer(const Integer& v) const;
    /// Element from polynomial-basis coefficients (padded to N, reduced mod p).
    FieldElement element(std::vector<Integer> coeffs) const;
    /// Bijection [0, p^N) -> F through base-p digits (digit i is coefficient i).
    FieldElement element_from_index(Integer index) const;
    Integer index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    /// Square-and-multiply; 0^0 is 1.
    FieldElement pow(const FieldElement& a, const Integer& e) const;
    bool is_zero(const FieldElement& a) const;
    bool contains(const FieldElement& a) const;

    FieldElement random(std::mt19937_64& rng) const;

    /// "7" for prime fields, "[c_0,c_1,...]" with trailing zeros dropped otherwise.
    std::string format(const FieldElement& a) const;
    std::string describe() const;

    template <class Fn>
    decltype(auto) visit(Fn&& fn) const {
        return std::visit(std::forward<Fn>(fn), ops_);
    }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.modulus_ == b.modulus_; }

   private:
    Field(Integer p, std::vector<Integer> modulus);

    friend Field make_prime_field(const Integer& p);
    friend Field make_extension_field(const Integer& p, unsigned degree,
                                      std::optional<std::vector<Integer>> modulus);

    Integer p_;
    unsigned degree_;
    std::vector<Integer> modulus_;
    Ops ops_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Throws Errc::composite_characteristic unless p is a (probable) prime.
Field make_prime_field(const Integer& p);

/// F_{p^N}; without a modulus the lexicographically smallest monic
/// irreducible is used, ordering candidates by the integer sum c_i p^i.
/// Throws Errc::reducible_modulus for a reducible modulus.
Field make_extension_field(const Integer& p, unsigned degree, std::optional<std::vector<Integer>> modulus = {});

/// f given as c_0..c_d over F_p, monic, d >= 1.
bool is_irreducible(const std::vector<Integer>& f, const Integer& p);

std::vector<Integer> smallest_irreducible(const Integer& p, unsigned degree);

}  // namespace cmdp
