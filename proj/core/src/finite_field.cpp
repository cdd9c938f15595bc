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

#include "cmdp/finite_field.hpp"

#include <sstream>

namespace cmdp {
namespace {

template <class F>
detail::Poly<F> to_poly(const F& f, const std::vector<Integer>& coeffs) {
    detail::Poly<F> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(f.from_integer(c));
    detail::trim(f, out);
    return out;
}

Field::Ops make_ops(const Integer& p, const std::vector<Integer>& modulus) {
    const bool word = detail::fits_word_prime(p);
    if (modulus.empty()) {
        if (word) return detail::PrimeField<detail::WordPrime>(detail::WordPrime{static_cast<std::uint64_t>(p)});
        return detail::PrimeField<detail::BigPrime>(detail::BigPrime{p});
    }
    if (word) {
        detail::WordPrime f{static_cast<std::uint64_t>(p)};
        return detail::Extension<detail::WordPrime>{f, to_poly(f, modulus)};
    }
    detail::BigPrime f{p};
    return detail::Extension<detail::BigPrime>{f, to_poly(f, modulus)};
}

template <class Fn>
decltype(auto) with_prime(const Integer& p, Fn&& fn) {
    if (detail::fits_word_prime(p)) return fn(detail::WordPrime{static_cast<std::uint64_t>(p)});
    return fn(detail::BigPrime{p});
}

}  // namespace

Field::Field(Integer p, std::vector<Integer> modulus)
    : p_(std::move(p)),
      degree_(modulus.empty() ? 1u : static_cast<unsigned>(modulus.size() - 1)),
      modulus_(std::move(modulus)),
      ops_(make_ops(p_, modulus_)) {}

Integer Field::order() const {
    return ipow(p_, degree_);
}

FieldElement Field::zero() const {
    return FieldElement{std::vector<Integer>(degree_, Integer(0))};
}

FieldElement Field::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement Field::generator() const {
    auto e = zero();
    if (degree_ > 1) {
        e.coeffs[1] = 1;
    } else {
        e.coeffs[0] = p_ == 2 ? 1 : 2;
    }
    return e;
}

FieldElement Field::from_integer(const Integer& v) const {
    auto e = zero();
    Integer r = v % p_;
    if (r < 0) r += p_;
    e.coeffs[0] = r;
    return e;
}

FieldElement Field::element(std::vector<Integer> coeffs) const {
    if (coeffs.size() > degree_) {
        for (std::size_t i = degree_; i < coeffs.size(); ++i) {
            if (!coeffs[i].is_zero()) {
                throw Error(Errc::invalid_argument, "element has more than N coefficients");
            }
        }
    }
    coeffs.resize(degree_, Integer(0));
    for (auto& c : coeffs) {
        c %= p_;
        if (c < 0) c += p_;
    }
    return FieldElement{std::move(coeffs)};
}

FieldElement Field::element_from_index(Integer index) const {
    if (index < 0 || index >= order()) throw Error(Errc::invalid_argument, "element index out of range");
    auto e = zero();
    for (unsigned i = 0; i < degree_; ++i) {
        e.coeffs[i] = index % p_;
        index /= p_;
    }
    return e;
}

Integer Field::index_of(const FieldElement& a) const {
    Integer v = 0;
    for (unsigned i = degree_; i-- > 0;) v = v * p_ + a.coeffs[i];
    return v;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    return visit([&](const auto& ops) { return ops.to_element(ops.add(ops.from_element(a), ops.from_element(b))); });
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    return visit([&](const auto& ops) { return ops.to_element(ops.sub(ops.from_element(a), ops.from_element(b))); });
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    return visit([&](const auto& ops) { return ops.to_element(ops.mul(ops.from_element(a), ops.from_element(b))); });
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
    return visit([&](const auto& ops) {
        return ops.to_element(ops.mul(ops.from_element(a), ops.inv(ops.from_element(b))));
    });
}

FieldElement Field::neg(const FieldElement& a) const {
    return visit([&](const auto& ops) { return ops.to_element(ops.neg(ops.from_element(a))); });
}

FieldElement Field::inv(const FieldElement& a) const {
    return visit([&](const auto& ops) { return ops.to_element(ops.inv(ops.from_element(a))); });
}

FieldElement Field::pow(const FieldElement& a, const Integer& e) const {
    if (e < 0) throw Error(Errc::invalid_argument, "negative exponent");
    return visit([&](const auto& ops) { return ops.to_element(detail::power(ops, ops.from_element(a), e)); });
}

bool Field::is_zero(const FieldElement& a) const {
    for (const auto& c : a.coeffs) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool Field::contains(const FieldElement& a) const {
    if (a.coeffs.size() != degree_) return false;
    for (const auto& c : a.coeffs) {
        if (c < 0 || c >= p_) return false;
    }
    return true;
}

FieldElement Field::random(std::mt19937_64& rng) const {
    auto e = zero();
    for (auto& c : e.coeffs) c = uniform_below(p_, rng);
    return e;
}

std::string Field::format(const FieldElement& a) const {
    if (degree_ == 1) return to_string(a.coeffs.at(0));
    std::size_t len = a.coeffs.size();
    while (len > 1 && a.coeffs[len - 1].is_zero()) --len;
    std::string out = "[";
    for (std::size_t i = 0; i < len; ++i) {
        if (i) out += ',';
        out += to_string(a.coeffs[i]);
    }
    out += ']';
    return out;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (degree_ > 1) {
        os << "^" << degree_ << " modulo ";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

Field make_prime_field(const Integer& p) {
    if (p < 2) throw Error(Errc::invalid_argument, "characteristic must be at least 2");
    if (!is_probable_prime(p)) throw Error(Errc::composite_characteristic, to_string(p) + " is not prime");
    return Field(p, {});
}

bool is_irreducible(const std::vector<Integer>& f, const Integer& p) {
    if (f.size() < 2 || f.back() != 1) throw Error(Errc::invalid_argument, "is_irreducible expects a monic polynomial of degree >= 1");
    return with_prime(p, [&](const auto& ops) { return detail::poly_is_irreducible(ops, to_poly(ops, f)); });
}

std::vector<Integer> smallest_irreducible(const Integer& p, unsigned degree) {
    if (degree == 0) throw Error(Errc::invalid_argument, "degree must be positive");
    return with_prime(p, [&](const auto& ops) {
        using Ops = std::decay_t<decltype(ops)>;
        detail::Poly<Ops> f(degree + 1, ops.zero());
        f[degree] = ops.one();
        // Only small characteristics get the cheap root sieve.
        const bool sieve_roots = p <= 64;
        const std::uint64_t small_p = sieve_roots ? static_cast<std::uint64_t>(p) : 0;
        for (;;) {
            bool candidate = true;
            if (degree > 1 && ops.is_zero(f[0])) candidate = false;
            if (candidate && degree > 1 && sieve_roots) {
                for (std::uint64_t r = 0; r < small_p && candidate; ++r) {
                    if (ops.is_zero(detail::poly_eval(ops, f, ops.from_u64(r)))) candidate = false;
                }
            }
            if (candidate && detail::poly_is_irreducible(ops, f)) {
                std::vector<Integer> out;
                for (const auto& c : f) out.push_back(ops.to_integer(c));
                return out;
            }
            // Increment c_0..c_{N-1} as base-p digits.
            std::size_t i = 0;
            for (; i < degree; ++i) {
                f[i] = ops.add(f[i], ops.one());
                if (!ops.is_zero(f[i])) break;
            }
            if (i == degree) throw Error(Errc::invalid_argument, "no irreducible polynomial found");
        }
    });
}

Field make_extension_field(const Integer& p, unsigned degree, std::optional<std::vector<Integer>> modulus) {
    if (degree == 0) throw Error(Errc::invalid_argument, "extension degree must be at least 1");
    Field base = make_prime_field(p);
    if (modulus) {
        auto& m = *modulus;
        if (m.size() != degree + 1 || m.back() != 1) {
            throw Error(Errc::invalid_argument, "modulus must be monic of degree N");
        }
        for (auto& c : m) {
            if (c < 0 || c >= p) throw Error(Errc::invalid_argument, "modulus coefficient out of range");
        }
        if (degree == 1) return base;
        if (!is_irreducible(m, p)) throw Error(Errc::reducible_modulus, "modulus is reducible over F_" + to_string(p));
        return Field(p, std::move(m));
    }
    if (degree == 1) return base;
    return Field(p, smallest_irreducible(p, degree));
}

}  // namespace cmdp
