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

#include "cmdp/integer.hpp"

#include <limits>

#include <boost/multiprecision/miller_rabin.hpp>

#include "cmdp/error.hpp"

namespace cmdp {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::composite_characteristic: return "CompositeCharacteristic";
        case Errc::reducible_modulus: return "ReducibleModulus";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::invalid_rate: return "InvalidRate";
        case Errc::rate_constraint: return "RateConstraint";
        case Errc::structural_failure: return "StructuralFailure";
        case Errc::field_too_small: return "FieldTooSmall";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::inconsistent_syndrome: return "InconsistentSyndrome";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::format_error: return "FormatError";
        case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer ipow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

bool is_probable_prime(const Integer& n, unsigned rounds) {
    if (n < 2) return false;
    static constexpr unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned q : kSmall) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::mt19937_64 gen(0x5eed'0f'9f1d5ULL);
    return boost::multiprecision::miller_rabin_test(n, rounds, gen);
}

Integer next_prime(const Integer& n) {
    Integer c = n < 2 ? Integer(2) : Integer(n + 1);
    while (!is_probable_prime(c)) ++c;
    return c;
}

std::uint64_t uniform_below(std::uint64_t bound, std::mt19937_64& rng) {
    if (bound == 0) throw Error(Errc::invalid_argument, "uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Integer uniform_below(const Integer& bound, std::mt19937_64& rng) {
    if (bound <= 0) throw Error(Errc::invalid_argument, "uniform_below: empty range");
    if (bound <= std::numeric_limits<std::uint64_t>::max()) {
        return Integer(uniform_below(static_cast<std::uint64_t>(bound), rng));
    }
    const unsigned bits = static_cast<unsigned>(msb(bound)) + 1;
    const unsigned words = (bits + 63) / 64;
    const Integer mask = (Integer(1) << bits) - 1;
    for (;;) {
        Integer x = 0;
        for (unsigned w = 0; w < words; ++w) x = (x << 64) | Integer(rng());
        x &= mask;
        if (x < bound) return x;
    }
}

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw Error(Errc::format_error, "empty integer");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw Error(Errc::format_error, "malformed integer '" + std::string(text) + "'");
    Integer v = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw Error(Errc::format_error, "malformed integer '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return negative ? Integer(-v) : v;
}

std::string to_string(const Integer& value) {
    return value.str();
}

}  // namespace cmdp
