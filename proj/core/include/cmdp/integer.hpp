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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cmdp {

using Integer = boost::multiprecision::cpp_int;

/// Miller-Rabin rounds used everywhere a characteristic is accepted. A
/// composite survives 40 rounds with probability below 4^-40.
inline constexpr unsigned kPrimalityRounds = 40;

Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned exponent);

/// Deterministic (fixed-seed) probabilistic primality test.
bool is_probable_prime(const Integer& n, unsigned rounds = kPrimalityRounds);

/// Smallest probable prime strictly greater than n.
Integer next_prime(const Integer& n);

/// Uniform value in [0, bound) drawn from raw 64-bit engine output, so the
/// stream is identical on every standard library.
Integer uniform_below(const Integer& bound, std::mt19937_64& rng);
std::uint64_t uniform_below(std::uint64_t bound, std::mt19937_64& rng);

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

}  // namespace cmdp
