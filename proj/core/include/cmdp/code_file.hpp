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

#include <string>
#include <utility>
#include <vector>

#include "cmdp/polymatrix.hpp"

namespace cmdp {

// Grammar (one item per line, '#' starts a comment line):
//
//   format cmdp-code 1
//   provenance <key> <free text>        (zero or more)
//   field p <prime> N <degree>
//   modulus <c_0> ... <c_N>             (only when N > 1, monic)
//   code n <n> k <k> delta <delta> nu <nu>
//   H <i>                               (i = 0..nu, in order)
//   <n entries> x (n-k) rows
//   end
//
// Entries are decimal integers for N = 1 and "[c_0,c_1,...]" coefficient
// lists (trailing zeros may be dropped) for N > 1.

struct CodeFile {
    std::vector<std::pair<std::string, std::string>> provenance;
    PolyParityMatrix h;
};

std::string serialize_code(const CodeFile& file);
/// Strict parser; Errc::format_error on any deviation, including a declared
/// delta that differs from the sum of row degrees.
CodeFile parse_code(const std::string& text);

CodeFile read_code_file(const std::string& path);
void write_code_file(const std::string& path, const CodeFile& file);

}  // namespace cmdp
