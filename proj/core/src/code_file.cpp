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

#include "cmdp/code_file.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "cmdp/error.hpp"

namespace cmdp {

namespace {

constexpr std::string_view kMagic = "format cmdp-code 1";

Error bad(std::size_t line, const std::string& what) {
    return Error(Errc::format_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

std::size_t to_size(const std::string& s, std::size_t line) {
    Integer v;
    try {
        v = parse_integer(s);
    } catch (const Error&) {
        throw bad(line, "expected a nonnegative integer, got '" + s + "'");
    }
    if (v < 0 || v > Integer(std::numeric_limits<std::uint32_t>::max())) throw bad(line, "integer out of range: " + s);
    return static_cast<std::size_t>(v);
}

Integer to_digit(const std::string& s, const Integer& p, std::size_t line) {
    Integer v;
    try {
        v = parse_integer(s);
    } catch (const Error&) {
        throw bad(line, "malformed entry '" + s + "'");
    }
    if (v < 0 || v >= p) throw bad(line, "entry " + s + " is not reduced modulo p");
    return v;
}

FieldElement parse_entry(const Field& f, const std::string& tok, std::size_t line) {
    const Integer& p = f.characteristic();
    if (f.is_prime_field()) return f.from_integer(to_digit(tok, p, line));
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']') throw bad(line, "expected [c_0,...] entry, got '" + tok + "'");
    std::vector<Integer> coeffs;
    std::string body = tok.substr(1, tok.size() - 2);
    std::size_t start = 0;
    for (;;) {
        const auto comma = body.find(',', start);
        coeffs.push_back(to_digit(body.substr(start, comma - start), p, line));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coeffs.size() > f.degree()) throw bad(line, "entry has more than N coefficients");
    return f.element(std::move(coeffs));
}

}  // namespace

std::string serialize_code(const CodeFile& file) {
    const PolyParityMatrix& h = file.h;
    const Field& f = h.field();
    std::ostringstream os;
    os << kMagic << '\n';
    for (const auto& [key, value] : file.provenance) os << "provenance " << key << ' ' << value << '\n';
    os << "field p " << f.characteristic() << " N " << f.degree() << '\n';
    if (!f.is_prime_field()) {
        os << "modulus";
        for (const auto& c : f.modulus()) os << ' ' << c;
        os << '\n';
    }
    os << "code n " << h.n() << " k " << h.k() << " delta " << h.degree() << " nu " << h.nu() << '\n';
    for (std::size_t i = 0; i <= h.nu(); ++i) {
        os << "H " << i << '\n';
        const Matrix& m = h.coeffs()[i];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << f.format(m(r, c));
            os << '\n';
        }
    }
    os << "end\n";
    return os.str();
}

CodeFile parse_code(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::istringstream is(text);
        std::size_t no = 0;
        for (std::string l; std::getline(is, l);) {
            ++no;
            if (!l.empty() && l.back() == '\r') l.pop_back();
            const auto first = l.find_first_not_of(" \t");
            if (first == std::string::npos || l[first] == '#') continue;
            lines.emplace_back(no, l);
        }
    }
    std::size_t at = 0;
    auto next = [&](const char* what) -> const std::pair<std::size_t, std::string>& {
        if (at >= lines.size()) throw Error(Errc::format_error, std::string("unexpected end of file, expected ") + what);
        return lines[at++];
    };

    const auto& magic = next("header");
    if (split(magic.second) != split(std::string(kMagic))) {
        throw bad(magic.first, "unsupported header '" + magic.second + "'");
    }

    std::vector<std::pair<std::string, std::string>> provenance;
    while (at < lines.size() && split(lines[at].second).front() == "provenance") {
        const auto& [no, l] = lines[at++];
        const auto key_pos = l.find("provenance") + 10;
        std::istringstream is(l.substr(key_pos));
        std::string key;
        if (!(is >> key)) throw bad(no, "provenance needs a key");
        std::string value;
        std::getline(is, value);
        const auto v0 = value.find_first_not_of(' ');
        provenance.emplace_back(key, v0 == std::string::npos ? std::string() : value.substr(v0));
    }

    const auto& fl = next("field line");
    const auto ft = split(fl.second);
    if (ft.size() != 5 || ft[0] != "field" || ft[1] != "p" || ft[3] != "N") throw bad(fl.first, "expected 'field p <p> N <N>'");
    Integer p;
    try {
        p = parse_integer(ft[2]);
    } catch (const Error&) {
        throw bad(fl.first, "malformed characteristic");
    }
    const std::size_t N = to_size(ft[4], fl.first);
    if (N == 0) throw bad(fl.first, "extension degree must be at least 1");
    FieldPtr field;
    if (N == 1) {
        field = std::make_shared<const Field>(make_prime_field(p));
    } else {
        const auto& ml = next("modulus line");
        const auto mt = split(ml.second);
        if (mt.size() != N + 2 || mt[0] != "modulus") throw bad(ml.first, "expected 'modulus' with N+1 coefficients");
        std::vector<Integer> modulus;
        for (std::size_t i = 1; i < mt.size(); ++i) modulus.push_back(to_digit(mt[i], p, ml.first));
        field = std::make_shared<const Field>(make_extension_field(p, static_cast<unsigned>(N), modulus));
    }

    const auto& cl = next("code line");
    const auto ct = split(cl.second);
    if (ct.size() != 9 || ct[0] != "code" || ct[1] != "n" || ct[3] != "k" || ct[5] != "delta" || ct[7] != "nu") {
        throw bad(cl.first, "expected 'code n <n> k <k> delta <delta> nu <nu>'");
    }
    const std::size_t n = to_size(ct[2], cl.first), k = to_size(ct[4], cl.first);
    const std::size_t delta = to_size(ct[6], cl.first), nu = to_size(ct[8], cl.first);
    if (k == 0 || k >= n) throw Error(Errc::invalid_rate, "code dimension must satisfy 0 < k < n");

    std::vector<Matrix> coeffs;
    for (std::size_t i = 0; i <= nu; ++i) {
        const auto& hl = next("coefficient header");
        const auto ht = split(hl.second);
        if (ht.size() != 2 || ht[0] != "H" || to_size(ht[1], hl.first) != i) {
            throw bad(hl.first, "expected 'H " + std::to_string(i) + "'");
        }
        Matrix m = Matrix::zeros(*field, n - k, n);
        for (std::size_t r = 0; r < n - k; ++r) {
            const auto& rl = next("coefficient row");
            const auto rt = split(rl.second);
            if (rt.size() != n) throw bad(rl.first, "expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_entry(*field, rt[c], rl.first);
        }
        coeffs.push_back(std::move(m));
    }
    const auto& el = next("'end'");
    if (split(el.second) != std::vector<std::string>{"end"}) throw bad(el.first, "expected 'end'");
    if (at != lines.size()) throw bad(lines[at].first, "content after 'end'");

    CodeFile out{std::move(provenance), PolyParityMatrix(field, n, k, std::move(coeffs))};
    if (out.h.degree() != delta) {
        throw bad(cl.first, "declared delta " + std::to_string(delta) + " differs from the row-degree sum " +
                                std::to_string(out.h.degree()));
    }
    return out;
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str());
}

void write_code_file(const std::string& path, const CodeFile& file) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_error, "cannot write '" + path + "'");
    out << serialize_code(file);
    if (!out) throw Error(Errc::io_error, "write to '" + path + "' failed");
}

}  // namespace cmdp
