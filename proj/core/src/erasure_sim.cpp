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

#include "cmdp/erasure_sim.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

#include "cmdp/code.hpp"
#include "cmdp/error.hpp"

namespace cmdp {

bool ErasurePattern::is_erased(std::size_t position) const {
    return std::binary_search(erased.begin(), erased.end(), position);
}

ErasurePattern make_iid_pattern(std::size_t length, double rate, std::uint64_t seed) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw Error(Errc::invalid_argument, "erasure rate must lie in [0, 1]");
    ErasurePattern p;
    p.length = length;
    p.model = ErasureModel::iid;
    p.rate = rate;
    p.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 1; i <= length; ++i) {
        // 53-bit uniform in [0, 1); avoids distribution objects whose output
        // differs between standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < rate) p.erased.push_back(i);
    }
    return p;
}

ErasurePattern make_burst_pattern(std::size_t length, std::size_t start, std::size_t len) {
    if (start == 0) throw Error(Errc::invalid_argument, "burst start is 1-based");
    ErasurePattern p;
    p.length = length;
    p.model = ErasureModel::burst;
    p.burst_start = start;
    p.burst_length = len;
    for (std::size_t i = start; i < start + len && i <= length; ++i) p.erased.push_back(i);
    return p;
}

ErasurePattern make_explicit_pattern(std::size_t length, std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    if (!positions.empty() && (positions.front() == 0 || positions.back() > length)) {
        throw Error(Errc::invalid_argument, "erased position outside [1, length]");
    }
    ErasurePattern p;
    p.length = length;
    p.erased = std::move(positions);
    return p;
}

std::string serialize_pattern(const ErasurePattern& pattern) {
    std::ostringstream os;
    os << "pattern 1\nlength " << pattern.length << "\nmodel ";
    switch (pattern.model) {
        case ErasureModel::iid: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", pattern.rate);
            os << "iid " << buf << ' ' << pattern.seed;
            break;
        }
        case ErasureModel::burst: os << "burst " << pattern.burst_start << ' ' << pattern.burst_length; break;
        case ErasureModel::explicit_set: os << "explicit"; break;
    }
    os << "\nerased";
    for (auto e : pattern.erased) os << ' ' << e;
    os << '\n';
    return os.str();
}

ErasurePattern parse_pattern(const std::string& text) {
    std::istringstream is(text);
    auto fail = [](const std::string& what) { return Error(Errc::format_error, "erasure pattern: " + what); };
    std::string word;
    int version = 0;
    if (!(is >> word >> version) || word != "pattern" || version != 1) throw fail("expected 'pattern 1'");
    ErasurePattern p;
    if (!(is >> word >> p.length) || word != "length") throw fail("expected 'length'");
    if (!(is >> word) || word != "model" || !(is >> word)) throw fail("expected 'model'");
    if (word == "iid") {
        std::string rate;
        if (!(is >> rate >> p.seed)) throw fail("bad iid model");
        p.model = ErasureModel::iid;
        p.rate = std::stod(rate);
    } else if (word == "burst") {
        if (!(is >> p.burst_start >> p.burst_length)) throw fail("bad burst model");
        p.model = ErasureModel::burst;
    } else if (word == "explicit") {
        p.model = ErasureModel::explicit_set;
    } else {
        throw fail("unknown model '" + word + "'");
    }
    if (!(is >> word) || word != "erased") throw fail("expected 'erased'");
    std::string rest;
    std::getline(is, rest);
    std::istringstream ls(rest);
    std::size_t pos = 0;
    while (ls >> pos) {
        if (pos == 0 || pos > p.length || (!p.erased.empty() && pos <= p.erased.back())) {
            throw fail("erased positions must be increasing within [1, length]");
        }
        p.erased.push_back(pos);
    }
    if (!ls.eof()) throw fail("bad erased list");
    if (is >> word) throw fail("trailing content");
    return p;
}

CodewordSampler::CodewordSampler(const PolyParityMatrix& h, std::size_t blocks)
    : field_(h.field_ptr()), n_(h.n()), blocks_(blocks) {
    if (blocks == 0) throw Error(Errc::invalid_argument, "need at least one block");
    basis_ = null_space(h.field(), sliding_matrix(h, blocks - 1).entries);
}

std::vector<FieldElement> CodewordSampler::sample(std::mt19937_64& rng) const {
    const Field& f = *field_;
    std::vector<FieldElement> word(blocks_ * n_, f.zero());
    for (const auto& v : basis_) {
        const FieldElement c = f.random(rng);
        if (f.is_zero(c)) continue;
        for (std::size_t i = 0; i < word.size(); ++i) word[i] = f.add(word[i], f.mul(c, v[i]));
    }
    return word;
}

std::vector<FieldElement> sample_codeword(const PolyParityMatrix& h, std::size_t blocks, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return CodewordSampler(h, blocks).sample(rng);
}

bool satisfies_parity(const PolyParityMatrix& h, const std::vector<FieldElement>& word) {
    if (word.empty() || word.size() % h.n() != 0) throw Error(Errc::invalid_argument, "word length must be a multiple of n");
    const Matrix s = sliding_matrix(h, word.size() / h.n() - 1).entries;
    for (const auto& e : multiply(h.field(), s, word)) {
        if (!h.field().is_zero(e)) return false;
    }
    return true;
}

namespace {

class WindowSystem {
   public:
    WindowSystem(const PolyParityMatrix& h, std::size_t length) : h_(h), n_(h.n()) {
        if (length == 0 || length % n_ != 0) throw Error(Errc::invalid_argument, "sequence length must be a multiple of n");
        blocks_ = static_cast<std::ptrdiff_t>(length / n_);
        L_ = params_of(h).L;
    }

    struct Window {
        bool has_equations = false;
        std::size_t span_L = 0;      // shortened L
        std::size_t first_pos = 0;   // first 0-based symbol position inside the sequence
        std::size_t last_pos = 0;    // one past the last
        std::ptrdiff_t first_block = 0;
    };

    Window window(std::ptrdiff_t w) const {
        const auto nu = static_cast<std::ptrdiff_t>(h_.nu());
        if (w < -nu) throw Error(Errc::invalid_argument, "window starts before the zero history");
        Window out;
        out.first_block = w;
        const std::ptrdiff_t first_eq = w + nu;
        const std::ptrdiff_t last_eq = std::min(first_eq + static_cast<std::ptrdiff_t>(L_), blocks_ - 1);
        if (first_eq > last_eq) return out;
        out.has_equations = true;
        out.span_L = static_cast<std::size_t>(last_eq - first_eq);
        out.first_pos = static_cast<std::size_t>(std::max<std::ptrdiff_t>(w, 0)) * n_;
        out.last_pos = static_cast<std::size_t>(last_eq + 1) * n_;
        return out;
    }

    const Matrix& partial(std::size_t span_L) {
        auto it = cache_.find(span_L);
        if (it == cache_.end()) it = cache_.emplace(span_L, partial_parity_matrix(h_, span_L).entries).first;
        return it->second;
    }

    std::size_t column_of(const Window& win, std::size_t pos) const {
        return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(pos) - win.first_block * static_cast<std::ptrdiff_t>(n_));
    }

    bool independent(const Window& win, const std::vector<std::size_t>& unknown) {
        const Matrix& m = partial(win.span_L);
        if (unknown.size() > m.rows()) return false;
        std::vector<std::size_t> cols;
        for (auto pos : unknown) cols.push_back(column_of(win, pos));
        return rank(h_.field(), m.columns(cols)) == cols.size();
    }

    std::ptrdiff_t blocks() const noexcept { return blocks_; }

   private:
    const PolyParityMatrix& h_;
    std::size_t n_;
    std::ptrdiff_t blocks_ = 0;
    std::size_t L_ = 0;
    std::map<std::size_t, Matrix> cache_;
};

}  // namespace

bool window_recoverable(const PolyParityMatrix& h, const ErasurePattern& pattern, std::ptrdiff_t first_block) {
    WindowSystem sys(h, pattern.length);
    const auto win = sys.window(first_block);
    std::vector<std::size_t> unknown;
    for (auto e : pattern.erased) {
        if (e - 1 >= win.first_pos && e - 1 < win.last_pos) unknown.push_back(e - 1);
    }
    if (unknown.empty()) return true;
    if (!win.has_equations) return false;
    return sys.independent(win, unknown);
}

DecodeResult sliding_decoder(const PolyParityMatrix& h, const std::vector<FieldElement>& received,
                             const ErasurePattern& pattern) {
    if (received.size() != pattern.length) throw Error(Errc::invalid_argument, "pattern length differs from sequence");
    const Field& f = h.field();
    WindowSystem sys(h, pattern.length);
    DecodeResult out;
    out.symbols = received;
    out.known.assign(received.size(), true);
    for (auto e : pattern.erased) {
        out.known[e - 1] = false;
        out.symbols[e - 1] = f.zero();
    }

    const auto nu = static_cast<std::ptrdiff_t>(h.nu());
    const auto reach = nu + static_cast<std::ptrdiff_t>(params_of(h).L);
    std::ptrdiff_t w = -nu;
    while (w < sys.blocks()) {
        const auto win = sys.window(w);
        std::vector<std::size_t> unknown;
        if (win.has_equations) {
            for (std::size_t pos = win.first_pos; pos < win.last_pos; ++pos) {
                if (!out.known[pos]) unknown.push_back(pos);
            }
        }
        if (unknown.empty()) {
            ++w;
            continue;
        }
        ++out.stats.windows_attempted;
        if (!sys.independent(win, unknown)) {
            ++w;
            continue;
        }
        const Matrix& m = sys.partial(win.span_L);
        std::vector<std::size_t> cols;
        for (auto pos : unknown) cols.push_back(sys.column_of(win, pos));
        // Known symbols of the window (unknowns are zero) give the syndrome.
        std::vector<FieldElement> x(m.cols(), f.zero());
        for (std::size_t pos = win.first_pos; pos < win.last_pos; ++pos) x[sys.column_of(win, pos)] = out.symbols[pos];
        std::vector<FieldElement> rhs = multiply(f, m, x);
        for (auto& e : rhs) e = f.neg(e);
        bool consistent = true;
        const auto sol = solve_unique(f, m.columns(cols), rhs, consistent);
        if (!consistent) {
            throw Error(Errc::inconsistent_syndrome,
                        "window at block " + std::to_string(w) + " contradicts the known symbols");
        }
        for (std::size_t i = 0; i < unknown.size(); ++i) {
            out.symbols[unknown[i]] = (*sol)[i];
            out.known[unknown[i]] = true;
        }
        ++out.stats.windows_solved;
        // Only windows overlapping the solved one can have changed.
        w = std::max(-nu, w - reach);
    }

    std::optional<std::size_t> stall;
    for (auto e : pattern.erased) {
        if (out.known[e - 1]) {
            ++out.stats.recovered;
            if (stall) out.stats.max_waiting = std::max(out.stats.max_waiting, e - *stall);
            stall.reset();
        } else {
            ++out.stats.unrecovered;
            if (!stall) stall = e;
        }
    }
    if (stall) out.stats.max_waiting = std::max(out.stats.max_waiting, pattern.length + 1 - *stall);
    return out;
}

}  // namespace cmdp
