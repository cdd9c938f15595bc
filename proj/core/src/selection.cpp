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

#include "cmdp/selection.hpp"

#include <algorithm>
#include <limits>

namespace cmdp {

std::vector<std::size_t> ColumnSelection::zero_based() const {
    std::vector<std::size_t> out;
    out.reserve(indices.size());
    for (auto j : indices) out.push_back(j - 1);
    return out;
}

SelectionSpace::SelectionSpace(SelectionMode mode, std::size_t n, std::size_t k, std::size_t nu, std::size_t L)
    : mode_(mode), n_(n), k_(k), nu_(nu), L_(L) {
    if (k == 0 || k >= n) throw Error(Errc::invalid_rate, "rate k/n requires 0 < k < n");
    const std::size_t r = n - k;
    rows_ = (L + 1) * r;
    width_ = (mode == SelectionMode::complete ? nu + L + 1 : L + 1) * n;

    lower_.resize(rows_);
    upper_.resize(rows_);
    for (std::size_t l = 1; l <= rows_; ++l) {
        lower_[l - 1] = l;
        upper_[l - 1] = width_ - rows_ + l;
    }
    for (std::size_t s = 1; s <= L; ++s) {
        if (mode == SelectionMode::mdp) {
            upper_[s * r - 1] = std::min(upper_[s * r - 1], s * n);
        } else if (mode == SelectionMode::reverse) {
            lower_[s * r] = std::max(lower_[s * r], s * n + 1);
        } else {
            upper_[s * r - 1] = std::min(upper_[s * r - 1], s * n + nu * n);
            lower_[s * r] = std::max(lower_[s * r], s * n + 1);
        }
    }
    for (std::size_t l = 1; l < rows_; ++l) lower_[l] = std::max(lower_[l], lower_[l - 1] + 1);
    for (std::size_t l = rows_ - 1; l-- > 0;) upper_[l] = std::min(upper_[l], upper_[l + 1] - 1);

    bool feasible = true;
    for (std::size_t l = 0; l < rows_; ++l) feasible = feasible && lower_[l] <= upper_[l];

    // counts_[l][v] for l = 0..rows_: completions of positions l+1..rows_ given j_l = v.
    counts_.assign(rows_ + 1, std::vector<Integer>(width_ + 1, Integer(0)));
    if (feasible) {
        for (std::size_t v = 0; v <= width_; ++v) counts_[rows_][v] = 1;
        for (std::size_t l = rows_; l-- > 0;) {
            // position l+1 (1-based) takes values in [lower_[l], upper_[l]].
            Integer suffix = 0;
            std::vector<Integer> from(width_ + 2, Integer(0));
            for (std::size_t j = upper_[l]; j >= lower_[l]; --j) {
                suffix += counts_[l + 1][j];
                from[j] = suffix;
                if (j == 0) break;
            }
            for (std::size_t v = 0; v <= width_; ++v) {
                const std::size_t start = std::max(lower_[l], v + 1);
                counts_[l][v] = start <= upper_[l] ? from[start] : Integer(0);
            }
        }
    }
    total_ = counts_[0][0];
    small_ = total_ <= std::numeric_limits<std::uint64_t>::max();
    if (small_) {
        small_counts_.assign(rows_ + 1, std::vector<std::uint64_t>(width_ + 1, 0));
        for (std::size_t l = 0; l <= rows_; ++l) {
            for (std::size_t v = 0; v <= width_; ++v) small_counts_[l][v] = static_cast<std::uint64_t>(counts_[l][v]);
        }
    }
}

SelectionSpace SelectionSpace::for_params(SelectionMode mode, const CodeParams& params) {
    if (mode == SelectionMode::complete) require_uniform_rows(params);
    return SelectionSpace(mode, params.n, params.k, params.nu, params.L);
}

bool SelectionSpace::contains(const ColumnSelection& sel) const {
    const auto& j = sel.indices;
    if (j.size() != rows_) return false;
    for (std::size_t l = 0; l < rows_; ++l) {
        if (j[l] < 1 || j[l] > width_) return false;
        if (l > 0 && j[l] <= j[l - 1]) return false;
    }
    const std::size_t r = n_ - k_;
    for (std::size_t s = 1; s <= L_; ++s) {
        const bool upper_ok = j[s * r - 1] <= s * n_;
        const bool lower_ok = j[s * r] > s * n_;
        const bool shifted_upper_ok = j[s * r - 1] <= s * n_ + nu_ * n_;
        switch (mode_) {
            case SelectionMode::mdp:
                if (!upper_ok) return false;
                break;
            case SelectionMode::reverse:
                if (!lower_ok) return false;
                break;
            case SelectionMode::complete:
                if (!lower_ok || !shifted_upper_ok) return false;
                break;
        }
    }
    return true;
}

ColumnSelection SelectionSpace::first() const {
    if (empty()) throw Error(Errc::invalid_argument, "selection space is empty");
    return ColumnSelection{std::vector<std::size_t>(lower_.begin(), lower_.end())};
}

bool SelectionSpace::next(ColumnSelection& sel) const {
    auto& j = sel.indices;
    for (std::size_t l = rows_; l-- > 0;) {
        if (j[l] < upper_[l]) {
            ++j[l];
            for (std::size_t m = l + 1; m < rows_; ++m) j[m] = std::max(lower_[m], j[m - 1] + 1);
            return true;
        }
    }
    return false;
}

ColumnSelection SelectionSpace::unrank(Integer rank) const {
    if (rank < 0 || rank >= total_) throw Error(Errc::invalid_argument, "selection rank out of range");
    ColumnSelection sel;
    sel.indices.resize(rows_);
    std::size_t prev = 0;
    if (small_) {
        auto r = static_cast<std::uint64_t>(rank);
        for (std::size_t l = 0; l < rows_; ++l) {
            for (std::size_t j = std::max(lower_[l], prev + 1); j <= upper_[l]; ++j) {
                const std::uint64_t c = small_counts_[l + 1][j];
                if (r < c) {
                    sel.indices[l] = prev = j;
                    break;
                }
                r -= c;
            }
        }
        return sel;
    }
    for (std::size_t l = 0; l < rows_; ++l) {
        for (std::size_t j = std::max(lower_[l], prev + 1); j <= upper_[l]; ++j) {
            const Integer& c = counts_[l + 1][j];
            if (rank < c) {
                sel.indices[l] = prev = j;
                break;
            }
            rank -= c;
        }
    }
    return sel;
}

Integer SelectionSpace::rank(const ColumnSelection& sel) const {
    if (!contains(sel)) throw Error(Errc::invalid_argument, "selection is not in this space");
    Integer r = 0;
    std::size_t prev = 0;
    for (std::size_t l = 0; l < rows_; ++l) {
        for (std::size_t j = std::max(lower_[l], prev + 1); j < sel.indices[l]; ++j) r += counts_[l + 1][j];
        prev = sel.indices[l];
    }
    return r;
}

std::vector<ColumnSelection> enumerate_selections(SelectionMode mode, const CodeParams& params) {
    const SelectionSpace space = SelectionSpace::for_params(mode, params);
    std::vector<ColumnSelection> out;
    if (space.empty()) return out;
    ColumnSelection sel = space.first();
    do {
        out.push_back(sel);
    } while (space.next(sel));
    return out;
}

}  // namespace cmdp
