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

#include "cmdp/mdp_verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cmdp/detail/elimination.hpp"

namespace cmdp {

std::string_view level_name(Level level) noexcept {
    switch (level) {
        case Level::mdp: return "mdp";
        case Level::reverse_mdp: return "reverse_mdp";
        case Level::complete_mdp: return "complete_mdp";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::string_view kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::sliding: return "sliding";
        case BlockKind::reversed_sliding: return "reversed_sliding";
        case BlockKind::partial: return "partial";
    }
    return "unknown";
}

template <class Ops>
class MinorEvaluator {
   public:
    using T = typename Ops::value_type;

    MinorEvaluator(const Ops& ops, const detail::Dense<Ops>& m, std::size_t cols, std::size_t size)
        : ops_(ops), m_(m), cols_(cols), size_(size), buf_(size * size) {}

    bool vanishes(const ColumnSelection& sel) {
        for (std::size_t r = 0; r < size_; ++r) {
            for (std::size_t l = 0; l < size_; ++l) buf_[r * size_ + l] = m_[r * cols_ + sel.indices[l] - 1];
        }
        return ops_.is_zero(detail::determinant_inplace(ops_, std::span<T>(buf_), size_));
    }

   private:
    const Ops& ops_;
    const detail::Dense<Ops>& m_;
    std::size_t cols_;
    std::size_t size_;
    std::vector<T> buf_;
};

// Index (in [0, count)) of the first item whose minor vanishes. Items are
// ranks 0..count-1 when `ranks` is null, otherwise ranks[i]. Work is split into
// chunks claimed in increasing order; a chunk past the best failure found so
// far is skipped, so the answer is the true first failure for any thread count.
template <class Ops>
std::uint64_t scan(const Ops& ops, const detail::Dense<Ops>& m, std::size_t cols, const SelectionSpace& space,
                   std::uint64_t count, const std::vector<Integer>* ranks, unsigned threads) {
    if (count == 0) return kNone;
    threads = std::max(1u, threads);
    const std::uint64_t chunk = std::max<std::uint64_t>(256, count / (std::uint64_t{threads} * 64) + 1);
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&] {
        MinorEvaluator<Ops> eval(ops, m, cols, space.rows());
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            const std::uint64_t start = c * chunk;
            if (start >= count || start >= best.load()) return;
            const std::uint64_t stop = std::min(count, start + chunk);
            ColumnSelection sel = ranks ? space.unrank((*ranks)[start]) : space.unrank(Integer(start));
            for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
                if (i != start) {
                    if (ranks) {
                        sel = space.unrank((*ranks)[i]);
                    } else {
                        space.next(sel);
                    }
                }
                if (eval.vanishes(sel)) {
                    std::uint64_t seen = best.load();
                    while (i < seen && !best.compare_exchange_weak(seen, i)) {
                    }
                    break;
                }
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return best.load();
}

struct StageOutcome {
    Integer total = 0;
    Integer tested = 0;
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::optional<ColumnSelection> failure;
};

StageOutcome run_stage(const Field& field, const Matrix& m, const SelectionSpace& space, const VerifyOptions& options,
                       std::uint64_t salt, std::vector<std::string>& warnings) {
    StageOutcome out;
    out.total = space.size();
    if (space.empty()) return out;

    const bool fits = out.total <= options.exhaustive_limit;
    bool sample = options.sampled || !fits;
    if (sample && Integer(options.sample_count) >= out.total) sample = false;
    if (!options.sampled && sample) {
        warnings.push_back(to_string(out.total) + " minors exceed the exhaustive limit of " +
                           std::to_string(options.exhaustive_limit) + "; sampled " +
                           std::to_string(options.sample_count) + " instead");
    }

    std::vector<Integer> ranks;
    std::uint64_t count = 0;
    if (sample) {
        std::mt19937_64 rng(options.seed ^ (salt * 0x9E3779B97F4A7C15ull));
        std::set<Integer> drawn;
        while (drawn.size() < options.sample_count) drawn.insert(uniform_below(out.total, rng));
        ranks.assign(drawn.begin(), drawn.end());
        count = ranks.size();
        out.exhaustive = false;
        out.samples = count;
    } else {
        count = static_cast<std::uint64_t>(out.total);
    }

    const std::uint64_t fail = field.visit([&](const auto& ops) {
        detail::Dense<std::decay_t<decltype(ops)>> dense;
        dense.reserve(m.data().size());
        for (const auto& e : m.data()) dense.push_back(ops.from_element(e));
        return scan(ops, dense, m.cols(), space, count, sample ? &ranks : nullptr, options.threads);
    });

    if (fail == kNone) {
        out.tested = count;
    } else {
        out.tested = fail + 1;
        out.failure = sample ? space.unrank(ranks[fail]) : space.unrank(Integer(fail));
    }
    return out;
}

void add_diagnostics(const PolyParityMatrix& h, const VerifyOptions& options, VerificationReport& report) {
    if (!h.field().is_prime_field()) {
        report.assumptions.push_back("field generator is the residue class of x; multiplicative primitivity is not certified");
    }
    if (!options.diagnostics) return;
    if (!is_row_proper(h)) report.warnings.push_back("parity-check matrix is not row proper");
    if (!is_left_prime(h)) {
        report.warnings.push_back("parity-check matrix is not left prime; the minor criterion is checked for this representative only");
    }
}

void absorb(VerificationReport& report, const StageOutcome& stage, BlockKind kind, const Field& field, const Matrix& m) {
    report.minors_tested += stage.tested;
    report.exhaustive = report.exhaustive && stage.exhaustive;
    report.sample_count += stage.samples;
    if (stage.failure && !report.counterexample) {
        const auto cols = stage.failure->zero_based();
        report.counterexample = Counterexample{kind, *stage.failure, determinant(field, m.columns(cols))};
    }
}

VerificationReport start_report(const PolyParityMatrix& h, Level level, const VerifyOptions& options) {
    VerificationReport report;
    report.level = level;
    report.params = params_of(h);
    report.seed = options.seed;
    return report;
}

}  // namespace

StructuralReport structural_check(const PolyParityMatrix& h) {
    StructuralReport s;
    s.redundancy = h.redundancy();
    s.rank_h0 = rank(h.field(), h.coeffs().front());
    s.rank_hnu = rank(h.field(), h.coeffs().back());
    s.row_degrees = h.row_degrees();
    s.nu = h.nu();
    s.delta = h.degree();
    s.delta_consistent = s.delta == s.nu * s.redundancy;
    return s;
}

VerificationReport is_mdp(const PolyParityMatrix& h, const VerifyOptions& options) {
    VerificationReport report = start_report(h, Level::mdp, options);
    add_diagnostics(h, options, report);
    const auto& p = report.params;
    const SelectionSpace space(SelectionMode::mdp, p.n, p.k, p.nu, p.L);
    const Matrix m = sliding_matrix(h, p.L).entries;
    report.minors_total = space.size();
    const StageOutcome stage = run_stage(h.field(), m, space, options, 1, report.warnings);
    absorb(report, stage, BlockKind::sliding, h.field(), m);
    report.verdict = !report.counterexample.has_value();
    return report;
}

VerificationReport is_reverse_mdp(const PolyParityMatrix& h, const VerifyOptions& options) {
    VerificationReport report = start_report(h, Level::reverse_mdp, options);
    require_uniform_rows(report.params);
    add_diagnostics(h, options, report);
    const auto& p = report.params;
    const SelectionSpace forward(SelectionMode::mdp, p.n, p.k, p.nu, p.L);
    const SelectionSpace backward(SelectionMode::reverse, p.n, p.k, p.nu, p.L);
    report.minors_total = forward.size() + backward.size();

    const Matrix sliding = sliding_matrix(h, p.L).entries;
    const StageOutcome first = run_stage(h.field(), sliding, forward, options, 1, report.warnings);
    absorb(report, first, BlockKind::sliding, h.field(), sliding);
    if (!report.counterexample) {
        const Matrix reversed = reversed_sliding_matrix(h, p.L).entries;
        const StageOutcome second = run_stage(h.field(), reversed, backward, options, 2, report.warnings);
        absorb(report, second, BlockKind::reversed_sliding, h.field(), reversed);
    }
    report.verdict = !report.counterexample.has_value();
    return report;
}

VerificationReport is_complete_mdp(const PolyParityMatrix& h, const VerifyOptions& options) {
    const StructuralReport s = structural_check(h);
    if (s.rank_h0 != s.redundancy || s.rank_hnu != s.redundancy) {
        throw Error(Errc::structural_failure, "H_0 has rank " + std::to_string(s.rank_h0) + " and H_nu has rank " +
                                                  std::to_string(s.rank_hnu) + "; both must be " +
                                                  std::to_string(s.redundancy));
    }
    VerificationReport report = start_report(h, Level::complete_mdp, options);
    require_uniform_rows(report.params);
    add_diagnostics(h, options, report);
    report.assumptions.push_back("the minor property is verified for this parity-check representative");
    const auto& p = report.params;
    const SelectionSpace space(SelectionMode::complete, p.n, p.k, p.nu, p.L);
    const Matrix m = partial_parity_matrix(h, p.L).entries;
    report.minors_total = space.size();
    const StageOutcome stage = run_stage(h.field(), m, space, options, 3, report.warnings);
    absorb(report, stage, BlockKind::partial, h.field(), m);
    report.verdict = !report.counterexample.has_value();
    return report;
}

VerificationReport verify(const PolyParityMatrix& h, Level level, const VerifyOptions& options) {
    switch (level) {
        case Level::mdp: return is_mdp(h, options);
        case Level::reverse_mdp: return is_reverse_mdp(h, options);
        case Level::complete_mdp: return is_complete_mdp(h, options);
    }
    throw Error(Errc::invalid_argument, "unknown verification level");
}

std::optional<ColumnSelection> find_zero_minor(const Field& field, const Matrix& m, const SelectionSpace& space,
                                               unsigned threads) {
    if (m.rows() != space.rows() || m.cols() != space.width()) {
        throw Error(Errc::invalid_argument, "matrix shape does not match the selection space");
    }
    if (space.empty()) return std::nullopt;
    if (space.size() > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(Errc::budget_exceeded, "selection space too large to enumerate");
    }
    const auto count = static_cast<std::uint64_t>(space.size());
    const std::uint64_t fail = field.visit([&](const auto& ops) {
        detail::Dense<std::decay_t<decltype(ops)>> dense;
        dense.reserve(m.data().size());
        for (const auto& e : m.data()) dense.push_back(ops.from_element(e));
        return scan(ops, dense, m.cols(), space, count, nullptr, threads);
    });
    if (fail == kNone) return std::nullopt;
    return space.unrank(Integer(fail));
}

bool selection_is_trivially_zero_oracle(const BlockGeometry& pattern, const ColumnSelection& sel, std::size_t trials,
                                        std::uint64_t seed) {
    if (trials == 0) throw Error(Errc::invalid_argument, "trivially-zero oracle needs at least one trial");
    if (sel.indices.size() != pattern.rows()) throw Error(Errc::invalid_argument, "selection size must equal row count");
    static const Field field = make_prime_field(Integer(2147483647));
    std::mt19937_64 rng(seed);
    const auto cols = sel.zero_based();
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Matrix> coeffs;
        for (std::size_t i = 0; i <= pattern.nu; ++i) {
            Matrix h = Matrix::zeros(field, pattern.redundancy, pattern.n);
            for (std::size_t r = 0; r < pattern.redundancy; ++r) {
                for (std::size_t c = 0; c < pattern.n; ++c) h(r, c) = field.random(rng);
            }
            coeffs.push_back(std::move(h));
        }
        const Matrix m = assemble_block_matrix(field, pattern, coeffs);
        if (!field.is_zero(determinant(field, m.columns(cols)))) return false;
    }
    return true;
}

std::string format_report(const VerificationReport& report, const Field& field) {
    std::ostringstream os;
    const auto& p = report.params;
    os << "level: " << level_name(report.level) << '\n';
    os << "verdict: " << (report.verdict ? "true" : "false") << '\n';
    os << "field: " << field.describe() << '\n';
    os << "params: n=" << p.n << " k=" << p.k << " delta=" << p.delta << " nu=" << p.nu << " L=" << p.L
       << " M=" << p.M << '\n';
    if (report.exhaustive) {
        os << "mode: exhaustive\n";
    } else {
        os << "mode: sampled count=" << report.sample_count << " seed=" << report.seed << '\n';
    }
    os << "minors_total: " << report.minors_total << '\n';
    os << "minors_tested: " << report.minors_tested << '\n';
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        os << "counterexample: matrix=" << kind_name(ce.matrix) << " columns=";
        for (std::size_t i = 0; i < ce.selection.indices.size(); ++i) {
            os << (i ? "," : "") << ce.selection.indices[i];
        }
        os << " determinant=" << field.format(ce.determinant) << '\n';
    } else {
        os << "counterexample: none\n";
    }
    for (const auto& w : report.warnings) os << "warning: " << w << '\n';
    for (const auto& a : report.assumptions) os << "assumption: " << a << '\n';
    return os.str();
}

}  // namespace cmdp
