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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmdp/code.hpp"
#include "cmdp/code_file.hpp"
#include "cmdp/constructions.hpp"
#include "cmdp/erasure_sim.hpp"
#include "cmdp/error.hpp"
#include "cmdp/mdp_verify.hpp"
#include "cmdp/search.hpp"

namespace cmdp::cli {

namespace {

unsigned default_threads() {
    if (const char* env = std::getenv("CMDP_THREADS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::structural_failure:
        case Errc::rate_constraint: return kExitStructural;
        case Errc::invalid_rate:
        case Errc::invalid_argument:
        case Errc::field_too_small:
        case Errc::composite_characteristic:
        case Errc::reducible_modulus: return kExitUsage;
        default: return kExitFailure;
    }
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Integer integer_flag(const std::string& text, const char* name) {
    try {
        return parse_integer(text);
    } catch (const Error&) {
        throw Error(Errc::invalid_argument, std::string("--") + name + " expects an integer, got '" + text + "'");
    }
}

std::string join(const std::vector<std::size_t>& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string prefix_lines(const std::string& text, const std::string& prefix) {
    std::istringstream is(text);
    std::string out;
    for (std::string l; std::getline(is, l);) out += prefix + l + '\n';
    return out;
}

struct VerifyFlags {
    std::vector<std::string> mode{"exhaustive"};
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t exhaustive_limit = VerifyOptions{}.exhaustive_limit;
    unsigned threads = default_threads();

    void add_to(CLI::App* app, bool with_mode) {
        if (with_mode) {
            app->add_option("--mode", mode, "exhaustive | sample [N]")->expected(1, 2);
        }
        app->add_option("--seed", seed, "seed for sampled verification");
        app->add_option("--exhaustive-limit", exhaustive_limit, "largest minor count checked exhaustively");
        app->add_option("--threads", threads, "worker threads (default: CMDP_THREADS or 1)")->check(CLI::Range(1, 1024));
    }

    VerifyOptions options() const {
        VerifyOptions o;
        o.seed = seed;
        o.exhaustive_limit = exhaustive_limit;
        o.threads = threads;
        if (mode.front() == "sample") {
            o.sampled = true;
            if (mode.size() == 2) o.sample_count = static_cast<std::uint64_t>(integer_flag(mode[1], "mode sample"));
            if (o.sample_count == 0) throw Error(Errc::invalid_argument, "sample count must be positive");
        } else if (mode.front() != "exhaustive" || mode.size() != 1) {
            throw Error(Errc::invalid_argument, "--mode must be 'exhaustive' or 'sample [N]'");
        }
        return o;
    }
};

// ---- construct ----

struct ConstructFlags {
    std::string kind;
    std::size_t n = 0, k = 0, d = 0;
    std::string p;
    unsigned N = 0;
    std::vector<std::string> modulus;
    std::string output;
    bool force = false;
    VerifyFlags verify;
};

CodeFile build_pascal(const ConstructFlags& f, std::vector<std::string>& warnings) {
    if (f.N > 1 || !f.modulus.empty()) throw Error(Errc::invalid_argument, "the binomial construction uses a prime field");
    const PascalPlan plan = pascal_plan(f.n, f.k, f.d);
    const Integer p = f.p.empty() ? next_prime(plan.char_bound) : integer_flag(f.p, "p");
    auto field = std::make_shared<const Field>(make_prime_field(p));
    if (p <= plan.char_bound) {
        warnings.push_back("characteristic " + to_string(p) + " does not exceed the sufficient bound " +
                           to_string(plan.char_bound) + "; validity rests on the verification below");
    }
    return CodeFile{{{"construction", "pascal"},
                     {"a", std::to_string(plan.a)},
                     {"b", std::to_string(plan.b)},
                     {"rows", join(plan.rows)},
                     {"char_bound", to_string(plan.char_bound)}},
                    pascal_construction(f.n, f.k, f.d, field)};
}

CodeFile build_alpha(const ConstructFlags& f, std::vector<std::string>& warnings) {
    const AlphaPlan plan = alpha_plan(f.n, f.k, f.d);
    const Integer p = f.p.empty() ? Integer(2) : integer_flag(f.p, "p");
    unsigned N = f.N;
    if (N == 0) {
        if (plan.N_bound >= Integer(std::numeric_limits<unsigned>::max())) {
            throw Error(Errc::invalid_argument, "required extension degree is too large");
        }
        N = static_cast<unsigned>(plan.N_bound) + 1;
    }
    std::optional<std::vector<Integer>> modulus;
    if (!f.modulus.empty()) {
        modulus.emplace();
        for (const auto& c : f.modulus) modulus->push_back(integer_flag(c, "modulus"));
    }
    auto field = std::make_shared<const Field>(N == 1 && !modulus ? make_prime_field(p)
                                                                 : make_extension_field(p, N, modulus));
    std::string grid;
    for (std::size_t i = 0; i < plan.power_index.size(); ++i) {
        if (i) grid += " | ";
        for (std::size_t r = 0; r < plan.power_index[i].size(); ++r) {
            if (r) grid += "; ";
            grid += join(plan.power_index[i][r]);
        }
    }
    return CodeFile{{{"construction", "alpha"},
                     {"power_index", grid},
                     {"N_bound", to_string(plan.N_bound)},
                     {"exponent_bound", to_string(alpha_exponent_bound(f.n, f.k, f.d))}},
                    alpha_construction(f.n, f.k, f.d, field, f.force, &warnings)};
}

int cmd_construct(const ConstructFlags& f, std::ostream& out, std::ostream& err) {
    derive_params(f.n, f.k, f.d);
    std::vector<std::string> warnings;
    const CodeFile file = f.kind == "pascal" ? build_pascal(f, warnings) : build_alpha(f, warnings);

    const VerificationReport report = is_complete_mdp(file.h, f.verify.options());
    const std::string text = format_report(report, file.h.field());
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    if (f.output.empty()) {
        out << serialize_code(file) << prefix_lines(text, "# ");
    } else {
        write_code_file(f.output, file);
        out << "wrote " << f.output << '\n' << text;
    }
    return report.verdict ? kExitPass : kExitProperty;
}

// ---- verify ----

struct VerifyCmdFlags {
    std::string file;
    std::string level = "complete";
    VerifyFlags verify;
};

int cmd_verify(const VerifyCmdFlags& f, std::ostream& out) {
    const CodeFile file = read_code_file(f.file);
    Level level;
    if (f.level == "mdp") {
        level = Level::mdp;
    } else if (f.level == "reverse") {
        level = Level::reverse_mdp;
    } else {
        level = Level::complete_mdp;
    }
    const VerificationReport report = verify(file.h, level, f.verify.options());
    out << format_report(report, file.h.field());
    return report.verdict ? kExitPass : kExitProperty;
}

// ---- bounds ----

int cmd_bounds(std::size_t n, std::size_t k, std::size_t d, std::ostream& out) {
    const CodeParams p = derive_params(n, k, d);
    out << "params: n=" << p.n << " k=" << p.k << " delta=" << p.delta << " nu=" << p.nu << " L=" << p.L
        << " M=" << p.M << '\n';
    out << "divisible: " << (p.uniform_rows ? "yes" : "no") << '\n';
    out << "singleton_bound: " << singleton_bound(p) << '\n';
    out << "j column_distance_bound\n";
    for (std::size_t j = 0; j <= p.L; ++j) out << j << ' ' << column_distance_bound(p, j) << '\n';
    if (p.uniform_rows) {
        out << "pascal_char_bound: " << pascal_char_bound(n, k, d) << '\n';
        out << "alpha_N_bound: " << alpha_N_bound(n, k, d) << '\n';
    }
    return kExitPass;
}

// ---- search ----

struct SearchFlags {
    std::size_t n = 0, k = 0, d = 0;
    std::string q;
    std::string minimal;
    std::uint64_t draws = 0;
    std::string budget = "1000000";
    bool count_all = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = default_threads();
    std::string output;
};

FieldPtr field_of_order(const Integer& q) {
    const auto pp = prime_power_decomposition(q);
    if (!pp) throw Error(Errc::invalid_argument, "field order " + to_string(q) + " is not a prime power");
    return std::make_shared<const Field>(pp->second == 1 ? make_prime_field(pp->first)
                                                         : make_extension_field(pp->first, pp->second));
}

void print_search(const SearchResult& r, std::ostream& out) {
    out << "field: " << r.field->describe() << '\n';
    out << "mode: " << (r.exhaustive ? "exhaustive" : "random") << '\n';
    out << "candidates_total: " << r.candidates_total << '\n';
    out << "candidates_tested: " << r.candidates_tested << '\n';
    out << "hits: " << r.hits << '\n';
    if (r.exhaustive) {
        out << "verdict: " << (r.found ? "exists" : "none") << '\n';
    } else {
        out << "verdict: " << (r.found ? "found" : "not found") << '\n';
    }
}

int cmd_search(const SearchFlags& f, std::ostream& out) {
    const Integer budget = integer_flag(f.budget, "budget");
    std::optional<PolyParityMatrix> witness;
    int code = kExitPass;
    if (!f.minimal.empty()) {
        const MinimalFieldResult res =
            minimal_field_search(f.n, f.k, f.d, integer_flag(f.minimal, "minimal"), budget, f.threads);
        for (const auto& r : res.fields) {
            out << "q=" << r.field->order() << " families=" << r.candidates_total << " tested=" << r.candidates_tested
                << " verdict=" << (r.found ? "exists" : "none") << '\n';
        }
        if (res.q) {
            out << "minimal_q: " << *res.q << '\n';
            witness = res.fields.back().witness;
        } else {
            out << "minimal_q: none up to " << f.minimal << '\n';
            code = kExitProperty;
        }
    } else {
        if (f.q.empty()) throw Error(Errc::invalid_argument, "search needs --q or --minimal");
        FieldPtr field = field_of_order(integer_flag(f.q, "q"));
        const SearchResult r = f.draws > 0 ? random_search(f.n, f.k, f.d, field, f.draws, f.seed, f.count_all, f.threads)
                                           : exhaustive_search(f.n, f.k, f.d, field, budget, f.count_all, f.threads);
        print_search(r, out);
        witness = r.witness;
        if (!r.exhaustive && !r.found) code = kExitProperty;
    }
    if (witness) {
        const CodeFile file{{{"construction", "search"}}, *witness};
        if (f.output.empty()) {
            out << "witness:\n" << serialize_code(file);
        } else {
            write_code_file(f.output, file);
            out << "wrote " << f.output << '\n';
        }
    }
    return code;
}

// ---- simulate ----

struct SimulateFlags {
    std::string file;
    std::size_t blocks = 40;
    std::vector<std::string> model{"iid", "0.1"};
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 1;
    bool quiet = false;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
    const CodeFile file = read_code_file(f.file);
    const PolyParityMatrix& h = file.h;
    if (f.blocks < h.nu() + 1) throw Error(Errc::invalid_argument, "need at least nu+1 blocks");
    const std::size_t length = f.blocks * h.n();
    const CodewordSampler sampler(h, f.blocks);

    double rate = 0.0;
    std::size_t burst_start = 0, burst_len = 0;
    const bool iid = f.model.front() == "iid";
    if (iid && f.model.size() == 2) {
        try {
            rate = std::stod(f.model[1]);
        } catch (const std::exception&) {
            throw Error(Errc::invalid_argument, "bad erasure rate '" + f.model[1] + "'");
        }
    } else if (f.model.front() == "burst" && f.model.size() == 3) {
        burst_start = static_cast<std::size_t>(integer_flag(f.model[1], "model burst"));
        burst_len = static_cast<std::size_t>(integer_flag(f.model[2], "model burst"));
    } else {
        throw Error(Errc::invalid_argument, "--model must be 'iid R' or 'burst S L'");
    }

    std::size_t erased_total = 0, recovered_total = 0, worst_wait = 0, mismatches = 0;
    for (std::size_t t = 0; t < f.trials; ++t) {
        const std::uint64_t trial_seed = splitmix(f.seed + t);
        std::mt19937_64 rng(trial_seed);
        const auto word = sampler.sample(rng);
        const ErasurePattern pattern = iid ? make_iid_pattern(length, rate, splitmix(trial_seed))
                                           : make_burst_pattern(length, burst_start, burst_len);
        const DecodeResult res = sliding_decoder(h, word, pattern);
        for (std::size_t i = 0; i < length; ++i) {
            if (res.known[i] && !(res.symbols[i] == word[i])) ++mismatches;
        }
        const auto& s = res.stats;
        erased_total += pattern.erased.size();
        recovered_total += s.recovered;
        worst_wait = std::max(worst_wait, s.max_waiting);
        if (!f.quiet) {
            out << "trial " << t << " erased " << pattern.erased.size() << " recovered " << s.recovered
                << " unrecovered " << s.unrecovered << " windows_attempted " << s.windows_attempted
                << " windows_solved " << s.windows_solved << " max_waiting " << s.max_waiting << '\n';
        }
    }
    out << "trials: " << f.trials << '\n';
    out << "erased_total: " << erased_total << '\n';
    out << "recovered_total: " << recovered_total << '\n';
    out << "mean_recovery_rate: "
        << (erased_total ? static_cast<double>(recovered_total) / static_cast<double>(erased_total) : 1.0) << '\n';
    out << "max_waiting: " << worst_wait << '\n';
    out << "soundness: " << (mismatches ? "violated" : "ok") << '\n';
    return mismatches ? kExitProperty : kExitPass;
}

// ---- distances ----

int cmd_distances(const std::string& path, std::optional<std::size_t> j, const std::string& budget, std::ostream& out) {
    const CodeFile file = read_code_file(path);
    const CodeParams p = params_of(file.h);
    const DistanceProfile prof = distance_profile(file.h, j.value_or(p.L), integer_flag(budget, "budget"));
    for (std::size_t t = 0; t < prof.values.size(); ++t) {
        out << "d_" << t << '=' << prof.values[t] << " bound=" << prof.bounds[t] << '\n';
    }
    out << "singleton_bound: " << prof.singleton_bound << '\n';
    out << "meets_bounds: " << (prof.meets_bounds() ? "yes" : "no") << '\n';
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build, check and exercise convolutional codes with optimal column distances", "cmdp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cmdp 0.1.0");

    ConstructFlags cf;
    auto* construct = app.add_subcommand("construct", "build a code from one of the two constructions");
    construct->add_option("kind", cf.kind, "pascal | alpha")->required()->check(CLI::IsMember({"pascal", "alpha"}));
    construct->add_option("-n", cf.n, "code length")->required();
    construct->add_option("-k", cf.k, "code dimension")->required();
    construct->add_option("-d,--delta", cf.d, "degree")->required();
    construct->add_option("--p", cf.p, "field characteristic");
    construct->add_option("--N", cf.N, "extension degree (alpha)");
    construct->add_option("--modulus", cf.modulus, "modulus coefficients c_0 .. c_N (alpha)");
    construct->add_option("-o,--output", cf.output, "code file to write (default: stdout)");
    construct->add_flag("--force", cf.force, "build the alpha construction below its degree bound");
    cf.verify.add_to(construct, true);

    VerifyCmdFlags vf;
    auto* verify_cmd = app.add_subcommand("verify", "check the MDP, reverse MDP or complete MDP property");
    verify_cmd->add_option("file", vf.file, "code file")->required();
    verify_cmd->add_option("--level", vf.level, "mdp | reverse | complete")
        ->check(CLI::IsMember({"mdp", "reverse", "complete"}));
    vf.verify.add_to(verify_cmd, true);

    std::size_t bn = 0, bk = 0, bd = 0;
    auto* bounds = app.add_subcommand("bounds", "print code parameters and distance bounds");
    bounds->add_option("-n", bn, "code length")->required();
    bounds->add_option("-k", bk, "code dimension")->required();
    bounds->add_option("-d,--delta", bd, "degree")->required();

    SearchFlags sf;
    auto* search = app.add_subcommand("search", "look for complete MDP codes over small fields");
    search->add_option("-n", sf.n, "code length")->required();
    search->add_option("-k", sf.k, "code dimension")->required();
    search->add_option("-d,--delta", sf.d, "degree")->required();
    search->add_option("--q", sf.q, "field order (prime power)");
    search->add_option("--minimal", sf.minimal, "search q = 2, 3, 4, ... up to this order");
    search->add_option("--random", sf.draws, "random draws instead of exhaustive enumeration");
    search->add_option("--budget", sf.budget, "largest number of families enumerated per field");
    search->add_flag("--count-all", sf.count_all, "keep going after the first hit");
    search->add_option("--seed", sf.seed, "seed for random draws");
    search->add_option("--threads", sf.threads, "worker threads")->check(CLI::Range(1, 1024));
    search->add_option("-o,--output", sf.output, "write the witness here");

    SimulateFlags mf;
    auto* simulate = app.add_subcommand("simulate", "sliding-window erasure decoding");
    simulate->add_option("file", mf.file, "code file")->required();
    simulate->add_option("--blocks", mf.blocks, "blocks per transmitted sequence");
    simulate->add_option("--model", mf.model, "iid R | burst S L")->expected(2, 3);
    simulate->add_option("--seed", mf.seed, "base seed");
    simulate->add_option("--trials", mf.trials, "number of trials");
    simulate->add_flag("--quiet", mf.quiet, "only print the aggregate");

    std::string dfile, dbudget = "10000000";
    std::optional<std::size_t> dj;
    auto* distances = app.add_subcommand("distances", "brute-force column distances");
    distances->add_option("file", dfile, "code file")->required();
    distances->add_option("--j", dj, "largest j (default L)");
    distances->add_option("--budget", dbudget, "largest number of kernel windows enumerated");

    // CLI11 consumes arguments from the back; drop the program name.
    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(cf, out, err);
        if (*verify_cmd) return cmd_verify(vf, out);
        if (*bounds) return cmd_bounds(bn, bk, bd, out);
        if (*search) return cmd_search(sf, out);
        if (*simulate) return cmd_simulate(mf, out);
        if (*distances) return cmd_distances(dfile, dj, dbudget, out);
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace cmdp::cli
