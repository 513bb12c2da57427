// Copyright 2026 The hyperstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperstate/hyperstate.hpp"
#include "verify.hpp"

namespace hyperstate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned kMaxCurveQubits = 16;
inline constexpr unsigned kMaxVerifiedCurveQubits = 5;

/// Raised for bad flag combinations and bad input; maps to exit code 2.
class usage_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// 12 significant digits.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline double round12(double v) {
    return std::strtod(fmt12(v).c_str(), nullptr);
}

inline std::uint64_t parse_seed(const std::string &text) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used, 0);
    } catch (const std::exception &) {
        throw usage_error("invalid seed '" + text + "'");
    }
    if (used != text.size()) {
        throw usage_error("invalid seed '" + text + "'");
    }
    return value;
}

inline std::vector<basis_index> parse_index_list(const std::string &text) {
    std::vector<basis_index> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoull(item, &used, 10));
        } catch (const std::exception &) {
            throw usage_error("invalid solution index '" + item + "'");
        }
        if (used != item.size()) {
            throw usage_error("invalid solution index '" + item + "'");
        }
    }
    if (out.empty()) {
        throw usage_error("--solutions needs at least one index");
    }
    return out;
}

/// Plain-text state file: first line n, then 2^n lines "re im".
inline StateVector read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw usage_error("cannot open state file '" + path + "'");
    }
    unsigned n = 0;
    if (!(in >> n) || n < 1 || n > kMaxQubits) {
        throw usage_error("state file must start with a qubit count in [1, " + std::to_string(kMaxQubits) + "]");
    }
    std::vector<amplitude> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        double re = 0.0;
        double im = 0.0;
        if (!(in >> re >> im)) {
            throw usage_error("state file has fewer than 2^n amplitude lines");
        }
        a = amplitude(re, im);
    }
    std::string extra;
    if (in >> extra) {
        throw usage_error("state file has trailing content");
    }
    StateVector state(n, std::move(amps));
    if (std::abs(state.norm_sq() - 1.0) > 1e-9) {
        throw validation_error("state in '" + path + "' is not normalized (norm^2 = " + fmt12(state.norm_sq()) + ")");
    }
    return state;
}

struct CurveRow {
    unsigned n = 0;
    int m = 1;
    std::optional<unsigned> d;
    EntanglementResult result;
};

inline std::string curve_csv(const std::vector<CurveRow> &rows) {
    std::ostringstream out;
    out << "n,m,d,E,overlap,alpha,beta,gamma,delta\n";
    for (const auto &row : rows) {
        const auto blocks = row.result.optimal.blocks();
        out << row.n << ',' << row.m << ',' << (row.d ? std::to_string(*row.d) : "") << ','
            << fmt12(row.result.value) << ',' << fmt12(row.result.max_overlap_sq) << ',' << fmt12(blocks[0].alpha)
            << ',' << fmt12(blocks[0].beta) << ',';
        if (blocks.size() > 1) {
            out << fmt12(blocks[1].alpha) << ',' << fmt12(blocks[1].beta);
        } else {
            out << ',';
        }
        out << '\n';
    }
    return out.str();
}

struct CurveRequest {
    int m = 1;
    unsigned n_max = 2;
    std::optional<unsigned> d;  // empty means every d
    std::uint64_t seed = kDefaultSeed;
};

inline std::vector<CurveRow> compute_curve(const CurveRequest &req) {
    if (req.m != 1 && req.m != 2) {
        throw usage_error("--m must be 1 or 2");
    }
    if (req.n_max < 2 || req.n_max > kMaxCurveQubits) {
        throw usage_error("--n-max must be in [2, " + std::to_string(kMaxCurveQubits) + "]");
    }
    std::vector<CurveRow> rows;
    for (unsigned n = 2; n <= req.n_max; ++n) {
        if (req.m == 1) {
            rows.push_back(CurveRow{n, 1, std::nullopt, geometric_measure_m1(n)});
            continue;
        }
        for (unsigned d = 1; d <= n; ++d) {
            if (req.d && *req.d != d) {
                continue;
            }
            rows.push_back(CurveRow{n, 2, d, geometric_measure_m2(n, d, restricted_defaults(req.seed))});
        }
    }
    if (rows.empty()) {
        throw usage_error("no rows: --d exceeds --n-max");
    }
    return rows;
}

/// Brute-force cross-check of curve rows with n <= 5. Returns false on any mismatch above 1e-6.
inline bool verify_curve(const std::vector<CurveRow> &rows, std::uint64_t seed, std::ostream &report) {
    bool ok = true;
    for (const auto &row : rows) {
        if (row.n > kMaxVerifiedCurveQubits) {
            continue;
        }
        const auto sols = row.m == 1 ? grover_m1_solutions(row.n) : grover_m2_solutions(row.n, *row.d);
        const auto brute =
            geometric_measure_bruteforce(apply_oracle(uniform_superposition(row.n), sols), bruteforce_defaults(seed));
        const double err = std::abs(brute.value - row.result.value);
        const bool pass = err <= 1e-6;
        ok = ok && pass;
        report << "[" << (pass ? "PASS" : "FAIL") << "] n=" << row.n << " m=" << row.m
               << (row.d ? " d=" + std::to_string(*row.d) : std::string()) << " |E_restricted - E_bruteforce|="
               << fmt12(err) << '\n';
    }
    return ok;
}

inline Hypergraph grover_hypergraph(unsigned n, int m, std::optional<unsigned> d) {
    if (m == 1) {
        if (d) {
            throw usage_error("--d only applies to --m 2");
        }
        return grover_m1_hypergraph(n);
    }
    if (m == 2) {
        if (!d) {
            throw usage_error("--m 2 requires --d");
        }
        return grover_m2_hypergraph(n, *d);
    }
    throw usage_error("--m must be 1 or 2");
}

inline nlohmann::ordered_json measure_json(const std::string &method, unsigned n, const EntanglementResult &r,
                                           std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["method"] = method;
    j["n"] = n;
    j["value"] = round12(r.value);
    j["overlap"] = round12(r.max_overlap_sq);
    j["angles"] = nlohmann::ordered_json::array();
    for (const auto &b : r.optimal.blocks()) {
        j["angles"].push_back({{"size", b.size}, {"alpha", round12(b.alpha)}, {"beta", round12(b.beta)}});
    }
    j["seed"] = seed;
    j["converged"] = r.converged;
    j["starts"] = r.starts_used;
    return j;
}

/// Entry point shared by the executable and the in-process tests.
/// `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grover-state hypergraphs and geometric measure of entanglement", "hyperstate"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string seed_text;
    std::string output_path;
    app.add_option("--seed", seed_text, "64-bit multi-start seed (default 0x5EED, env HYPERSTATE_SEED)");
    app.add_option("--output", output_path, "write the result here instead of stdout");

    int m = 0;
    unsigned n = 0;
    unsigned n_max = 0;
    std::string d_text;
    std::string solutions_text;
    std::string format = "json";
    std::string method = "restricted";
    std::string state_file;
    std::string verify_level = "quick";
    int iterations = -1;
    bool curve_verify = false;

    auto *curve = app.add_subcommand("curve", "E_n against n for one or two solutions, as CSV");
    curve->add_option("--m", m, "number of solutions (1 or 2)")->required();
    curve->add_option("--n-max", n_max, "largest qubit count")->required();
    curve->add_option("--d", d_text, "Hamming distance, or 'all' (m=2 only)");
    curve->add_flag("--verify", curve_verify, "cross-check rows with n<=5 against the unrestricted search");

    auto *hyper = app.add_subcommand("hypergraph", "hypergraph of the canonical Grover state");
    hyper->add_option("--n", n, "qubit count")->required();
    hyper->add_option("--m", m, "number of solutions (1 or 2)")->required();
    hyper->add_option("--d", d_text, "Hamming distance (m=2)");
    hyper->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto *measure = app.add_subcommand("measure", "geometric measure of one state, as JSON");
    measure->add_option("--n", n, "qubit count (with --solutions)");
    auto *sol_opt = measure->add_option("--solutions", solutions_text, "comma-separated solution indices");
    auto *file_opt = measure->add_option("--state-file", state_file, "state file: n, then 2^n lines 're im'");
    sol_opt->excludes(file_opt);
    measure->add_option("--method", method, "restricted or bruteforce")
        ->check(CLI::IsMember({"restricted", "bruteforce"}));

    auto *grover = app.add_subcommand("grover", "Grover success-probability trace, as CSV");
    grover->add_option("--n", n, "qubit count")->required();
    grover->add_option("--solutions", solutions_text, "comma-separated solution indices")->required();
    grover->add_option("--iterations", iterations, "rounds (default: the optimal count)");

    auto *verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--verify-level", verify_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::uint64_t seed = kDefaultSeed;
        if (const char *env = std::getenv("HYPERSTATE_SEED"); env != nullptr && *env != '\0') {
            seed = parse_seed(env);
        }
        if (!seed_text.empty()) {
            seed = parse_seed(seed_text);
        }
        std::optional<unsigned> d;
        bool all_d = false;
        if (d_text == "all") {
            all_d = true;
        } else if (!d_text.empty()) {
            std::size_t used = 0;
            unsigned long value = 0;
            try {
                value = std::stoul(d_text, &used);
            } catch (const std::exception &) {
                throw usage_error("--d must be a positive integer or 'all'");
            }
            if (used != d_text.size() || value == 0) {
                throw usage_error("--d must be a positive integer or 'all'");
            }
            d = static_cast<unsigned>(value);
        }

        std::string text;
        int code = kExitOk;
        if (*curve) {
            if (m == 1 && (d || all_d)) {
                throw usage_error("--d only applies to --m 2");
            }
            const auto rows = compute_curve(CurveRequest{m, n_max, d, seed});
            text = curve_csv(rows);
            if (curve_verify && !verify_curve(rows, seed, err)) {
                code = kExitVerifyFailed;
            }
        } else if (*hyper) {
            if (all_d) {
                throw usage_error("hypergraph needs a single --d");
            }
            text = serialize(grover_hypergraph(n, m, d), parse_hypergraph_format(format));
            if (format == "json") {
                text += '\n';
            }
        } else if (*measure) {
            EntanglementResult result;
            unsigned qubits = 0;
            if (!state_file.empty()) {
                if (method != "bruteforce") {
                    throw usage_error("--state-file requires --method bruteforce");
                }
                const auto state = read_state_file(state_file);
                qubits = state.num_qubits();
                result = geometric_measure_bruteforce(state, bruteforce_defaults(seed));
            } else {
                if (solutions_text.empty() || n == 0) {
                    throw usage_error("measure needs --n with --solutions, or --state-file");
                }
                const SolutionSet sols(n, parse_index_list(solutions_text));
                qubits = n;
                if (method == "bruteforce") {
                    result = geometric_measure_bruteforce(apply_oracle(uniform_superposition(n), sols),
                                                          bruteforce_defaults(seed));
                } else if (sols.count() == 1) {
                    result = geometric_measure_m1(n);
                } else if (sols.count() == 2) {
                    // Pauli-X flips and qubit permutations map any pair to the canonical one.
                    const auto idx = sols.indices();
                    const auto distance = static_cast<unsigned>(std::popcount(idx[0] ^ idx[1]));
                    result = geometric_measure_m2(n, distance, restricted_defaults(seed));
                } else {
                    throw usage_error("--method restricted supports one or two solutions");
                }
            }
            text = measure_json(method, qubits, result, seed).dump() + '\n';
        } else if (*grover) {
            const SolutionSet sols(n, parse_index_list(solutions_text));
            const int k = iterations >= 0 ? iterations : grover_optimal_iterations(n, sols.count());
            std::ostringstream csv;
            csv << "iteration,success_probability\n";
            for (const auto &step : run_grover(sols, k).steps) {
                csv << step.iteration << ',' << fmt12(step.success_probability) << '\n';
            }
            text = csv.str();
        } else if (*verify) {
            std::ostringstream report;
            const auto outcomes =
                run_verification(verify_level == "full" ? VerifyLevel::full : VerifyLevel::quick, seed, report);
            const auto failed = std::count_if(outcomes.begin(), outcomes.end(), [](const auto &o) { return !o.passed; });
            report << outcomes.size() - static_cast<std::size_t>(failed) << '/' << outcomes.size()
                   << " checks passed\n";
            text = report.str();
            code = failed == 0 ? kExitOk : kExitVerifyFailed;
        }

        if (output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file) {
                throw usage_error("cannot write '" + output_path + "'");
            }
            file << text;
        }
        return code;
    } catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const parse_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hyperstate::cli
