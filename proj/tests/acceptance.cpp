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

// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperstate/hyperstate.hpp"
#include "oracles.hpp"

using namespace hyperstate;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

/// Runs the CLI binary and captures stdout; `status` receives the exit status.
std::string run_binary(const std::string &args, int &status) {
    const std::string cmd = std::string(HYPERSTATE_BINARY) + " " + args;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    status = pclose(pipe);
    return out;
}

StateVector m1_state(unsigned n) {
    return apply_oracle(uniform_superposition(n), grover_m1_solutions(n));
}

StateVector m2_state(unsigned n, unsigned d) {
    return apply_oracle(uniform_superposition(n), grover_m2_solutions(n, d));
}

Verdict two_qubit_separability() {
    double err = 0;
    for (unsigned d = 1; d <= 2; ++d) {
        err = std::max(err, std::abs(geometric_measure_m2(2, d).value));
    }
    return {err <= 1e-9, "max |E| = " + sci(err) + " (tol 1e-9)"};
}

Verdict three_qubit_collapse() {
    double err = 0;
    for (unsigned d = 1; d <= 3; ++d) {
        err = std::max(err, std::abs(geometric_measure_m2(3, d).value - 0.5));
    }
    return {err <= 1e-6, "max |E - 1/2| = " + sci(err) + " (tol 1e-6)"};
}

Verdict oracle_agreement() {
    double err = 0;
    int states = 0;
    for (unsigned n = 2; n <= 5; ++n) {
        err = std::max(err, std::abs(geometric_measure_m1(n).value - geometric_measure_bruteforce(m1_state(n)).value));
        ++states;
        for (unsigned d = 1; d <= n; ++d) {
            err = std::max(err, std::abs(geometric_measure_m2(n, d).value -
                                         geometric_measure_bruteforce(m2_state(n, d)).value));
            ++states;
        }
    }
    return {err <= 1e-6, std::to_string(states) + " states, max |E_sym - E_brute| = " + sci(err) + " (tol 1e-6)"};
}

Verdict monotonic_decay() {
    std::vector<double> e;
    for (unsigned n = 2; n <= 12; ++n) {
        e.push_back(geometric_measure_m1(n).value);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < e.size(); ++i) {
        decreasing = decreasing && e[i] < e[i - 1];
    }
    const bool ratio = e.back() < 0.1 * e.front();
    return {decreasing && ratio, std::string("strictly decreasing: ") + (decreasing ? "yes" : "no") +
                                     ", E_12/E_2 = " + sci(e.back() / e.front()) + " (< 0.1)"};
}

Verdict distance_ordering() {
    int violations = 0;
    for (unsigned n = 4; n <= 10; ++n) {
        double prev = -1;
        for (unsigned d = 1; d <= n; ++d) {
            const double e = geometric_measure_m2(n, d).value;
            violations += !(e > prev);
            prev = e;
        }
    }
    return {violations == 0, std::to_string(violations) + " ordering violations for n=4..10"};
}

Verdict distance_one_reduction() {
    double err = 0;
    for (unsigned n = 3; n <= 10; ++n) {
        err = std::max(err, std::abs(geometric_measure_m2(n, 1).value - geometric_measure_m1(n - 1).value));
    }
    return {err <= 1e-8, "max |E(M=2,d=1,n) - E(M=1,n-1)| = " + sci(err) + " (tol 1e-8)"};
}

Verdict hypergraph_soundness() {
    double err = 0;
    int full_edges = 0;
    int anf_mismatch = 0;
    for (unsigned n = 2; n <= 10; ++n) {
        err = std::max(err, max_abs_diff(hypergraph_state(grover_m1_hypergraph(n)), m1_state(n)));
        anf_mismatch += !(grover_m1_hypergraph(n) ==
                          anf_to_hypergraph(mobius_transform(function_from_solutions(grover_m1_solutions(n)))));
        for (unsigned d = 1; d <= n; ++d) {
            const auto h = grover_m2_hypergraph(n, d);
            err = std::max(err, max_abs_diff(hypergraph_state(h), m2_state(n, d)));
            full_edges += h.has_edge(full_mask(n));
            anf_mismatch +=
                !(h == anf_to_hypergraph(mobius_transform(function_from_solutions(grover_m2_solutions(n, d)))));
        }
    }
    return {err <= 1e-12 && full_edges == 0 && anf_mismatch == 0,
            "max amplitude error " + sci(err) + ", C^nZ edges " + std::to_string(full_edges) + ", ANF mismatches " +
                std::to_string(anf_mismatch)};
}

Verdict figure_two() {
    // Order multisets of the four-qubit two-solution hypergraphs, d = 1..4.
    const std::map<unsigned, std::vector<int>> expected{
        {1, {3}},
        {2, {2, 3, 3}},
        {3, {1, 2, 2, 2, 3, 3, 3}},
        {4, {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3}},
    };
    std::string detail;
    bool ok = true;
    for (const auto &[d, orders] : expected) {
        int status = 0;
        const auto text = run_binary("hypergraph --n 4 --m 2 --d " + std::to_string(d), status);
        if (status != 0) {
            return {false, "CLI exited with status " + std::to_string(status)};
        }
        const auto h = parse_hypergraph(text);
        auto got = h.edge_orders();
        std::sort(got.begin(), got.end());
        const bool match = got == orders;
        ok = ok && match;
        detail += "d=" + std::to_string(d) + (match ? " ok " : " MISMATCH ");
        if (d == 4) {
            int faces = 0;
            for (qubit_mask e : h.edges()) {
                faces += std::popcount(e) == 3;
            }
            const bool all_faces = faces == 4 && h.global_phase() == -1;
            ok = ok && all_faces;
            detail += "(order-3 faces " + std::to_string(faces) + ", phase " + std::to_string(h.global_phase()) + ")";
        }
    }
    return {ok, detail};
}

Verdict bijection_round_trips() {
    int failures = 0;
    for (unsigned n = 1; n <= 4; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
            std::vector<std::uint8_t> table(dim);
            for (std::size_t x = 0; x < dim; ++x) {
                table[x] = static_cast<std::uint8_t>((bits >> x) & 1U);
            }
            const BooleanFunction f(n, table);
            failures += !(anf_to_function(mobius_transform(f)) == f);
        }
    }
    std::mt19937_64 rng(0xACCE);
    for (int t = 0; t < 1000; ++t) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
        const BooleanFunction f(n, oracle::random_table(n, rng));
        failures += !(anf_to_function(mobius_transform(f)) == f);
    }
    double err = 0;
    for (int t = 0; t < 200; ++t) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
        const BooleanFunction f(n, oracle::random_table(n, rng));
        err = std::max(err, max_abs_diff(hypergraph_state(anf_to_hypergraph(mobius_transform(f))),
                                         rew_from_function(f)));
    }
    return {failures == 0 && err <= 1e-12,
            std::to_string(failures) + " involution failures, max REW/hypergraph error " + sci(err)};
}

Verdict lu_invariance() {
    std::mt19937_64 rng(0x10CA1);
    double err = 0;
    for (int t = 0; t < 50; ++t) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 4);
        const auto psi = (t % 3 == 0) ? m1_state(n) : m2_state(n, 1 + static_cast<unsigned>(rng() % n));
        auto moved = psi;
        for (unsigned q = 0; q < n; ++q) {
            if (rng() & 1U) {
                moved = apply_pauli_x(moved, q);
            }
        }
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 0U);
        std::shuffle(perm.begin(), perm.end(), rng);
        moved = permute_qubits(moved, perm);
        err = std::max(err, std::abs(geometric_measure_bruteforce(moved).value -
                                     geometric_measure_bruteforce(psi).value));
    }
    return {err <= 1e-6, "50 trials, max |dE| = " + sci(err) + " (tol 1e-6)"};
}

Verdict grover_sanity() {
    double err = 0;
    int traces = 0;
    for (unsigned n = 2; n <= 12; ++n) {
        for (std::size_t m : {1U, 2U, 4U}) {
            if (2 * m >= (std::size_t{1} << n)) {
                continue;
            }
            std::vector<basis_index> idx;
            for (std::size_t i = 0; i < m; ++i) {
                idx.push_back(full_mask(n) - 3 * i);
            }
            const SolutionSet sols(n, idx);
            const double theta = std::asin(std::sqrt(static_cast<double>(m) / std::pow(2.0, n)));
            const int k_opt = static_cast<int>(std::lround(std::acos(-1.0) / (4 * theta) - 0.5));
            for (const auto &step : run_grover(sols, k_opt).steps) {
                err = std::max(err, std::abs(step.success_probability - oracle::grover_success(n, m, step.iteration)));
            }
            ++traces;
        }
    }
    return {err <= 1e-10, std::to_string(traces) + " traces, max error " + sci(err) + " (tol 1e-10)"};
}

Verdict determinism() {
    int s1 = 0;
    int s2 = 0;
    const std::string args = "curve --m 2 --n-max 8 --d all --seed 42";
    const auto a = run_binary(args, s1);
    const auto b = run_binary(args, s2);
    const bool ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    return {ok, std::to_string(a.size()) + " bytes, identical: " + (a == b ? "yes" : "no")};
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Verdict()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "n=2 two-solution separability", 1, two_qubit_separability},
        {2, "n=3 two-solution collapse to 1/2", 5, three_qubit_collapse},
        {3, "symmetric optimizers match unrestricted search (n<=5)", 300, oracle_agreement},
        {4, "E(M=1) decays monotonically, E_12 < 0.1 E_2", 30, monotonic_decay},
        {5, "E(M=2) strictly increasing in Hamming distance (n=4..10)", 300, distance_ordering},
        {6, "d=1 reduction E(M=2,d=1,n) = E(M=1,n-1)", 60, distance_one_reduction},
        {7, "hypergraph soundness (n=2..10)", 30, hypergraph_soundness},
        {8, "four-qubit hypergraph order multisets", 1, figure_two},
        {9, "Moebius / REW-hypergraph round trips", 60, bijection_round_trips},
        {10, "local-unitary invariance of unrestricted E", 600, lu_invariance},
        {11, "Grover success probability closed form", 30, grover_sanity},
        {12, "curve output byte-identical across runs", 120, determinism},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs < c.budget_seconds;
        const bool pass = v.pass && in_budget;
        failed += !pass;
        std::printf("[%s] %2d. %s: %s; %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    v.detail.c_str(), secs, c.budget_seconds);
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
