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

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hyperstate/hyperstate.hpp"

namespace hyperstate::cli {

enum class VerifyLevel { quick, full };

struct CheckOutcome {
    std::string name;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

namespace verify_detail {

inline StateVector random_state(unsigned n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<amplitude> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = amplitude(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(n, std::move(amps));
}

inline BooleanFunction random_function(unsigned n, std::mt19937_64 &rng) {
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (auto &b : table) {
        b = static_cast<std::uint8_t>(rng() & 1U);
    }
    return BooleanFunction(n, std::move(table));
}

/// Direct definition a_S = XOR over T subset of S of f(T).
inline std::vector<std::uint8_t> naive_mobius(const BooleanFunction &f) {
    const std::size_t dim = f.table().size();
    std::vector<std::uint8_t> a(dim, 0);
    for (std::size_t s = 0; s < dim; ++s) {
        for (std::size_t t = 0; t < dim; ++t) {
            if ((t & ~s) == 0) {
                a[s] ^= f(t);
            }
        }
    }
    return a;
}

inline StateVector canonical_m2_state(unsigned n, unsigned d) {
    return apply_oracle(uniform_superposition(n), grover_m2_solutions(n, d));
}

}  // namespace verify_detail

/// Runs the invariant checks and streams one line per check. Returns all outcomes.
inline std::vector<CheckOutcome> run_verification(VerifyLevel level, std::uint64_t seed, std::ostream &report) {
    using namespace verify_detail;
    const bool full = level == VerifyLevel::full;
    std::vector<CheckOutcome> outcomes;
    std::mt19937_64 rng(seed);

    const auto check = [&](std::string name, double error, double tolerance) {
        CheckOutcome o{std::move(name), error, tolerance, error <= tolerance};
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %s: error=%.3g tol=%.3g", o.passed ? "PASS" : "FAIL", o.name.c_str(),
                      o.error, o.tolerance);
        report << line << '\n' << std::flush;
        outcomes.push_back(std::move(o));
    };

    // core-state
    {
        double norm_err = 0.0;
        double invol_err = 0.0;
        for (unsigned n = 1; n <= (full ? 10U : 5U); ++n) {
            const auto psi = random_state(n, rng);
            const qubit_mask mask = (rng() & full_mask(n)) | 1U;
            const unsigned q = static_cast<unsigned>(rng() % n);
            const SolutionSet sols(n, {rng() & full_mask(n)});
            for (const auto &out : {apply_ckz(psi, mask), apply_pauli_x(psi, q), apply_oracle(psi, sols)}) {
                norm_err = std::max(norm_err, std::abs(out.norm_sq() - 1.0));
            }
            invol_err = std::max(invol_err, max_abs_diff(apply_ckz(apply_ckz(psi, mask), mask), psi));
            invol_err = std::max(invol_err, max_abs_diff(apply_pauli_x(apply_pauli_x(psi, q), q), psi));
            invol_err = std::max(invol_err, max_abs_diff(apply_oracle(apply_oracle(psi, sols), sols), psi));
        }
        check("gate norm preservation", norm_err, 1e-12);
        check("gate involutions", invol_err, 0.0);
    }

    // boolean-anf
    {
        double mismatches = 0.0;
        for (unsigned n = 1; n <= (full ? 8U : 6U); ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto f = random_function(n, rng);
                const auto a = mobius_transform(f);
                const auto naive = naive_mobius(f);
                for (qubit_mask s = 0; s < naive.size(); ++s) {
                    mismatches += (naive[s] != 0) != a.contains(s);
                }
            }
        }
        check("Moebius butterfly vs direct subset sum", mismatches, 0.0);

        double failures = 0.0;
        for (unsigned n = 1; n <= 4; ++n) {
            const std::size_t dim = std::size_t{1} << n;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
                std::vector<std::uint8_t> table(dim);
                for (std::size_t x = 0; x < dim; ++x) {
                    table[x] = static_cast<std::uint8_t>((bits >> x) & 1U);
                }
                const BooleanFunction f(n, std::move(table));
                failures += !(anf_to_function(mobius_transform(f)) == f);
                const bool odd = f.weight() % 2 == 1;
                failures += odd != mobius_transform(f).contains(full_mask(n));
            }
        }
        check("Moebius involution and parity, exhaustive n<=4", failures, 0.0);

        const int trials = full ? 1000 : 200;
        failures = 0.0;
        for (int t = 0; t < trials; ++t) {
            const unsigned n = 1 + static_cast<unsigned>(rng() % (full ? 12 : 8));
            const auto f = random_function(n, rng);
            failures += !(anf_to_function(mobius_transform(f)) == f);
        }
        check("Moebius involution, random functions", failures, 0.0);

        double err = 0.0;
        for (int t = 0; t < (full ? 200 : 50); ++t) {
            const unsigned n = 1 + static_cast<unsigned>(rng() % (full ? 10 : 6));
            const auto f = random_function(n, rng);
            err = std::max(err, max_abs_diff(hypergraph_state(anf_to_hypergraph(mobius_transform(f))),
                                             rew_from_function(f)));
        }
        check("REW state == hypergraph state of its ANF", err, 1e-12);
    }

    // hypergraph
    {
        const unsigned n_hi = full ? 10U : 5U;
        for (unsigned n = 2; n <= n_hi; ++n) {
            const auto m1 = grover_m1_hypergraph(n);
            const auto oracle1 = apply_oracle(uniform_superposition(n), grover_m1_solutions(n));
            check("M=1 hypergraph n=" + std::to_string(n), max_abs_diff(hypergraph_state(m1), oracle1), 1e-12);
            for (unsigned d = 1; d <= n; ++d) {
                const auto h = grover_m2_hypergraph(n, d);
                const auto sols = grover_m2_solutions(n, d);
                const auto from_anf = anf_to_hypergraph(mobius_transform(function_from_solutions(sols)));
                double err = max_abs_diff(hypergraph_state(h), apply_oracle(uniform_superposition(n), sols));
                if (!(h == from_anf) || h.has_edge(full_mask(n))) {
                    err = 1.0;
                }
                check("M=2 hypergraph (state, ANF agreement, no C^nZ) n=" + std::to_string(n) +
                          " d=" + std::to_string(d),
                      err, 1e-12);
            }
        }
    }

    // entanglement
    {
        double err = std::max(std::abs(geometric_measure_m2(2, 1).value), std::abs(geometric_measure_m2(2, 2).value));
        check("n=2 two-solution states are separable", err, 1e-9);
        err = 0.0;
        for (unsigned d = 1; d <= 3; ++d) {
            err = std::max(err, std::abs(geometric_measure_m2(3, d).value - 0.5));
        }
        check("n=3 two-solution states have E=1/2", err, 1e-6);

        err = 0.0;
        const unsigned brute_hi = full ? 5U : 4U;
        for (unsigned n = 2; n <= brute_hi; ++n) {
            const auto b1 =
                geometric_measure_bruteforce(apply_oracle(uniform_superposition(n), grover_m1_solutions(n)));
            err = std::max(err, std::abs(b1.value - geometric_measure_m1(n).value));
            for (unsigned d = 1; d <= n; ++d) {
                const auto b2 = geometric_measure_bruteforce(canonical_m2_state(n, d));
                err = std::max(err, std::abs(b2.value - geometric_measure_m2(n, d).value));
            }
        }
        check("symmetric search == unrestricted search, n<=" + std::to_string(brute_hi), err, 1e-6);

        double violations = 0.0;
        double prev = 1.0;
        for (unsigned n = 2; n <= 12; ++n) {
            const double e = geometric_measure_m1(n).value;
            violations += !(e < prev);
            prev = e;
        }
        check("E(M=1) strictly decreasing n=2..12", violations, 0.0);

        violations = 0.0;
        err = 0.0;
        for (unsigned n = 3; n <= (full ? 10U : 6U); ++n) {
            err = std::max(err, std::abs(geometric_measure_m2(n, 1).value - geometric_measure_m1(n - 1).value));
            if (n < 4) {
                continue;
            }
            double last = -1.0;
            for (unsigned d = 1; d <= n; ++d) {
                const double e = geometric_measure_m2(n, d).value;
                violations += !(e > last);
                last = e;
            }
        }
        check("E(M=2) strictly increasing in d", violations, 0.0);
        check("E(M=2, d=1, n) == E(M=1, n-1)", err, 1e-8);
    }

    // grover-sim
    {
        double err = 0.0;
        for (unsigned n = 2; n <= (full ? 12U : 8U); ++n) {
            for (std::size_t m : {1U, 2U, 4U}) {
                if (m >= (std::size_t{1} << n) / 2) {
                    continue;
                }
                std::vector<basis_index> idx;
                for (std::size_t i = 0; i < m; ++i) {
                    idx.push_back(i * 3 + 1);
                }
                const SolutionSet sols(n, idx);
                const int k_opt = grover_optimal_iterations(n, m);
                const auto trace = run_grover(sols, k_opt);
                for (const auto &step : trace.steps) {
                    err = std::max(err, std::abs(step.success_probability -
                                                 grover_success_closed_form(n, m, step.iteration)));
                }
                err = std::max(err, max_abs_diff(*trace.first_oracle_state,
                                                 rew_from_function(function_from_solutions(sols))));
            }
        }
        check("Grover success probability vs sin^2((2k+1)theta)", err, 1e-10);
    }
    return outcomes;
}

}  // namespace hyperstate::cli
