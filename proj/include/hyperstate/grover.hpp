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

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperstate/state.hpp"

namespace hyperstate {

inline void diffusion_inplace(StateVector &state) {
    auto amps = state.mutable_amplitudes();
    const double dim = static_cast<double>(amps.size());
    const amplitude mean(compensated_sum(amps, [](const amplitude &a) { return a.real(); }) / dim,
                         compensated_sum(amps, [](const amplitude &a) { return a.imag(); }) / dim);
    for (auto &a : amps) {
        a = 2.0 * mean - a;
    }
}

/// Inversion about the mean, (2|psi_0><psi_0| - 1)|state>.
inline StateVector diffusion(StateVector state) {
    diffusion_inplace(state);
    return state;
}

inline double success_probability(const StateVector &state, const SolutionSet &sols) {
    double p = 0.0;
    for (basis_index x : sols.indices()) {
        p += std::norm(state[x]);
    }
    return p;
}

struct GroverStep {
    int iteration = 0;
    double success_probability = 0.0;
    std::optional<StateVector> snapshot;
};

struct GroverTrace {
    SolutionSet solutions;
    /// Entry k holds the state after k oracle + diffusion rounds; entry 0 is psi_0.
    std::vector<GroverStep> steps;
    /// The state right after the first oracle call, before any diffusion.
    std::optional<StateVector> first_oracle_state;
};

/// Runs `iterations` Grover rounds from the uniform superposition.
inline GroverTrace run_grover(const SolutionSet &sols, int iterations, bool keep_snapshots = false) {
    if (iterations < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    const unsigned n = sols.num_qubits();
    if (sols.count() >= (std::size_t{1} << n)) {
        throw std::invalid_argument("every basis state is a solution; need M < 2^n");
    }
    GroverTrace trace{sols, {}, std::nullopt};
    StateVector state = uniform_superposition(n);
    const auto record = [&](int k) {
        GroverStep step{k, success_probability(state, sols), std::nullopt};
        if (keep_snapshots) {
            step.snapshot = state;
        }
        trace.steps.push_back(std::move(step));
    };
    record(0);
    for (int k = 1; k <= iterations; ++k) {
        apply_oracle_inplace(state, sols);
        if (k == 1) {
            trace.first_oracle_state = state;
        }
        diffusion_inplace(state);
        record(k);
    }
    return trace;
}

/// sin^2((2k + 1) theta) with sin(theta) = sqrt(M / 2^n).
inline double grover_success_closed_form(unsigned n, std::size_t m, int k) {
    const double theta = std::asin(std::sqrt(static_cast<double>(m) / std::ldexp(1.0, static_cast<int>(n))));
    const double s = std::sin((2.0 * k + 1.0) * theta);
    return s * s;
}

/// round(pi / (4 theta) - 1/2), the iteration count closest to full success.
inline int grover_optimal_iterations(unsigned n, std::size_t m) {
    const double theta = std::asin(std::sqrt(static_cast<double>(m) / std::ldexp(1.0, static_cast<int>(n))));
    return static_cast<int>(std::lround(std::acos(-1.0) / (4.0 * theta) - 0.5));
}

}  // namespace hyperstate
