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

#include "hyperstate/grover.hpp"

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "hyperstate/anf.hpp"
#include "oracles.hpp"

using namespace hyperstate;

TEST(grover, diffusion_examples) {
    const auto psi0 = uniform_superposition(4);
    EXPECT_LT(max_abs_diff(diffusion(psi0), psi0), 1e-15);

    // (|00> - |11>)/sqrt2 is orthogonal to psi_0.
    const double r = 1 / std::sqrt(2.0);
    const StateVector orth(2, {r, 0.0, 0.0, -r});
    EXPECT_LT(max_abs_diff(diffusion(orth), StateVector(2, {-r, 0.0, 0.0, r})), 1e-15);

    std::mt19937_64 rng(81);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 1 + rng() % 8;
        std::vector<amplitude> amps(std::size_t{1} << n);
        double norm = 0;
        for (auto &a : amps) {
            a = {g(rng), g(rng)};
            norm += std::norm(a);
        }
        for (auto &a : amps) {
            a /= std::sqrt(norm);
        }
        const StateVector psi(n, amps);
        EXPECT_LT(max_abs_diff(diffusion(diffusion(psi)), psi), 1e-12);
        EXPECT_LT(std::abs(diffusion(psi).norm_sq() - 1.0), 1e-12);
    }
}

TEST(grover, two_qubits_one_round_succeeds) {
    // Oracle on |11>: (1,1,1,-1)/2, mean 1/4, inversion gives (0,0,0,1).
    const auto trace = run_grover(SolutionSet(2, {3}), 1);
    ASSERT_EQ(trace.steps.size(), 2U);
    EXPECT_NEAR(trace.steps[1].success_probability, 1.0, 1e-12);
}

TEST(grover, zero_rounds) {
    const auto trace = run_grover(SolutionSet(5, {1, 9, 30}), 0);
    ASSERT_EQ(trace.steps.size(), 1U);
    EXPECT_NEAR(trace.steps[0].success_probability, 3.0 / 32.0, 1e-15);
    EXPECT_FALSE(trace.first_oracle_state.has_value());
}

TEST(grover, ten_qubits_optimal_rounds) {
    const unsigned n = 10;
    const int k = static_cast<int>(std::lround(std::numbers::pi / 4 * std::sqrt(1024.0)));
    const auto trace = run_grover(SolutionSet(n, {777}), k);
    EXPECT_GT(trace.steps.back().success_probability, 0.99);
    EXPECT_NEAR(trace.steps.back().success_probability, oracle::grover_success(n, 1, k), 1e-10);
}

TEST(grover, matches_rotation_closed_form) {
    for (unsigned n = 2; n <= 12; ++n) {
        for (std::size_t m : {1U, 2U, 4U}) {
            if (2 * m >= (std::size_t{1} << n)) {
                continue;
            }
            std::vector<basis_index> idx;
            for (std::size_t i = 0; i < m; ++i) {
                idx.push_back((i * 5 + 2) & full_mask(n));
            }
            const SolutionSet sols(n, idx);
            ASSERT_EQ(sols.count(), m);
            const int k_opt = grover_optimal_iterations(n, m);
            const auto trace = run_grover(sols, k_opt + 1, true);
            for (const auto &step : trace.steps) {
                EXPECT_NEAR(step.success_probability, oracle::grover_success(n, m, step.iteration), 1e-10);
                EXPECT_NEAR(grover_success_closed_form(n, m, step.iteration),
                            oracle::grover_success(n, m, step.iteration), 1e-12);
                ASSERT_TRUE(step.snapshot.has_value());
                EXPECT_LT(std::abs(step.snapshot->norm_sq() - 1.0), 1e-12);
                EXPECT_GE(step.success_probability, 0.0);
                EXPECT_LE(step.success_probability, 1.0 + 1e-12);
            }
        }
    }
}

TEST(grover, first_oracle_state_is_rew_state) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + rng() % 8;
        const SolutionSet sols(n, {rng() & full_mask(n), rng() & full_mask(n)});
        const auto trace = run_grover(sols, 2);
        ASSERT_TRUE(trace.first_oracle_state.has_value());
        EXPECT_EQ(*trace.first_oracle_state, rew_from_function(function_from_solutions(sols)));
    }
}

TEST(grover, errors) {
    EXPECT_THROW(run_grover(SolutionSet(2, {1}), -1), std::invalid_argument);
    EXPECT_THROW(run_grover(SolutionSet(1, {0, 1}), 1), std::invalid_argument);
}
