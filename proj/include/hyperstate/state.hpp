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
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperstate {

using amplitude = std::complex<double>;
using basis_index = std::uint64_t;
/// Set of qubits packed into index bits: qubit q of an n-qubit register is bit (n - 1 - q).
using qubit_mask = std::uint64_t;

/// Largest register the dense representation accepts (2^24 amplitudes, 256 MiB).
inline constexpr unsigned kMaxQubits = 24;

/// Neumaier-compensated sum of term(item) over a range of real terms.
template <class Range, class Term>
double compensated_sum(const Range &range, Term term) {
    double sum = 0.0;
    double carry = 0.0;
    for (const auto &item : range) {
        const double x = term(item);
        const double t = sum + x;
        carry += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + carry;
}

inline void check_qubit_count(unsigned n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument(
            "qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

/// Index bit of `qubit`. Qubit 0 is the most significant bit, so |110> is index 6 for n = 3.
constexpr qubit_mask qubit_bit(unsigned n, unsigned qubit) {
    return qubit_mask{1} << (n - 1 - qubit);
}

constexpr qubit_mask full_mask(unsigned n) {
    return (qubit_mask{1} << n) - 1;
}

/// Dense amplitude vector over the 2^n computational basis states.
class StateVector {
   public:
    StateVector(unsigned n, std::vector<amplitude> amps) : n_(n), amps_(std::move(amps)) {
        check_qubit_count(n);
        if (amps_.size() != (std::size_t{1} << n)) {
            throw std::invalid_argument(
                "expected " + std::to_string(std::size_t{1} << n) + " amplitudes, got " +
                std::to_string(amps_.size()));
        }
    }

    static StateVector basis(unsigned n, basis_index x) {
        check_qubit_count(n);
        if (x >= (basis_index{1} << n)) {
            throw std::invalid_argument("basis index " + std::to_string(x) + " out of range");
        }
        std::vector<amplitude> amps(std::size_t{1} << n);
        amps[x] = 1.0;
        return StateVector(n, std::move(amps));
    }

    unsigned num_qubits() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    const amplitude &operator[](basis_index x) const {
        return amps_[x];
    }
    std::span<const amplitude> amplitudes() const noexcept {
        return amps_;
    }
    /// Write access for the in-place gate kernels.
    std::span<amplitude> mutable_amplitudes() noexcept {
        return amps_;
    }

    double norm_sq() const {
        return compensated_sum(amps_, [](const amplitude &a) { return std::norm(a); });
    }

    bool operator==(const StateVector &other) const = default;

   private:
    unsigned n_;
    std::vector<amplitude> amps_;
};

/// Marked basis states of a search problem. Indices are kept sorted and unique.
class SolutionSet {
   public:
    SolutionSet(unsigned n, std::vector<basis_index> indices) : n_(n), indices_(std::move(indices)) {
        check_qubit_count(n);
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
        if (indices_.empty()) {
            throw std::invalid_argument("solution set must not be empty");
        }
        if (indices_.back() >= (basis_index{1} << n)) {
            throw std::invalid_argument(
                "solution index " + std::to_string(indices_.back()) + " out of range for " +
                std::to_string(n) + " qubits");
        }
    }

    unsigned num_qubits() const noexcept {
        return n_;
    }
    std::size_t count() const noexcept {
        return indices_.size();
    }
    std::span<const basis_index> indices() const noexcept {
        return indices_;
    }
    bool contains(basis_index x) const {
        return std::binary_search(indices_.begin(), indices_.end(), x);
    }

    bool operator==(const SolutionSet &other) const = default;

   private:
    unsigned n_;
    std::vector<basis_index> indices_;
};

inline StateVector uniform_superposition(unsigned n) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    return StateVector(n, std::vector<amplitude>(dim, amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

inline void apply_oracle_inplace(StateVector &state, const SolutionSet &sols) {
    if (sols.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("solution set and state disagree on qubit count");
    }
    auto amps = state.mutable_amplitudes();
    for (basis_index x : sols.indices()) {
        amps[x] = -amps[x];
    }
}

/// Phase oracle: negates the amplitude of every solution index.
inline StateVector apply_oracle(StateVector state, const SolutionSet &sols) {
    apply_oracle_inplace(state, sols);
    return state;
}

inline void apply_ckz_inplace(StateVector &state, qubit_mask mask) {
    if (mask == 0) {
        throw std::invalid_argument("C^kZ needs at least one qubit");
    }
    if (mask > full_mask(state.num_qubits())) {
        throw std::invalid_argument("C^kZ mask addresses qubits beyond the register");
    }
    auto amps = state.mutable_amplitudes();
    // Enumerate only the indices containing the mask: walk the complement as a submask.
    const qubit_mask free = full_mask(state.num_qubits()) & ~mask;
    qubit_mask sub = free;
    while (true) {
        amps[sub | mask] = -amps[sub | mask];
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & free;
    }
}

/// Multi-controlled Z on the qubits of `mask`: flips the sign where all of them are 1.
inline StateVector apply_ckz(StateVector state, qubit_mask mask) {
    apply_ckz_inplace(state, mask);
    return state;
}

inline void apply_pauli_x_inplace(StateVector &state, unsigned qubit) {
    const unsigned n = state.num_qubits();
    if (qubit >= n) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range");
    }
    const qubit_mask bit = qubit_bit(n, qubit);
    auto amps = state.mutable_amplitudes();
    for (basis_index x = 0; x < amps.size(); ++x) {
        if ((x & bit) == 0) {
            std::swap(amps[x], amps[x | bit]);
        }
    }
}

inline StateVector apply_pauli_x(StateVector state, unsigned qubit) {
    apply_pauli_x_inplace(state, qubit);
    return state;
}

inline void check_permutation(std::span<const unsigned> perm, unsigned n) {
    if (perm.size() != n) {
        throw std::invalid_argument("permutation has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (unsigned p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("not a permutation of the qubit indices");
        }
        seen[p] = true;
    }
}

/// Moves qubit q of `x` to position perm[q]. No validation.
inline basis_index permute_index(basis_index x, unsigned n, std::span<const unsigned> perm) {
    basis_index out = 0;
    for (unsigned q = 0; q < n; ++q) {
        if (x & qubit_bit(n, q)) {
            out |= qubit_bit(n, perm[q]);
        }
    }
    return out;
}

/// Relabels qubits: the amplitude of x lands on the index where qubit q's bit sits at perm[q].
inline StateVector permute_qubits(const StateVector &state, std::span<const unsigned> perm) {
    const unsigned n = state.num_qubits();
    check_permutation(perm, n);
    std::vector<amplitude> out(state.size());
    for (basis_index x = 0; x < state.size(); ++x) {
        out[permute_index(x, n, perm)] = state[x];
    }
    return StateVector(n, std::move(out));
}

/// <a|b>, conjugate-linear in the first argument.
inline amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    amplitude total = 0.0;
    for (basis_index x = 0; x < a.size(); ++x) {
        total += std::conj(a[x]) * b[x];
    }
    return total;
}

inline double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("comparing states with different qubit counts");
    }
    double worst = 0.0;
    for (basis_index x = 0; x < a.size(); ++x) {
        worst = std::max(worst, std::abs(a[x] - b[x]));
    }
    return worst;
}

}  // namespace hyperstate
