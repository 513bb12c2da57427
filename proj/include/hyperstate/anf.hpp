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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperstate/errors.hpp"
#include "hyperstate/hypergraph.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

/// Truth table of f: {0,1}^n -> {0,1}; table[x] = f(x) with x read as a basis index.
class BooleanFunction {
   public:
    BooleanFunction(unsigned n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
        check_qubit_count(n);
        if (table_.size() != (std::size_t{1} << n)) {
            throw std::invalid_argument("truth table length must be 2^n");
        }
        if (std::any_of(table_.begin(), table_.end(), [](std::uint8_t b) { return b > 1; })) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
    }

    static BooleanFunction zero(unsigned n) {
        check_qubit_count(n);
        return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
    }

    unsigned arity() const noexcept {
        return n_;
    }
    std::span<const std::uint8_t> table() const noexcept {
        return table_;
    }
    std::uint8_t operator()(basis_index x) const {
        return table_[x];
    }
    std::size_t weight() const {
        return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
    }

    bool operator==(const BooleanFunction &other) const = default;

   private:
    unsigned n_;
    std::vector<std::uint8_t> table_;
};

/// GF(2) polynomial as a sorted set of monomials; the empty mask is the constant term.
class ANF {
   public:
    ANF(unsigned n, std::vector<qubit_mask> monomials) : n_(n), monomials_(std::move(monomials)) {
        check_qubit_count(n);
        std::sort(monomials_.begin(), monomials_.end());
        if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end()) {
            throw validation_error("duplicate monomial");
        }
        if (!monomials_.empty() && monomials_.back() > full_mask(n)) {
            throw validation_error("monomial references a variable beyond the arity");
        }
    }

    unsigned arity() const noexcept {
        return n_;
    }
    std::span<const qubit_mask> monomials() const noexcept {
        return monomials_;
    }
    bool contains(qubit_mask m) const {
        return std::binary_search(monomials_.begin(), monomials_.end(), m);
    }

    bool operator==(const ANF &other) const = default;

   private:
    unsigned n_;
    std::vector<qubit_mask> monomials_;
};

inline BooleanFunction function_from_solutions(const SolutionSet &sols) {
    auto f = BooleanFunction::zero(sols.num_qubits());
    std::vector<std::uint8_t> table(f.table().begin(), f.table().end());
    for (basis_index x : sols.indices()) {
        table[x] = 1;
    }
    return BooleanFunction(sols.num_qubits(), std::move(table));
}

/// In-place GF(2) Moebius butterfly; n * 2^(n-1) XORs. The transform is its own inverse.
inline void mobius_butterfly(std::span<std::uint8_t> table) {
    for (std::size_t stride = 1; stride < table.size(); stride <<= 1) {
        for (std::size_t x = 0; x < table.size(); ++x) {
            if (x & stride) {
                table[x] ^= table[x ^ stride];
            }
        }
    }
}

/// Coefficients a_S with f(x) = XOR over S subset of x of a_S.
inline ANF mobius_transform(const BooleanFunction &f) {
    std::vector<std::uint8_t> coeffs(f.table().begin(), f.table().end());
    mobius_butterfly(coeffs);
    std::vector<qubit_mask> monomials;
    for (qubit_mask s = 0; s < coeffs.size(); ++s) {
        if (coeffs[s]) {
            monomials.push_back(s);
        }
    }
    return ANF(f.arity(), std::move(monomials));
}

inline BooleanFunction anf_to_function(const ANF &a) {
    std::vector<std::uint8_t> table(std::size_t{1} << a.arity(), 0);
    for (qubit_mask m : a.monomials()) {
        table[m] = 1;
    }
    mobius_butterfly(table);
    return BooleanFunction(a.arity(), std::move(table));
}

/// Nonempty monomials become hyperedges; the constant monomial becomes global phase -1.
inline Hypergraph anf_to_hypergraph(const ANF &a) {
    std::vector<qubit_mask> edges;
    int phase = 1;
    for (qubit_mask m : a.monomials()) {
        if (m == 0) {
            phase = -1;
        } else {
            edges.push_back(m);
        }
    }
    return Hypergraph(a.arity(), std::move(edges), phase);
}

inline ANF hypergraph_to_anf(const Hypergraph &h) {
    std::vector<qubit_mask> monomials(h.edges().begin(), h.edges().end());
    if (h.global_phase() < 0) {
        monomials.push_back(0);
    }
    return ANF(h.num_vertices(), std::move(monomials));
}

/// Real equally weighted state: amplitude (-1)^f(x) / sqrt(2^n).
inline StateVector rew_from_function(const BooleanFunction &f) {
    const std::size_t dim = f.table().size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<amplitude> amps(dim);
    for (basis_index x = 0; x < dim; ++x) {
        amps[x] = f(x) ? -scale : scale;
    }
    return StateVector(f.arity(), std::move(amps));
}

}  // namespace hyperstate
