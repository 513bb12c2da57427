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
#include <nlohmann/json.hpp>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperstate/errors.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

inline std::vector<unsigned> vertices_of(unsigned n, qubit_mask mask) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v < n; ++v) {
        if (mask & qubit_bit(n, v)) {
            out.push_back(v);
        }
    }
    return out;
}

inline qubit_mask mask_of(unsigned n, std::span<const unsigned> vertices) {
    qubit_mask mask = 0;
    for (unsigned v : vertices) {
        if (v >= n) {
            throw validation_error("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
        }
        mask |= qubit_bit(n, v);
    }
    return mask;
}

/// Canonical hyperedge order: by order (popcount), then lexicographically by sorted vertex list.
/// With qubit 0 on the high bit, the second key is descending mask value.
constexpr bool canonical_edge_less(qubit_mask a, qubit_mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) {
        return pa < pb;
    }
    return a > b;
}

/// n vertices, a set of hyperedges (nonempty vertex subsets) and a global sign.
///
/// Edges are stored as qubit masks in canonical order; construction rejects empty, duplicate
/// and out-of-range edges so every Hypergraph value is canonical.
class Hypergraph {
   public:
    explicit Hypergraph(unsigned n, std::vector<qubit_mask> edges = {}, int global_phase = 1)
        : n_(n), edges_(std::move(edges)), phase_(global_phase) {
        if (n < 1 || n > 63) {
            throw validation_error("vertex count " + std::to_string(n) + " out of range");
        }
        if (phase_ != 1 && phase_ != -1) {
            throw validation_error("global phase must be +1 or -1");
        }
        for (qubit_mask e : edges_) {
            if (e == 0) {
                throw validation_error("empty hyperedge");
            }
            if (e > full_mask(n)) {
                throw validation_error("hyperedge references a vertex beyond " + std::to_string(n - 1));
            }
        }
        std::sort(edges_.begin(), edges_.end(), canonical_edge_less);
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw validation_error("duplicate hyperedge");
        }
    }

    unsigned num_vertices() const noexcept {
        return n_;
    }
    std::span<const qubit_mask> edges() const noexcept {
        return edges_;
    }
    int global_phase() const noexcept {
        return phase_;
    }
    bool has_edge(qubit_mask e) const {
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }
    /// Hyperedge orders in canonical order.
    std::vector<int> edge_orders() const {
        std::vector<int> out;
        for (qubit_mask e : edges_) {
            out.push_back(std::popcount(e));
        }
        return out;
    }

    bool operator==(const Hypergraph &other) const = default;

   private:
    unsigned n_;
    std::vector<qubit_mask> edges_;
    int phase_;
};

/// global_phase * prod_e C^eZ |+>^n.
inline StateVector hypergraph_state(const Hypergraph &h) {
    StateVector state = uniform_superposition(h.num_vertices());
    for (qubit_mask e : h.edges()) {
        apply_ckz_inplace(state, e);
    }
    if (h.global_phase() < 0) {
        for (auto &a : state.mutable_amplitudes()) {
            a = -a;
        }
    }
    return state;
}

/// Renames vertex v to perm[v].
inline Hypergraph relabel(const Hypergraph &h, std::span<const unsigned> perm) {
    const unsigned n = h.num_vertices();
    check_permutation(perm, n);
    std::vector<qubit_mask> edges;
    for (qubit_mask e : h.edges()) {
        edges.push_back(permute_index(e, n, perm));
    }
    return Hypergraph(n, std::move(edges), h.global_phase());
}

/// Solution set of the canonical single-solution search: |1...1>.
inline SolutionSet grover_m1_solutions(unsigned n) {
    return SolutionSet(n, {full_mask(n)});
}

/// Solutions (|0...0>_d + |1...1>_d)|1...1>_{n-d}: the two strings differ in the first d qubits.
inline SolutionSet grover_m2_solutions(unsigned n, unsigned d) {
    if (n < 2 || d < 1 || d > n) {
        throw std::invalid_argument("need n >= 2 and 1 <= d <= n");
    }
    return SolutionSet(n, {full_mask(n - d), full_mask(n)});
}

/// One hyperedge spanning every vertex.
inline Hypergraph grover_m1_hypergraph(unsigned n) {
    check_qubit_count(n);
    return Hypergraph(n, {full_mask(n)});
}

/// Hypergraph of the two-solution state with Hamming distance d.
///
/// G is the group of the last n - d vertices and D the first d. The edges are G together with
/// every G | S for S a nonempty proper subset of D; the full mask never occurs. For d = n the
/// group is empty, so the constant term becomes the global phase -1.
inline Hypergraph grover_m2_hypergraph(unsigned n, unsigned d) {
    if (n < 2 || n > kMaxQubits) {
        throw std::invalid_argument("grover_m2_hypergraph needs 2 <= n <= " + std::to_string(kMaxQubits));
    }
    if (d < 1 || d > n) {
        throw std::invalid_argument("Hamming distance must satisfy 1 <= d <= n");
    }
    const qubit_mask group = full_mask(n - d);
    const qubit_mask first = full_mask(n) & ~group;
    std::vector<qubit_mask> edges;
    int phase = 1;
    if (group != 0) {
        edges.push_back(group);
    } else {
        phase = -1;
    }
    // Nonempty proper submasks of `first`.
    for (qubit_mask s = (first - 1) & first; s != 0; s = (s - 1) & first) {
        edges.push_back(group | s);
    }
    return Hypergraph(n, std::move(edges), phase);
}

enum class HypergraphFormat { json, dot };

inline HypergraphFormat parse_hypergraph_format(std::string_view name) {
    if (name == "json") {
        return HypergraphFormat::json;
    }
    if (name == "dot") {
        return HypergraphFormat::dot;
    }
    throw std::invalid_argument("unknown hypergraph format '" + std::string(name) + "'");
}

inline nlohmann::ordered_json to_json(const Hypergraph &h) {
    nlohmann::ordered_json j;
    j["n"] = h.num_vertices();
    j["phase"] = h.global_phase();
    j["edges"] = nlohmann::ordered_json::array();
    for (qubit_mask e : h.edges()) {
        j["edges"].push_back(vertices_of(h.num_vertices(), e));
    }
    return j;
}

inline std::string to_dot(const Hypergraph &h) {
    const unsigned n = h.num_vertices();
    std::ostringstream out;
    out << "graph hypergraph {\n";
    out << "  label=\"n=" << n << " phase=" << (h.global_phase() > 0 ? "+1" : "-1") << "\";\n";
    std::vector<bool> local_z(n, false);
    for (qubit_mask e : h.edges()) {
        if (std::popcount(e) == 1) {
            local_z[vertices_of(n, e)[0]] = true;
        }
    }
    for (unsigned v = 0; v < n; ++v) {
        out << "  q" << v << " [shape=circle, label=\"" << v << "\"";
        if (local_z[v]) {
            out << ", style=filled, fillcolor=black, fontcolor=white, z=1";
        }
        out << "];\n";
    }
    int aux = 0;
    for (qubit_mask e : h.edges()) {
        const auto vs = vertices_of(n, e);
        if (vs.size() == 2) {
            out << "  q" << vs[0] << " -- q" << vs[1] << ";\n";
        } else if (vs.size() >= 3) {
            out << "  e" << aux << " [shape=point, xlabel=\"k=" << vs.size() << "\"];\n";
            for (unsigned v : vs) {
                out << "  e" << aux << " -- q" << v << " [style=dashed];\n";
            }
            ++aux;
        }
    }
    out << "}\n";
    return out.str();
}

inline std::string serialize(const Hypergraph &h, HypergraphFormat format) {
    switch (format) {
        case HypergraphFormat::json:
            return to_json(h).dump();
        case HypergraphFormat::dot:
            return to_dot(h);
    }
    throw std::invalid_argument("unknown hypergraph format");
}

/// Parses the JSON interchange form {"n": int, "phase": +-1, "edges": [[vertex, ...], ...]}.
inline Hypergraph parse_hypergraph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw parse_error(e.what(), e.byte);
    }
    if (!j.is_object()) {
        throw validation_error("hypergraph JSON must be an object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "n" && key != "phase" && key != "edges") {
            throw validation_error("unexpected key '" + key + "'");
        }
    }
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1 ||
        j["n"].get<long long>() > 63) {
        throw validation_error("'n' must be an integer in [1, 63]");
    }
    if (!j.contains("phase") || !j["phase"].is_number_integer() ||
        (j["phase"].get<long long>() != 1 && j["phase"].get<long long>() != -1)) {
        throw validation_error("'phase' must be 1 or -1");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw validation_error("'edges' must be an array");
    }
    const auto n = j["n"].get<unsigned>();
    std::vector<qubit_mask> edges;
    for (const auto &edge : j["edges"]) {
        if (!edge.is_array() || edge.empty()) {
            throw validation_error("each edge must be a nonempty array of vertices");
        }
        qubit_mask mask = 0;
        for (const auto &v : edge) {
            if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= n) {
                throw validation_error("edge vertex out of range");
            }
            const qubit_mask bit = qubit_bit(n, v.get<unsigned>());
            if (mask & bit) {
                throw validation_error("vertex repeated within an edge");
            }
            mask |= bit;
        }
        edges.push_back(mask);
    }
    return Hypergraph(n, std::move(edges), j["phase"].get<int>());
}

}  // namespace hyperstate
