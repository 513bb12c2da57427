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
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperstate/errors.hpp"
#include "hyperstate/optimize.hpp"
#include "hyperstate/state.hpp"

namespace hyperstate {

/// Largest register accepted by the unrestricted product-state search.
inline constexpr unsigned kMaxBruteforceQubits = 7;
/// The closed-form overlaps only need 2^n as a double.
inline constexpr unsigned kMaxRestrictedQubits = 60;

/// `size` copies of cos(alpha/2)|0> + e^{i beta} sin(alpha/2)|1>.
struct AnsatzBlock {
    unsigned size = 1;
    double alpha = 0.0;
    double beta = 0.0;

    bool operator==(const AnsatzBlock &) const = default;
};

inline std::array<amplitude, 2> qubit_state(double alpha, double beta) {
    return {amplitude(std::cos(alpha / 2.0), 0.0), std::polar(std::sin(alpha / 2.0), beta)};
}

/// Block-symmetric product state; block i covers the next `size` qubits, qubit 0 first.
class ProductAnsatz {
   public:
    ProductAnsatz() = default;
    explicit ProductAnsatz(std::vector<AnsatzBlock> blocks) : blocks_(std::move(blocks)) {
        for (const auto &b : blocks_) {
            if (b.size == 0) {
                throw std::invalid_argument("ansatz block must cover at least one qubit");
            }
            if (!(b.alpha >= 0.0 && b.alpha <= std::numbers::pi)) {
                throw std::invalid_argument("alpha outside [0, pi]");
            }
            if (!(b.beta >= 0.0 && b.beta < 2.0 * std::numbers::pi)) {
                throw std::invalid_argument("beta outside [0, 2pi)");
            }
        }
    }

    std::span<const AnsatzBlock> blocks() const noexcept {
        return blocks_;
    }
    unsigned num_qubits() const {
        unsigned n = 0;
        for (const auto &b : blocks_) {
            n += b.size;
        }
        return n;
    }

    StateVector state() const {
        std::vector<amplitude> amps{amplitude(1.0, 0.0)};
        for (const auto &b : blocks_) {
            const auto phi = qubit_state(b.alpha, b.beta);
            for (unsigned k = 0; k < b.size; ++k) {
                std::vector<amplitude> next(amps.size() * 2);
                for (std::size_t x = 0; x < amps.size(); ++x) {
                    next[2 * x] = amps[x] * phi[0];
                    next[2 * x + 1] = amps[x] * phi[1];
                }
                amps = std::move(next);
            }
        }
        return StateVector(num_qubits(), std::move(amps));
    }

    bool operator==(const ProductAnsatz &) const = default;

   private:
    std::vector<AnsatzBlock> blocks_;
};

struct EntanglementResult {
    /// E_n = 1 - max_overlap_sq.
    double value = 0.0;
    double max_overlap_sq = 1.0;
    ProductAnsatz optimal;
    std::size_t starts_used = 0;
    bool converged = true;
    double residual = 0.0;

    bool operator==(const EntanglementResult &) const = default;
};

namespace detail {

inline EntanglementResult make_result(double overlap_sq, ProductAnsatz optimal, std::size_t starts, bool converged,
                                      double residual) {
    EntanglementResult r;
    r.max_overlap_sq = std::clamp(overlap_sq, 0.0, 1.0);
    r.value = 1.0 - r.max_overlap_sq;
    r.optimal = std::move(optimal);
    r.starts_used = starts;
    r.converged = converged;
    r.residual = residual;
    return r;
}

inline double canonical_beta(double beta) {
    return wrap_or_clamp(beta, azimuth_angle);
}

/// At alpha = 0 or pi the azimuth only contributes a global phase; report it as 0.
inline AnsatzBlock block(unsigned size, double alpha, double beta) {
    if (alpha == 0.0 || alpha == std::numbers::pi) {
        beta = 0.0;
    }
    return AnsatzBlock{size, alpha, beta};
}

}  // namespace detail

/// |<psi_{M=1}| phi^{(x)n}>|^2 for the single solution |1...1>:
/// |(cos(a/2) + e^{ib} sin(a/2))^n - 2 e^{inb} sin^n(a/2)|^2 / 2^n.
inline double overlap_m1(unsigned n, double alpha, double beta) {
    const double c = std::cos(alpha / 2.0);
    const double s = std::sin(alpha / 2.0);
    const amplitude sum = std::pow(amplitude(c, 0.0) + std::polar(s, beta), static_cast<int>(n));
    const amplitude marked = 2.0 * std::polar(std::pow(s, static_cast<double>(n)), static_cast<double>(n) * beta);
    return std::norm(sum - marked) / std::ldexp(1.0, static_cast<int>(n));
}

/// Squared overlap of the two-solution state (Hamming distance d) with
/// phi(alpha, beta)^{(x)d} (x) phi(gamma, delta)^{(x)(n-d)}.
inline double overlap_m2(unsigned n, unsigned d, double alpha, double beta, double gamma, double delta) {
    if (d < 1 || d > n) {
        throw std::invalid_argument("Hamming distance must satisfy 1 <= d <= n");
    }
    const int nd = static_cast<int>(n - d);
    const double ca = std::cos(alpha / 2.0);
    const double sa = std::sin(alpha / 2.0);
    const double cg = std::cos(gamma / 2.0);
    const double sg = std::sin(gamma / 2.0);
    const amplitude sum = std::pow(amplitude(ca, 0.0) + std::polar(sa, beta), static_cast<int>(d)) *
                          std::pow(amplitude(cg, 0.0) + std::polar(sg, delta), nd);
    const amplitude tail = std::polar(std::pow(sg, static_cast<double>(nd)), static_cast<double>(nd) * delta);
    const amplitude head = std::pow(ca, static_cast<double>(d)) +
                           std::polar(std::pow(sa, static_cast<double>(d)), static_cast<double>(d) * beta);
    return std::norm(sum - 2.0 * tail * head) / std::ldexp(1.0, static_cast<int>(n));
}

/// E_n of the single-solution state with the symmetric ansatz and beta = 0.
///
/// Scans 10^4 points of alpha in [0, pi], brackets every sign change of the analytic derivative
/// and bisects each bracket below 1e-13. The endpoints are candidates too.
inline EntanglementResult geometric_measure_m1(unsigned n) {
    if (n < 2 || n > kMaxRestrictedQubits) {
        throw std::invalid_argument("geometric_measure_m1 needs 2 <= n <= " + std::to_string(kMaxRestrictedQubits));
    }
    const double nn = static_cast<double>(n);
    // With beta = 0 the overlap is g(alpha)^2 / 2^n and its derivative has the sign of g * g'.
    const auto slope_sign = [nn](double alpha) {
        const double c = std::cos(alpha / 2.0);
        const double s = std::sin(alpha / 2.0);
        const double g = std::pow(c + s, nn) - 2.0 * std::pow(s, nn);
        const double dg = 0.5 * nn * (std::pow(c + s, nn - 1.0) * (c - s) - 2.0 * std::pow(s, nn - 1.0) * c);
        return g * dg;
    };
    constexpr int kScanPoints = 10000;
    constexpr double kBracketWidth = 1e-13;
    const double pi = std::numbers::pi;

    std::vector<double> candidates{0.0, pi};
    double residual = 0.0;
    std::size_t brackets = 0;
    double prev_alpha = 0.0;
    double prev_slope = slope_sign(0.0);
    for (int i = 1; i < kScanPoints; ++i) {
        const double alpha = pi * static_cast<double>(i) / (kScanPoints - 1);
        const double slope = slope_sign(alpha);
        if (slope == 0.0) {
            candidates.push_back(alpha);
        } else if ((prev_slope > 0.0 && slope < 0.0) || (prev_slope < 0.0 && slope > 0.0)) {
            double lo = prev_alpha;
            double hi = alpha;
            const bool rising_at_lo = prev_slope > 0.0;
            while (hi - lo >= kBracketWidth) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) {
                    break;
                }
                if ((slope_sign(mid) > 0.0) == rising_at_lo) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            candidates.push_back(0.5 * (lo + hi));
            residual = std::max(residual, hi - lo);
            ++brackets;
        }
        prev_alpha = alpha;
        prev_slope = slope;
    }

    double best_alpha = candidates.front();
    double best = overlap_m1(n, best_alpha, 0.0);
    for (double alpha : candidates) {
        const double v = overlap_m1(n, alpha, 0.0);
        if (v > best || (v == best && alpha < best_alpha)) {
            best = v;
            best_alpha = alpha;
        }
    }
    return detail::make_result(best, ProductAnsatz({AnsatzBlock{n, best_alpha, 0.0}}), brackets, true, residual);
}

struct MultiStartConfig {
    std::size_t lattice_starts;
    std::size_t random_starts;
    std::uint64_t seed = kDefaultSeed;
    int max_sweeps = 500;
    double min_step = 1e-12;
};

inline MultiStartConfig restricted_defaults(std::uint64_t seed = kDefaultSeed) {
    return MultiStartConfig{32, 32, seed};
}

inline MultiStartConfig bruteforce_defaults(std::uint64_t seed = kDefaultSeed) {
    return MultiStartConfig{128, 128, seed};
}

/// E_n of the two-solution state with Hamming distance d, over phi^{(x)d} (x) phi'^{(x)(n-d)}.
/// For d = n only (alpha, beta) are searched.
inline EntanglementResult geometric_measure_m2(unsigned n, unsigned d, const MultiStartConfig &cfg = restricted_defaults()) {
    if (n < 2 || n > kMaxRestrictedQubits) {
        throw std::invalid_argument("geometric_measure_m2 needs 2 <= n <= " + std::to_string(kMaxRestrictedQubits));
    }
    if (d < 1 || d > n) {
        throw std::invalid_argument("Hamming distance must satisfy 1 <= d <= n");
    }
    const CompassOptions opts{std::numbers::pi / 4.0, cfg.min_step, cfg.max_sweeps};
    if (d == n) {
        const std::array<Coordinate, 2> box{polar_angle, azimuth_angle};
        const auto objective = [n](std::span<const double> x) { return overlap_m2(n, n, x[0], x[1], 0.0, 0.0); };
        const auto found = multistart_maximize(objective, box, cfg.lattice_starts, cfg.random_starts, cfg.seed, opts);
        const auto &x = found.best.x;
        return detail::make_result(found.best.value, ProductAnsatz({detail::block(n, x[0], x[1])}), found.starts,
                                   found.converged, found.best.residual);
    }
    const std::array<Coordinate, 4> box{polar_angle, azimuth_angle, polar_angle, azimuth_angle};
    const auto objective = [n, d](std::span<const double> x) { return overlap_m2(n, d, x[0], x[1], x[2], x[3]); };
    const auto found = multistart_maximize(objective, box, cfg.lattice_starts, cfg.random_starts, cfg.seed, opts);
    const auto &x = found.best.x;
    return detail::make_result(found.best.value,
                               ProductAnsatz({detail::block(d, x[0], x[1]), detail::block(n - d, x[2], x[3])}),
                               found.starts, found.converged, found.best.residual);
}

namespace detail {

/// Alternating exact maximization of |<psi| phi_0 (x) ... (x) phi_{n-1}>|^2.
///
/// The overlap is linear in each factor: <psi|Phi> = A phi_k[0] + B phi_k[1], so the best phi_k
/// for fixed neighbours is (conj A, conj B) / norm. One sweep updates every qubit once.
inline LocalOptimum product_ascent(const StateVector &psi, std::vector<std::array<amplitude, 2>> phis, int max_sweeps,
                                   double min_change) {
    const unsigned n = psi.num_qubits();
    const std::size_t dim = psi.size();
    std::vector<amplitude> rest(dim);
    LocalOptimum out;
    double change = 0.0;
    while (out.sweeps < max_sweeps) {
        ++out.sweeps;
        change = 0.0;
        for (unsigned k = 0; k < n; ++k) {
            const qubit_mask bit = qubit_bit(n, k);
            amplitude a = 0.0;
            amplitude b = 0.0;
            for (basis_index x = 0; x < dim; ++x) {
                amplitude w = std::conj(psi[x]);
                for (unsigned q = 0; q < n; ++q) {
                    if (q != k) {
                        w *= phis[q][(x & qubit_bit(n, q)) ? 1 : 0];
                    }
                }
                if (x & bit) {
                    b += w;
                } else {
                    a += w;
                }
            }
            const double norm = std::sqrt(std::norm(a) + std::norm(b));
            if (norm == 0.0) {
                continue;
            }
            // Global phase fixed so the |0> component is real and nonnegative.
            const std::array<amplitude, 2> next{amplitude(std::abs(a) / norm, 0.0),
                                                std::polar(std::abs(b) / norm, std::arg(a) - std::arg(b))};
            change = std::max(change, std::sqrt(std::norm(next[0] - phis[k][0]) + std::norm(next[1] - phis[k][1])));
            phis[k] = next;
        }
        if (change < min_change) {
            out.reached_tolerance = true;
            break;
        }
    }
    amplitude overlap = 0.0;
    for (basis_index x = 0; x < dim; ++x) {
        amplitude w = std::conj(psi[x]);
        for (unsigned q = 0; q < n; ++q) {
            w *= phis[q][(x & qubit_bit(n, q)) ? 1 : 0];
        }
        overlap += w;
    }
    out.value = std::norm(overlap);
    out.residual = change;
    out.x.reserve(2 * n);
    for (const auto &phi : phis) {
        out.x.push_back(2.0 * std::atan2(std::abs(phi[1]), std::abs(phi[0])));
        out.x.push_back(std::abs(phi[1]) == 0.0 ? 0.0 : canonical_beta(std::arg(phi[1])));
    }
    return out;
}

}  // namespace detail

/// E_n over unrestricted product states: 2n angles, one (alpha, beta) pair per qubit.
/// Multi-start alternating ascent; serves as the reference for the symmetric searches.
inline EntanglementResult geometric_measure_bruteforce(const StateVector &state,
                                                       const MultiStartConfig &cfg = bruteforce_defaults()) {
    const unsigned n = state.num_qubits();
    if (n > kMaxBruteforceQubits) {
        throw unsupported_size_error("brute-force entanglement search supports at most " +
                                     std::to_string(kMaxBruteforceQubits) + " qubits");
    }
    const double norm_sq = state.norm_sq();
    if (std::abs(norm_sq - 1.0) > 1e-9) {
        throw validation_error("state is not normalized");
    }
    std::vector<Coordinate> box;
    for (unsigned q = 0; q < n; ++q) {
        box.push_back(polar_angle);
        box.push_back(azimuth_angle);
    }
    std::vector<LocalOptimum> optima;
    for (const auto &start : start_points(box, cfg.lattice_starts, cfg.random_starts, cfg.seed)) {
        std::vector<std::array<amplitude, 2>> phis;
        for (unsigned q = 0; q < n; ++q) {
            phis.push_back(qubit_state(start[2 * q], start[2 * q + 1]));
        }
        optima.push_back(detail::product_ascent(state, std::move(phis), cfg.max_sweeps, cfg.min_step));
    }
    const auto found = reduce_optima(std::move(optima));
    std::vector<AnsatzBlock> blocks;
    for (unsigned q = 0; q < n; ++q) {
        blocks.push_back(detail::block(1, found.best.x[2 * q], found.best.x[2 * q + 1]));
    }
    return detail::make_result(found.best.value, ProductAnsatz(std::move(blocks)), found.starts, found.converged,
                               found.best.residual);
}

}  // namespace hyperstate
