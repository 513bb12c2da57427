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
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace hyperstate {

/// Default multi-start seed.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// One search coordinate: a closed interval, or a half-open circle when `periodic`.
struct Coordinate {
    double lower;
    double upper;
    bool periodic;
};

inline constexpr Coordinate polar_angle{0.0, std::numbers::pi, false};
inline constexpr Coordinate azimuth_angle{0.0, 2.0 * std::numbers::pi, true};

inline double wrap_or_clamp(double x, const Coordinate &c) {
    if (c.periodic) {
        const double span = c.upper - c.lower;
        double r = std::fmod(x - c.lower, span);
        if (r < 0.0) {
            r += span;
        }
        // fmod can round up to `span` for tiny negative inputs.
        if (r >= span) {
            r = 0.0;
        }
        return c.lower + r;
    }
    return std::clamp(x, c.lower, c.upper);
}

struct CompassOptions {
    double initial_step = std::numbers::pi / 4.0;
    double min_step = 1e-12;
    int max_sweeps = 500;
};

struct LocalOptimum {
    std::vector<double> x;
    double value = 0.0;
    /// Step length (or movement) when the search stopped.
    double residual = 0.0;
    int sweeps = 0;
    bool reached_tolerance = false;
};

/// Coordinate-wise compass search maximizing `f` inside `box`.
///
/// Each sweep probes +-h along every coordinate; a successful probe keeps doubling along that
/// direction while the objective improves. A sweep without improvement halves h. Stops when
/// h < min_step or after max_sweeps sweeps.
template <class Objective>
LocalOptimum compass_maximize(Objective &&f, std::vector<double> x, std::span<const Coordinate> box,
                              const CompassOptions &opts = {}) {
    if (x.size() != box.size()) {
        throw std::invalid_argument("start point and box differ in dimension");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = wrap_or_clamp(x[i], box[i]);
    }
    double fx = f(std::span<const double>(x));
    double h = opts.initial_step;
    LocalOptimum out;
    std::vector<double> probe = x;
    while (out.sweeps < opts.max_sweeps) {
        ++out.sweeps;
        bool moved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (double sign : {1.0, -1.0}) {
                probe = x;
                probe[i] = wrap_or_clamp(x[i] + sign * h, box[i]);
                if (probe[i] == x[i]) {
                    continue;
                }
                const double fp = f(std::span<const double>(probe));
                if (!(fp > fx)) {
                    continue;
                }
                x = probe;
                fx = fp;
                moved = true;
                const double limit = box[i].upper - box[i].lower;
                for (double step = 2.0 * h; step <= limit; step *= 2.0) {
                    probe = x;
                    probe[i] = wrap_or_clamp(x[i] + sign * step, box[i]);
                    if (probe[i] == x[i]) {
                        break;
                    }
                    const double fe = f(std::span<const double>(probe));
                    if (!(fe > fx)) {
                        break;
                    }
                    x = probe;
                    fx = fe;
                }
                break;
            }
        }
        if (!moved) {
            h *= 0.5;
            if (h < opts.min_step) {
                out.reached_tolerance = true;
                break;
            }
        }
    }
    out.x = std::move(x);
    out.value = fx;
    out.residual = h;
    return out;
}

inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double factor = inv;
    double result = 0.0;
    while (i > 0) {
        result += static_cast<double>(i % base) * factor;
        i /= base;
        factor *= inv;
    }
    return result;
}

/// Deterministic start points: `lattice` Halton points (indices 1..lattice) followed by
/// `random` uniform points drawn from mt19937_64(seed).
inline std::vector<std::vector<double>> start_points(std::span<const Coordinate> box, std::size_t lattice,
                                                     std::size_t random, std::uint64_t seed) {
    static constexpr std::array<std::uint64_t, 16> primes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                             23, 29, 31, 37, 41, 43, 47, 53};
    if (box.size() > primes.size()) {
        throw std::invalid_argument("start_points supports at most 16 dimensions");
    }
    std::vector<std::vector<double>> out;
    out.reserve(lattice + random);
    for (std::size_t s = 1; s <= lattice; ++s) {
        std::vector<double> p(box.size());
        for (std::size_t k = 0; k < box.size(); ++k) {
            p[k] = box[k].lower + radical_inverse(s, primes[k]) * (box[k].upper - box[k].lower);
        }
        out.push_back(std::move(p));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t s = 0; s < random; ++s) {
        std::vector<double> p(box.size());
        for (std::size_t k = 0; k < box.size(); ++k) {
            p[k] = box[k].lower + unit(rng) * (box[k].upper - box[k].lower);
        }
        out.push_back(std::move(p));
    }
    return out;
}

struct MultiStartOutcome {
    LocalOptimum best;
    std::size_t starts = 0;
    /// False when the two best local optima differ by more than the agreement tolerance.
    bool converged = true;
};

/// Ordered reduction over local optima (given in start order). Among values within `tie_tol`
/// of the maximum the lexicographically smallest point wins.
inline MultiStartOutcome reduce_optima(std::vector<LocalOptimum> optima, double tie_tol = 1e-12,
                                       double agree_tol = 1e-9) {
    if (optima.empty()) {
        throw std::invalid_argument("no local optima to reduce");
    }
    double top = optima.front().value;
    for (const auto &o : optima) {
        top = std::max(top, o.value);
    }
    std::vector<double> values;
    values.reserve(optima.size());
    for (const auto &o : optima) {
        values.push_back(o.value);
    }
    std::sort(values.begin(), values.end(), std::greater<>());

    MultiStartOutcome out;
    out.starts = optima.size();
    out.converged = values.size() < 2 || values[0] - values[1] <= agree_tol;
    const LocalOptimum *chosen = nullptr;
    for (const auto &o : optima) {
        if (o.value >= top - tie_tol && (chosen == nullptr || o.x < chosen->x)) {
            chosen = &o;
        }
    }
    out.best = *chosen;
    return out;
}

template <class Objective>
MultiStartOutcome multistart_maximize(Objective &&f, std::span<const Coordinate> box, std::size_t lattice,
                                      std::size_t random, std::uint64_t seed, const CompassOptions &opts = {}) {
    std::vector<LocalOptimum> optima;
    for (auto &start : start_points(box, lattice, random, seed)) {
        optima.push_back(compass_maximize(f, std::move(start), box, opts));
    }
    return reduce_optima(std::move(optima));
}

}  // namespace hyperstate
