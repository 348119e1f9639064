// Copyright 2026 The ghzsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * N-step GHZ analysis protocol and its outcome decoder.
 *
 * Step 1 sends R^down through cavities 1, 2. Steps j = 2..N-1 send L^up
 * through cavities j, j+1. Step N rotates every spin with a Hadamard and
 * sends R^down through all N cavities. Each of steps 1..N-1 is a two-spin
 * parity check (polarization preserved iff the spins are parallel); step N
 * reads the overall Z parity of the rotated register, which is the GHZ sign.
 * A closing Hadamard layer returns the spins to the computational basis.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ghzsim/ghz.hpp"
#include "ghzsim/optics.hpp"
#include "ghzsim/statevec.hpp"

namespace ghzsim {

enum class Classification : std::uint8_t { Preserved, Flipped };

inline const char* to_string(Classification c) noexcept {
    return c == Classification::Preserved ? "preserved" : "flipped";
}

struct StepOutcome {
    std::size_t step;
    PhotonBasisState injected;
    PhotonBasisState detected;
    Classification classification;

    friend bool operator==(const StepOutcome&, const StepOutcome&) = default;
};

struct AnalysisRecord {
    std::vector<StepOutcome> outcomes;
    GhzLabel decoded;
    HybridState input_state;
    HybridState post_state;
    std::vector<double> outcome_probabilities;
};

/// R^down on the first and last step, L^up in between.
constexpr PhotonBasisState probe_for_step(std::size_t step,
                                          std::size_t n_spins) noexcept {
    return step == 1 || step == n_spins ? photon::RDown : photon::LUp;
}

/// Cavities visited by the probe of a given step.
inline std::vector<std::size_t> cavities_for_step(std::size_t step,
                                                  std::size_t n_spins) {
    if (step < 1 || step > n_spins) {
        throw IndexError("protocol step out of range");
    }
    if (step == n_spins) {
        std::vector<std::size_t> all(n_spins);
        for (std::size_t k = 0; k < n_spins; ++k) {
            all[k] = k + 1;
        }
        return all;
    }
    return {step, step + 1};
}

inline Classification classify(PhotonBasisState injected,
                               PhotonBasisState detected) noexcept {
    return injected.polarization() == detected.polarization()
               ? Classification::Preserved
               : Classification::Flipped;
}

namespace detail {

inline void check_protocol_photon(PhotonBasisState detected) {
    if (detected != photon::RDown && detected != photon::LUp) {
        throw ProtocolError("probe photon left the s_z = -1 subspace: " +
                            detected.ascii_name());
    }
}

struct StepResult {
    StepOutcome outcome;
    double probability;
    HybridState post_state;
};

/// Injects, routes and detects one probe; spins must already be prepared
/// (rotated, for the final step).
inline StepResult run_probe(const HybridState& spins, std::size_t step,
                            std::size_t n_spins, Rng* rng,
                            const CavityTable& table, double tol) {
    const auto probe = probe_for_step(step, n_spins);
    const auto route = cavities_for_step(step, n_spins);
    const auto out =
        cavity_pass_sequence(tensor(probe, spins, tol), route, table);
    auto m = measure_photon(out, rng, tol);
    check_protocol_photon(m.outcome);
    return {StepOutcome{step, probe, m.outcome, classify(probe, m.outcome)},
            m.probability, std::move(m.post_state)};
}

inline void check_register(const HybridState& state, std::size_t n_spins,
                           double tol) {
    if (n_spins < 2) {
        throw ArgumentError("the analyzer needs at least two spins");
    }
    if (state.has_photon()) {
        throw LayoutError("the analyzer takes a SpinsOnly register");
    }
    if (state.n_spins() != n_spins) {
        throw DimensionError("register holds " +
                             std::to_string(state.n_spins()) +
                             " spins, expected " + std::to_string(n_spins));
    }
    state.require_normalized("run_analysis", tol);
}

} // namespace detail

/**
 * Recovers the GHZ label from the detection record.
 *
 * b_1 = 0 and b_{j+1} = b_j XOR [step j flipped] for j < N; the index is the
 * integer with bits b_2..b_N (b_2 most significant). The sign is Plus iff
 * step N detected R^down. Amplitudes never enter.
 */
inline GhzLabel decode_outcomes(std::span<const StepOutcome> outcomes) {
    const auto n = outcomes.size();
    if (n < 2 || n > kMaxSpins) {
        throw ArgumentError("outcome list must hold 2.." +
                            std::to_string(kMaxSpins) + " steps");
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto& o = outcomes[k];
        if (o.step != k + 1) {
            throw ArgumentError("outcome " + std::to_string(k) +
                                " has step field " + std::to_string(o.step));
        }
        if (o.injected != probe_for_step(o.step, n)) {
            throw ArgumentError("step " + std::to_string(o.step) +
                                " injected the wrong probe");
        }
        if (o.detected != photon::RDown && o.detected != photon::LUp) {
            throw ArgumentError("step " + std::to_string(o.step) +
                                " detected a photon outside {R^down, L^up}");
        }
        if (o.classification != classify(o.injected, o.detected)) {
            throw ArgumentError("step " + std::to_string(o.step) +
                                " classification disagrees with detection");
        }
    }

    unsigned bit = 0;
    std::uint64_t index = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        bit ^= outcomes[j].classification == Classification::Flipped ? 1U : 0U;
        index = (index << 1U) | bit;
    }
    const auto sign =
        outcomes[n - 1].detected == photon::RDown ? Sign::Plus : Sign::Minus;
    return GhzLabel{n, index, sign};
}

inline GhzLabel decode_outcomes(const std::vector<StepOutcome>& outcomes) {
    return decode_outcomes(std::span<const StepOutcome>(outcomes));
}

/// Single parity-check step j in [1, N-1]: probe, cavities j and j+1, detect.
inline std::pair<StepOutcome, HybridState>
step_parity_check(const HybridState& state, std::size_t j, std::size_t n_spins,
                  std::optional<std::uint64_t> rng_seed = std::nullopt,
                  const CavityTable& table = ideal_cavity_table(),
                  double tol = kTolerance) {
    detail::check_register(state, n_spins, tol);
    if (j < 1 || j + 1 > n_spins) {
        throw IndexError("parity-check step must lie in [1, N-1]");
    }
    std::optional<Rng> rng;
    if (rng_seed) {
        rng.emplace(*rng_seed);
    }
    auto r = detail::run_probe(state, j, n_spins, rng ? &*rng : nullptr, table,
                               tol);
    return {r.outcome, std::move(r.post_state)};
}

namespace detail {
inline AnalysisRecord run_analysis(const HybridState& state,
                                   std::size_t n_spins, Rng* rng,
                                   const CavityTable& table, double tol) {
    detail::check_register(state, n_spins, tol);

    std::vector<StepOutcome> outcomes;
    std::vector<double> probabilities;
    outcomes.reserve(n_spins);
    probabilities.reserve(n_spins);

    HybridState spins = state;
    for (std::size_t step = 1; step < n_spins; ++step) {
        auto r = detail::run_probe(spins, step, n_spins, rng, table, tol);
        outcomes.push_back(r.outcome);
        probabilities.push_back(r.probability);
        spins = std::move(r.post_state);
    }

    auto last = detail::run_probe(apply_hadamard_all(spins), n_spins, n_spins,
                                  rng, table, tol);
    outcomes.push_back(last.outcome);
    probabilities.push_back(last.probability);

    auto decoded = decode_outcomes(outcomes);
    return AnalysisRecord{std::move(outcomes), decoded, state,
                          apply_hadamard_all(last.post_state),
                          std::move(probabilities)};
}
} // namespace detail

/// Runs the full protocol drawing any random outcomes from @p rng.
inline AnalysisRecord run_analysis(const HybridState& state,
                                   std::size_t n_spins, Rng& rng,
                                   const CavityTable& table = ideal_cavity_table(),
                                   double tol = kTolerance) {
    return detail::run_analysis(state, n_spins, &rng, table, tol);
}

/// Seeded entry point. GHZ inputs are deterministic and need no seed; other
/// inputs raise ArgumentError without one.
inline AnalysisRecord run_analysis(const HybridState& state,
                                   std::size_t n_spins,
                                   std::optional<std::uint64_t> rng_seed = std::nullopt,
                                   const CavityTable& table = ideal_cavity_table(),
                                   double tol = kTolerance) {
    if (rng_seed) {
        Rng rng(*rng_seed);
        return detail::run_analysis(state, n_spins, &rng, table, tol);
    }
    return detail::run_analysis(state, n_spins, nullptr, table, tol);
}

} // namespace ghzsim
