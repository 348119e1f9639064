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
 * Three-spin GHZ preparation from uncorrelated spins.
 *
 * Photon 1 (R^down) passes cavities 1, 2 and is detected; photon 2 (L^up)
 * then passes cavities 2, 3 and is detected. The pair of detections projects
 * the spins onto one of four two-term groups; with every coefficient equal
 * to +-1/sqrt2 each group is a GHZ state.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "ghzsim/ghz.hpp"
#include "ghzsim/optics.hpp"
#include "ghzsim/statevec.hpp"

namespace ghzsim {

using OutcomePair = std::pair<PhotonBasisState, PhotonBasisState>;

inline constexpr PhotonBasisState kPrepProbe1 = photon::RDown;
inline constexpr PhotonBasisState kPrepProbe2 = photon::LUp;

/// (R^down, L^up) -> 0, (R^down, R^down) -> 1, (L^up, R^down) -> 2,
/// (L^up, L^up) -> 3.
inline unsigned preparation_group(const OutcomePair& pair) noexcept {
    const unsigned first_flipped = pair.first != kPrepProbe1 ? 1 : 0;
    const unsigned second_flipped = pair.second != kPrepProbe2 ? 1 : 0;
    return 2 * first_flipped + (first_flipped ^ second_flipped);
}

inline OutcomePair outcome_pair_for_group(unsigned group) {
    if (group > 3) {
        throw ArgumentError("preparation group must be 0..3");
    }
    const bool first_flipped = (group & 2U) != 0;
    const bool second_flipped = first_flipped != ((group & 1U) != 0);
    return {first_flipped ? kPrepProbe1.reflected() : kPrepProbe1,
            second_flipped ? kPrepProbe2.reflected() : kPrepProbe2};
}

struct PreparationRecord {
    OutcomePair outcome_pair;
    double probability;
    HybridState conditioned_state;
    unsigned group;
};

struct PreparationBranch {
    OutcomePair outcome_pair;
    double probability;
    /// Empty for a zero-probability branch.
    std::optional<HybridState> conditioned_state;
    unsigned group;
};

namespace detail {

inline HybridState prepared_spins(const ProductSpinSpec& spec, double tol) {
    if (spec.n_spins() != 3) {
        throw ArgumentError("preparation is defined for exactly three spins");
    }
    return product_state(spec, tol);
}

inline HybridState first_photon_pass(const HybridState& spins,
                                     const CavityTable& table, double tol) {
    return cavity_pass_sequence(tensor(kPrepProbe1, spins, tol), {1, 2}, table);
}

inline HybridState second_photon_pass(const HybridState& spins,
                                      const CavityTable& table, double tol) {
    return cavity_pass_sequence(tensor(kPrepProbe2, spins, tol), {2, 3}, table);
}

} // namespace detail

/// Born-samples both detections from @p rng.
inline PreparationRecord
run_preparation(const ProductSpinSpec& spec, Rng& rng,
                const CavityTable& table = ideal_cavity_table(),
                double tol = kTolerance) {
    const auto spins = detail::prepared_spins(spec, tol);
    auto m1 = measure_photon_polarization(
        detail::first_photon_pass(spins, table, tol), rng, tol);
    auto m2 = measure_photon_polarization(
        detail::second_photon_pass(m1.post_state, table, tol), rng, tol);
    OutcomePair pair{m1.outcome, m2.outcome};
    return {pair, m1.probability * m2.probability, std::move(m2.post_state),
            preparation_group(pair)};
}

/// Without a seed only product specs with a certain outcome are accepted.
inline PreparationRecord
run_preparation(const ProductSpinSpec& spec,
                std::optional<std::uint64_t> rng_seed = std::nullopt,
                const CavityTable& table = ideal_cavity_table(),
                double tol = kTolerance) {
    if (rng_seed) {
        Rng rng(*rng_seed);
        return run_preparation(spec, rng, table, tol);
    }
    const auto spins = detail::prepared_spins(spec, tol);
    auto m1 = measure_photon_polarization(
        detail::first_photon_pass(spins, table, tol), std::nullopt, tol);
    auto m2 = measure_photon_polarization(
        detail::second_photon_pass(m1.post_state, table, tol), std::nullopt,
        tol);
    OutcomePair pair{m1.outcome, m2.outcome};
    return {pair, m1.probability * m2.probability, std::move(m2.post_state),
            preparation_group(pair)};
}

/// All four detection branches, ordered by group.
inline std::array<PreparationBranch, 4>
preparation_distribution(const ProductSpinSpec& spec,
                         const CavityTable& table = ideal_cavity_table(),
                         double tol = kTolerance) {
    const auto spins = detail::prepared_spins(spec, tol);
    const auto after_first = detail::first_photon_pass(spins, table, tol);

    std::array<PreparationBranch, 4> branches{
        PreparationBranch{outcome_pair_for_group(0), 0.0, std::nullopt, 0},
        PreparationBranch{outcome_pair_for_group(1), 0.0, std::nullopt, 1},
        PreparationBranch{outcome_pair_for_group(2), 0.0, std::nullopt, 2},
        PreparationBranch{outcome_pair_for_group(3), 0.0, std::nullopt, 3}};

    for (auto& branch : branches) {
        const auto p1 = project_photon(after_first, branch.outcome_pair.first);
        if (!p1.post_state) {
            continue;
        }
        const auto after_second =
            detail::second_photon_pass(*p1.post_state, table, tol);
        auto p2 = project_photon(after_second, branch.outcome_pair.second);
        branch.probability = p1.probability * p2.probability;
        if (branch.probability > 0.0) {
            branch.conditioned_state = std::move(p2.post_state);
        }
    }
    return branches;
}

} // namespace ghzsim
