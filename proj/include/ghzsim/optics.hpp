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
 * Photon/spin interface of a charged quantum dot in a double-sided cavity,
 * plus the single-spin Hadamard used before the sign-discriminating probe.
 *
 * A photon couples to the dot iff (s_z = +1 and spin Up) or (s_z = -1 and
 * spin Down). A coupled photon is reflected: polarization and direction both
 * flip, phase +1. An uncoupled photon is transmitted unchanged with phase -1.
 * The spin is never altered.
 */

#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "ghzsim/statevec.hpp"

namespace ghzsim {

/// Image of one (photon, spin) basis input under the cavity interaction.
struct CavityRule {
    PhotonBasisState photon;
    SpinBasisState spin;
    Complex phase;
};

/// Eight rules indexed by photonIndex * 2 + spinBit.
class CavityTable {
  public:
    constexpr explicit CavityTable(std::array<CavityRule, 8> rules)
        : rules_(rules) {}

    [[nodiscard]] const CavityRule& rule(PhotonBasisState p,
                                         SpinBasisState s) const {
        return rules_[p.index() * 2 + to_bit(s)];
    }

    CavityRule& rule(PhotonBasisState p, SpinBasisState s) {
        return rules_[p.index() * 2 + to_bit(s)];
    }

    /// 8x8 matrix on (photon (x) spin), row-major, basis index
    /// photonIndex * 2 + spinBit.
    [[nodiscard]] std::array<std::array<Complex, 8>, 8> matrix() const {
        std::array<std::array<Complex, 8>, 8> m{};
        for (unsigned col = 0; col < 8; ++col) {
            const auto& r = rules_[col];
            m[r.photon.index() * 2 + to_bit(r.spin)][col] += r.phase;
        }
        return m;
    }

  private:
    std::array<CavityRule, 8> rules_;
};

constexpr bool is_coupled(PhotonBasisState p, SpinBasisState s) noexcept {
    return (p.sz() == +1 && s == SpinBasisState::Up) ||
           (p.sz() == -1 && s == SpinBasisState::Down);
}

constexpr CavityRule ideal_cavity_rule(PhotonBasisState p, SpinBasisState s) {
    if (is_coupled(p, s)) {
        return {p.reflected(), s, Complex{1.0, 0.0}};
    }
    return {p, s, Complex{-1.0, 0.0}};
}

namespace detail {
constexpr CavityRule ideal_rule_at(unsigned i) {
    return ideal_cavity_rule(PhotonBasisState::from_index(i / 2),
                             spin_from_bit(i % 2));
}
} // namespace detail

/// Rule table of the ideal dot-cavity unit (spin-preserving).
inline const CavityTable& ideal_cavity_table() {
    static const CavityTable table(std::array<CavityRule, 8>{
        detail::ideal_rule_at(0), detail::ideal_rule_at(1),
        detail::ideal_rule_at(2), detail::ideal_rule_at(3),
        detail::ideal_rule_at(4), detail::ideal_rule_at(5),
        detail::ideal_rule_at(6), detail::ideal_rule_at(7)});
    return table;
}

/// Cavity unit coupled to one spin (1-based index).
struct CavityGate {
    std::size_t target_spin;
};

struct SpinHadamard {
    std::size_t target_spin;
};

namespace detail {
inline void check_target(std::size_t target, std::size_t n_spins) {
    if (target < 1 || target > n_spins) {
        throw IndexError("spin index " + std::to_string(target) +
                         " outside [1, " + std::to_string(n_spins) + "]");
    }
}
} // namespace detail

/// Applies the (photon, target spin) rule table to a WithPhoton state by
/// index arithmetic; other spins are untouched.
inline HybridState apply_cavity(const HybridState& state, CavityGate gate,
                                const CavityTable& table = ideal_cavity_table()) {
    if (!state.has_photon()) {
        throw LayoutError("apply_cavity needs a photon in the register");
    }
    const auto n = state.n_spins();
    detail::check_target(gate.target_spin, n);
    const auto mask = spin_mask(gate.target_spin, n);
    const auto src = state.amplitudes();
    std::vector<Complex> out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == Complex{}) {
            continue;
        }
        const auto [p, bits] = split_index(i, n);
        const auto spin = spin_from_bit((bits & mask) != 0 ? 1U : 0U);
        const auto& r = table.rule(PhotonBasisState::from_index(p), spin);
        const auto new_bits =
            r.spin == SpinBasisState::Down ? (bits | mask) : (bits & ~mask);
        out[flat_index(r.photon.index(), new_bits, n)] += r.phase * src[i];
    }
    return HybridState::with_photon(n, std::move(out));
}

inline HybridState apply_cavity(const HybridState& state, std::size_t target_spin,
                                const CavityTable& table = ideal_cavity_table()) {
    return apply_cavity(state, CavityGate{target_spin}, table);
}

/// Passes the photon through the listed cavities in order. Routing by the
/// circular-basis beam splitters is expressed entirely by this list.
inline HybridState
cavity_pass_sequence(const HybridState& state,
                     std::span<const std::size_t> cavities,
                     const CavityTable& table = ideal_cavity_table()) {
    if (cavities.empty()) {
        throw ArgumentError("cavity_pass_sequence: empty cavity list");
    }
    for (auto c : cavities) {
        detail::check_target(c, state.n_spins());
    }
    HybridState current = state;
    for (auto c : cavities) {
        current = apply_cavity(current, CavityGate{c}, table);
    }
    return current;
}

inline HybridState
cavity_pass_sequence(const HybridState& state,
                     std::initializer_list<std::size_t> cavities,
                     const CavityTable& table = ideal_cavity_table()) {
    return cavity_pass_sequence(
        state, std::span<const std::size_t>(cavities.begin(), cavities.size()),
        table);
}

/// |Up> -> (|Up> + |Down>)/sqrt2, |Down> -> (|Up> - |Down>)/sqrt2.
/// Works on either layout.
inline HybridState apply_hadamard(const HybridState& state, SpinHadamard gate) {
    const auto n = state.n_spins();
    detail::check_target(gate.target_spin, n);
    const auto mask = spin_mask(gate.target_spin, n);
    constexpr double h = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> out(state.amplitudes().begin(),
                             state.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((i & mask) != 0) {
            continue;
        }
        const auto a = out[i];
        const auto b = out[i | mask];
        out[i] = h * (a + b);
        out[i | mask] = h * (a - b);
    }
    return state.has_photon() ? HybridState::with_photon(n, std::move(out))
                              : HybridState::spins_only(n, std::move(out));
}

inline HybridState apply_hadamard_all(const HybridState& state) {
    HybridState current = state;
    for (std::size_t k = 1; k <= state.n_spins(); ++k) {
        current = apply_hadamard(current, SpinHadamard{k});
    }
    return current;
}

/// Overload carrying an explicit spin count, which must match the state.
inline HybridState apply_hadamard_all(const HybridState& state,
                                      std::size_t n_spins) {
    if (n_spins != state.n_spins()) {
        throw DimensionError("apply_hadamard_all: spin count mismatch");
    }
    return apply_hadamard_all(state);
}

} // namespace ghzsim
