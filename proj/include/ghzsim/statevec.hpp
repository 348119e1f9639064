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
 * Dense state vectors over the hybrid (photon x N spins) Hilbert space.
 *
 * Index convention: flat index = photonIndex * 2^N + spinBits, where spinBits
 * is big-endian with spin 1 as the most significant bit, Up = 0, Down = 1.
 * Photon basis order is [R^up, R^down, L^up, L^down].
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghzsim/errors.hpp"

namespace ghzsim {

using Complex = std::complex<double>;

/// Default tolerance for norm, fidelity and determinism checks.
inline constexpr double kTolerance = 1e-12;

/// Largest register the library will allocate (4 * 2^20 amplitudes).
inline constexpr std::size_t kMaxSpins = 20;

enum class SpinBasisState : std::uint8_t { Up = 0, Down = 1 };

constexpr unsigned to_bit(SpinBasisState s) noexcept {
    return static_cast<unsigned>(s);
}
constexpr SpinBasisState spin_from_bit(unsigned bit) noexcept {
    return (bit & 1U) != 0 ? SpinBasisState::Down : SpinBasisState::Up;
}

enum class Polarization : std::uint8_t { R, L };

/// Propagation direction relative to the cavity axis.
enum class Direction : std::uint8_t { Up, Down };

class PhotonBasisState {
  public:
    constexpr PhotonBasisState(Polarization p, Direction d) noexcept
        : polarization_(p), direction_(d) {}

    static constexpr PhotonBasisState from_index(unsigned index) {
        if (index > 3) {
            throw IndexError("photon basis index out of range: " +
                             std::to_string(index));
        }
        return {index < 2 ? Polarization::R : Polarization::L,
                (index & 1U) == 0 ? Direction::Up : Direction::Down};
    }

    [[nodiscard]] constexpr Polarization polarization() const noexcept {
        return polarization_;
    }
    [[nodiscard]] constexpr Direction direction() const noexcept {
        return direction_;
    }

    /// Canonical index: R^up=0, R^down=1, L^up=2, L^down=3.
    [[nodiscard]] constexpr unsigned index() const noexcept {
        return (polarization_ == Polarization::L ? 2U : 0U) +
               (direction_ == Direction::Down ? 1U : 0U);
    }

    /// Spin angular momentum sign along the cavity axis: +1 for {R^up,
    /// L^down}, -1 for {R^down, L^up}.
    [[nodiscard]] constexpr int sz() const noexcept {
        const bool r = polarization_ == Polarization::R;
        const bool up = direction_ == Direction::Up;
        return r == up ? +1 : -1;
    }

    /// Both polarization and direction flipped (what a reflection does).
    [[nodiscard]] constexpr PhotonBasisState reflected() const noexcept {
        return {polarization_ == Polarization::R ? Polarization::L
                                                 : Polarization::R,
                direction_ == Direction::Up ? Direction::Down
                                            : Direction::Up};
    }

    /// ASCII rendering: "R^", "Rv", "L^", "Lv".
    [[nodiscard]] std::string ascii_name() const {
        std::string s(1, polarization_ == Polarization::R ? 'R' : 'L');
        s += direction_ == Direction::Up ? '^' : 'v';
        return s;
    }

    [[nodiscard]] std::string pretty_name() const {
        std::string s(1, polarization_ == Polarization::R ? 'R' : 'L');
        s += direction_ == Direction::Up ? "↑" : "↓";
        return s;
    }

    /// Accepts the ASCII and arrow renderings.
    static PhotonBasisState parse(std::string_view text) {
        for (unsigned i = 0; i < 4; ++i) {
            const auto p = from_index(i);
            if (text == p.ascii_name() || text == p.pretty_name()) {
                return p;
            }
        }
        throw ArgumentError("unknown photon state: " + std::string(text));
    }

    friend constexpr bool operator==(PhotonBasisState,
                                     PhotonBasisState) = default;

  private:
    Polarization polarization_;
    Direction direction_;
};

namespace photon {
inline constexpr PhotonBasisState RUp{Polarization::R, Direction::Up};
inline constexpr PhotonBasisState RDown{Polarization::R, Direction::Down};
inline constexpr PhotonBasisState LUp{Polarization::L, Direction::Up};
inline constexpr PhotonBasisState LDown{Polarization::L, Direction::Down};
inline constexpr std::array<PhotonBasisState, 4> kAll{RUp, RDown, LUp, LDown};
} // namespace photon

using PhotonVector = std::array<Complex, 4>;

inline PhotonVector photon_vector(PhotonBasisState p) {
    PhotonVector v{};
    v[p.index()] = 1.0;
    return v;
}

enum class Layout : std::uint8_t { WithPhoton, SpinsOnly };

constexpr std::size_t spin_dimension(std::size_t n_spins) noexcept {
    return std::size_t{1} << n_spins;
}

constexpr std::size_t flat_index(unsigned photon_index, std::uint64_t spin_bits,
                                 std::size_t n_spins) noexcept {
    return photon_index * spin_dimension(n_spins) +
           static_cast<std::size_t>(spin_bits);
}

/// Inverse of flat_index: (photonIndex, spinBits).
constexpr std::pair<unsigned, std::uint64_t>
split_index(std::size_t flat, std::size_t n_spins) noexcept {
    return {static_cast<unsigned>(flat >> n_spins),
            flat & (spin_dimension(n_spins) - 1)};
}

/// Bit mask of 1-based spin k inside spinBits.
constexpr std::uint64_t spin_mask(std::size_t k, std::size_t n_spins) noexcept {
    return std::uint64_t{1} << (n_spins - k);
}

/**
 * Amplitude vector over photon (x) spins, or spins alone.
 *
 * Values are immutable once built; every operation in the library returns a
 * new state.
 */
class HybridState {
  public:
    static HybridState spins_only(std::size_t n_spins,
                                  std::vector<Complex> amplitudes) {
        return HybridState(n_spins, Layout::SpinsOnly, std::move(amplitudes));
    }

    static HybridState with_photon(std::size_t n_spins,
                                   std::vector<Complex> amplitudes) {
        return HybridState(n_spins, Layout::WithPhoton, std::move(amplitudes));
    }

    /// Computational basis state |spin_bits> of an N-spin register.
    static HybridState spin_basis(std::size_t n_spins,
                                  std::uint64_t spin_bits) {
        check_spin_count(n_spins);
        if (spin_bits >= spin_dimension(n_spins)) {
            throw IndexError("spin basis index out of range");
        }
        std::vector<Complex> amps(spin_dimension(n_spins));
        amps[spin_bits] = 1.0;
        return spins_only(n_spins, std::move(amps));
    }

    /// Spins given as a list, spin 1 first.
    static HybridState spin_basis(std::span<const SpinBasisState> spins) {
        std::uint64_t bits = 0;
        for (auto s : spins) {
            bits = (bits << 1U) | to_bit(s);
        }
        return spin_basis(spins.size(), bits);
    }

    [[nodiscard]] std::size_t n_spins() const noexcept { return n_spins_; }
    [[nodiscard]] Layout layout() const noexcept { return layout_; }
    [[nodiscard]] bool has_photon() const noexcept {
        return layout_ == Layout::WithPhoton;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const {
        return amplitudes_.at(i);
    }

    /// Unnormalized spin amplitudes conditioned on one photon basis state.
    [[nodiscard]] std::span<const Complex>
    photon_block(PhotonBasisState p) const {
        if (!has_photon()) {
            throw LayoutError("photon_block requires a WithPhoton state");
        }
        const auto d = spin_dimension(n_spins_);
        return std::span<const Complex>(amplitudes_).subspan(p.index() * d, d);
    }

    [[nodiscard]] double norm_squared() const noexcept {
        double s = 0.0;
        for (const auto& a : amplitudes_) {
            s += std::norm(a);
        }
        return s;
    }

    [[nodiscard]] bool is_normalized(double tol = kTolerance) const noexcept {
        return std::abs(norm_squared() - 1.0) <= tol;
    }

    void require_normalized(std::string_view what,
                            double tol = kTolerance) const {
        if (!is_normalized(tol)) {
            throw NormalizationError(std::string(what) +
                                     ": state is not normalized (norm^2 = " +
                                     std::to_string(norm_squared()) + ")");
        }
    }

    [[nodiscard]] HybridState scaled(Complex factor) const {
        auto amps = amplitudes_;
        for (auto& a : amps) {
            a *= factor;
        }
        return HybridState(n_spins_, layout_, std::move(amps));
    }

    friend bool same_shape(const HybridState& a,
                           const HybridState& b) noexcept {
        return a.n_spins_ == b.n_spins_ && a.layout_ == b.layout_;
    }

  private:
    HybridState(std::size_t n_spins, Layout layout,
                std::vector<Complex> amplitudes)
        : n_spins_(n_spins), layout_(layout),
          amplitudes_(std::move(amplitudes)) {
        check_spin_count(n_spins_);
        const auto expected = spin_dimension(n_spins_) *
                              (layout_ == Layout::WithPhoton ? 4U : 1U);
        if (amplitudes_.size() != expected) {
            throw DimensionError("expected " + std::to_string(expected) +
                                 " amplitudes, got " +
                                 std::to_string(amplitudes_.size()));
        }
    }

    static void check_spin_count(std::size_t n_spins) {
        if (n_spins == 0) {
            throw DimensionError("spin register must hold at least one spin");
        }
        if (n_spins > kMaxSpins) {
            throw DimensionError("spin register too large: " +
                                 std::to_string(n_spins));
        }
    }

    std::size_t n_spins_;
    Layout layout_;
    std::vector<Complex> amplitudes_;
};

/// photon (x) spins in the flat index convention.
inline HybridState tensor(const PhotonVector& photon, const HybridState& spins,
                          double tol = kTolerance) {
    if (spins.has_photon()) {
        throw LayoutError("tensor expects a SpinsOnly register");
    }
    double photon_norm = 0.0;
    for (const auto& a : photon) {
        photon_norm += std::norm(a);
    }
    if (std::abs(photon_norm - 1.0) > tol) {
        throw NormalizationError("tensor: photon state is not normalized");
    }
    spins.require_normalized("tensor", tol);

    const auto d = spin_dimension(spins.n_spins());
    const auto src = spins.amplitudes();
    std::vector<Complex> amps(4 * d);
    for (unsigned p = 0; p < 4; ++p) {
        if (photon[p] == Complex{}) {
            continue;
        }
        for (std::size_t s = 0; s < d; ++s) {
            amps[p * d + s] = photon[p] * src[s];
        }
    }
    return HybridState::with_photon(spins.n_spins(), std::move(amps));
}

inline HybridState tensor(PhotonBasisState photon, const HybridState& spins,
                          double tol = kTolerance) {
    return tensor(photon_vector(photon), spins, tol);
}

/// <a|b>
inline Complex inner_product(const HybridState& a, const HybridState& b) {
    if (!same_shape(a, b)) {
        throw DimensionError("inner_product: shape mismatch");
    }
    Complex s{};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

/// |<a|b>|, insensitive to global phase.
inline double fidelity_up_to_global_phase(const HybridState& a,
                                          const HybridState& b) {
    if (!same_shape(a, b)) {
        throw DimensionError("fidelity: dimension mismatch");
    }
    return std::min(1.0, std::abs(inner_product(a, b)));
}

/// Largest entrywise |a_i - b_i|.
inline double max_abs_difference(const HybridState& a, const HybridState& b) {
    if (!same_shape(a, b)) {
        throw DimensionError("max_abs_difference: shape mismatch");
    }
    double m = 0.0;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        m = std::max(m, std::abs(x[i] - y[i]));
    }
    return m;
}

/// Born probabilities of the four photon basis outcomes.
inline std::array<double, 4> photon_probabilities(const HybridState& state) {
    std::array<double, 4> probs{};
    for (unsigned p = 0; p < 4; ++p) {
        for (const auto& a : state.photon_block(PhotonBasisState::from_index(p))) {
            probs[p] += std::norm(a);
        }
    }
    return probs;
}

struct Projection {
    double probability = 0.0;
    /// Empty when the branch has zero probability.
    std::optional<HybridState> post_state;
};

/// Projects the photon onto one basis state and traces it out.
inline Projection project_photon(const HybridState& state,
                                 PhotonBasisState outcome) {
    const auto block = state.photon_block(outcome);
    double prob = 0.0;
    for (const auto& a : block) {
        prob += std::norm(a);
    }
    Projection result{prob, std::nullopt};
    if (prob > 0.0) {
        const double scale = 1.0 / std::sqrt(prob);
        std::vector<Complex> amps(block.begin(), block.end());
        for (auto& a : amps) {
            a *= scale;
        }
        result.post_state =
            HybridState::spins_only(state.n_spins(), std::move(amps));
    }
    return result;
}

struct MeasurementResult {
    PhotonBasisState outcome;
    double probability;
    HybridState post_state;
};

/// 64-bit Mersenne Twister; its output sequence is fixed by the standard.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits, so sampling is
/// reproducible across standard library implementations.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

/**
 * Measures the photon in the {R^up, R^down, L^up, L^down} basis.
 *
 * If one outcome has probability >= 1 - tol it is returned without touching
 * the generator. Otherwise an outcome is drawn from @p rng; a null @p rng
 * raises ArgumentError rather than falling back to a hidden seed.
 */
namespace detail {
inline MeasurementResult measure_photon(const HybridState& state, Rng* rng,
                                       double tol) {
    if (!state.has_photon()) {
        throw LayoutError("measure_photon_polarization needs a photon");
    }
    state.require_normalized("measure_photon_polarization", tol);
    const auto probs = photon_probabilities(state);
    unsigned chosen = 4;
    for (unsigned p = 0; p < 4; ++p) {
        if (probs[p] >= 1.0 - tol) {
            chosen = p;
        }
    }
    if (chosen == 4) {
        if (rng == nullptr) {
            throw ArgumentError(
                "measurement outcome is not deterministic; a seed is required");
        }
        const double u = uniform01(*rng) * (probs[0] + probs[1] + probs[2] +
                                            probs[3]);
        double acc = 0.0;
        for (unsigned p = 0; p < 4; ++p) {
            if (probs[p] <= 0.0) {
                continue;
            }
            chosen = p;
            acc += probs[p];
            if (u < acc) {
                break;
            }
        }
    }
    const auto outcome = PhotonBasisState::from_index(chosen);
    auto proj = project_photon(state, outcome);
    return {outcome, proj.probability, std::move(*proj.post_state)};
}
} // namespace detail

inline MeasurementResult
measure_photon_polarization(const HybridState& state,
                            std::optional<std::uint64_t> rng_seed = std::nullopt,
                            double tol = kTolerance) {
    if (rng_seed) {
        Rng rng(*rng_seed);
        return detail::measure_photon(state, &rng, tol);
    }
    return detail::measure_photon(state, nullptr, tol);
}

inline MeasurementResult measure_photon_polarization(const HybridState& state,
                                                     Rng& rng,
                                                     double tol = kTolerance) {
    return detail::measure_photon(state, &rng, tol);
}

} // namespace ghzsim
