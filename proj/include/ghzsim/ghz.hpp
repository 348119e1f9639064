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
 * The 2^N maximally entangled N-spin GHZ states
 *
 *     Psi^{+-}_i = (|B_N(i)> +- |B_N(2^N - 1 - i)>) / sqrt2,
 *
 * where B_N(i) is the N-bit string of i with spin 1 as the leading bit.
 * Since i < 2^(N-1), spin 1 is always Up in the first branch, and the second
 * branch is the bitwise complement of the first.
 */

#pragma once

#include <charconv>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghzsim/statevec.hpp"

namespace ghzsim {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr char sign_char(Sign s) noexcept {
    return s == Sign::Plus ? '+' : '-';
}

struct GhzLabel {
    std::size_t n_spins = 3;
    std::uint64_t index = 0;
    Sign sign = Sign::Plus;

    /// Number of distinct indices for this N, i.e. 2^(N-1).
    [[nodiscard]] std::uint64_t index_count() const noexcept {
        return std::uint64_t{1} << (n_spins - 1);
    }

    [[nodiscard]] std::uint64_t first_branch_bits() const noexcept {
        return index;
    }

    [[nodiscard]] std::uint64_t second_branch_bits() const noexcept {
        return (spin_dimension(n_spins) - 1) ^ index;
    }

    /// Bit of spin k (1-based) in the first branch, i.e. i_k.
    [[nodiscard]] unsigned bit(std::size_t k) const noexcept {
        return (index & spin_mask(k, n_spins)) != 0 ? 1U : 0U;
    }

    void validate() const {
        if (n_spins < 2 || n_spins > kMaxSpins) {
            throw LabelError("GHZ label needs 2 <= N <= " +
                             std::to_string(kMaxSpins));
        }
        if (index >= index_count()) {
            throw LabelError("GHZ index " + std::to_string(index) +
                             " out of range for N=" + std::to_string(n_spins));
        }
    }

    friend bool operator==(const GhzLabel&, const GhzLabel&) = default;
};

namespace detail {
inline std::uint64_t parse_uint(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw LabelError("bad " + std::string(what) + " in label: '" +
                         std::string(text) + "'");
    }
    return value;
}
} // namespace detail

/// "ghz:<N>:<i>:<+|->"
inline std::string to_ghz_string(const GhzLabel& label) {
    return "ghz:" + std::to_string(label.n_spins) + ":" +
           std::to_string(label.index) + ":" + sign_char(label.sign);
}

/// Display form: "psi+0" .. "psi-3" for three spins, ghz:N:i:s otherwise.
inline std::string format_label(const GhzLabel& label) {
    if (label.n_spins == 3) {
        return std::string("psi") + sign_char(label.sign) +
               std::to_string(label.index);
    }
    return to_ghz_string(label);
}

/// Accepts both text forms; parse(format(l)) == l for every valid label.
inline GhzLabel parse_label(std::string_view text) {
    auto parse_sign = [&](char c) {
        if (c == '+') {
            return Sign::Plus;
        }
        if (c == '-') {
            return Sign::Minus;
        }
        throw LabelError("bad sign in label: '" + std::string(text) + "'");
    };

    GhzLabel label;
    if (text.starts_with("psi") && text.size() > 4) {
        label.n_spins = 3;
        label.sign = parse_sign(text[3]);
        label.index = detail::parse_uint(text.substr(4), "index");
    } else if (text.starts_with("ghz:")) {
        const auto rest = text.substr(4);
        const auto c1 = rest.find(':');
        const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
        if (c2 == std::string_view::npos || rest.size() != c2 + 2) {
            throw LabelError("expected ghz:<N>:<i>:<+|->, got '" +
                             std::string(text) + "'");
        }
        label.n_spins = detail::parse_uint(rest.substr(0, c1), "N");
        label.index =
            detail::parse_uint(rest.substr(c1 + 1, c2 - c1 - 1), "index");
        label.sign = parse_sign(rest[c2 + 1]);
    } else {
        throw LabelError("unrecognised GHZ label '" + std::string(text) + "'");
    }
    label.validate();
    return label;
}

inline HybridState make_ghz(const GhzLabel& label) {
    label.validate();
    constexpr double h = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> amps(spin_dimension(label.n_spins));
    amps[label.first_branch_bits()] = h;
    amps[label.second_branch_bits()] = label.sign == Sign::Plus ? h : -h;
    return HybridState::spins_only(label.n_spins, std::move(amps));
}

/// All 2^N labels ordered by index, Plus before Minus.
inline std::vector<GhzLabel> enumerate_ghz(std::size_t n_spins) {
    if (n_spins < 2 || n_spins > kMaxSpins) {
        throw ArgumentError("enumerate_ghz needs 2 <= N <= " +
                            std::to_string(kMaxSpins));
    }
    std::vector<GhzLabel> labels;
    const auto count = std::uint64_t{1} << (n_spins - 1);
    labels.reserve(2 * count);
    for (std::uint64_t i = 0; i < count; ++i) {
        labels.push_back({n_spins, i, Sign::Plus});
        labels.push_back({n_spins, i, Sign::Minus});
    }
    return labels;
}

/// Uncorrelated spins, each alpha|Up> + beta|Down>; spin 1 first.
struct ProductSpinSpec {
    std::vector<std::pair<Complex, Complex>> coefficients;

    [[nodiscard]] std::size_t n_spins() const noexcept {
        return coefficients.size();
    }

    void validate(double tol = kTolerance) const {
        if (coefficients.empty()) {
            throw DimensionError("product spec has no spins");
        }
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            const auto& [a, b] = coefficients[i];
            if (std::abs(std::norm(a) + std::norm(b) - 1.0) > tol) {
                throw NormalizationError("spin " + std::to_string(i + 1) +
                                         ": |alpha|^2 + |beta|^2 != 1");
            }
        }
    }

    /// Same (alpha, beta) on every spin.
    static ProductSpinSpec uniform(std::size_t n, Complex alpha, Complex beta) {
        return {std::vector<std::pair<Complex, Complex>>(n, {alpha, beta})};
    }
};

inline HybridState product_state(const ProductSpinSpec& spec,
                                 double tol = kTolerance) {
    spec.validate(tol);
    const auto n = spec.n_spins();
    if (n > kMaxSpins) {
        throw DimensionError("product spec too large");
    }
    std::vector<Complex> amps(spin_dimension(n));
    for (std::size_t bits = 0; bits < amps.size(); ++bits) {
        Complex a{1.0, 0.0};
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& [alpha, beta] = spec.coefficients[k - 1];
            a *= (bits & spin_mask(k, n)) != 0 ? beta : alpha;
        }
        amps[bits] = a;
    }
    return HybridState::spins_only(n, std::move(amps));
}

} // namespace ghzsim
