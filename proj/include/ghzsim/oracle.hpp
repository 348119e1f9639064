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
 * Brute-force verification sweeps.
 *
 * Everything here is built from the state-vector and optics primitives and
 * from closed-form expectations (parities of label bits, printed expansions,
 * explicit Walsh-Hadamard sums). The decoder is exercised but never trusted:
 * expected detection patterns are derived from the label directly.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ghzsim/analyzer.hpp"
#include "ghzsim/ghz.hpp"
#include "ghzsim/optics.hpp"
#include "ghzsim/statevec.hpp"

namespace ghzsim {

inline constexpr std::size_t kDefaultMaxSweepSpins = 10;

struct SweepFailure {
    std::string case_name;
    std::optional<GhzLabel> label;
    std::string reason;
    std::string diagnostics;
};

struct SweepReport {
    std::string name;
    std::size_t n_spins = 0; // 0 when the report is not tied to one N
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::vector<SweepFailure> failures;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }

    void pass() {
        ++cases;
        ++passed;
    }

    void fail(SweepFailure f) {
        ++cases;
        failures.push_back(std::move(f));
    }

    void check(bool good, std::string case_name, std::string reason,
               std::string diagnostics = {},
               std::optional<GhzLabel> label = std::nullopt) {
        if (good) {
            pass();
        } else {
            fail({std::move(case_name), label, std::move(reason),
                  std::move(diagnostics)});
        }
    }
};

namespace detail {

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

inline std::string format_complex(Complex c) {
    std::ostringstream os;
    os.precision(17);
    os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
    return os.str();
}

/// Full amplitude list for N <= 4, the eight largest amplitudes otherwise.
inline std::string describe_state(const HybridState& s) {
    const auto amps = s.amplitudes();
    std::vector<std::size_t> order(amps.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    const bool full = s.n_spins() <= 4;
    if (!full) {
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
            return std::abs(amps[a]) > std::abs(amps[b]);
        });
        order.resize(std::min<std::size_t>(8, order.size()));
    }
    std::ostringstream os;
    os << (full ? "amplitudes" : "top-8 amplitudes") << " [";
    for (std::size_t k = 0; k < order.size(); ++k) {
        os << (k ? ", " : "") << order[k] << ":" << format_complex(amps[order[k]]);
    }
    os << "]";
    return os.str();
}

/// Box-Muller normal built on uniform01 so batteries are portable.
inline double gaussian(Rng& rng) {
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace detail

/// Haar-like random normalized state (complex Gaussian entries).
inline HybridState random_state(std::size_t n_spins, Layout layout, Rng& rng) {
    std::vector<Complex> amps(spin_dimension(n_spins) *
                              (layout == Layout::WithPhoton ? 4U : 1U));
    double norm = 0.0;
    for (auto& a : amps) {
        a = {detail::gaussian(rng), detail::gaussian(rng)};
        norm += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amps) {
        a *= scale;
    }
    return layout == Layout::WithPhoton
               ? HybridState::with_photon(n_spins, std::move(amps))
               : HybridState::spins_only(n_spins, std::move(amps));
}

/// Detections the protocol must produce for a GHZ label, derived from the
/// label bits alone: step j flips iff spins j and j+1 differ, the last step
/// returns R^down iff the sign is Plus.
inline std::vector<PhotonBasisState> expected_detections(const GhzLabel& label) {
    std::vector<PhotonBasisState> out;
    const auto n = label.n_spins;
    for (std::size_t j = 1; j < n; ++j) {
        const auto probe = probe_for_step(j, n);
        const bool flips = label.bit(j) != label.bit(j + 1);
        out.push_back(flips ? probe.reflected() : probe);
    }
    out.push_back(label.sign == Sign::Plus ? photon::RDown : photon::LUp);
    return out;
}

/**
 * Runs the analyzer on every GHZ state of N spins and checks the decoded
 * label, the detection pattern, determinism of every step, and that the
 * post-analysis register still holds the input state.
 */
inline SweepReport
verify_discrimination(std::size_t n_spins,
                      std::size_t max_spins = kDefaultMaxSweepSpins,
                      const CavityTable& table = ideal_cavity_table(),
                      double tol = kTolerance) {
    if (n_spins < 2 || n_spins > max_spins || max_spins > kMaxSpins) {
        throw ArgumentError("verify_discrimination: N must lie in [2, " +
                            std::to_string(max_spins) + "]");
    }
    detail::Stopwatch clock;
    SweepReport report;
    report.name = "verify_discrimination";
    report.n_spins = n_spins;

    for (const auto& label : enumerate_ghz(n_spins)) {
        const auto name = to_ghz_string(label);
        const auto input = make_ghz(label);
        try {
            const auto record = run_analysis(input, n_spins, std::nullopt, table, tol);
            std::vector<std::string> problems;
            if (record.decoded != label) {
                problems.push_back("decoded " + to_ghz_string(record.decoded));
            }
            const auto expected = expected_detections(label);
            for (std::size_t k = 0; k < n_spins; ++k) {
                if (record.outcomes[k].detected != expected[k]) {
                    problems.push_back("step " + std::to_string(k + 1) +
                                       " detected " +
                                       record.outcomes[k].detected.ascii_name() +
                                       ", expected " + expected[k].ascii_name());
                }
                if (record.outcome_probabilities[k] < 1.0 - tol) {
                    problems.push_back("step " + std::to_string(k + 1) +
                                       " not deterministic");
                }
            }
            const double fid = fidelity_up_to_global_phase(record.post_state, input);
            if (fid < 1.0 - tol) {
                problems.push_back("post-state fidelity " + std::to_string(fid));
            }
            if (problems.empty()) {
                report.pass();
            } else {
                std::string reason;
                for (const auto& p : problems) {
                    reason += (reason.empty() ? "" : "; ") + p;
                }
                report.fail({name, label, reason,
                             detail::describe_state(record.post_state)});
            }
        } catch (const Error& e) {
            report.fail({name, label, e.what(), detail::describe_state(input)});
        }
    }
    report.wall_seconds = clock.seconds();
    return report;
}

/**
 * Checks the cavity rule table: unitarity, involution, spin spectator,
 * s_z conservation, the literal interaction rules, norm preservation on a
 * seeded random battery, and the two-spin parity law.
 */
inline SweepReport
verify_gate_algebra(const CavityTable& table = ideal_cavity_table(),
                    double tol = kTolerance, std::uint64_t seed = 20260101) {
    using enum SpinBasisState;
    detail::Stopwatch clock;
    SweepReport report;
    report.name = "verify_gate_algebra";

    // 8x8 matrix assembled column by column from apply_cavity on N = 1.
    std::array<std::array<Complex, 8>, 8> u{};
    for (unsigned col = 0; col < 8; ++col) {
        std::vector<Complex> amps(8);
        amps[col] = 1.0;
        const auto out = apply_cavity(HybridState::with_photon(1, amps), 1, table);
        for (unsigned row = 0; row < 8; ++row) {
            u[row][col] = out[row];
        }
    }
    auto max_dev_from_identity = [](const auto& m) {
        double dev = 0.0;
        for (unsigned r = 0; r < 8; ++r) {
            for (unsigned c = 0; c < 8; ++c) {
                dev = std::max(dev, std::abs(m[r][c] - (r == c ? 1.0 : 0.0)));
            }
        }
        return dev;
    };
    std::array<std::array<Complex, 8>, 8> udag_u{};
    std::array<std::array<Complex, 8>, 8> u_sq{};
    for (unsigned r = 0; r < 8; ++r) {
        for (unsigned c = 0; c < 8; ++c) {
            for (unsigned k = 0; k < 8; ++k) {
                udag_u[r][c] += std::conj(u[k][r]) * u[k][c];
                u_sq[r][c] += u[r][k] * u[k][c];
            }
        }
    }
    const double unitary_dev = max_dev_from_identity(udag_u);
    report.check(unitary_dev < tol, "unitarity", "max |U^dag U - I| = " +
                                                     std::to_string(unitary_dev));
    const double involution_dev = max_dev_from_identity(u_sq);
    report.check(involution_dev < tol, "involution",
                 "max |U^2 - I| = " + std::to_string(involution_dev));

    // Flat index on (photon, one spin) with N = 1 is photonIndex * 2 + spin.
    for (unsigned col = 0; col < 8; ++col) {
        const auto in_photon = PhotonBasisState::from_index(col / 2);
        const auto in_spin = spin_from_bit(col % 2);
        const auto name = in_photon.ascii_name() + "," +
                          (in_spin == Up ? "up" : "down");
        bool spin_kept = true;
        bool sz_kept = true;
        for (unsigned row = 0; row < 8; ++row) {
            if (std::abs(u[row][col]) <= tol) {
                continue;
            }
            spin_kept = spin_kept && (row % 2) == (col % 2);
            sz_kept = sz_kept &&
                      PhotonBasisState::from_index(row / 2).sz() == in_photon.sz();
        }
        report.check(spin_kept, "spin_spectator:" + name, "spin changed");
        report.check(sz_kept, "sz_conservation:" + name, "photon s_z changed");
    }

    struct LiteralRule {
        PhotonBasisState in_photon;
        SpinBasisState spin;
        PhotonBasisState out_photon;
        double phase;
        bool as_printed;
    };
    // The six rules that read unambiguously, then the two printed with a
    // flipped output spin, restored here to the spin-preserving form.
    const std::array<LiteralRule, 8> literal{{
        {photon::RUp, Up, photon::LDown, +1.0, true},
        {photon::LUp, Up, photon::LUp, -1.0, true},
        {photon::RDown, Up, photon::RDown, -1.0, true},
        {photon::LDown, Up, photon::RUp, +1.0, true},
        {photon::LUp, Down, photon::RDown, +1.0, true},
        {photon::LDown, Down, photon::LDown, -1.0, true},
        {photon::RUp, Down, photon::RUp, -1.0, false},
        {photon::RDown, Down, photon::LUp, +1.0, false},
    }};
    for (const auto& r : literal) {
        const unsigned col = r.in_photon.index() * 2 + to_bit(r.spin);
        const unsigned row = r.out_photon.index() * 2 + to_bit(r.spin);
        double dev = 0.0;
        for (unsigned k = 0; k < 8; ++k) {
            const Complex want = k == row ? Complex{r.phase, 0.0} : Complex{};
            dev = std::max(dev, std::abs(u[k][col] - want));
        }
        const auto name = std::string(r.as_printed ? "rule:" : "corrected_rule:") +
                          r.in_photon.ascii_name() + "," +
                          (r.spin == Up ? "up" : "down");
        report.check(dev < tol, name, "deviation " + std::to_string(dev));
    }
    report.notes.push_back(
        "rules R^,down and Rv,down are checked in spin-preserving form "
        "(-R^,down and L^,down); the printed forms flip the spin");

    // Seeded random battery: norm and per-spin populations.
    Rng rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        const auto state = random_state(3, Layout::WithPhoton, rng);
        const std::size_t target = 1 + static_cast<std::size_t>(rng() % 3);
        const auto out = apply_cavity(state, target, table);
        const double norm_dev = std::abs(out.norm_squared() - 1.0);
        auto up_population = [](const HybridState& s, std::size_t k) {
            double p = 0.0;
            const auto amps = s.amplitudes();
            for (std::size_t i = 0; i < amps.size(); ++i) {
                if ((i & spin_mask(k, s.n_spins())) == 0) {
                    p += std::norm(amps[i]);
                }
            }
            return p;
        };
        double pop_dev = 0.0;
        for (std::size_t k = 1; k <= 3; ++k) {
            pop_dev = std::max(pop_dev, std::abs(up_population(out, k) -
                                                 up_population(state, k)));
        }
        report.check(norm_dev < tol && pop_dev < tol,
                     "random_state:" + std::to_string(trial),
                     "norm deviation " + std::to_string(norm_dev) +
                         ", population deviation " + std::to_string(pop_dev),
                     detail::describe_state(state));
    }

    // Parity law: two spins, probe R^down or L^up through both cavities.
    for (std::uint64_t bits = 0; bits < 4; ++bits) {
        for (auto probe : {photon::RDown, photon::LUp}) {
            const bool parallel = bits == 0 || bits == 3;
            const auto out = cavity_pass_sequence(
                tensor(probe, HybridState::spin_basis(2, bits)), {1, 2}, table);
            const auto expect_photon = parallel ? probe : probe.reflected();
            const double p = photon_probabilities(out)[expect_photon.index()];
            const auto spin_amp = out[flat_index(expect_photon.index(), bits, 2)];
            report.check(std::abs(p - 1.0) < tol && std::abs(std::abs(spin_amp) - 1.0) < tol,
                         "parity_law:" + probe.ascii_name() + ",bits=" +
                             std::to_string(bits),
                         std::string("expected polarization ") +
                             (parallel ? "preserved" : "flipped"),
                         detail::describe_state(out));
        }
    }

    report.wall_seconds = clock.seconds();
    return report;
}

/// Closed-form identities of the protocol checked against direct simulation.
enum class ReferenceIdentity : std::uint8_t {
    /// Joint two-photon/three-spin state after the preparation passes.
    Preparation,
    /// R^down probe through cavities 1, 2 for each three-spin GHZ state.
    FirstParityStep,
    /// L^up probe through cavities 2, 3 for each three-spin GHZ state.
    SecondParityStep,
    /// H (x) H (x) H expansion of each three-spin GHZ state.
    HadamardExpansion,
};

inline const char* to_string(ReferenceIdentity id) noexcept {
    switch (id) {
    case ReferenceIdentity::Preparation:
        return "preparation";
    case ReferenceIdentity::FirstParityStep:
        return "parity_step_1";
    case ReferenceIdentity::SecondParityStep:
        return "parity_step_2";
    case ReferenceIdentity::HadamardExpansion:
        return "hadamard_expansion";
    }
    return "?";
}

inline constexpr std::array<ReferenceIdentity, 4> kAllReferenceIdentities{
    ReferenceIdentity::Preparation, ReferenceIdentity::FirstParityStep,
    ReferenceIdentity::SecondParityStep, ReferenceIdentity::HadamardExpansion};

namespace detail {

/// Basis ket from a string of 'u'/'d', spin 1 first.
inline std::uint64_t ket_bits(std::string_view ket) {
    std::uint64_t bits = 0;
    for (char c : ket) {
        bits = (bits << 1U) | (c == 'd' ? 1U : 0U);
    }
    return bits;
}

inline void verify_parity_step(SweepReport& report, PhotonBasisState probe,
                               std::initializer_list<std::size_t> cavities,
                               const std::array<std::pair<double, PhotonBasisState>, 4>& expected,
                               const CavityTable& table, double tol) {
    for (const auto& label : enumerate_ghz(3)) {
        const auto psi = make_ghz(label);
        const auto out = cavity_pass_sequence(tensor(probe, psi, tol), cavities, table);
        const auto& [sign, photon_out] = expected[label.index];
        const auto want = tensor(photon_out, psi, tol).scaled(sign);
        const double dev = max_abs_difference(out, want);
        report.check(dev < tol, format_label(label),
                     "entrywise deviation " + std::to_string(dev),
                     describe_state(out), label);
    }
}

inline void verify_hadamard_expansion(SweepReport& report, double tol) {
    // Printed expansions, 1/2 * sum of signed kets, in psi+0, psi-0, ... order.
    using Term = std::pair<int, const char*>;
    const std::array<std::array<Term, 4>, 8> printed{{
        {{{+1, "uuu"}, {+1, "udd"}, {+1, "dud"}, {+1, "ddu"}}},
        {{{+1, "uud"}, {+1, "udu"}, {+1, "duu"}, {+1, "ddd"}}},
        {{{+1, "uuu"}, {+1, "ddu"}, {-1, "udd"}, {-1, "dud"}}},
        {{{+1, "udu"}, {+1, "duu"}, {-1, "uud"}, {-1, "ddd"}}},
        {{{+1, "uuu"}, {-1, "ddu"}, {-1, "udd"}, {+1, "dud"}}},
        {{{+1, "duu"}, {-1, "udu"}, {+1, "uud"}, {-1, "ddd"}}},
        {{{+1, "uuu"}, {-1, "ddu"}, {+1, "udd"}, {-1, "dud"}}},
        {{{+1, "duu"}, {-1, "udu"}, {-1, "uud"}, {+1, "ddd"}}},
    }};
    report.notes.push_back(
        "psi+1 expansion term printed as |up1 down2 down2> is read as "
        "|up1 down2 down3>");

    const auto labels = enumerate_ghz(3);
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto& label = labels[k];
        const auto psi = make_ghz(label);
        const auto simulated = apply_hadamard_all(psi);

        // Walsh-Hadamard sum: <x|H^3|b> = (-1)^{popcount(x & b)} / sqrt 8.
        std::vector<Complex> direct(8);
        for (std::uint64_t x = 0; x < 8; ++x) {
            for (std::uint64_t b = 0; b < 8; ++b) {
                const double parity = std::popcount(x & b) % 2 == 0 ? 1.0 : -1.0;
                direct[x] += parity * psi[b] / std::sqrt(8.0);
            }
        }
        std::vector<Complex> transcribed(8);
        for (const auto& [sign, ket] : printed[k]) {
            transcribed[ket_bits(ket)] += 0.5 * sign;
        }
        const auto direct_state = HybridState::spins_only(3, direct);
        const auto printed_state = HybridState::spins_only(3, transcribed);
        const double dev_direct = max_abs_difference(simulated, direct_state);
        const double dev_printed = max_abs_difference(direct_state, printed_state);
        report.check(dev_direct < tol && dev_printed < tol, format_label(label),
                     "deviation from direct H^3 " + std::to_string(dev_direct) +
                         ", from printed expansion " + std::to_string(dev_printed),
                     describe_state(simulated), label);
    }
}

/// Joint amplitudes indexed [photon-1 branch][photon-2 branch][spin bits]
/// with branch 0 = R^down, 1 = L^up; 4 x 8 = 32 entries.
inline std::vector<Complex>
simulate_preparation_joint(const ProductSpinSpec& spec, const CavityTable& table,
                           double tol, double& leakage) {
    const std::array<PhotonBasisState, 2> branch{photon::RDown, photon::LUp};
    const auto spins = product_state(spec, tol);
    const auto after1 =
        cavity_pass_sequence(tensor(photon::RDown, spins, tol), {1, 2}, table);
    std::vector<Complex> joint(32);
    leakage = 0.0;
    const auto probs1 = photon_probabilities(after1);
    leakage += probs1[photon::RUp.index()] + probs1[photon::LDown.index()];
    for (unsigned a = 0; a < 2; ++a) {
        const auto proj = project_photon(after1, branch[a]);
        if (!proj.post_state) {
            continue;
        }
        const double weight = std::sqrt(proj.probability);
        const auto after2 = cavity_pass_sequence(
            tensor(photon::LUp, *proj.post_state, tol), {2, 3}, table);
        const auto probs2 = photon_probabilities(after2);
        leakage += proj.probability *
                   (probs2[photon::RUp.index()] + probs2[photon::LDown.index()]);
        for (unsigned b = 0; b < 2; ++b) {
            const auto block = after2.photon_block(branch[b]);
            for (std::size_t s = 0; s < 8; ++s) {
                joint[(a * 2 + b) * 8 + s] = weight * block[s];
            }
        }
    }
    return joint;
}

/// Right-hand side of the preparation identity typed in from its
/// coefficients: four signed two-term groups.
inline std::vector<Complex> symbolic_preparation_joint(const ProductSpinSpec& spec) {
    const auto& [a1, b1] = spec.coefficients[0];
    const auto& [a2, b2] = spec.coefficients[1];
    const auto& [a3, b3] = spec.coefficients[2];
    std::vector<Complex> joint(32);
    auto put = [&](unsigned p1, unsigned p2, double sign, const char* ket1,
                   Complex c1, const char* ket2, Complex c2) {
        joint[(p1 * 2 + p2) * 8 + ket_bits(ket1)] += sign * c1;
        joint[(p1 * 2 + p2) * 8 + ket_bits(ket2)] += sign * c2;
    };
    // (R1 down, L2 up), (R1 down, R2 down), (L1 up, R2 down), (L1 up, L2 up)
    put(0, 1, +1.0, "uuu", a1 * a2 * a3, "ddd", b1 * b2 * b3);
    put(0, 0, -1.0, "uud", a1 * a2 * b3, "ddu", b1 * b2 * a3);
    put(1, 0, +1.0, "udu", a1 * b2 * a3, "dud", b1 * a2 * b3);
    put(1, 1, -1.0, "udd", a1 * b2 * b3, "duu", b1 * a2 * a3);
    return joint;
}

inline void verify_preparation(SweepReport& report, const CavityTable& table,
                               double tol, std::uint64_t seed) {
    constexpr double h = 1.0 / std::numbers::sqrt2;
    std::vector<std::pair<std::string, ProductSpinSpec>> specs;
    specs.emplace_back("uniform", ProductSpinSpec::uniform(3, h, h));
    for (std::size_t k = 0; k < 6; ++k) {
        auto spec = ProductSpinSpec::uniform(3, h, h);
        auto& pair = spec.coefficients[k / 2];
        (k % 2 == 0 ? pair.first : pair.second) = -h;
        specs.emplace_back(std::string(k % 2 == 0 ? "alpha" : "beta") +
                               std::to_string(k / 2 + 1) + "=-1/sqrt2",
                           spec);
    }
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        ProductSpinSpec spec;
        for (int k = 0; k < 3; ++k) {
            Complex a{gaussian(rng), gaussian(rng)};
            Complex b{gaussian(rng), gaussian(rng)};
            const double n = std::sqrt(std::norm(a) + std::norm(b));
            spec.coefficients.emplace_back(a / n, b / n);
        }
        specs.emplace_back("random:" + std::to_string(trial), spec);
    }
    for (const auto& [name, spec] : specs) {
        double leakage = 0.0;
        const auto simulated = simulate_preparation_joint(spec, table, tol, leakage);
        const auto symbolic = symbolic_preparation_joint(spec);
        double dev = 0.0;
        for (std::size_t i = 0; i < simulated.size(); ++i) {
            dev = std::max(dev, std::abs(simulated[i] - symbolic[i]));
        }
        report.check(dev < tol && leakage < tol, name,
                     "entrywise deviation " + std::to_string(dev) +
                         ", probability outside {R^down, L^up} " +
                         std::to_string(leakage));
    }
}

} // namespace detail

inline SweepReport verify_equations(ReferenceIdentity id,
                                    const CavityTable& table = ideal_cavity_table(),
                                    double tol = kTolerance,
                                    std::uint64_t seed = 20260102) {
    detail::Stopwatch clock;
    SweepReport report;
    report.name = std::string("verify_equations:") + to_string(id);
    const auto RD = photon::RDown;
    const auto LU = photon::LUp;
    switch (id) {
    case ReferenceIdentity::Preparation:
        report.n_spins = 3;
        detail::verify_preparation(report, table, tol, seed);
        break;
    case ReferenceIdentity::FirstParityStep:
        report.n_spins = 3;
        detail::verify_parity_step(report, RD, {1, 2},
                                   {{{+1.0, RD}, {+1.0, RD}, {-1.0, LU}, {-1.0, LU}}},
                                   table, tol);
        break;
    case ReferenceIdentity::SecondParityStep:
        report.n_spins = 3;
        detail::verify_parity_step(report, LU, {2, 3},
                                   {{{+1.0, LU}, {-1.0, RD}, {-1.0, RD}, {+1.0, LU}}},
                                   table, tol);
        break;
    case ReferenceIdentity::HadamardExpansion:
        report.n_spins = 3;
        detail::verify_hadamard_expansion(report, tol);
        break;
    }
    report.wall_seconds = clock.seconds();
    return report;
}

/// Gate algebra, every reference identity, and discrimination for
/// N = 2..max_spins, in that order.
inline std::vector<SweepReport>
verify_all(std::size_t max_spins = kDefaultMaxSweepSpins,
           const CavityTable& table = ideal_cavity_table(),
           double tol = kTolerance) {
    std::vector<SweepReport> reports;
    reports.push_back(verify_gate_algebra(table, tol));
    for (auto id : kAllReferenceIdentities) {
        reports.push_back(verify_equations(id, table, tol));
    }
    for (std::size_t n = 2; n <= max_spins; ++n) {
        reports.push_back(verify_discrimination(n, max_spins, table, tol));
    }
    return reports;
}

} // namespace ghzsim
