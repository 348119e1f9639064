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

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dense_oracle.hpp"
#include "ghzsim/analyzer.hpp"
#include "ghzsim/oracle.hpp"
#include "test_helpers.hpp"

using namespace ghzsim;
using ghzsim::test::kInvSqrt2;
using ghzsim::test::kTol;

namespace {

const auto RD = photon::RDown;
const auto LU = photon::LUp;

std::vector<PhotonBasisState> detections(const AnalysisRecord& r) {
    std::vector<PhotonBasisState> d;
    for (const auto& o : r.outcomes) {
        d.push_back(o.detected);
    }
    return d;
}

std::vector<StepOutcome> outcomes_from(std::vector<PhotonBasisState> detected) {
    std::vector<StepOutcome> out;
    const auto n = detected.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto probe = probe_for_step(k + 1, n);
        out.push_back({k + 1, probe, detected[k], classify(probe, detected[k])});
    }
    return out;
}

} // namespace

TEST_CASE("three-spin outcome table", "[analyzer]") {
    // Step-1 and step-2 detections and the step-3 detection per state,
    // rows in psi+0, psi-0, psi+1, ... order.
    const std::array<std::array<PhotonBasisState, 3>, 8> table{{
        {RD, LU, RD}, {RD, LU, LU}, {RD, RD, RD}, {RD, RD, LU},
        {LU, RD, RD}, {LU, RD, LU}, {LU, LU, RD}, {LU, LU, LU},
    }};
    const auto labels = enumerate_ghz(3);
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const auto r = run_analysis(make_ghz(labels[k]), 3);
        INFO(format_label(labels[k]));
        CHECK(detections(r) == std::vector<PhotonBasisState>(table[k].begin(), table[k].end()));
        CHECK(r.decoded == labels[k]);
        for (double p : r.outcome_probabilities) {
            CHECK(std::abs(p - 1.0) < kTol);
        }
    }
}

TEST_CASE("run_analysis examples", "[analyzer]") {
    SECTION("psi0+") {
        const auto r = run_analysis(make_ghz({3, 0, Sign::Plus}), 3);
        CHECK(detections(r) == std::vector{RD, LU, RD});
        CHECK(r.decoded == GhzLabel{3, 0, Sign::Plus});
    }
    SECTION("psi2-") {
        const auto r = run_analysis(make_ghz({3, 2, Sign::Minus}), 3);
        CHECK(detections(r) == std::vector{LU, RD, LU});
        CHECK(r.decoded == GhzLabel{3, 2, Sign::Minus});
    }
    SECTION("five-spin Psi0+ against the dense model") {
        const auto steps = dense::run_protocol(dense::ghz(5, 0, true), 5);
        std::vector<PhotonBasisState> ref;
        for (const auto& s : steps) {
            REQUIRE(std::abs(s.probability - 1.0) < kTol);
            ref.push_back(PhotonBasisState::from_index(static_cast<unsigned>(s.photon)));
        }
        // frozen from the dense model
        REQUIRE(ref == std::vector{RD, LU, LU, LU, RD});
        const auto r = run_analysis(make_ghz({5, 0, Sign::Plus}), 5);
        CHECK(detections(r) == ref);
        CHECK(r.decoded == GhzLabel{5, 0, Sign::Plus});
    }
}

TEST_CASE("run_analysis matches the dense model for every label up to N = 5",
          "[analyzer][property]") {
    for (std::size_t n = 2; n <= 5; ++n) {
        for (const auto& l : enumerate_ghz(n)) {
            const auto steps =
                dense::run_protocol(dense::ghz(n, l.index, l.sign == Sign::Plus), n);
            const auto r = run_analysis(make_ghz(l), n);
            for (std::size_t k = 0; k < n; ++k) {
                REQUIRE(r.outcomes[k].detected.index() == static_cast<unsigned>(steps[k].photon));
                REQUIRE(std::abs(r.outcome_probabilities[k] - steps[k].probability) < kTol);
            }
        }
    }
}

TEST_CASE("decode_outcomes", "[analyzer]") {
    CHECK(decode_outcomes(outcomes_from({RD, RD, LU})) == GhzLabel{3, 1, Sign::Minus});
    CHECK(decode_outcomes(outcomes_from({LU, LU, RD})) == GhzLabel{3, 3, Sign::Plus});
    for (std::size_t n = 2; n <= 12; ++n) {
        std::vector<PhotonBasisState> all_preserved;
        for (std::size_t k = 1; k <= n; ++k) {
            all_preserved.push_back(probe_for_step(k, n));
        }
        CHECK(decode_outcomes(outcomes_from(all_preserved)) == GhzLabel{n, 0, Sign::Plus});
    }

    SECTION("malformed lists") {
        CHECK_THROWS_AS(decode_outcomes(outcomes_from({RD})), ArgumentError);
        CHECK_THROWS_AS(decode_outcomes(std::vector<StepOutcome>{}), ArgumentError);
        auto wrong_step = outcomes_from({RD, LU, RD});
        wrong_step[1].step = 3;
        CHECK_THROWS_AS(decode_outcomes(wrong_step), ArgumentError);
        auto wrong_probe = outcomes_from({RD, LU, RD});
        wrong_probe[1].injected = RD;
        wrong_probe[1].classification = classify(RD, LU);
        CHECK_THROWS_AS(decode_outcomes(wrong_probe), ArgumentError);
        auto wrong_class = outcomes_from({RD, LU, RD});
        wrong_class[0].classification = Classification::Flipped;
        CHECK_THROWS_AS(decode_outcomes(wrong_class), ArgumentError);
        auto outside = outcomes_from({RD, LU, RD});
        outside[2].detected = photon::RUp;
        CHECK_THROWS_AS(decode_outcomes(outside), ArgumentError);
    }
}

TEST_CASE("decode_outcomes is a bijection on detection patterns", "[analyzer][property]") {
    for (std::size_t n = 2; n <= 10; ++n) {
        std::set<std::pair<std::uint64_t, int>> labels;
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
            std::vector<PhotonBasisState> d;
            for (std::size_t k = 1; k <= n; ++k) {
                const auto probe = probe_for_step(k, n);
                const bool flip = ((pattern >> (k - 1)) & 1U) != 0;
                d.push_back(flip ? probe.reflected() : probe);
            }
            const auto l = decode_outcomes(outcomes_from(d));
            REQUIRE(l.n_spins == n);
            l.validate();
            labels.insert({l.index, static_cast<int>(l.sign)});
        }
        CHECK(labels.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("step_parity_check", "[analyzer]") {
    SECTION("psi1+, step 1") {
        const auto psi = make_ghz({3, 1, Sign::Plus});
        const auto [o, post] = step_parity_check(psi, 1, 3);
        CHECK(o.detected == RD);
        CHECK(o.classification == Classification::Preserved);
        CHECK(max_abs_difference(post, psi) < kTol);
    }
    SECTION("psi2+, step 1") {
        const auto psi = make_ghz({3, 2, Sign::Plus});
        const auto [o, post] = step_parity_check(psi, 1, 3);
        CHECK(o.detected == LU);
        CHECK(o.classification == Classification::Flipped);
        CHECK(std::abs(fidelity_up_to_global_phase(post, psi) - 1.0) < kTol);
    }
    SECTION("psi3-, step 2") {
        const auto [o, post] = step_parity_check(make_ghz({3, 3, Sign::Minus}), 2, 3);
        CHECK(o.injected == LU);
        CHECK(o.detected == LU);
        CHECK(o.classification == Classification::Preserved);
    }
    SECTION("range") {
        const auto psi = make_ghz({3, 0, Sign::Plus});
        CHECK_THROWS_AS(step_parity_check(psi, 0, 3), IndexError);
        CHECK_THROWS_AS(step_parity_check(psi, 3, 3), IndexError);
    }
}

TEST_CASE("complete, deterministic and nondestructive discrimination",
          "[analyzer][property]") {
    for (std::size_t n = 2; n <= 10; ++n) {
        std::set<std::vector<unsigned>> patterns;
        for (const auto& l : enumerate_ghz(n)) {
            const auto input = make_ghz(l);
            const auto r = run_analysis(input, n);
            REQUIRE(r.decoded == l);
            for (double p : r.outcome_probabilities) {
                REQUIRE(std::abs(p - 1.0) < kTol);
            }
            REQUIRE(fidelity_up_to_global_phase(r.post_state, input) >= 1.0 - kTol);
            REQUIRE(r.post_state.layout() == Layout::SpinsOnly);
            for (const auto& o : r.outcomes) {
                REQUIRE((o.detected == RD || o.detected == LU));
                REQUIRE(o.classification == classify(o.injected, o.detected));
            }
            std::vector<unsigned> p;
            for (const auto& o : r.outcomes) {
                p.push_back(o.detected.index());
            }
            patterns.insert(p);
        }
        CHECK(patterns.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("decoding ignores global phase", "[analyzer][property]") {
    for (const auto& l : enumerate_ghz(4)) {
        const auto input = make_ghz(l);
        const Complex phase = std::polar(1.0, 1.234);
        const auto a = run_analysis(input, 4);
        const auto b = run_analysis(input.scaled(phase), 4);
        CHECK(a.outcomes == b.outcomes);
        CHECK(a.decoded == b.decoded);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::abs(a.outcome_probabilities[k] - b.outcome_probabilities[k]) < kTol);
        }
        CHECK(max_abs_difference(a.post_state.scaled(phase), b.post_state) < kTol);
    }
}

TEST_CASE("Hadamard-rotated GHZ states have fixed down-count parity", "[analyzer][property]") {
    for (std::size_t n = 2; n <= 8; ++n) {
        for (const auto& l : enumerate_ghz(n)) {
            const auto rotated = apply_hadamard_all(make_ghz(l));
            for (std::size_t bits = 0; bits < rotated.dimension(); ++bits) {
                if (std::abs(rotated[bits]) < kTol) {
                    continue;
                }
                const bool even_down = std::popcount(bits) % 2 == 0;
                REQUIRE(even_down == (l.sign == Sign::Plus));
            }
        }
    }
}

TEST_CASE("non-GHZ inputs are Born-sampled", "[analyzer]") {
    // |+>|+>|+i> overlaps every GHZ state with weight 1/8
    auto spec = ProductSpinSpec::uniform(3, kInvSqrt2, kInvSqrt2);
    spec.coefficients[2].second = Complex{0.0, kInvSqrt2};
    const auto spins = product_state(spec);
    CHECK_THROWS_AS(run_analysis(spins, 3), ArgumentError);

    const auto a = run_analysis(spins, 3, std::uint64_t{7});
    const auto b = run_analysis(spins, 3, std::uint64_t{7});
    CHECK(a.outcomes == b.outcomes);
    CHECK(max_abs_difference(a.post_state, b.post_state) == 0.0);
    CHECK(a.post_state.is_normalized());
    for (double p : a.outcome_probabilities) {
        CHECK(std::abs(p - 0.5) < kTol);
    }
    // the conditioned state is the GHZ state that was decoded
    CHECK(std::abs(fidelity_up_to_global_phase(a.post_state, make_ghz(a.decoded)) - 1.0) < kTol);

    std::set<std::pair<std::uint64_t, int>> seen;
    Rng rng(99);
    for (int shot = 0; shot < 400; ++shot) {
        const auto r = run_analysis(spins, 3, rng);
        seen.insert({r.decoded.index, static_cast<int>(r.decoded.sign)});
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("run_analysis argument checks", "[analyzer]") {
    const auto psi = make_ghz({3, 0, Sign::Plus});
    CHECK_THROWS_AS(run_analysis(HybridState::spin_basis(1, 0), 1), ArgumentError);
    CHECK_THROWS_AS(run_analysis(psi, 4), DimensionError);
    CHECK_THROWS_AS(run_analysis(tensor(photon::RDown, psi), 3), LayoutError);
    CHECK_THROWS_AS(run_analysis(psi.scaled(2.0), 3), NormalizationError);
}

TEST_CASE("protocol schedule", "[analyzer]") {
    CHECK(probe_for_step(1, 5) == RD);
    CHECK(probe_for_step(3, 5) == LU);
    CHECK(probe_for_step(5, 5) == RD);
    CHECK(cavities_for_step(1, 4) == std::vector<std::size_t>{1, 2});
    CHECK(cavities_for_step(3, 4) == std::vector<std::size_t>{3, 4});
    CHECK(cavities_for_step(4, 4) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(cavities_for_step(2, 2) == std::vector<std::size_t>{1, 2});
    CHECK_THROWS_AS(cavities_for_step(0, 4), IndexError);
}
