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
 * Command-line front end: analyze, prepare, table, sweep, verify.
 *
 * Exit status: 0 success, 1 verification failure, 2 usage error.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "ghzsim/analyzer.hpp"
#include "ghzsim/ghz.hpp"
#include "ghzsim/oracle.hpp"
#include "ghzsim/prepare.hpp"
#include "ghzsim/report.hpp"

namespace ghzsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSeedEnvVar = "GHZ_SIM_SEED";

enum class Command : std::uint8_t { Analyze, Prepare, Table, Sweep, Verify };

struct RunConfig {
    Command command = Command::Analyze;
    std::optional<std::size_t> n_spins;
    std::optional<std::string> state_label;
    std::optional<std::vector<Complex>> coefficients;
    std::optional<std::uint64_t> seed;
    report::Format output_format = report::Format::Pretty;
    double tolerance = kTolerance;
    std::size_t max_n = kDefaultMaxSweepSpins;
};

class UsageError : public Error {
  public:
    using Error::Error;
};

/// Parses "re", "imi" or "re+imi" / "re-imi".
inline Complex parse_complex(std::string_view text) {
    auto fail = [&]() -> Complex {
        throw UsageError("bad coefficient '" + std::string(text) + "'");
    };
    auto read = [&](std::string_view s, double& value) -> std::size_t {
        std::size_t skip = 0;
        if (!s.empty() && s.front() == '+') {
            skip = 1;
        }
        const auto* first = s.data() + skip;
        const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
        if (ec != std::errc{} || ptr == first) {
            return 0;
        }
        return static_cast<std::size_t>(ptr - s.data());
    };
    double re = 0.0;
    const auto used = read(text, re);
    if (used == 0) {
        return fail();
    }
    auto rest = text.substr(used);
    if (rest.empty()) {
        return {re, 0.0};
    }
    if (rest == "i") {
        return {0.0, re};
    }
    if (rest.back() != 'i' || (rest.front() != '+' && rest.front() != '-')) {
        return fail();
    }
    double im = 0.0;
    const auto inner = rest.substr(0, rest.size() - 1);
    if (read(inner, im) != inner.size()) {
        return fail();
    }
    return {re, im};
}

/// (alpha_1, beta_1, alpha_2, beta_2, ...) -> product spec.
inline ProductSpinSpec spec_from_coefficients(const std::vector<Complex>& c) {
    if (c.empty() || c.size() % 2 != 0) {
        throw UsageError("--coeffs needs an even, non-zero count (alpha, beta pairs)");
    }
    ProductSpinSpec spec;
    for (std::size_t k = 0; k < c.size(); k += 2) {
        spec.coefficients.emplace_back(c[k], c[k + 1]);
    }
    return spec;
}

inline std::optional<std::uint64_t> seed_from_env() {
    const char* raw = std::getenv(kSeedEnvVar);
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::string_view text(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
    }
    return value;
}

namespace detail {

inline void check_n(std::size_t n, const RunConfig& cfg) {
    if (n < 2 || n > cfg.max_n) {
        throw UsageError("--n must lie in [2, " + std::to_string(cfg.max_n) + "]");
    }
}

inline int cmd_analyze(const RunConfig& cfg, const CavityTable& table,
                       std::ostream& out) {
    if (cfg.state_label.has_value() == cfg.coefficients.has_value()) {
        throw UsageError("analyze needs exactly one of --state or --coeffs");
    }
    std::optional<std::string> label_text;
    std::optional<HybridState> state;
    if (cfg.state_label) {
        const auto label = parse_label(*cfg.state_label);
        label_text = format_label(label);
        state = make_ghz(label);
    } else {
        state = product_state(spec_from_coefficients(*cfg.coefficients), cfg.tolerance);
    }
    const auto n = state->n_spins();
    if (cfg.n_spins && *cfg.n_spins != n) {
        throw UsageError("--n disagrees with the input state");
    }
    if (n < 2) {
        throw UsageError("the analyzer needs at least two spins");
    }
    auto record = run_analysis(*state, n, cfg.seed, table, cfg.tolerance);
    out << report::render_analysis({label_text, std::move(record)}, cfg.output_format);
    return kExitOk;
}

inline int cmd_table(const RunConfig& cfg, const CavityTable& table,
                     std::ostream& out) {
    if (!cfg.n_spins) {
        throw UsageError("table requires --n");
    }
    check_n(*cfg.n_spins, cfg);
    std::vector<report::LabeledRecord> records;
    for (const auto& label : enumerate_ghz(*cfg.n_spins)) {
        records.push_back({format_label(label),
                           run_analysis(make_ghz(label), *cfg.n_spins,
                                        std::nullopt, table, cfg.tolerance)});
    }
    out << report::render_table(records, cfg.output_format);
    return kExitOk;
}

inline int cmd_prepare(const RunConfig& cfg, const CavityTable& table,
                       std::ostream& out) {
    if (!cfg.coefficients) {
        throw UsageError("prepare requires --coeffs");
    }
    const auto spec = spec_from_coefficients(*cfg.coefficients);
    if (spec.n_spins() != 3 || (cfg.n_spins && *cfg.n_spins != 3)) {
        throw UsageError("prepare works on exactly three spins (six coefficients)");
    }
    const auto branches = preparation_distribution(spec, table, cfg.tolerance);
    std::optional<PreparationRecord> sample;
    bool certain = false;
    for (const auto& b : branches) {
        certain = certain || b.probability >= 1.0 - cfg.tolerance;
    }
    if (cfg.seed || certain) {
        sample = run_preparation(spec, cfg.seed, table, cfg.tolerance);
    }
    out << report::render_preparation(branches, sample, cfg.output_format);
    return kExitOk;
}

inline int emit_reports(const std::vector<SweepReport>& reports,
                        const RunConfig& cfg, std::ostream& out,
                        std::ostream& err) {
    out << report::render_reports(reports, cfg.output_format);
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.ok();
    }
    if (!ok) {
        err << report::render_failures(reports);
        return kExitVerificationFailed;
    }
    return kExitOk;
}

inline int cmd_sweep(const RunConfig& cfg, const CavityTable& table,
                     std::ostream& out, std::ostream& err) {
    if (!cfg.n_spins) {
        throw UsageError("sweep requires --n");
    }
    check_n(*cfg.n_spins, cfg);
    return emit_reports(
        {verify_discrimination(*cfg.n_spins, cfg.max_n, table, cfg.tolerance)},
        cfg, out, err);
}

inline int cmd_verify(const RunConfig& cfg, const CavityTable& table,
                      std::ostream& out, std::ostream& err) {
    const auto n = cfg.n_spins.value_or(cfg.max_n);
    check_n(n, cfg);
    std::vector<SweepReport> reports;
    auto guarded = [&](std::string name, auto&& fn) {
        try {
            reports.push_back(fn());
        } catch (const Error& e) {
            SweepReport r;
            r.name = std::move(name);
            r.fail({"exception", std::nullopt, e.what(), {}});
            reports.push_back(std::move(r));
        }
    };
    guarded("verify_gate_algebra",
            [&] { return verify_gate_algebra(table, cfg.tolerance); });
    for (auto id : kAllReferenceIdentities) {
        guarded(std::string("verify_equations:") + to_string(id),
                [&] { return verify_equations(id, table, cfg.tolerance); });
    }
    for (std::size_t k = 2; k <= n; ++k) {
        guarded("verify_discrimination", [&] {
            return verify_discrimination(k, cfg.max_n, table, cfg.tolerance);
        });
    }
    return emit_reports(reports, cfg, out, err);
}

} // namespace detail

inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                   const CavityTable& table = ideal_cavity_table()) {
    try {
        switch (cfg.command) {
        case Command::Analyze:
            return detail::cmd_analyze(cfg, table, out);
        case Command::Prepare:
            return detail::cmd_prepare(cfg, table, out);
        case Command::Table:
            return detail::cmd_table(cfg, table, out);
        case Command::Sweep:
            return detail::cmd_sweep(cfg, table, out, err);
        case Command::Verify:
            return detail::cmd_verify(cfg, table, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

/// Parses @p args (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err,
               const CavityTable& table = ideal_cavity_table()) {
    CLI::App app{"Simulator and verifier for the cavity-QED multi-spin GHZ-state analyzer",
                 "ghzsim"};
    app.require_subcommand(1);

    std::optional<std::size_t> n;
    std::optional<std::string> state;
    std::vector<std::string> coeffs;
    std::optional<std::uint64_t> seed;
    std::string format = "pretty";
    double tolerance = kTolerance;
    std::size_t max_n = kDefaultMaxSweepSpins;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", n, "Number of spins");
        sub->add_option("--seed", seed,
                        std::string("RNG seed (overrides ") + kSeedEnvVar + ")");
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--tolerance", tolerance, "Numerical tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-n", max_n, "Largest N accepted by sweeps")
            ->check(CLI::Range(std::size_t{2}, kMaxSpins));
    };
    auto* analyze = app.add_subcommand("analyze", "Run the analyzer on one input state");
    auto* prepare = app.add_subcommand("prepare", "Prepare a three-spin GHZ state from product spins");
    auto* table_cmd = app.add_subcommand("table", "Outcome table for every GHZ state of N spins");
    auto* sweep = app.add_subcommand("sweep", "Discrimination sweep over every GHZ state of N spins");
    auto* verify = app.add_subcommand("verify", "Run every verification battery");
    for (auto* sub : {analyze, prepare, table_cmd, sweep, verify}) {
        add_common(sub);
    }
    analyze->add_option("--state", state, "GHZ label: psi+0 .. psi-3 or ghz:<N>:<i>:<+|->");
    for (auto* sub : {analyze, prepare}) {
        sub->add_option("--coeffs", coeffs,
                        "alpha1,beta1,alpha2,beta2,... as re or re+imi")
            ->delimiter(',');
    }

    std::vector<std::string> argv_store{"ghzsim"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    RunConfig cfg;
    if (analyze->parsed()) {
        cfg.command = Command::Analyze;
    } else if (prepare->parsed()) {
        cfg.command = Command::Prepare;
    } else if (table_cmd->parsed()) {
        cfg.command = Command::Table;
    } else if (sweep->parsed()) {
        cfg.command = Command::Sweep;
    } else {
        cfg.command = Command::Verify;
    }
    cfg.n_spins = n;
    cfg.state_label = state;
    cfg.tolerance = tolerance;
    cfg.max_n = max_n;
    cfg.output_format = format == "json"  ? report::Format::Json
                        : format == "csv" ? report::Format::Csv
                                          : report::Format::Pretty;
    try {
        if (!coeffs.empty()) {
            std::vector<Complex> values;
            for (const auto& c : coeffs) {
                values.push_back(parse_complex(c));
            }
            cfg.coefficients = std::move(values);
        }
        cfg.seed = seed ? seed : seed_from_env();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return execute(cfg, out, err, table);
}

} // namespace ghzsim::cli
