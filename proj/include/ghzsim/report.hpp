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
 * JSON, CSV and plain-text renderings of analysis, preparation and sweep
 * results. All output is a pure function of its input.
 */

#pragma once

#include <array>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ghzsim/analyzer.hpp"
#include "ghzsim/oracle.hpp"
#include "ghzsim/prepare.hpp"

namespace ghzsim::report {

using Json = nlohmann::ordered_json;

enum class Format : std::uint8_t { Json, Csv, Pretty };

/// Shortest text that round-trips the double.
inline std::string format_number(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

inline std::string format_complex(Complex c) {
    std::string s = format_number(c.real());
    if (c.imag() != 0.0) {
        s += (std::signbit(c.imag()) ? "-" : "+") +
             format_number(std::abs(c.imag())) + "i";
    }
    return s;
}

/// RFC 4180: quote fields holding a comma, quote, CR or LF; double quotes.
inline std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string q = "\"";
    for (char c : field) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        row += (i ? "," : "") + csv_field(fields[i]);
    }
    return row + "\r\n";
}

/// Number of display columns of a UTF-8 string (code points).
inline std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        w += (c & 0xC0U) != 0x80U ? 1 : 0;
    }
    return w;
}

/// Fixed-width text table; column widths fit the widest cell.
inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], display_width(row[c]));
        }
    }
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            line += rows[r][c];
            if (c + 1 < rows[r].size()) {
                line += std::string(width[c] - display_width(rows[r][c]) + 2, ' ');
            }
        }
        out += line + "\n";
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t c = 0; c < width.size(); ++c) {
                total += width[c] + (c + 1 < width.size() ? 2 : 0);
            }
            out += std::string(total, '-') + "\n";
        }
    }
    return out;
}

/// Parity of the number of Up spins seen by the final probe. R^down means an
/// even number of Down spins, so the Up count has the parity of N.
inline bool final_up_count_odd(const AnalysisRecord& record) {
    const auto n = record.outcomes.size();
    const bool even_down = record.outcomes.back().detected == photon::RDown;
    return (n % 2 == 1) == even_down;
}

inline std::string final_parity_ascii(const AnalysisRecord& r) {
    return final_up_count_odd(r) ? "odd-up" : "even-up";
}

inline std::string final_parity_pretty(const AnalysisRecord& r) {
    return final_up_count_odd(r) ? "odd |↑⟩" : "even |↑⟩";
}

inline double post_fidelity(const AnalysisRecord& r) {
    return fidelity_up_to_global_phase(r.post_state, r.input_state);
}

inline Json to_json(const AnalysisRecord& r,
                    const std::optional<std::string>& input_label) {
    Json j;
    j["n"] = r.outcomes.size();
    j["input"] = input_label ? Json(*input_label) : Json(nullptr);
    Json steps = Json::array();
    for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
        const auto& o = r.outcomes[k];
        Json s;
        s["step"] = o.step;
        s["injected"] = o.injected.ascii_name();
        s["detected"] = o.detected.ascii_name();
        s["classification"] = to_string(o.classification);
        s["probability"] = r.outcome_probabilities[k];
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["decoded"] = Json{{"index", r.decoded.index},
                        {"sign", std::string(1, sign_char(r.decoded.sign))}};
    j["post_fidelity"] = post_fidelity(r);
    return j;
}

/// Header for analysis rows of an N-spin register.
inline std::vector<std::string> analysis_csv_header(std::size_t n) {
    std::vector<std::string> h{"n", "input", "decoded"};
    for (std::size_t k = 1; k <= n; ++k) {
        h.push_back("step_" + std::to_string(k));
    }
    for (std::size_t k = 1; k <= n; ++k) {
        h.push_back("probability_" + std::to_string(k));
    }
    h.insert(h.end(), {"final_parity", "post_fidelity"});
    return h;
}

inline std::vector<std::string>
analysis_csv_fields(const AnalysisRecord& r,
                    const std::optional<std::string>& input_label) {
    std::vector<std::string> f{std::to_string(r.outcomes.size()),
                               input_label.value_or(""),
                               format_label(r.decoded)};
    for (const auto& o : r.outcomes) {
        f.push_back(o.detected.ascii_name());
    }
    for (double p : r.outcome_probabilities) {
        f.push_back(format_number(p));
    }
    f.push_back(final_parity_ascii(r));
    f.push_back(format_number(post_fidelity(r)));
    return f;
}

struct LabeledRecord {
    std::optional<std::string> input_label;
    AnalysisRecord record;
};

inline std::string render_analysis(const LabeledRecord& lr, Format fmt) {
    const auto& r = lr.record;
    switch (fmt) {
    case Format::Json:
        return to_json(r, lr.input_label).dump(2) + "\n";
    case Format::Csv:
        return csv_row(analysis_csv_header(r.outcomes.size())) +
               csv_row(analysis_csv_fields(r, lr.input_label));
    case Format::Pretty:
        break;
    }
    std::vector<std::vector<std::string>> rows{
        {"Step", "Probe", "Cavities", "Detected", "Result", "Probability"}};
    for (std::size_t k = 0; k < r.outcomes.size(); ++k) {
        const auto& o = r.outcomes[k];
        std::string cav;
        for (auto c : cavities_for_step(o.step, r.outcomes.size())) {
            cav += (cav.empty() ? "" : ",") + std::to_string(c);
        }
        rows.push_back({std::to_string(o.step), o.injected.pretty_name(), cav,
                        o.detected.pretty_name(), to_string(o.classification),
                        format_number(r.outcome_probabilities[k])});
    }
    std::string out = "input: " + lr.input_label.value_or("(product state)") +
                      "  N=" + std::to_string(r.outcomes.size()) + "\n";
    out += text_table(rows);
    out += "decoded: " + format_label(r.decoded) + "\n";
    out += "post-state fidelity: " + format_number(post_fidelity(r)) + "\n";
    return out;
}

/// One row per GHZ state, in label order.
inline std::string render_table(const std::vector<LabeledRecord>& records,
                                Format fmt) {
    if (records.empty()) {
        return {};
    }
    const auto n = records.front().record.outcomes.size();
    switch (fmt) {
    case Format::Json: {
        Json arr = Json::array();
        for (const auto& lr : records) {
            auto j = to_json(lr.record, lr.input_label);
            j["final_parity"] = final_parity_ascii(lr.record);
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    case Format::Csv: {
        auto out = csv_row(analysis_csv_header(n));
        for (const auto& lr : records) {
            out += csv_row(analysis_csv_fields(lr.record, lr.input_label));
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"State"};
    for (std::size_t k = 1; k <= n; ++k) {
        header.push_back("Step " + std::to_string(k));
    }
    rows.push_back(header);
    for (const auto& lr : records) {
        const auto& r = lr.record;
        std::vector<std::string> row{format_label(r.decoded)};
        for (std::size_t k = 0; k < n; ++k) {
            const auto& d = r.outcomes[k].detected;
            std::string cell(1, d.polarization() == Polarization::R ? 'R' : 'L');
            cell += std::to_string(k + 1);
            cell += d.direction() == Direction::Up ? "↑" : "↓";
            if (k + 1 == n) {
                cell = final_parity_pretty(r) + " (" + cell + ")";
            }
            row.push_back(cell);
        }
        rows.push_back(std::move(row));
    }
    return text_table(rows);
}

inline Json state_to_json(const std::optional<HybridState>& s) {
    if (!s) {
        return nullptr;
    }
    Json arr = Json::array();
    for (const auto& a : s->amplitudes()) {
        arr.push_back(Json::array({a.real(), a.imag()}));
    }
    return arr;
}

inline std::string state_to_text(const std::optional<HybridState>& s) {
    if (!s) {
        return "null";
    }
    std::string t;
    for (const auto& a : s->amplitudes()) {
        t += (t.empty() ? "" : " ") + format_complex(a);
    }
    return t;
}

inline Json to_json(const OutcomePair& pair) {
    return Json::array({pair.first.ascii_name(), pair.second.ascii_name()});
}

inline std::string render_preparation(const std::array<PreparationBranch, 4>& branches,
                                      const std::optional<PreparationRecord>& sample,
                                      Format fmt) {
    switch (fmt) {
    case Format::Json: {
        Json j;
        j["n"] = 3;
        Json arr = Json::array();
        for (const auto& b : branches) {
            arr.push_back(Json{{"outcomes", to_json(b.outcome_pair)},
                               {"group", b.group},
                               {"probability", b.probability},
                               {"state", state_to_json(b.conditioned_state)}});
        }
        j["branches"] = std::move(arr);
        if (sample) {
            j["sample"] = Json{{"outcomes", to_json(sample->outcome_pair)},
                               {"group", sample->group},
                               {"probability", sample->probability},
                               {"state", state_to_json(sample->conditioned_state)}};
        } else {
            j["sample"] = nullptr;
        }
        return j.dump(2) + "\n";
    }
    case Format::Csv: {
        auto out = csv_row({"kind", "group", "photon_1", "photon_2",
                            "probability", "state"});
        for (const auto& b : branches) {
            out += csv_row({"branch", std::to_string(b.group),
                            b.outcome_pair.first.ascii_name(),
                            b.outcome_pair.second.ascii_name(),
                            format_number(b.probability),
                            state_to_text(b.conditioned_state)});
        }
        if (sample) {
            out += csv_row({"sample", std::to_string(sample->group),
                            sample->outcome_pair.first.ascii_name(),
                            sample->outcome_pair.second.ascii_name(),
                            format_number(sample->probability),
                            state_to_text(sample->conditioned_state)});
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::vector<std::vector<std::string>> rows{
        {"Group", "Photon 1", "Photon 2", "Probability", "Spin state"}};
    for (const auto& b : branches) {
        rows.push_back({std::to_string(b.group),
                        b.outcome_pair.first.pretty_name(),
                        b.outcome_pair.second.pretty_name(),
                        format_number(b.probability),
                        state_to_text(b.conditioned_state)});
    }
    auto out = text_table(rows);
    if (sample) {
        out += "sampled: group " + std::to_string(sample->group) + " (" +
               sample->outcome_pair.first.pretty_name() + ", " +
               sample->outcome_pair.second.pretty_name() + "), probability " +
               format_number(sample->probability) + "\n";
    }
    return out;
}

inline Json to_json(const SweepReport& r) {
    Json j;
    j["name"] = r.name;
    j["n"] = r.n_spins == 0 ? Json(nullptr) : Json(r.n_spins);
    j["cases"] = r.cases;
    j["passed"] = r.passed;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back(Json{{"case", f.case_name},
                                {"label", f.label ? Json(to_ghz_string(*f.label))
                                                  : Json(nullptr)},
                                {"reason", f.reason},
                                {"diagnostics", f.diagnostics}});
    }
    j["failures"] = std::move(failures);
    j["notes"] = r.notes;
    return j;
}

/// Wall-clock fields are left out so the rendering is reproducible.
inline std::string render_reports(const std::vector<SweepReport>& reports,
                                  Format fmt) {
    bool all_ok = true;
    for (const auto& r : reports) {
        all_ok = all_ok && r.ok();
    }
    switch (fmt) {
    case Format::Json: {
        Json arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        return Json{{"ok", all_ok}, {"reports", std::move(arr)}}.dump(2) + "\n";
    }
    case Format::Csv: {
        auto out = csv_row({"name", "n", "cases", "passed", "failed"});
        for (const auto& r : reports) {
            out += csv_row({r.name, r.n_spins ? std::to_string(r.n_spins) : "",
                            std::to_string(r.cases), std::to_string(r.passed),
                            std::to_string(r.failures.size())});
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::vector<std::vector<std::string>> rows{
        {"Check", "N", "Passed", "Status"}};
    for (const auto& r : reports) {
        rows.push_back({r.name, r.n_spins ? std::to_string(r.n_spins) : "-",
                        std::to_string(r.passed) + "/" + std::to_string(r.cases),
                        r.ok() ? "ok" : "FAILED"});
    }
    auto out = text_table(rows);
    out += all_ok ? "all checks passed\n" : "verification FAILED\n";
    return out;
}

/// Failure details, one line per failed case.
inline std::string render_failures(const std::vector<SweepReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        for (const auto& f : r.failures) {
            out += r.name + (r.n_spins ? "[N=" + std::to_string(r.n_spins) + "]" : "") +
                   " " + f.case_name + ": " + f.reason;
            if (!f.diagnostics.empty()) {
                out += " | " + f.diagnostics;
            }
            out += "\n";
        }
    }
    return out;
}

} // namespace ghzsim::report
