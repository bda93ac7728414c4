// Copyright 2026 The scissorsim developers
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
 * Report serialization. Doubles go through shortest-round-trip formatting
 * (std::to_chars / nlohmann's emitter), so parsing a report back recovers
 * every value bit-exactly. Amplitudes are [re, im] pairs, occupations are
 * integer maps keyed by mode name.
 */

#pragma once

#include <charconv>
#include <string>

#include <json.hpp>

#include "scissim/measurement.hpp"
#include "scissim/protocols.hpp"

namespace scissim::io {

using nlohmann::json;

/// Shortest decimal string that round-trips to exactly this double.
inline std::string format_double(double v) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, end);
}

inline json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

inline json state_to_json(const FockState& state) {
    json components = json::array();
    for (const auto& [occ, amp] : state.amplitudes()) {
        json modes = json::object();
        for (std::size_t m = 0; m < occ.size(); ++m)
            modes[state.registry()->mode(static_cast<int>(m)).name] = occ.counts[m];
        components.push_back({{"modes", modes}, {"amp", complex_to_json(amp)}});
    }
    return components;
}

inline json ensemble_to_json(const HeraldedEnsemble& ensemble) {
    json branches = json::array();
    for (const auto& branch : ensemble.branches)
        branches.push_back(
            {{"probability", branch.probability}, {"state", state_to_json(branch.state)}});
    return {{"total_probability", ensemble.total_probability}, {"branches", branches}};
}

inline json scissors_report_to_json(const ScissorsReport& report) {
    json per_pattern = json::object();
    for (const auto& [pattern, p] : report.per_pattern) per_pattern[pattern] = p;
    return {{"eta", report.eta},
            {"per_pattern", per_pattern},
            {"total_probability", report.total_probability},
            {"output", ensemble_to_json(report.output)}};
}

inline json teleport_report_to_json(const TeleportationReport& report) {
    json per_pattern = json::object();
    for (const auto& [pattern, p] : report.per_pattern) per_pattern[pattern] = p;
    return {{"d", report.d},
            {"eta", report.eta},
            {"success_probability", report.success_probability},
            {"announcement_probability", report.announcement_probability},
            {"conditional_fidelity", report.conditional_fidelity},
            {"paper_fidelity", report.paper_fidelity},
            {"false_announcement_probability", report.false_announcement_probability},
            {"two_photon_event_probability", report.two_photon_event_probability},
            {"per_pattern", per_pattern},
            {"output", ensemble_to_json(report.output)}};
}

inline constexpr const char* kSweepCsvHeader =
    "eta,success,paper_fidelity,conditional_fidelity,false_announcement";

inline std::string sweep_csv_row(const TeleportationReport& report) {
    return format_double(report.eta) + "," + format_double(report.success_probability) + "," +
           format_double(report.paper_fidelity) + "," +
           format_double(report.conditional_fidelity) + "," +
           format_double(report.false_announcement_probability);
}

}  // namespace scissim::io
