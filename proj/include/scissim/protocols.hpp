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
 * The quantum-scissors protocols: single-scissors state truncation, d-fold
 * scissors teleportation of a photonic qudit with pi-phase correction, and
 * the variant that lands the state on a different output mode basis.
 *
 * Each scissors setup couples an ancilla photon in mode a to the output mode
 * b (BS1) and then to the input mode c (BS2), both 50:50 in the real
 * Hadamard convention. Success is heralded on exactly one click per setup,
 * at either detector; a click at the input-side detector flips the sign of
 * that rail, compensated by a pi shift on its output path.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "scissim/elements.hpp"
#include "scissim/fock.hpp"
#include "scissim/measurement.hpp"

namespace scissim {

/// One quantum-scissors setup: input c, ancilla a, output b, with detectors
/// D1 on the a path and D2 on the c path.
struct ScissorsSetup {
    int input_mode = 0;
    int ancilla_mode = 0;
    int output_mode = 0;
    DetectorModel d1;
    DetectorModel d2;
};

/// Full teleporter: registry, ordered elements, detectors (D1_0, D2_0,
/// D1_1, ...), and the 2^d accepted click patterns. A pattern is a string
/// over {'a','c'}, one character per scissors, naming the path whose
/// detector clicked; every 'c' requires a pi correction on that output path.
struct TeleporterCircuit {
    int d = 0;
    RegistryPtr registry;
    std::vector<ScissorsSetup> scissors;
    std::vector<CircuitElement> elements;
    std::vector<DetectorModel> detectors;
    std::vector<std::string> accepted_patterns;
    std::vector<int> input_modes;    // c-path, input species, scissors order
    std::vector<int> ancilla_modes;  // a-path, ancilla species
    std::vector<int> output_modes;   // b-path, ancilla species (carries the result)
};

struct TeleporterOptions {
    // debug knob for the verify suite: gives the first scissors a BS2 with
    // the wrong sign convention (still unitary). A uniform flip would be a
    // mode-phase relabeling, invisible up to global phase; flipping one
    // scissors corrupts the relative sign of gamma_0 and the transfer
    // identity fails for d >= 2.
    bool flip_bs2_sign = false;
};

struct TeleportationReport {
    int d = 0;
    double eta = 1.0;
    /// Probability that an accepted pattern is announced AND the output
    /// carries the teleported state; (eta/2)^d.
    double success_probability = 0.0;
    /// Per accepted pattern share of success_probability.
    std::map<std::string, double> per_pattern;
    /// Probability that any accepted pattern is announced at all.
    double announcement_probability = 0.0;
    /// success / announcement: fidelity of the heralded output ensemble.
    double conditional_fidelity = 0.0;
    /// The closed-form figure 1 - eta(1-eta).
    double paper_fidelity = 0.0;
    /// announcement - success: accepted announcements with vacuum output.
    double false_announcement_probability = 0.0;
    /// Probability that some single detector receives exactly two photons
    /// (efficiency-independent; 1/2 for every d).
    double two_photon_event_probability = 0.0;
    /// Heralded output on the b modes after pi corrections.
    HeraldedEnsemble output;
    RegistryPtr output_registry;
};

struct ScissorsReport {
    double eta = 1.0;
    /// Announcement probability per accepted pattern ("a" and "c").
    std::map<std::string, double> per_pattern;
    double total_probability = 0.0;
    /// Heralded output on mode b after the pi correction of pattern "c".
    HeraldedEnsemble output;
    RegistryPtr output_registry;
};

/// sum_l gamma_l c_l^dag |0> over the registry's input-role modes.
inline FockState transcribe(const QuditVector& qudit, const RegistryPtr& registry, int cutoff) {
    qudit.require_normalized();
    std::vector<int> inputs = registry->modes_with_role(ModeRole::input_c);
    if (inputs.size() != qudit.dimension())
        throw std::invalid_argument("transcribe: registry has " + std::to_string(inputs.size()) +
                                    " input modes for a dimension-" +
                                    std::to_string(qudit.dimension()) + " qudit");
    FockState::AmplitudeMap terms;
    for (std::size_t l = 0; l < inputs.size(); ++l) {
        std::vector<int> occ(registry->size(), 0);
        occ[static_cast<std::size_t>(inputs[l])] = 1;
        terms[OccupationVector(occ)] = qudit.gammas[l];
    }
    return FockState(registry, cutoff, std::move(terms));
}

/// Inverse of transcription: reads gamma_l off the single-photon components.
/// Any amplitude outside the one-photon subspace above 1e-10 is an error.
inline QuditVector mix(const FockState& state) {
    const std::size_t d = state.registry()->size();
    QuditVector qudit(std::vector<Complex>(d, Complex{0.0, 0.0}));
    for (const auto& [occ, amp] : state.amplitudes()) {
        if (occ.total() == 1) {
            for (std::size_t m = 0; m < d; ++m)
                if (occ.counts[m] == 1) qudit.gammas[m] = amp;
        } else if (std::abs(amp) > 1e-10) {
            throw SubspaceViolation("mix: component " + occ.to_string() +
                                    " lies outside the single-photon subspace");
        }
    }
    return qudit;
}

namespace detail {

inline std::string species_of(int scissors_index, const std::string& prefix) {
    return prefix + ":" + std::to_string(scissors_index);
}

/// Registry plus circuit for d scissors. Each scissors j gets the three
/// paths a_j, b_j, c_j; when the ancilla species differs from the input
/// species both live as separate submodes on every path, the beam splitters
/// act per species, and each detector covers every species on its path.
inline TeleporterCircuit build_circuit(int d, const std::vector<std::string>& input_species,
                                       const std::vector<std::string>& ancilla_species,
                                       const TeleporterOptions& options) {
    if (d < 1) throw std::invalid_argument("teleporter: d must be >= 1");
    if (static_cast<int>(input_species.size()) != d ||
        static_cast<int>(ancilla_species.size()) != d)
        throw std::invalid_argument("teleporter: species lists must have length d");

    TeleporterCircuit circuit;
    circuit.d = d;

    std::vector<ModeLabel> modes;
    auto add_mode = [&](ModeRole role, const std::string& path, const std::string& species,
                        bool dual) {
        ModeLabel label;
        label.id = static_cast<int>(modes.size());
        label.role = role;
        label.path = path;
        label.species = species;
        label.name = dual ? path + ":" + species : path;
        modes.push_back(label);
        return label.id;
    };

    struct Rail {
        bool dual;
        int a_in, a_anc, b_in, b_anc, c_in, c_anc;
    };
    std::vector<Rail> rails;
    for (int j = 0; j < d; ++j) {
        const std::string& sin = input_species[static_cast<std::size_t>(j)];
        const std::string& anc = ancilla_species[static_cast<std::size_t>(j)];
        const std::string js = std::to_string(j);
        Rail r{};
        r.dual = sin != anc;
        // protocol roles sit on the rails that actually carry them; the
        // passive partner submodes of a dual-species scissors are "other"
        r.a_in = add_mode(r.dual ? ModeRole::other : ModeRole::ancilla_a, "a" + js, sin, r.dual);
        r.a_anc = r.dual ? add_mode(ModeRole::ancilla_a, "a" + js, anc, true) : r.a_in;
        r.b_in = add_mode(r.dual ? ModeRole::other : ModeRole::output_b, "b" + js, sin, r.dual);
        r.b_anc = r.dual ? add_mode(ModeRole::output_b, "b" + js, anc, true) : r.b_in;
        r.c_in = add_mode(ModeRole::input_c, "c" + js, sin, r.dual);
        r.c_anc = r.dual ? add_mode(ModeRole::other, "c" + js, anc, true) : r.c_in;
        rails.push_back(r);
    }
    circuit.registry = make_registry(std::move(modes));

    const double rt = 1.0 / std::sqrt(2.0);
    // unitary but with the wrong relative sign between the BS2 columns
    const std::array<Complex, 4> flipped = {Complex{rt, 0}, Complex{-rt, 0}, Complex{-rt, 0},
                                            Complex{-rt, 0}};
    for (int j = 0; j < d; ++j) {
        const Rail& r = rails[static_cast<std::size_t>(j)];
        // BS1 on (a, b), then BS2 on (a, c); species are preserved, so a
        // dual-species scissors carries one element per species and splitter
        circuit.elements.push_back(BeamSplitter::paper_convention(r.a_in, r.b_in));
        if (r.dual) circuit.elements.push_back(BeamSplitter::paper_convention(r.a_anc, r.b_anc));
        if (options.flip_bs2_sign && j == 0) {
            circuit.elements.push_back(BeamSplitter::general(r.a_in, r.c_in, flipped));
            if (r.dual)
                circuit.elements.push_back(BeamSplitter::general(r.a_anc, r.c_anc, flipped));
        } else {
            circuit.elements.push_back(BeamSplitter::paper_convention(r.a_in, r.c_in));
            if (r.dual)
                circuit.elements.push_back(BeamSplitter::paper_convention(r.a_anc, r.c_anc));
        }

        const std::string js = std::to_string(j);
        DetectorModel d1{"D1_" + js, {}, 1.0};
        d1.covered_modes.push_back(r.a_in);
        if (r.dual) d1.covered_modes.push_back(r.a_anc);
        DetectorModel d2{"D2_" + js, {}, 1.0};
        d2.covered_modes.push_back(r.c_in);
        if (r.dual) d2.covered_modes.push_back(r.c_anc);
        circuit.detectors.push_back(d1);
        circuit.detectors.push_back(d2);

        circuit.scissors.push_back({r.c_in, r.a_anc, r.b_anc, d1, d2});
        circuit.input_modes.push_back(r.c_in);
        circuit.ancilla_modes.push_back(r.a_anc);
        circuit.output_modes.push_back(r.b_anc);
    }

    // 2^d accepted patterns: one click per scissors, at D1 ('a') or D2 ('c')
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::string pattern(static_cast<std::size_t>(d), 'a');
        for (int j = 0; j < d; ++j)
            if (mask & (1 << j)) pattern[static_cast<std::size_t>(j)] = 'c';
        circuit.accepted_patterns.push_back(pattern);
    }
    return circuit;
}

inline DetectionPattern pattern_clicks(const std::string& pattern) {
    std::vector<int> clicks;
    for (char ch : pattern) {
        clicks.push_back(ch == 'a' ? 1 : 0);
        clicks.push_back(ch == 'c' ? 1 : 0);
    }
    return DetectionPattern(clicks);
}

/// Probability that the detectors report `clicks` given exact totals.
inline double report_probability(const std::vector<int>& totals,
                                 const std::vector<int>& clicks,
                                 const std::vector<DetectorModel>& detectors) {
    double p = 1.0;
    for (std::size_t j = 0; j < detectors.size(); ++j) {
        p *= binomial_click_pmf(totals[j], clicks[j], detectors[j].efficiency);
        if (p == 0.0) return 0.0;
    }
    return p;
}

inline void merge_branch(std::vector<HeraldedBranch>& branches, double weight,
                         const FockState& state) {
    for (auto& existing : branches) {
        if (states_equal_up_to_phase(existing.state, state, 1e-12)) {
            existing.probability += weight;
            return;
        }
    }
    branches.push_back({weight, state});
}

}  // namespace detail

inline TeleporterCircuit build_teleporter(int d, const TeleporterOptions& options = {}) {
    std::vector<std::string> species;
    for (int j = 0; j < d; ++j) species.push_back(detail::species_of(j, "OAM"));
    return detail::build_circuit(d, species, species, options);
}

inline TeleporterCircuit build_teleporter_to_basis(int d,
                                                   const std::vector<std::string>& target_species,
                                                   const TeleporterOptions& options = {}) {
    std::vector<std::string> input;
    for (int j = 0; j < d; ++j) input.push_back(detail::species_of(j, "OAM"));
    return detail::build_circuit(d, input, target_species, options);
}

/// Fidelity of a heralded ensemble against a pure target:
/// sum_branch (p / total) |<target|branch>|^2.
inline double fidelity_against(const HeraldedEnsemble& ensemble, const FockState& target) {
    if (ensemble.branches.empty())
        throw std::invalid_argument("fidelity_against: empty ensemble");
    if (!target.is_normalized(1e-9))
        throw std::invalid_argument("fidelity_against: target is not normalized");
    double f = 0.0;
    for (const auto& branch : ensemble.branches)
        f += branch.probability * std::norm(inner_product(target, branch.state));
    return f / ensemble.total_probability;
}

/// Runs a prebuilt teleporter on a qudit at detector efficiency eta.
inline TeleportationReport run_teleporter(const TeleporterCircuit& circuit,
                                          const QuditVector& qudit, double eta) {
    if (static_cast<int>(qudit.dimension()) != circuit.d)
        throw std::invalid_argument("teleport: qudit dimension does not match d");
    qudit.require_normalized();
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("teleport: eta outside [0,1]");

    const int cutoff = circuit.d + 2;
    FockState psi = transcribe(qudit, circuit.registry, cutoff);
    for (int a : circuit.ancilla_modes) psi = create(psi, a);
    FockState phi = apply_circuit(std::move(psi), circuit.elements);

    std::vector<DetectorModel> detectors = circuit.detectors;
    for (auto& det : detectors) det.efficiency = eta;
    const auto groups = enumerate_true_outcomes(phi, detectors);

    const std::vector<int> measured = detail::measured_union(detectors);
    const RegistryReduction reduction = reduce_registry(circuit.registry, measured);

    // target sum_l gamma_l on the b rails, in the reduced registry
    FockState::AmplitudeMap target_terms;
    for (int j = 0; j < circuit.d; ++j) {
        std::vector<int> occ(reduction.reduced->size(), 0);
        auto it = std::find(reduction.kept.begin(), reduction.kept.end(),
                            circuit.output_modes[static_cast<std::size_t>(j)]);
        occ[static_cast<std::size_t>(it - reduction.kept.begin())] = 1;
        target_terms[OccupationVector(occ)] = qudit.gammas[static_cast<std::size_t>(j)];
    }
    const FockState target(reduction.reduced, cutoff, std::move(target_terms));

    // pi corrections per scissors, on every species of the b path
    std::vector<std::vector<int>> correction_modes(static_cast<std::size_t>(circuit.d));
    for (int j = 0; j < circuit.d; ++j) {
        for (int m : reduction.reduced->modes_on_path("b" + std::to_string(j)))
            correction_modes[static_cast<std::size_t>(j)].push_back(m);
    }

    TeleportationReport report;
    report.d = circuit.d;
    report.eta = eta;
    report.paper_fidelity = 1.0 - eta * (1.0 - eta);

    for (const auto& pattern : circuit.accepted_patterns) {
        const DetectionPattern clicks = detail::pattern_clicks(pattern);
        double pattern_success = 0.0;
        for (const auto& group : groups) {
            const double mass = detail::report_probability(group.totals, clicks.clicks, detectors);
            if (mass == 0.0) continue;
            for (const auto& branch : group.branches) {
                FockState corrected = branch.state;
                for (int j = 0; j < circuit.d; ++j) {
                    if (pattern[static_cast<std::size_t>(j)] != 'c') continue;
                    for (int m : correction_modes[static_cast<std::size_t>(j)])
                        corrected = apply_phase_shift(corrected, {m, M_PI});
                }
                const double weight = branch.probability * mass;
                report.announcement_probability += weight;
                pattern_success += weight * std::norm(inner_product(target, corrected));
                detail::merge_branch(report.output.branches, weight, corrected);
                report.output.total_probability += weight;
            }
        }
        report.per_pattern[pattern] = pattern_success;
        report.success_probability += pattern_success;
    }

    report.false_announcement_probability =
        report.announcement_probability - report.success_probability;
    report.conditional_fidelity = report.announcement_probability > 0.0
                                      ? report.success_probability / report.announcement_probability
                                      : 0.0;
    for (const auto& group : groups) {
        if (std::any_of(group.totals.begin(), group.totals.end(), [](int n) { return n == 2; }))
            report.two_photon_event_probability += group.probability;
    }
    report.output_registry = reduction.reduced;
    return report;
}

/// Teleports a d-dimensional qudit through d quantum scissors.
inline TeleportationReport teleport_qudit(const QuditVector& qudit, int d, double eta) {
    return run_teleporter(build_teleporter(d), qudit, eta);
}

/// Teleportation variant whose ancilla photons are prepared in the given
/// target species: the state lands on the target-species b modes. Passing
/// the input species reproduces teleport_qudit exactly.
inline TeleportationReport teleport_qudit_to_basis(const QuditVector& qudit, int d, double eta,
                                                   const std::vector<std::string>& target_species) {
    return run_teleporter(build_teleporter_to_basis(d, target_species), qudit, eta);
}

/// Single quantum scissors on an arbitrary single-mode input: truncates to
/// the vacuum+one-photon component on mode b, heralded on one click.
inline ScissorsReport run_scissors(const FockState& input, double eta) {
    if (input.registry()->size() != 1)
        throw std::invalid_argument("run_scissors: input must live on a single mode");
    if (!input.is_normalized(1e-9))
        throw std::invalid_argument("run_scissors: input is not normalized");
    if (eta < 0.0 || eta > 1.0) throw std::invalid_argument("run_scissors: eta outside [0,1]");

    const ModeLabel& in_label = input.registry()->mode(0);
    auto registry = make_registry({{0, "c", ModeRole::input_c, "c", in_label.species},
                                   {1, "a", ModeRole::ancilla_a, "a", in_label.species},
                                   {2, "b", ModeRole::output_b, "b", in_label.species}});
    const int cutoff = input.cutoff() + 1;

    FockState::AmplitudeMap terms;
    for (const auto& [occ, amp] : input.amplitudes())
        terms[OccupationVector({occ[0], 0, 0})] = amp;
    FockState psi = create(FockState(registry, cutoff, std::move(terms)), 1);
    FockState phi = apply_circuit(
        std::move(psi),
        {BeamSplitter::paper_convention(1, 2), BeamSplitter::paper_convention(1, 0)});

    std::vector<DetectorModel> detectors = {{"D1", {1}, eta}, {"D2", {0}, eta}};
    const auto groups = enumerate_true_outcomes(phi, detectors);

    ScissorsReport report;
    report.eta = eta;
    for (const std::string& pattern : {std::string("a"), std::string("c")}) {
        const std::vector<int> clicks = pattern == "a" ? std::vector<int>{1, 0}
                                                       : std::vector<int>{0, 1};
        double announcement = 0.0;
        for (const auto& group : groups) {
            const double mass = detail::report_probability(group.totals, clicks, detectors);
            if (mass == 0.0) continue;
            for (const auto& branch : group.branches) {
                FockState corrected = pattern == "c"
                                          ? apply_phase_shift(branch.state, {0, M_PI})
                                          : branch.state;
                const double weight = branch.probability * mass;
                announcement += weight;
                detail::merge_branch(report.output.branches, weight, corrected);
                report.output.total_probability += weight;
            }
        }
        report.per_pattern[pattern] = announcement;
        report.total_probability += announcement;
    }
    report.output_registry = report.output.branches.empty()
                                 ? registry
                                 : report.output.branches.front().state.registry();
    return report;
}

/// Haar-uniform random unit qudit via normalized complex Gaussians.
inline QuditVector haar_random_qudit(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> gammas(static_cast<std::size_t>(d));
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& gamma : gammas) {
            gamma = {g(rng), g(rng)};
            n2 += std::norm(gamma);
        }
    } while (n2 <= 0.0);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& gamma : gammas) gamma *= inv;
    return QuditVector(std::move(gammas));
}

}  // namespace scissim
