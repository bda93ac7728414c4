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
 * Number-resolving photodetection with per-photon efficiency eta, projection
 * onto exact photon counts, and heralded conditional ensembles.
 *
 * A detector covers one or more modes and registers only the total photon
 * count across them. Given n photons present it reports k clicks with
 * probability C(n,k) eta^k (1-eta)^(n-k); dark counts are not modeled.
 *
 * Multi-mode detectors absorb without distinguishing which covered mode a
 * photon came from: components that differ only inside a detector's coverage
 * are combined coherently in the conditional state whenever that is
 * norm-consistent, and fall back to an incoherent mixture over exact
 * occupations when interference inside the absorbed modes would make the
 * combined remainder lose norm.
 */

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scissim/fock.hpp"
#include "scissim/math.hpp"

namespace scissim {

struct DetectorModel {
    std::string name;
    std::vector<int> covered_modes;
    double efficiency = 1.0;
};

/// Reported clicks, aligned with a detector list.
struct DetectionPattern {
    std::vector<int> clicks;

    DetectionPattern() = default;
    explicit DetectionPattern(std::vector<int> c) : clicks(std::move(c)) {}

    bool operator==(const DetectionPattern& o) const { return clicks == o.clicks; }
    bool operator<(const DetectionPattern& o) const { return clicks < o.clicks; }
};

struct HeraldedBranch {
    double probability = 0.0;
    FockState state;
};

/// Conditional post-measurement mixture: (probability, state) pairs over the
/// unmeasured modes. total_probability is the announcement probability.
struct HeraldedEnsemble {
    std::vector<HeraldedBranch> branches;
    double total_probability = 0.0;
};

struct ProjectionResult {
    FockState state;
    double probability = 0.0;
};

/// Registry restricted to the modes not removed, ids renumbered contiguously.
struct RegistryReduction {
    RegistryPtr reduced;
    std::vector<int> kept;  // old ids in ascending order
};

inline RegistryReduction reduce_registry(const RegistryPtr& registry,
                                         const std::vector<int>& removed_modes) {
    std::vector<bool> removed(registry->size(), false);
    for (int m : removed_modes) {
        registry->mode(m);
        removed[static_cast<std::size_t>(m)] = true;
    }
    RegistryReduction r;
    std::vector<ModeLabel> labels;
    for (const auto& label : registry->modes()) {
        if (removed[static_cast<std::size_t>(label.id)]) continue;
        ModeLabel copy = label;
        copy.id = static_cast<int>(labels.size());
        r.kept.push_back(label.id);
        labels.push_back(std::move(copy));
    }
    if (labels.empty())
        throw std::invalid_argument("reduce_registry: measurement covers every mode");
    r.reduced = make_registry(std::move(labels));
    return r;
}

namespace detail {

inline void require_disjoint_and_registered(const RegistryPtr& registry,
                                            const std::vector<DetectorModel>& detectors) {
    std::vector<bool> covered(registry->size(), false);
    for (const auto& det : detectors) {
        if (det.covered_modes.empty())
            throw std::invalid_argument("detector '" + det.name + "' covers no modes");
        if (det.efficiency < 0.0 || det.efficiency > 1.0)
            throw std::invalid_argument("detector '" + det.name + "' has efficiency outside [0,1]");
        for (int m : det.covered_modes) {
            registry->mode(m);
            if (covered[static_cast<std::size_t>(m)])
                throw std::invalid_argument("detectors overlap on mode id " + std::to_string(m));
            covered[static_cast<std::size_t>(m)] = true;
        }
    }
}

inline std::vector<int> measured_union(const std::vector<DetectorModel>& detectors) {
    std::vector<int> all;
    for (const auto& det : detectors)
        all.insert(all.end(), det.covered_modes.begin(), det.covered_modes.end());
    std::sort(all.begin(), all.end());
    return all;
}

/// Probability of each exact per-detector photon-count configuration.
inline std::map<std::vector<int>, double> true_totals_distribution(
    const FockState& state, const std::vector<DetectorModel>& detectors) {
    std::map<std::vector<int>, double> dist;
    for (const auto& [occ, amp] : state.amplitudes()) {
        std::vector<int> totals(detectors.size(), 0);
        for (std::size_t d = 0; d < detectors.size(); ++d)
            for (int m : detectors[d].covered_modes)
                totals[d] += occ[static_cast<std::size_t>(m)];
        dist[totals] += std::norm(amp);
    }
    return dist;
}

}  // namespace detail

/// One exact per-detector photon-count configuration: its probability under
/// the ideal projector and the conditional branch set on the unmeasured
/// modes (a single coherent branch except in the fallback case above).
struct TrueOutcomeGroup {
    std::vector<int> totals;  // per detector, detector-list order
    double probability = 0.0;
    std::vector<HeraldedBranch> branches;  // branch probabilities sum to `probability`
};

inline std::vector<TrueOutcomeGroup> enumerate_true_outcomes(
    const FockState& state, const std::vector<DetectorModel>& detectors) {
    const auto& registry = state.registry();
    detail::require_disjoint_and_registered(registry, detectors);
    if (!state.is_normalized(1e-9))
        throw std::invalid_argument("enumerate_true_outcomes: state is not normalized");

    const std::vector<int> measured = detail::measured_union(detectors);
    const RegistryReduction reduction = reduce_registry(registry, measured);

    struct Group {
        double probability = 0.0;
        // per exact measured occupation: remainder amplitudes
        std::map<OccupationVector, FockState::AmplitudeMap> configs;
    };
    std::map<std::vector<int>, Group> groups;

    for (const auto& [occ, amp] : state.amplitudes()) {
        std::vector<int> totals(detectors.size(), 0);
        for (std::size_t d = 0; d < detectors.size(); ++d)
            for (int m : detectors[d].covered_modes)
                totals[d] += occ[static_cast<std::size_t>(m)];

        std::vector<int> meas;
        meas.reserve(measured.size());
        for (int m : measured) meas.push_back(occ[static_cast<std::size_t>(m)]);
        std::vector<int> rest;
        rest.reserve(reduction.kept.size());
        for (int m : reduction.kept) rest.push_back(occ[static_cast<std::size_t>(m)]);

        Group& g = groups[totals];
        g.probability += std::norm(amp);
        g.configs[OccupationVector(meas)][OccupationVector(rest)] += amp;
    }

    std::vector<TrueOutcomeGroup> out;
    for (auto& [totals, g] : groups) {
        TrueOutcomeGroup tog;
        tog.totals = totals;
        tog.probability = g.probability;

        // coherent absorption: sum remainders across the exact occupations the
        // detectors cannot tell apart
        FockState::AmplitudeMap strip;
        for (const auto& [meas, remainder] : g.configs)
            for (const auto& [occ, amp] : remainder) strip[occ] += amp;
        double strip_norm = 0.0;
        for (const auto& [occ, amp] : strip) strip_norm += std::norm(amp);

        if (std::abs(strip_norm - g.probability) <= 1e-9 * g.probability) {
            FockState branch(reduction.reduced, state.cutoff(), std::move(strip));
            tog.branches.push_back({g.probability, normalize(branch).state});
        } else {
            // interference inside the absorbed modes: treat the exact
            // occupations as distinguishable and emit a mixture
            for (const auto& [meas, remainder] : g.configs) {
                FockState branch(reduction.reduced, state.cutoff(), remainder);
                double w = branch.norm_squared();
                if (w <= 0.0) continue;
                FockState unit = normalize(branch).state;
                bool merged = false;
                for (auto& existing : tog.branches) {
                    if (states_equal_up_to_phase(existing.state, unit, 1e-12)) {
                        existing.probability += w;
                        merged = true;
                        break;
                    }
                }
                if (!merged) tog.branches.push_back({w, unit});
            }
        }
        out.push_back(std::move(tog));
    }
    return out;
}

/// Exhaustive distribution of reported click patterns, efficiency binomials
/// included. Probabilities sum to 1 for a normalized state.
inline std::map<DetectionPattern, double> measure_distribution(
    const FockState& state, const std::vector<DetectorModel>& detectors) {
    detail::require_disjoint_and_registered(state.registry(), detectors);
    if (!state.is_normalized(1e-9))
        throw std::invalid_argument("measure_distribution: state is not normalized");
    std::map<DetectionPattern, double> dist;
    std::vector<int> clicks(detectors.size(), 0);
    for (const auto& [totals, probability] : detail::true_totals_distribution(state, detectors)) {
        // walk the product space of per-detector click outcomes
        std::function<void(std::size_t, double)> walk = [&](std::size_t d, double p) {
            if (p == 0.0) return;
            if (d == detectors.size()) {
                dist[DetectionPattern(clicks)] += probability * p;
                return;
            }
            for (int k = 0; k <= totals[d]; ++k) {
                clicks[d] = k;
                walk(d + 1, p * binomial_click_pmf(totals[d], k, detectors[d].efficiency));
            }
            clicks[d] = 0;
        };
        walk(0, 1.0);
    }
    return dist;
}

/// Ideal (eta = 1) projection onto exact photon counts on a subset of modes.
/// Returns the normalized remainder on the other modes plus the event
/// probability; a zero-probability pattern gives an empty state, not an
/// error.
inline ProjectionResult project(const FockState& state, const std::map<int, int>& exact_counts) {
    const auto& registry = state.registry();
    if (exact_counts.empty()) throw std::invalid_argument("project: no modes selected");
    std::vector<int> measured;
    for (const auto& [mode, count] : exact_counts) {
        registry->mode(mode);
        if (count < 0) throw std::invalid_argument("project: negative photon count");
        measured.push_back(mode);
    }
    if (!state.is_normalized(1e-9))
        throw std::invalid_argument("project: state is not normalized");

    const RegistryReduction reduction = reduce_registry(registry, measured);
    FockState::AmplitudeMap remainder;
    double probability = 0.0;
    for (const auto& [occ, amp] : state.amplitudes()) {
        bool match = true;
        for (const auto& [mode, count] : exact_counts) {
            if (occ[static_cast<std::size_t>(mode)] != count) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        probability += std::norm(amp);
        std::vector<int> rest;
        rest.reserve(reduction.kept.size());
        for (int m : reduction.kept) rest.push_back(occ[static_cast<std::size_t>(m)]);
        remainder[OccupationVector(rest)] += amp;
    }
    FockState conditional(reduction.reduced, state.cutoff(), std::move(remainder));
    if (probability <= 0.0) return {FockState(reduction.reduced, state.cutoff()), 0.0};
    return {normalize(conditional).state, probability};
}

/// Heralded conditional ensemble for an accept predicate over reported
/// patterns: every true configuration is weighted by its projection
/// probability times the binomial probability that the detectors report an
/// accepted pattern. total_probability is the announcement probability.
inline HeraldedEnsemble herald(const FockState& state,
                               const std::vector<DetectorModel>& detectors,
                               const std::function<bool(const DetectionPattern&)>& accept) {
    auto groups = enumerate_true_outcomes(state, detectors);
    HeraldedEnsemble ensemble;
    std::vector<int> clicks(detectors.size(), 0);
    for (const auto& g : groups) {
        double accepted_mass = 0.0;
        std::function<void(std::size_t, double)> walk = [&](std::size_t d, double p) {
            if (p == 0.0) return;
            if (d == detectors.size()) {
                if (accept(DetectionPattern(clicks))) accepted_mass += p;
                return;
            }
            for (int k = 0; k <= g.totals[d]; ++k) {
                clicks[d] = k;
                walk(d + 1, p * binomial_click_pmf(g.totals[d], k, detectors[d].efficiency));
            }
            clicks[d] = 0;
        };
        walk(0, 1.0);
        if (accepted_mass == 0.0) continue;

        for (const auto& branch : g.branches) {
            double w = branch.probability * accepted_mass;
            ensemble.total_probability += w;
            bool merged = false;
            for (auto& existing : ensemble.branches) {
                if (states_equal_up_to_phase(existing.state, branch.state, 1e-12)) {
                    existing.probability += w;
                    merged = true;
                    break;
                }
            }
            if (!merged) ensemble.branches.push_back({w, branch.state});
        }
    }
    return ensemble;
}

}  // namespace scissim
