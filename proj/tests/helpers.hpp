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

#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "scissim/fock.hpp"

namespace scissim::test {

/// n anonymous modes m0..m{n-1} on distinct paths, same species.
inline RegistryPtr plain_registry(int n) {
    std::vector<ModeLabel> modes;
    for (int i = 0; i < n; ++i)
        modes.push_back({i, "m" + std::to_string(i), ModeRole::other, "p" + std::to_string(i),
                         "s"});
    return make_registry(std::move(modes));
}

inline Complex random_amplitude(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return {g(rng), g(rng)};
}

/// Random normalized state with the given number of components and at most
/// max_photons total photons; the cutoff leaves room for one more create().
inline FockState random_state(const RegistryPtr& reg, int max_photons, int n_components,
                              std::mt19937_64& rng) {
    std::uniform_int_distribution<int> photons(0, max_photons);
    FockState::AmplitudeMap m;
    while (static_cast<int>(m.size()) < n_components) {
        int total = photons(rng);
        std::vector<int> occ(reg->size(), 0);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(reg->size()) - 1);
        for (int p = 0; p < total; ++p) occ[static_cast<std::size_t>(pick(rng))]++;
        m[OccupationVector(occ)] = random_amplitude(rng);
    }
    return normalize(FockState(reg, max_photons + 1, std::move(m))).state;
}

/// Largest per-component amplitude difference between two states.
inline double max_amplitude_delta(const FockState& a, const FockState& b) {
    double d = 0.0;
    for (const auto& [occ, amp] : a.amplitudes())
        d = std::max(d, std::abs(amp - b.amplitude(occ)));
    for (const auto& [occ, amp] : b.amplitudes())
        d = std::max(d, std::abs(amp - a.amplitude(occ)));
    return d;
}

/// Largest amplitude difference after aligning b's global phase to a's.
inline double max_delta_up_to_phase(const FockState& a, const FockState& b) {
    Complex ov = inner_product(b, a);
    if (std::abs(ov) == 0.0) return max_amplitude_delta(a, b);
    Complex phase = ov / std::abs(ov);
    return max_amplitude_delta(a, phase * b);
}

}  // namespace scissim::test
