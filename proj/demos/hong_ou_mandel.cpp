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

// Two photons entering a 50:50 splitter on separate ports bunch: the |1,1>
// coincidence amplitude cancels and both photons leave through the same port.

#include <iostream>

#include "scissim/elements.hpp"

int main() {
    using namespace scissim;

    auto reg = make_registry({{0, "left", ModeRole::other, "left", "s"},
                              {1, "right", ModeRole::other, "right", "s"}});
    FockState in = FockState::from_terms(reg, 2, {{{1, 1}, 1.0}});
    FockState out = apply_beam_splitter(in, BeamSplitter::paper_convention(0, 1));

    std::cout << "|1,1> through a 50:50 splitter:\n";
    for (const auto& [occ, amp] : out.amplitudes())
        std::cout << "  " << occ.to_string() << "  amplitude " << amp.real()
                  << (amp.imag() ? " + i*..." : "") << "\n";
    std::cout << "coincidence amplitude: " << std::abs(out.amplitude(OccupationVector({1, 1})))
              << "\n";
    return 0;
}
