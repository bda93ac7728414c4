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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "scissim/elements.hpp"

using namespace scissim;
using scissim::test::max_amplitude_delta;
using scissim::test::plain_registry;
using scissim::test::random_state;

namespace {

/// Random 2x2 unitary from three angles plus a global phase.
BeamSplitter random_beam_splitter(int a, int b, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    double theta = angle(rng) / 4.0, alpha = angle(rng), beta = angle(rng), delta = angle(rng);
    Complex g = std::polar(1.0, delta);
    std::array<Complex, 4> u = {
        g * std::polar(std::cos(theta), alpha), g * std::polar(std::sin(theta), beta),
        g * -std::polar(std::sin(theta), -beta), g * std::polar(std::cos(theta), -alpha)};
    return BeamSplitter::general(a, b, u);
}

}  // namespace

TEST_CASE("paper-convention beam splitter on single photons", "[elements]") {
    auto reg = plain_registry(2);
    auto bs = BeamSplitter::paper_convention(0, 1);
    const double r = 1.0 / std::sqrt(2.0);

    SECTION("|1,0> -> (|1,0> + |0,1>)/sqrt2") {
        FockState in = FockState::from_terms(reg, 2, {{{1, 0}, 1.0}});
        FockState out = apply_beam_splitter(in, bs);
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({1, 0})) - r),
                   Catch::Matchers::WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({0, 1})) - r),
                   Catch::Matchers::WithinAbs(0.0, 1e-15));
    }

    SECTION("|0,1> -> (|1,0> - |0,1>)/sqrt2") {
        FockState in = FockState::from_terms(reg, 2, {{{0, 1}, 1.0}});
        FockState out = apply_beam_splitter(in, bs);
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({1, 0})) - r),
                   Catch::Matchers::WithinAbs(0.0, 1e-15));
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({0, 1})) + r),
                   Catch::Matchers::WithinAbs(0.0, 1e-15));
    }

    SECTION("Hong-Ou-Mandel: |1,1> -> (|2,0> - |0,2>)/sqrt2") {
        FockState in = FockState::from_terms(reg, 2, {{{1, 1}, 1.0}});
        FockState out = apply_beam_splitter(in, bs);
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({2, 0})) - r),
                   Catch::Matchers::WithinAbs(0.0, 1e-14));
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({0, 2})) + r),
                   Catch::Matchers::WithinAbs(0.0, 1e-14));
        CHECK_THAT(std::abs(out.amplitude(OccupationVector({1, 1}))),
                   Catch::Matchers::WithinAbs(0.0, 1e-14));
    }

    SECTION("vacuum is untouched") {
        FockState out = apply_beam_splitter(make_vacuum(reg, 2), bs);
        CHECK(out.amplitude(OccupationVector({0, 0})) == Complex{1.0, 0.0});
        CHECK(out.amplitudes().size() == 1);
    }

    SECTION("non-unitary matrix is rejected") {
        std::array<Complex, 4> bad = {Complex{1, 0}, Complex{1, 0}, Complex{1, 0}, Complex{1, 0}};
        CHECK_THROWS_AS(BeamSplitter::general(0, 1, bad), std::invalid_argument);
        BeamSplitter raw{0, 1, bad};
        FockState in = make_vacuum(reg, 2);
        CHECK_THROWS_AS(apply_beam_splitter(in, raw), std::invalid_argument);
    }
}

TEST_CASE("phase shifter multiplies by e^{i n phi}", "[elements]") {
    auto reg = plain_registry(1);
    FockState one = FockState::from_terms(reg, 2, {{{1}, 1.0}});
    FockState two = FockState::from_terms(reg, 2, {{{2}, 1.0}});

    FockState m = apply_phase_shift(one, {0, M_PI});
    CHECK_THAT(std::abs(m.amplitude(OccupationVector({1})) + 1.0),
               Catch::Matchers::WithinAbs(0.0, 1e-15));

    FockState p = apply_phase_shift(two, {0, M_PI});
    CHECK_THAT(std::abs(p.amplitude(OccupationVector({2})) - 1.0),
               Catch::Matchers::WithinAbs(0.0, 1e-15));

    FockState v = apply_phase_shift(make_vacuum(reg, 2), {0, 1.234});
    CHECK(v.amplitude(OccupationVector({0})) == Complex{1.0, 0.0});
}

TEST_CASE("mode permutations relocate photon counts", "[elements]") {
    SECTION("identity") {
        auto reg = plain_registry(3);
        std::mt19937_64 rng(3);
        FockState s = random_state(reg, 2, 4, rng);
        FockState out = apply_permutation(s, ModePermutation::identity(3));
        CHECK(max_amplitude_delta(s, out) == 0.0);
    }

    SECTION("swap on |1,0>") {
        auto reg = plain_registry(2);
        FockState in = FockState::from_terms(reg, 1, {{{1, 0}, 1.0}});
        FockState out = apply_permutation(in, ModePermutation{{1, 0}});
        CHECK(out.amplitude(OccupationVector({0, 1})) == Complex{1.0, 0.0});
    }

    SECTION("d=3 sorter moves a single-beam qudit onto separate paths") {
        // three co-propagating species on path o plus three output paths
        std::vector<ModeLabel> modes;
        for (int l = 0; l < 3; ++l)
            modes.push_back({l, "o:OAM:" + std::to_string(l), ModeRole::other, "o",
                             "OAM:" + std::to_string(l)});
        for (int l = 0; l < 3; ++l)
            modes.push_back({3 + l, "c" + std::to_string(l), ModeRole::input_c,
                             "c" + std::to_string(l), "OAM:" + std::to_string(l)});
        auto reg = make_registry(std::move(modes));

        Complex g0{0.5, 0.1}, g1{-0.3, 0.6}, g2{0.2, -0.4};
        FockState in = FockState::from_terms(
            reg, 2,
            {{{1, 0, 0, 0, 0, 0}, g0}, {{0, 1, 0, 0, 0, 0}, g1}, {{0, 0, 1, 0, 0, 0}, g2}});
        // sorter: species l on path o -> path c_l (and back for the empty c modes)
        FockState out = apply_permutation(in, ModePermutation{{3, 4, 5, 0, 1, 2}});
        CHECK(out.amplitude(OccupationVector({0, 0, 0, 1, 0, 0})) == g0);
        CHECK(out.amplitude(OccupationVector({0, 0, 0, 0, 1, 0})) == g1);
        CHECK(out.amplitude(OccupationVector({0, 0, 0, 0, 0, 1})) == g2);
    }

    SECTION("non-bijective mapping is rejected") {
        auto reg = plain_registry(2);
        FockState in = make_vacuum(reg, 1);
        CHECK_THROWS_AS(apply_permutation(in, ModePermutation{{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(apply_permutation(in, ModePermutation{{0}}), std::invalid_argument);
    }
}

TEST_CASE("beam splitters preserve norm and photon number", "[elements][property]") {
    auto reg = plain_registry(3);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        FockState s = random_state(reg, 3, 4, rng);
        auto bs = random_beam_splitter(static_cast<int>(rng() % 3),
                                       static_cast<int>((rng() % 2 + 1 + rng() % 3) % 3), rng);
        if (bs.mode_a == bs.mode_b) bs.mode_b = (bs.mode_a + 1) % 3;
        FockState out = apply_beam_splitter(s, bs);

        CHECK_THAT(out.norm_squared() - s.norm_squared(),
                   Catch::Matchers::WithinAbs(0.0, 1e-12));

        // photon-number conservation: output totals appear among input totals
        std::vector<int> in_totals;
        for (const auto& [occ, amp] : s.amplitudes()) in_totals.push_back(occ.total());
        for (const auto& [occ, amp] : out.amplitudes()) {
            bool found = std::find(in_totals.begin(), in_totals.end(), occ.total()) !=
                         in_totals.end();
            CHECK(found);
        }

        // applying the conjugate-transpose undoes the element
        FockState back = apply_beam_splitter(out, bs.inverse());
        CHECK(max_amplitude_delta(back, s) < 1e-12);
    }
}

TEST_CASE("paper-convention splitter is self-inverse", "[elements][property]") {
    auto reg = plain_registry(2);
    std::mt19937_64 rng(29);
    auto bs = BeamSplitter::paper_convention(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        FockState s = random_state(reg, 3, 3, rng);
        FockState twice = apply_beam_splitter(apply_beam_splitter(s, bs), bs);
        CHECK(max_amplitude_delta(twice, s) < 1e-12);
    }
}

TEST_CASE("phase shifter and permutation preserve norm exactly", "[elements][property]") {
    auto reg = plain_registry(3);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        FockState s = random_state(reg, 3, 4, rng);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        FockState ps = apply_phase_shift(s, {static_cast<int>(rng() % 3), angle(rng)});
        CHECK_THAT(ps.norm_squared() - s.norm_squared(),
                   Catch::Matchers::WithinAbs(0.0, 1e-14));

        // permutations carry every amplitude over bit-exactly
        std::vector<int> mapping = {0, 1, 2};
        std::shuffle(mapping.begin(), mapping.end(), rng);
        FockState pm = apply_permutation(s, ModePermutation{mapping});
        for (const auto& [occ, amp] : s.amplitudes()) {
            OccupationVector moved = occ;
            for (std::size_t i = 0; i < 3; ++i)
                moved.counts[static_cast<std::size_t>(mapping[i])] = occ.counts[i];
            CHECK(pm.amplitude(moved) == amp);
        }
    }
}
