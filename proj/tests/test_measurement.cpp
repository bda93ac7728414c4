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
#include "scissim/measurement.hpp"

using namespace scissim;
using scissim::test::plain_registry;
using scissim::test::random_state;

namespace {

/// The post-splitter single-scissors state (|1a 1b> - |1b 1c> + |2a> - |2c>)/2
/// over modes c=0, a=1, b=2.
FockState scissors_phi() {
    auto reg = make_registry({{0, "c", ModeRole::input_c, "c", "s"},
                              {1, "a", ModeRole::ancilla_a, "a", "s"},
                              {2, "b", ModeRole::output_b, "b", "s"}});
    return FockState::from_terms(reg, 2,
                                 {{{0, 1, 1}, 0.5},
                                  {{1, 0, 1}, -0.5},
                                  {{0, 2, 0}, 0.5},
                                  {{2, 0, 0}, -0.5}});
}

}  // namespace

TEST_CASE("measure_distribution applies the click binomial", "[measurement]") {
    auto reg = plain_registry(1);
    FockState one = FockState::from_terms(reg, 2, {{{1}, 1.0}});
    FockState two = FockState::from_terms(reg, 2, {{{2}, 1.0}});

    SECTION("perfect detector sees the photon") {
        auto dist = measure_distribution(one, {{"D", {0}, 1.0}});
        REQUIRE(dist.size() == 1);
        CHECK(dist.at(DetectionPattern({1})) == 1.0);
    }

    SECTION("|1> with efficiency eta") {
        const double eta = 0.73;
        auto dist = measure_distribution(one, {{"D", {0}, eta}});
        CHECK_THAT(dist.at(DetectionPattern({1})) - eta, Catch::Matchers::WithinAbs(0.0, 1e-15));
        CHECK_THAT(dist.at(DetectionPattern({0})) - (1.0 - eta),
                   Catch::Matchers::WithinAbs(0.0, 1e-15));
    }

    SECTION("|2> misidentified as one click with probability 2 eta (1-eta)") {
        const double eta = 0.6;
        auto dist = measure_distribution(two, {{"D", {0}, eta}});
        CHECK_THAT(dist.at(DetectionPattern({1})) - 2.0 * eta * (1.0 - eta),
                   Catch::Matchers::WithinAbs(0.0, 1e-15));
    }

    SECTION("overlapping coverage is rejected") {
        CHECK_THROWS_AS(measure_distribution(one, {{"D1", {0}, 1.0}, {"D2", {0}, 1.0}}),
                        std::invalid_argument);
    }
}

TEST_CASE("project keeps matching components and strips measured modes", "[measurement]") {
    SECTION("single-scissors click pattern") {
        FockState phi = scissors_phi();
        auto [state, p] = project(phi, {{1, 1}, {0, 0}});  // n_a = 1, n_c = 0
        CHECK_THAT(p - 0.25, Catch::Matchers::WithinAbs(0.0, 1e-14));
        REQUIRE(state.registry()->size() == 1);  // only mode b remains
        CHECK_THAT(std::abs(state.amplitude(OccupationVector({1})) - 1.0),
                   Catch::Matchers::WithinAbs(0.0, 1e-14));
    }

    SECTION("projecting |1_a> on n_a=1 leaves vacuum with certainty") {
        auto reg = plain_registry(2);
        FockState s = FockState::from_terms(reg, 1, {{{1, 0}, 1.0}});
        auto [state, p] = project(s, {{0, 1}});
        CHECK(p == 1.0);
        CHECK(state.amplitude(OccupationVector({0})) == Complex{1.0, 0.0});
    }

    SECTION("impossible pattern has probability zero, not an error") {
        auto reg = plain_registry(2);
        const double r = 1.0 / std::sqrt(2.0);
        FockState s = FockState::from_terms(reg, 2, {{{0, 0}, r}, {{1, 0}, r}});
        auto [state, p] = project(s, {{0, 2}});
        CHECK(p == 0.0);
        CHECK(state.empty());
    }
}

TEST_CASE("project probabilities over exact patterns sum to one", "[measurement][property]") {
    auto reg = plain_registry(3);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        FockState s = random_state(reg, 3, 4, rng);
        // candidate exact counts on modes {0,1}: all pairs occurring in s
        std::set<std::pair<int, int>> seen;
        for (const auto& [occ, amp] : s.amplitudes()) seen.insert({occ[0], occ[1]});
        double total = 0.0;
        for (auto [n0, n1] : seen) total += project(s, {{0, n0}, {1, n1}}).probability;
        CHECK_THAT(total - 1.0, Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("herald weights true configurations by the click binomial", "[measurement]") {
    FockState phi = scissors_phi();
    std::vector<DetectorModel> detectors = {{"D1", {1}, 0.8}, {"D2", {0}, 0.8}};
    auto one_click = [](const DetectionPattern& p) {
        return (p.clicks[0] == 1 && p.clicks[1] == 0) || (p.clicks[0] == 0 && p.clicks[1] == 1);
    };

    SECTION("single-scissors announcement at eta = 0.8") {
        HeraldedEnsemble ens = herald(phi, detectors, one_click);
        CHECK_THAT(ens.total_probability - 0.56, Catch::Matchers::WithinAbs(0.0, 1e-14));

        double vacuum_weight = 0.0;
        for (const auto& b : ens.branches) {
            CHECK(b.probability >= 0.0);
            CHECK(b.state.is_normalized(1e-12));
            if (std::abs(b.state.amplitude(OccupationVector({0}))) > 0.5)
                vacuum_weight += b.probability;
        }
        CHECK_THAT(vacuum_weight - 0.16, Catch::Matchers::WithinAbs(0.0, 1e-14));
    }

    SECTION("accept-nothing predicate") {
        HeraldedEnsemble ens = herald(phi, detectors, [](const DetectionPattern&) { return false; });
        CHECK(ens.total_probability == 0.0);
        CHECK(ens.branches.empty());
    }

    SECTION("eta = 1 reduces to exact projection") {
        std::vector<DetectorModel> ideal = {{"D1", {1}, 1.0}, {"D2", {0}, 1.0}};
        HeraldedEnsemble ens = herald(phi, ideal, [](const DetectionPattern& p) {
            return p.clicks[0] == 1 && p.clicks[1] == 0;
        });
        auto exact = project(phi, {{1, 1}, {0, 0}});
        REQUIRE(ens.branches.size() == 1);
        CHECK_THAT(ens.total_probability - exact.probability,
                   Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK(states_equal(ens.branches[0].state, exact.state, 1e-12));
    }
}

TEST_CASE("species-blind detectors absorb coherently", "[measurement]") {
    // detector covers two modes x=0, y=1; mode r=2 keeps the remainder
    auto reg = make_registry({{0, "x", ModeRole::other, "p", "sx"},
                              {1, "y", ModeRole::other, "p", "sy"},
                              {2, "r", ModeRole::other, "q", "sx"}});
    const double r = 1.0 / std::sqrt(2.0);

    SECTION("orthogonal remainders stay coherent") {
        FockState s = FockState::from_terms(reg, 2, {{{1, 0, 0}, r}, {{0, 1, 1}, r}});
        auto ens = herald(s, {{"D", {0, 1}, 1.0}},
                          [](const DetectionPattern& p) { return p.clicks[0] == 1; });
        REQUIRE(ens.branches.size() == 1);
        CHECK_THAT(ens.total_probability - 1.0, Catch::Matchers::WithinAbs(0.0, 1e-12));
        // coherent strip: (|0> + |1>)/sqrt2 on mode r
        CHECK_THAT(std::abs(ens.branches[0].state.amplitude(OccupationVector({0})) - r),
                   Catch::Matchers::WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(ens.branches[0].state.amplitude(OccupationVector({1})) - r),
                   Catch::Matchers::WithinAbs(0.0, 1e-12));
    }

    SECTION("cancelling remainders fall back to a mixture with the right mass") {
        FockState s = FockState::from_terms(reg, 2, {{{1, 0, 1}, r}, {{0, 1, 1}, -r}});
        auto ens = herald(s, {{"D", {0, 1}, 1.0}},
                          [](const DetectionPattern& p) { return p.clicks[0] == 1; });
        CHECK_THAT(ens.total_probability - 1.0, Catch::Matchers::WithinAbs(0.0, 1e-12));
        for (const auto& b : ens.branches) {
            CHECK(b.state.is_normalized(1e-12));
            CHECK_THAT(std::abs(b.state.amplitude(OccupationVector({1}))) - 1.0,
                       Catch::Matchers::WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("measurement distributions are complete", "[measurement][property]") {
    auto reg = plain_registry(4);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> eff(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        FockState s = random_state(reg, 3, 5, rng);
        std::vector<DetectorModel> detectors = {{"D1", {0}, eff(rng)}, {"D2", {1, 2}, eff(rng)}};
        double total = 0.0;
        for (const auto& [pattern, p] : measure_distribution(s, detectors)) {
            CHECK(p >= 0.0);
            total += p;
        }
        CHECK_THAT(total - 1.0, Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("single-scissors announcement follows eta/2 + eta(1-eta)", "[measurement][property]") {
    // true singles announce with eta/2, misread doubles add eta(1-eta); the
    // sum peaks at eta = 3/4 and declines towards ideal detectors, where the
    // doubles are resolved correctly again.
    FockState phi = scissors_phi();
    auto one_click = [](const DetectionPattern& p) {
        return (p.clicks[0] == 1 && p.clicks[1] == 0) || (p.clicks[0] == 0 && p.clicks[1] == 1);
    };
    for (int i = 0; i <= 10; ++i) {
        double eta = 0.1 * i;
        auto ens = herald(phi, {{"D1", {1}, eta}, {"D2", {0}, eta}}, one_click);
        CHECK_THAT(ens.total_probability - (eta / 2.0 + eta * (1.0 - eta)),
                   Catch::Matchers::WithinAbs(0.0, 1e-13));
    }
}
