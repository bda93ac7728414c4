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
#include "scissim/oracle.hpp"

using namespace scissim;
using scissim::test::plain_registry;
using scissim::test::random_state;

TEST_CASE("dense basis is graded and complete", "[oracle]") {
    auto basis = oracle::DenseBasis::build(2, 2);
    REQUIRE(basis.size() == 6);  // (0,0) (1,0) (0,1) (2,0) (1,1) (0,2)
    CHECK(basis.states[0] == OccupationVector({0, 0}));
    CHECK(basis.states[1] == OccupationVector({1, 0}));
    CHECK(basis.states[2] == OccupationVector({0, 1}));
    CHECK(basis.states[3].total() == 2);
}

TEST_CASE("identity permutation gives the identity matrix", "[oracle]") {
    auto basis = oracle::DenseBasis::build(3, 2);
    auto m = oracle::dense_element_matrix(ModePermutation::identity(3), basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            CHECK(m[i][j] == (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0}));
}

TEST_CASE("paper-convention splitter has the Hadamard block on one photon", "[oracle]") {
    auto basis = oracle::DenseBasis::build(2, 1);
    REQUIRE(basis.size() == 3);
    auto m = oracle::dense_element_matrix(BeamSplitter::paper_convention(0, 1), basis);
    const double r = 1.0 / std::sqrt(2.0);
    // rows/cols ordered [(0,0), (1,0), (0,1)]
    Complex expected[3][3] = {{1, 0, 0}, {0, r, r}, {0, r, -r}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK_THAT(std::abs(m[i][j] - expected[i][j]), Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK(oracle::unitarity_defect(m) < 1e-12);
}

TEST_CASE("oracle reproduces Hong-Ou-Mandel", "[oracle]") {
    auto basis = oracle::DenseBasis::build(2, 2);
    auto m = oracle::dense_element_matrix(BeamSplitter::paper_convention(0, 1), basis);
    auto reg = plain_registry(2);
    FockState in = FockState::from_terms(reg, 2, {{{1, 1}, 1.0}});
    auto v = oracle::dense_apply(m, oracle::dense_from_sparse(in, basis));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT(std::abs(v[static_cast<std::size_t>(basis.index.at(OccupationVector({2, 0})))] - r),
               Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(v[static_cast<std::size_t>(basis.index.at(OccupationVector({0, 2})))] + r),
               Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(v[static_cast<std::size_t>(basis.index.at(OccupationVector({1, 1})))]),
               Catch::Matchers::WithinAbs(0.0, 1e-14));
}

TEST_CASE("single-scissors outcome enumeration", "[oracle]") {
    // modes c=0, a=1, b=2; one photon in c, ancilla photon in a
    auto reg = make_registry({{0, "c", ModeRole::input_c, "c", "s"},
                              {1, "a", ModeRole::ancilla_a, "a", "s"},
                              {2, "b", ModeRole::output_b, "b", "s"}});
    FockState in = FockState::from_terms(reg, 2, {{{1, 1, 0}, 1.0}});
    std::vector<CircuitElement> circuit = {BeamSplitter::paper_convention(1, 2),
                                           BeamSplitter::paper_convention(1, 0)};
    auto outcomes = oracle::enumerate_outcomes(circuit, in, {0, 1});

    // measured key = (n_c, n_a); four equally likely events
    std::map<OccupationVector, double> expected = {
        {OccupationVector({0, 1}), 0.25},
        {OccupationVector({1, 0}), 0.25},
        {OccupationVector({0, 2}), 0.25},
        {OccupationVector({2, 0}), 0.25},
    };
    REQUIRE(outcomes.size() == 4);
    double total = 0.0;
    for (const auto& o : outcomes) {
        REQUIRE(expected.count(o.measured) == 1);
        CHECK_THAT(o.probability - expected[o.measured], Catch::Matchers::WithinAbs(0.0, 1e-14));
        total += o.probability;
    }
    CHECK_THAT(total - 1.0, Catch::Matchers::WithinAbs(0.0, 1e-12));

    // the single-click event leaves the photon in b
    for (const auto& o : outcomes) {
        if (o.measured == OccupationVector({0, 1}))
            CHECK_THAT(std::abs(o.conditional.at(OccupationVector({1})) - 1.0),
                       Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("empty circuit measures the input", "[oracle]") {
    auto reg = plain_registry(1);
    FockState in = FockState::from_terms(reg, 1, {{{1}, 1.0}});
    auto outcomes = oracle::enumerate_outcomes({}, in, {0});
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].measured == OccupationVector({1}));
    CHECK_THAT(outcomes[0].probability - 1.0, Catch::Matchers::WithinAbs(0.0, 1e-15));
}

TEST_CASE("sparse engine agrees with the dense oracle", "[oracle][property]") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    for (int trial = 0; trial < 100; ++trial) {
        const int n_modes = 2 + static_cast<int>(rng() % 5);  // 2..6
        const int cutoff = 3;
        auto reg = plain_registry(n_modes);
        FockState state = random_state(reg, cutoff - 1, 3, rng);

        std::vector<CircuitElement> circuit;
        const int n_elements = 4 + static_cast<int>(rng() % 5);
        for (int e = 0; e < n_elements; ++e) {
            switch (rng() % 3) {
                case 0: {
                    int a = static_cast<int>(rng() % static_cast<unsigned>(n_modes));
                    int b = (a + 1 + static_cast<int>(rng() % static_cast<unsigned>(n_modes - 1))) %
                            n_modes;
                    if (rng() % 2) {
                        circuit.push_back(BeamSplitter::paper_convention(a, b));
                    } else {
                        double theta = angle(rng) / 4.0, al = angle(rng), be = angle(rng);
                        std::array<Complex, 4> u = {std::polar(std::cos(theta), al),
                                                    std::polar(std::sin(theta), be),
                                                    -std::polar(std::sin(theta), -be),
                                                    std::polar(std::cos(theta), -al)};
                        circuit.push_back(BeamSplitter::general(a, b, u));
                    }
                    break;
                }
                case 1:
                    circuit.push_back(PhaseShifter{
                        static_cast<int>(rng() % static_cast<unsigned>(n_modes)), angle(rng)});
                    break;
                default: {
                    std::vector<int> mapping(static_cast<std::size_t>(n_modes));
                    std::iota(mapping.begin(), mapping.end(), 0);
                    std::shuffle(mapping.begin(), mapping.end(), rng);
                    circuit.push_back(ModePermutation{mapping});
                    break;
                }
            }
        }

        FockState sparse = apply_circuit(state, circuit);

        auto basis = oracle::DenseBasis::build(n_modes, cutoff);
        auto v = oracle::dense_from_sparse(state, basis);
        for (const auto& element : circuit) {
            auto m = oracle::dense_element_matrix(element, basis);
            if (trial % 10 == 0) CHECK(oracle::unitarity_defect(m) < 1e-12);
            v = oracle::dense_apply(m, v);
        }

        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK_THAT(std::abs(v[i] - sparse.amplitude(basis.states[i])),
                       Catch::Matchers::WithinAbs(0.0, 1e-10));
        }
    }
}
