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
 * Passive linear-optical elements acting on FockStates: two-mode beam
 * splitters (arbitrary 2x2 unitary on the creation operators), phase
 * shifters, and mode permutations (sorter/mixer). All of them preserve the
 * total photon number per component.
 */

#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "scissim/fock.hpp"
#include "scissim/math.hpp"

namespace scissim {

inline constexpr double kUnitaryTolerance = 1e-12;

namespace detail {

/// Max |(U^dag U - I)_ij| for a row-major 2x2 matrix.
inline double unitarity_defect_2x2(const std::array<Complex, 4>& u) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex e{0.0, 0.0};
            for (int k = 0; k < 2; ++k) e += std::conj(u[static_cast<std::size_t>(2 * k + i)]) *
                                              u[static_cast<std::size_t>(2 * k + j)];
            if (i == j) e -= 1.0;
            d = std::max(d, std::abs(e));
        }
    }
    return d;
}

}  // namespace detail

/**
 * Two-mode coupler defined by a 2x2 unitary acting on creation operators:
 * the first mode's operator maps to u00 a^dag + u10 b^dag, the second's to
 * u01 a^dag + u11 b^dag (columns index inputs).
 */
struct BeamSplitter {
    int mode_a = 0;
    int mode_b = 0;
    std::array<Complex, 4> u{};  // row-major {u00, u01, u10, u11}

    /// Real Hadamard-type 50:50 convention: first -> (first + second)/sqrt2,
    /// second -> (first - second)/sqrt2.
    static BeamSplitter paper_convention(int mode_a, int mode_b) {
        const double r = 1.0 / std::sqrt(2.0);
        return {mode_a, mode_b, {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}}};
    }

    static BeamSplitter general(int mode_a, int mode_b, std::array<Complex, 4> u) {
        if (detail::unitarity_defect_2x2(u) > kUnitaryTolerance)
            throw std::invalid_argument("BeamSplitter: matrix is not unitary");
        return {mode_a, mode_b, u};
    }

    /// Conjugate-transpose matrix on the same mode pair.
    BeamSplitter inverse() const {
        return {mode_a, mode_b,
                {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])}};
    }
};

/// Multiplies a component with n photons in the mode by e^{i n phi}.
struct PhaseShifter {
    int mode = 0;
    double phi = 0.0;
};

/// Relocates photon counts: counts of mode i move to mode mapping[i];
/// amplitudes are carried over unchanged.
struct ModePermutation {
    std::vector<int> mapping;

    static ModePermutation identity(std::size_t n) {
        ModePermutation p;
        p.mapping.resize(n);
        std::iota(p.mapping.begin(), p.mapping.end(), 0);
        return p;
    }
};

using CircuitElement = std::variant<BeamSplitter, PhaseShifter, ModePermutation>;

inline FockState apply_beam_splitter(const FockState& state, const BeamSplitter& bs) {
    const auto& reg = state.registry();
    reg->mode(bs.mode_a);
    reg->mode(bs.mode_b);
    if (bs.mode_a == bs.mode_b)
        throw std::invalid_argument("apply_beam_splitter: modes must be distinct");
    if (detail::unitarity_defect_2x2(bs.u) > kUnitaryTolerance)
        throw std::invalid_argument("apply_beam_splitter: matrix is not unitary");

    const auto ia = static_cast<std::size_t>(bs.mode_a);
    const auto ib = static_cast<std::size_t>(bs.mode_b);
    FockState::AmplitudeMap out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        const int n = occ[ia];
        const int m = occ[ib];
        if (n + m == 0) {
            out[occ] += amp;
            continue;
        }
        // (u00 a + u10 b)^n (u01 a + u11 b)^m expanded binomially; a^p b^q
        // on vacuum carries sqrt(p! q!).
        const Complex base = amp / (sqrt_factorial(n) * sqrt_factorial(m));
        for (int j = 0; j <= n; ++j) {
            for (int k = 0; k <= m; ++k) {
                const int p = j + k;
                const int q = n + m - p;
                Complex c = base * binomial(n, j) * binomial(m, k) * cpow_int(bs.u[0], j) *
                            cpow_int(bs.u[2], n - j) * cpow_int(bs.u[1], k) *
                            cpow_int(bs.u[3], m - k) * sqrt_factorial(p) * sqrt_factorial(q);
                OccupationVector next = occ;
                next.counts[ia] = p;
                next.counts[ib] = q;
                out[next] += c;
            }
        }
    }
    return FockState(reg, state.cutoff(), std::move(out)).pruned();
}

inline FockState apply_phase_shift(const FockState& state, const PhaseShifter& ps) {
    state.registry()->mode(ps.mode);
    FockState::AmplitudeMap out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        int n = occ[static_cast<std::size_t>(ps.mode)];
        out.emplace(occ, amp * std::polar(1.0, ps.phi * n));
    }
    return FockState(state.registry(), state.cutoff(), std::move(out)).pruned();
}

inline FockState apply_permutation(const FockState& state, const ModePermutation& perm) {
    const std::size_t n = state.registry()->size();
    if (perm.mapping.size() != n)
        throw std::invalid_argument("apply_permutation: mapping size != mode count");
    std::vector<bool> seen(n, false);
    for (int target : perm.mapping) {
        if (target < 0 || target >= static_cast<int>(n) || seen[static_cast<std::size_t>(target)])
            throw std::invalid_argument("apply_permutation: mapping is not a bijection");
        seen[static_cast<std::size_t>(target)] = true;
    }
    FockState::AmplitudeMap out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        OccupationVector next = occ;
        for (std::size_t i = 0; i < n; ++i)
            next.counts[static_cast<std::size_t>(perm.mapping[i])] = occ.counts[i];
        out[next] += amp;
    }
    return FockState(state.registry(), state.cutoff(), std::move(out));
}

inline FockState apply_element(const FockState& state, const CircuitElement& element) {
    return std::visit(
        [&](const auto& e) -> FockState {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BeamSplitter>) return apply_beam_splitter(state, e);
            if constexpr (std::is_same_v<T, PhaseShifter>) return apply_phase_shift(state, e);
            if constexpr (std::is_same_v<T, ModePermutation>)
                return apply_permutation(state, e);
        },
        element);
}

inline FockState apply_circuit(FockState state, const std::vector<CircuitElement>& elements) {
    for (const auto& e : elements) state = apply_element(state, e);
    return state;
}

}  // namespace scissim
