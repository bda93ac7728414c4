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
 * Brute-force dense reference used by tests: every optical element becomes
 * an explicit matrix over the full truncated Fock basis, built by expanding
 * creation-operator monomials one operator at a time. Deliberately a
 * different algorithm from the sparse engine's per-component binomial
 * transform, so agreement between the two is meaningful. Slow on purpose.
 */

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "scissim/elements.hpp"
#include "scissim/fock.hpp"
#include "scissim/math.hpp"

namespace scissim::oracle {

inline constexpr std::size_t kMaxBasisSize = 1000000;

/// All occupation vectors with total photons <= cutoff, graded lexicographic
/// (by total photon number, then occupation order).
struct DenseBasis {
    int n_modes = 0;
    int cutoff = 0;
    std::vector<OccupationVector> states;
    std::map<OccupationVector, int> index;

    static DenseBasis build(int n_modes, int cutoff) {
        DenseBasis b;
        b.n_modes = n_modes;
        b.cutoff = cutoff;
        std::vector<int> occ(static_cast<std::size_t>(n_modes), 0);
        for (int total = 0; total <= cutoff; ++total) {
            enumerate_total(occ, 0, total, b);
            if (b.states.size() > kMaxBasisSize)
                throw std::length_error("DenseBasis: basis too large");
        }
        for (std::size_t i = 0; i < b.states.size(); ++i)
            b.index.emplace(b.states[i], static_cast<int>(i));
        return b;
    }

    std::size_t size() const { return states.size(); }

  private:
    static void enumerate_total(std::vector<int>& occ, std::size_t mode, int remaining,
                                DenseBasis& b) {
        if (mode + 1 == occ.size()) {
            occ[mode] = remaining;
            b.states.emplace_back(occ);
            occ[mode] = 0;
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            occ[mode] = k;
            enumerate_total(occ, mode + 1, remaining - k, b);
            occ[mode] = 0;
        }
    }
};

using DenseVector = std::vector<Complex>;
using DenseMatrix = std::vector<std::vector<Complex>>;  // row-major [row][col]

namespace detail {

/// Full n_modes x n_modes single-particle matrix of an element: creation
/// operator of mode j maps to sum_i M[i][j] a_i^dag.
inline std::vector<std::vector<Complex>> mode_matrix(const CircuitElement& element,
                                                     int n_modes) {
    std::vector<std::vector<Complex>> m(static_cast<std::size_t>(n_modes),
                                        std::vector<Complex>(static_cast<std::size_t>(n_modes)));
    for (int i = 0; i < n_modes; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
        auto a = static_cast<std::size_t>(bs->mode_a);
        auto b = static_cast<std::size_t>(bs->mode_b);
        m[a][a] = bs->u[0];
        m[a][b] = bs->u[1];
        m[b][a] = bs->u[2];
        m[b][b] = bs->u[3];
    } else if (const auto* ps = std::get_if<PhaseShifter>(&element)) {
        auto i = static_cast<std::size_t>(ps->mode);
        m[i][i] = std::polar(1.0, ps->phi);
    } else if (const auto* perm = std::get_if<ModePermutation>(&element)) {
        for (auto& row : m) std::fill(row.begin(), row.end(), Complex{0.0, 0.0});
        for (int j = 0; j < n_modes; ++j)
            m[static_cast<std::size_t>(perm->mapping[static_cast<std::size_t>(j)])]
             [static_cast<std::size_t>(j)] = 1.0;
    }
    return m;
}

}  // namespace detail

/// Matrix of the element on the truncated basis, built by substituting every
/// creation operator of the basis monomial and multiplying the polynomial out
/// one operator at a time.
inline DenseMatrix dense_element_matrix(const CircuitElement& element, const DenseBasis& basis) {
    const auto m = detail::mode_matrix(element, basis.n_modes);
    DenseMatrix out(basis.size(), DenseVector(basis.size(), Complex{0.0, 0.0}));

    for (std::size_t col = 0; col < basis.size(); ++col) {
        const OccupationVector& source = basis.states[col];
        // polynomial in creation operators, keyed by exponent vector
        std::map<OccupationVector, Complex> poly;
        poly.emplace(OccupationVector(std::vector<int>(static_cast<std::size_t>(basis.n_modes), 0)),
                     Complex{1.0, 0.0});
        for (int mode = 0; mode < basis.n_modes; ++mode) {
            for (int rep = 0; rep < source[static_cast<std::size_t>(mode)]; ++rep) {
                std::map<OccupationVector, Complex> next;
                for (const auto& [exps, coeff] : poly) {
                    for (int i = 0; i < basis.n_modes; ++i) {
                        const Complex mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(mode)];
                        if (mij == Complex{0.0, 0.0}) continue;
                        OccupationVector bumped = exps;
                        bumped.counts[static_cast<std::size_t>(i)]++;
                        next[bumped] += coeff * mij;
                    }
                }
                poly = std::move(next);
            }
        }
        double source_norm = 1.0;
        for (int c : source.counts) source_norm *= factorial(c);
        for (const auto& [exps, coeff] : poly) {
            double target_norm = 1.0;
            for (int c : exps.counts) target_norm *= factorial(c);
            auto it = basis.index.find(exps);
            if (it == basis.index.end())
                throw std::length_error("dense_element_matrix: component left the basis");
            out[static_cast<std::size_t>(it->second)][col] +=
                coeff * std::sqrt(target_norm / source_norm);
        }
    }
    return out;
}

inline double unitarity_defect(const DenseMatrix& m) {
    const std::size_t n = m.size();
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex e{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) e += std::conj(m[k][i]) * m[k][j];
            if (i == j) e -= 1.0;
            defect = std::max(defect, std::abs(e));
        }
    }
    return defect;
}

inline DenseVector dense_apply(const DenseMatrix& m, const DenseVector& v) {
    DenseVector out(m.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline DenseVector dense_from_sparse(const FockState& state, const DenseBasis& basis) {
    DenseVector v(basis.size(), Complex{0.0, 0.0});
    for (const auto& [occ, amp] : state.amplitudes()) {
        auto it = basis.index.find(occ);
        if (it == basis.index.end())
            throw std::invalid_argument("dense_from_sparse: component outside basis");
        v[static_cast<std::size_t>(it->second)] = amp;
    }
    return v;
}

/// One exact photon-count pattern on the measured modes: its probability and
/// the normalized conditional state on the remaining modes (dense, over the
/// reduced basis).
struct DenseOutcome {
    OccupationVector measured;
    double probability = 0.0;
    std::map<OccupationVector, Complex> conditional;  // keyed by remaining-mode occupation
};

/// Applies the circuit densely and enumerates the exhaustive, exact joint
/// distribution of photon counts on the measured modes.
inline std::vector<DenseOutcome> enumerate_outcomes(const std::vector<CircuitElement>& circuit,
                                                    const FockState& input,
                                                    const std::vector<int>& measured_modes) {
    const int n_modes = static_cast<int>(input.registry()->size());
    DenseBasis basis = DenseBasis::build(n_modes, input.cutoff());
    DenseVector v = dense_from_sparse(input, basis);
    for (const auto& element : circuit)
        v = dense_apply(dense_element_matrix(element, basis), v);

    std::vector<bool> is_measured(static_cast<std::size_t>(n_modes), false);
    for (int m : measured_modes) is_measured[static_cast<std::size_t>(m)] = true;

    std::map<OccupationVector, DenseOutcome> grouped;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (std::abs(v[i]) == 0.0) continue;
        std::vector<int> meas, rest;
        for (int m = 0; m < n_modes; ++m) {
            (is_measured[static_cast<std::size_t>(m)] ? meas : rest)
                .push_back(basis.states[i][static_cast<std::size_t>(m)]);
        }
        OccupationVector key(meas);
        auto& outcome = grouped[key];
        outcome.measured = key;
        outcome.probability += std::norm(v[i]);
        outcome.conditional[OccupationVector(rest)] += v[i];
    }

    std::vector<DenseOutcome> outcomes;
    for (auto& [key, outcome] : grouped) {
        double inv = 1.0 / std::sqrt(outcome.probability);
        for (auto& [occ, amp] : outcome.conditional) amp *= inv;
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

}  // namespace scissim::oracle
