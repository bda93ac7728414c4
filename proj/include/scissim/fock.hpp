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
 * Sparse photon-number (Fock) representation of pure states over a finite,
 * registered set of bosonic modes, with ladder-operator and inner-product
 * primitives. States are immutable values: every operation returns a new
 * state and never mutates its input.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scissim/math.hpp"

namespace scissim {

/// Amplitudes at or below this modulus are dropped after optical-element
/// application; removes cancellation debris without touching physical values.
inline constexpr double kPruneEpsilon = 1e-14;

/// Tolerance for "this state is normalized" checks.
inline constexpr double kNormTolerance = 1e-12;

/// Raising a component above the configured total-photon cutoff is a hard
/// error, never a silent truncation.
struct CutoffOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two states passed to a binary operation live on different mode registries.
struct RegistryMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A state has support outside the subspace an operation requires.
struct SubspaceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModeRole { input_c, ancilla_a, output_b, other };

/// One bosonic mode: a spatial path plus a transverse-mode species tag
/// (e.g. "OAM:2" or "HG:1,0"). Two registered modes never share both.
struct ModeLabel {
    int id = 0;
    std::string name;
    ModeRole role = ModeRole::other;
    std::string path;
    std::string species;

    bool operator==(const ModeLabel& o) const {
        return id == o.id && name == o.name && role == o.role && path == o.path &&
               species == o.species;
    }
};

/// Immutable list of modes with contiguous ids starting at 0.
class ModeRegistry {
  public:
    explicit ModeRegistry(std::vector<ModeLabel> modes) : modes_(std::move(modes)) {
        if (modes_.empty()) throw std::invalid_argument("ModeRegistry: no modes");
        for (std::size_t i = 0; i < modes_.size(); ++i) {
            if (modes_[i].id != static_cast<int>(i))
                throw std::invalid_argument("ModeRegistry: ids must be contiguous from 0");
            for (std::size_t j = 0; j < i; ++j) {
                if (modes_[j].path == modes_[i].path && modes_[j].species == modes_[i].species)
                    throw std::invalid_argument("ModeRegistry: duplicate (path, species) pair");
                if (modes_[j].name == modes_[i].name)
                    throw std::invalid_argument("ModeRegistry: duplicate mode name");
            }
        }
    }

    std::size_t size() const { return modes_.size(); }
    const ModeLabel& mode(int id) const {
        if (id < 0 || id >= static_cast<int>(modes_.size()))
            throw std::invalid_argument("ModeRegistry: unregistered mode id");
        return modes_[static_cast<std::size_t>(id)];
    }
    const std::vector<ModeLabel>& modes() const { return modes_; }

    std::vector<int> modes_with_role(ModeRole role) const {
        std::vector<int> ids;
        for (const auto& m : modes_)
            if (m.role == role) ids.push_back(m.id);
        return ids;
    }

    std::vector<int> modes_on_path(const std::string& path) const {
        std::vector<int> ids;
        for (const auto& m : modes_)
            if (m.path == path) ids.push_back(m.id);
        return ids;
    }

    /// Id of the mode with the given (path, species), or -1.
    int find(const std::string& path, const std::string& species) const {
        for (const auto& m : modes_)
            if (m.path == path && m.species == species) return m.id;
        return -1;
    }

    bool operator==(const ModeRegistry& o) const { return modes_ == o.modes_; }

  private:
    std::vector<ModeLabel> modes_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

inline RegistryPtr make_registry(std::vector<ModeLabel> modes) {
    return std::make_shared<const ModeRegistry>(std::move(modes));
}

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

/// Photon counts per registered mode, in mode-id order.
struct OccupationVector {
    std::vector<int> counts;

    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> c) : counts(std::move(c)) {}

    int total() const {
        int t = 0;
        for (int c : counts) t += c;
        return t;
    }

    int operator[](std::size_t i) const { return counts[i]; }
    std::size_t size() const { return counts.size(); }

    bool operator==(const OccupationVector& o) const { return counts == o.counts; }
    bool operator<(const OccupationVector& o) const { return counts < o.counts; }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) os << ',';
            os << counts[i];
        }
        os << ')';
        return os.str();
    }
};

/**
 * Pure state as a sparse map occupation -> complex amplitude. Total photon
 * number of every stored component is bounded by an explicit cutoff;
 * exceeding it is a CutoffOverflow error.
 */
class FockState {
  public:
    using AmplitudeMap = std::map<OccupationVector, Complex>;

    FockState(RegistryPtr registry, int cutoff) : FockState(std::move(registry), cutoff, {}) {}

    FockState(RegistryPtr registry, int cutoff, AmplitudeMap amplitudes)
        : registry_(std::move(registry)), cutoff_(cutoff) {
        if (!registry_ || registry_->size() == 0)
            throw std::invalid_argument("FockState: empty registry");
        if (cutoff_ < 0) throw std::invalid_argument("FockState: negative cutoff");
        for (auto& [occ, amp] : amplitudes) {
            if (occ.size() != registry_->size())
                throw std::invalid_argument("FockState: occupation length != mode count");
            for (int c : occ.counts)
                if (c < 0) throw std::invalid_argument("FockState: negative photon count");
            if (occ.total() > cutoff_)
                throw CutoffOverflow("FockState: component " + occ.to_string() +
                                     " exceeds cutoff " + std::to_string(cutoff_));
            if (amp != Complex{0.0, 0.0}) amps_.emplace(occ, amp);
        }
    }

    static FockState from_terms(RegistryPtr registry, int cutoff,
                                std::vector<std::pair<std::vector<int>, Complex>> terms) {
        AmplitudeMap m;
        for (auto& [occ, amp] : terms) m[OccupationVector(std::move(occ))] += amp;
        return FockState(std::move(registry), cutoff, std::move(m));
    }

    const RegistryPtr& registry() const { return registry_; }
    int cutoff() const { return cutoff_; }
    const AmplitudeMap& amplitudes() const { return amps_; }
    bool empty() const { return amps_.empty(); }

    Complex amplitude(const OccupationVector& occ) const {
        auto it = amps_.find(occ);
        return it == amps_.end() ? Complex{0.0, 0.0} : it->second;
    }

    double norm_squared() const {
        double n2 = 0.0;
        for (const auto& [occ, amp] : amps_) n2 += std::norm(amp);
        return n2;
    }

    bool is_normalized(double tol = kNormTolerance) const {
        return std::abs(norm_squared() - 1.0) <= tol;
    }

    /// Copy with amplitudes of modulus <= eps removed.
    FockState pruned(double eps = kPruneEpsilon) const {
        AmplitudeMap m;
        for (const auto& [occ, amp] : amps_)
            if (std::abs(amp) > eps) m.emplace(occ, amp);
        return FockState(registry_, cutoff_, std::move(m));
    }

  private:
    RegistryPtr registry_;
    int cutoff_ = 0;
    AmplitudeMap amps_;
};

/// |0...0> on the given registry.
inline FockState make_vacuum(const RegistryPtr& registry, int cutoff) {
    if (!registry || registry->size() == 0)
        throw std::invalid_argument("make_vacuum: empty registry");
    FockState::AmplitudeMap m;
    m.emplace(OccupationVector(std::vector<int>(registry->size(), 0)), Complex{1.0, 0.0});
    return FockState(registry, cutoff, std::move(m));
}

/// Creation operator a_mode^dag: |n> -> sqrt(n+1) |n+1>. Errors on cutoff
/// overflow; output is generally unnormalized.
inline FockState create(const FockState& state, int mode) {
    state.registry()->mode(mode);  // bounds check
    FockState::AmplitudeMap out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        if (occ.total() + 1 > state.cutoff())
            throw CutoffOverflow("create: component " + occ.to_string() +
                                 " would exceed cutoff " + std::to_string(state.cutoff()));
        OccupationVector next = occ;
        int n = next.counts[static_cast<std::size_t>(mode)]++;
        out[next] += amp * std::sqrt(static_cast<double>(n + 1));
    }
    return FockState(state.registry(), state.cutoff(), std::move(out));
}

/// Annihilation operator a_mode: |n> -> sqrt(n) |n-1>; vacuum components
/// vanish (never an error).
inline FockState annihilate(const FockState& state, int mode) {
    state.registry()->mode(mode);
    FockState::AmplitudeMap out;
    for (const auto& [occ, amp] : state.amplitudes()) {
        int n = occ[static_cast<std::size_t>(mode)];
        if (n == 0) continue;
        OccupationVector next = occ;
        next.counts[static_cast<std::size_t>(mode)] = n - 1;
        out[next] += amp * std::sqrt(static_cast<double>(n));
    }
    return FockState(state.registry(), state.cutoff(), std::move(out));
}

/// <s1|s2> with conjugation on the first argument.
inline Complex inner_product(const FockState& s1, const FockState& s2) {
    if (!same_registry(s1.registry(), s2.registry()))
        throw RegistryMismatch("inner_product: states live on different registries");
    const auto& a = s1.amplitudes();
    const auto& b = s2.amplitudes();
    Complex r{0.0, 0.0};
    if (a.size() <= b.size()) {
        for (const auto& [occ, amp] : a) {
            auto it = b.find(occ);
            if (it != b.end()) r += std::conj(amp) * it->second;
        }
    } else {
        for (const auto& [occ, amp] : b) {
            auto it = a.find(occ);
            if (it != a.end()) r += std::conj(a.at(occ)) * amp;
        }
    }
    return r;
}

/// Componentwise amplitude equality within tol.
inline bool states_equal(const FockState& a, const FockState& b, double tol = kNormTolerance) {
    if (!same_registry(a.registry(), b.registry())) return false;
    for (const auto& [occ, amp] : a.amplitudes())
        if (std::abs(amp - b.amplitude(occ)) > tol) return false;
    for (const auto& [occ, amp] : b.amplitudes())
        if (std::abs(amp - a.amplitude(occ)) > tol) return false;
    return true;
}

/// Componentwise equality after aligning b's global phase to a's via their
/// overlap. Ensemble branches are rays, so this is their natural equality.
inline bool states_equal_up_to_phase(const FockState& a, const FockState& b,
                                     double tol = kNormTolerance) {
    if (!same_registry(a.registry(), b.registry())) return false;
    Complex ov = inner_product(b, a);
    double mag = std::abs(ov);
    if (mag == 0.0) return a.empty() && b.empty();
    Complex phase = ov / mag;
    for (const auto& [occ, amp] : a.amplitudes())
        if (std::abs(amp - phase * b.amplitude(occ)) > tol) return false;
    for (const auto& [occ, amp] : b.amplitudes())
        if (std::abs(phase * amp - a.amplitude(occ)) > tol) return false;
    return true;
}

struct NormalizedState {
    FockState state;
    double norm_squared;
};

/// Unit-norm copy plus the pre-normalization squared norm. Errors on the
/// zero state.
inline NormalizedState normalize(const FockState& state) {
    double n2 = state.norm_squared();
    if (n2 <= 0.0) throw std::domain_error("normalize: zero state");
    double inv = 1.0 / std::sqrt(n2);
    FockState::AmplitudeMap m;
    for (const auto& [occ, amp] : state.amplitudes()) m.emplace(occ, amp * inv);
    return {FockState(state.registry(), state.cutoff(), std::move(m)), n2};
}

inline FockState operator*(const Complex& c, const FockState& s) {
    FockState::AmplitudeMap m;
    for (const auto& [occ, amp] : s.amplitudes()) m.emplace(occ, c * amp);
    return FockState(s.registry(), s.cutoff(), std::move(m));
}

inline FockState operator+(const FockState& a, const FockState& b) {
    if (!same_registry(a.registry(), b.registry()))
        throw RegistryMismatch("operator+: states live on different registries");
    FockState::AmplitudeMap m = a.amplitudes();
    for (const auto& [occ, amp] : b.amplitudes()) m[occ] += amp;
    return FockState(a.registry(), std::max(a.cutoff(), b.cutoff()), std::move(m));
}

inline FockState operator-(const FockState& a, const FockState& b) {
    return a + (Complex{-1.0, 0.0} * b);
}

/// A d-level state as amplitudes gamma_0..gamma_{d-1} of one photon shared
/// over d modes.
struct QuditVector {
    std::vector<Complex> gammas;

    QuditVector() = default;
    explicit QuditVector(std::vector<Complex> g) : gammas(std::move(g)) {}

    std::size_t dimension() const { return gammas.size(); }

    double norm_squared() const {
        double n2 = 0.0;
        for (const auto& g : gammas) n2 += std::norm(g);
        return n2;
    }

    void require_normalized(double tol = kNormTolerance) const {
        if (gammas.empty()) throw std::invalid_argument("QuditVector: empty");
        if (std::abs(norm_squared() - 1.0) > tol)
            throw std::invalid_argument("QuditVector: amplitudes are not unit-norm");
    }
};

}  // namespace scissim
