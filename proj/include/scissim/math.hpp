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

#include <cmath>
#include <complex>
#include <stdexcept>

namespace scissim {

using Complex = std::complex<double>;

/// n! as a double. Exact for n <= 22, far beyond any photon count used here.
inline double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

inline double sqrt_factorial(int n) { return std::sqrt(factorial(n)); }

/// Binomial coefficient C(n, k) as a double, exact for the small n used here.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return std::round(c);
}

/// Probability that an efficiency-eta counter reports k clicks on n photons:
/// C(n,k) eta^k (1-eta)^(n-k).
inline double binomial_click_pmf(int n, int k, double eta) {
    if (k < 0 || k > n) return 0.0;
    return binomial(n, k) * std::pow(eta, k) * std::pow(1.0 - eta, n - k);
}

/// Integer power of a complex number by repeated multiplication.
inline Complex cpow_int(Complex base, int exp) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace scissim
