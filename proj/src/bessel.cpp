// Copyright 2026 The recoil-lines Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recoil/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "recoil/errors.hpp"

namespace recoil {

namespace {

constexpr double series_cutoff = 1e-3;
constexpr double overflow_guard = 1e250;
constexpr double rescale = 1e-250;

void check_range(int order, double x) {
    if (!std::isfinite(x) || std::abs(x) > bessel_max_argument) {
        throw DomainError("Bessel argument " + std::to_string(x) + " outside |x| <= 50");
    }
    if (std::abs(order) > bessel_max_order) {
        throw DomainError("Bessel order " + std::to_string(order) + " outside |m| <= 200");
    }
}

// J_m(x) = sum_k (-1)^k (x/2)^(2k+m) / (k! (m+k)!). Converges in a few terms for x < 1e-3.
double power_series(int order, double x) {
    const double half = 0.5 * x;
    const double q = half * half;
    double term = std::exp(order * std::log(half) - std::lgamma(order + 1.0));
    double sum = term;
    for (int k = 1; k < 20 && term != 0.0; ++k) {
        term *= -q / (k * double(order + k));
        sum += term;
    }
    return sum;
}

// Start index for the downward recurrence; far enough above max(order, x)
// that the neglected tail is below double precision.
int miller_start(int max_order, double x) {
    const int m = std::max(max_order, static_cast<int>(std::ceil(x)));
    const int start = m + 20 + static_cast<int>(std::sqrt(100.0 * m));
    return start + (start % 2);
}

}  // namespace

std::vector<double> bessel_j_sequence(int max_order, double x) {
    if (max_order < 0) throw DomainError("maximum order must be non-negative");
    check_range(max_order, x);

    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    const double ax = std::abs(x);
    if (ax == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (ax < series_cutoff) {
        for (int m = 0; m <= max_order; ++m) out[m] = power_series(m, ax);
    } else {
        // Miller's algorithm: recur J_{k-1} = (2k/x) J_k - J_{k+1} downward from
        // an arbitrary seed, then normalize with J_0 + 2 sum_{k>=1} J_{2k} = 1.
        const int start = miller_start(max_order, ax);
        double next = 0.0;  // J_{k+1}
        double cur = 1.0;   // J_k, k = start
        double even_sum = 0.0;
        for (int k = start; k >= 1; --k) {
            const double prev = (2.0 * k / ax) * cur - next;
            next = cur;
            cur = prev;
            const int idx = k - 1;
            if (idx <= max_order) out[idx] = cur;
            if (idx > 0 && idx % 2 == 0) even_sum += 2.0 * cur;
            if (std::abs(cur) > overflow_guard) {
                cur *= rescale;
                next *= rescale;
                even_sum *= rescale;
                for (int i = idx; i <= max_order; ++i) out[i] *= rescale;
            }
        }
        const double norm = even_sum + cur;
        for (double& v : out) v /= norm;
    }
    if (x < 0.0) {
        for (int m = 1; m <= max_order; m += 2) out[m] = -out[m];
    }
    return out;
}

double bessel_j(int order, double x) {
    check_range(order, x);
    const int m = std::abs(order);
    const double value = bessel_j_sequence(m, x)[m];
    return (order < 0 && m % 2 == 1) ? -value : value;
}

}  // namespace recoil
