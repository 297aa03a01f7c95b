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

#pragma once

#include <vector>

namespace recoil {

inline constexpr int bessel_max_order = 200;
inline constexpr double bessel_max_argument = 50.0;

/// Bessel function of the first kind J_order(x) for integer order.
///
/// Supported range |x| <= 50, |order| <= 200; DomainError outside it.
/// Negative orders use J_{-m}(x) = (-1)^m J_m(x).
double bessel_j(int order, double x);

/// J_0(x) ... J_max_order(x) from a single backward recurrence.
std::vector<double> bessel_j_sequence(int max_order, double x);

}  // namespace recoil
