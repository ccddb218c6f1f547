// Copyright 2026 The mcrsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcrsp/random_params.h"

#include <cmath>
#include <numbers>

#include "mcrsp/metrics.h"

namespace mcrsp {

namespace {

double gaussian(std::mt19937_64 &rng) {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    double u = 1 - uniform01(rng);
    double v = uniform01(rng);
    return std::sqrt(-2 * std::log(u)) * std::cos(2 * std::numbers::pi * v);
}

}  // namespace

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

TargetState random_target(std::mt19937_64 &rng) {
    double a = gaussian(rng), b = gaussian(rng), c = gaussian(rng), d = gaussian(rng);
    double p0 = 2 * std::numbers::pi * uniform01(rng);
    double p1 = 2 * std::numbers::pi * uniform01(rng);
    double p2 = 2 * std::numbers::pi * uniform01(rng);
    return TargetState::make(a, b, c, d, p0, p1, p2, true);
}

ChannelPair random_channels(std::mt19937_64 &rng, int n, int m) {
    double a1 = (2 * uniform01(rng) - 1) * MAX_SMALL_COEFFICIENT;
    double b1 = (2 * uniform01(rng) - 1) * MAX_SMALL_COEFFICIENT;
    return ChannelPair::from_small(a1, b1, n, m);
}

}  // namespace mcrsp
