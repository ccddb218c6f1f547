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

#ifndef MCRSP_RANDOM_PARAMS_H
#define MCRSP_RANDOM_PARAMS_H

#include <random>

#include "mcrsp/protocol.h"

namespace mcrsp {

/// Uniform in [0, 1) from the top 53 bits of the generator output.
double uniform01(std::mt19937_64 &rng);

/// Gaussian amplitudes normalized to the unit sphere, phases uniform in
/// [0, 2pi).
TargetState random_target(std::mt19937_64 &rng);

/// a1, b1 uniform in [-1/sqrt2, 1/sqrt2], a0 and b0 the positive completions.
ChannelPair random_channels(std::mt19937_64 &rng, int n, int m);

}  // namespace mcrsp

#endif
