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

#ifndef MCRSP_ACCEPTANCE_H
#define MCRSP_ACCEPTANCE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcrsp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the end-to-end acceptance checks (TSP law, unit TSP at maximal
/// entanglement, branch probabilities, completeness, correction-table audit,
/// classical cost, efficiency table, entropy curve, Monte Carlo consistency,
/// unitarity, controller gating). Random draws are seeded by `seed`.
std::vector<CriterionResult> run_acceptance(uint64_t seed = 20261015);

/// One "[PASS]/[FAIL] #id name: detail" line per criterion.
void print_acceptance(std::ostream &out, const std::vector<CriterionResult> &results);

bool all_passed(const std::vector<CriterionResult> &results);

}  // namespace mcrsp

#endif
