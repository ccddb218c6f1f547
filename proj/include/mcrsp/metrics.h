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

#ifndef MCRSP_METRICS_H
#define MCRSP_METRICS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace mcrsp {

/// Largest allowed magnitude of a1, b1 (and of the entropy argument).
inline constexpr double MAX_SMALL_COEFFICIENT = 0.70710678118654752440;

/// Closed-form total success probability 4 (a1 b1)^2.
double tsp_formula(double a1, double b1);

/// Binary Shannon entropy (base 2) of the channel weight f^2.
double shannon_entropy(double f);

struct EfficiencyInputs {
    int n_s = 0;  // qubits in the prepared state
    int n_q = 0;  // quantum resource qubits
    int n_c = 0;  // classical bits
    double tsp = 0;

    void validate() const;
};

/// n_s / (n_q + n_c) * tsp.
double intrinsic_efficiency(const EfficiencyInputs &e);

struct SchemeRow {
    std::string label;
    int n_s = 0;
    int n_q = 0;
    int n_c = 0;
    double tsp = 0;
    double eta = 0;
    /// The percentage as printed in the published comparison.
    double printed_eta_percent = 0;
};

/// The eight-row scheme comparison with eta recomputed from its inputs.
std::vector<SchemeRow> comparison_table();

struct SweepPoint {
    double a1;
    double b1;
    double tsp;
};

/// resolution x resolution grid over [0, 1/sqrt2]^2, a1 outer.
std::vector<SweepPoint> tsp_sweep(int resolution);

struct EntropyPoint {
    double f;
    double entropy;
};

/// `resolution` points uniformly over [-1/sqrt2, 1/sqrt2].
std::vector<EntropyPoint> entropy_curve(int resolution);

void write_sweep_csv(std::ostream &out, const std::vector<SweepPoint> &sweep);
void write_entropy_csv(std::ostream &out, const std::vector<EntropyPoint> &curve);
void write_comparison_csv(std::ostream &out, const std::vector<SchemeRow> &rows);
/// Aligned plain-text rendering, eta as a two-decimal percentage.
void write_comparison_text(std::ostream &out, const std::vector<SchemeRow> &rows);

std::string format_percent(double fraction);

}  // namespace mcrsp

#endif
