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

#ifndef MCRSP_ENGINE_H
#define MCRSP_ENGINE_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcrsp/correction_table.h"
#include "mcrsp/protocol.h"
#include "mcrsp/statevec.h"

namespace mcrsp {

/// A branch counts as a success when the ancilla reads |0> and Bob's state
/// matches the target to this fidelity.
inline constexpr double SUCCESS_FIDELITY = 1 - 1e-9;

struct Message {
    std::string sender;
    std::string receiver;
    std::vector<uint8_t> bits;
    int step = 0;

    bool operator==(const Message &) const = default;
};

struct BranchOutcome {
    OutcomeKey key;
    /// Actual measurement results x1..xn, y1..ym.
    std::vector<uint8_t> controller_bits;
    uint8_t ancilla = 0;
    /// Probability of the whole branch.
    double probability = 0;
    /// Probability of Alice's two-qubit outcome (i, j) alone.
    double norm_factor = 0;
    /// Bob's residual (B1, B2, B3, B4) state, unnormalized: squared norm
    /// equals `probability`.
    StateVector bob_state = StateVector::basis(BOB_QUBITS, 0);
    /// Fidelity against the target; 0 for a zero-probability branch.
    double fid = 0;
    std::vector<Message> messages;

    bool success() const {
        return ancilla == 0 && fid >= SUCCESS_FIDELITY;
    }
    size_t message_bits() const;

    bool operator==(const BranchOutcome &) const = default;
};

struct RunReport {
    std::vector<BranchOutcome> branches;
    double tsp = 0;
    int ccc = 0;
    TargetState target;
    ChannelPair channels;
    CorrectionSource correction_source = CorrectionSource::oracle;

    double total_probability() const;
    /// Smallest fidelity over success-ancilla branches with nonzero
    /// probability; 1 when there are none.
    double min_success_fidelity() const;
};

struct EngineOptions {
    /// When set, the controller at this index (into x1..xn, y1..ym) reports
    /// the complement of its measured bit and Bob corrects on the report.
    std::optional<size_t> flipped_controller;
};

/// Runs every measurement branch of the protocol in lexicographic order
/// (i, j, p, q, x1..xn, y1..ym, ancilla).
RunReport enumerate_branches(
    const TargetState &t, const ChannelPair &c, const CorrectionTable &table, const EngineOptions &options = {});
RunReport enumerate_branches(
    const TargetState &t, const ChannelPair &c, CorrectionSource source = CorrectionSource::oracle);

/// Draws one branch with its physical probability. Deterministic in `seed`.
BranchOutcome sample_run(const TargetState &t, const ChannelPair &c, const CorrectionTable &table, uint64_t seed);
BranchOutcome sample_run(const TargetState &t, const ChannelPair &c, CorrectionSource source, uint64_t seed);

struct MonteCarloEstimate {
    double estimate = 0;
    double std_error = 0;
    size_t trials = 0;
    size_t successes = 0;
};

MonteCarloEstimate monte_carlo(
    const TargetState &t, const ChannelPair &c, const CorrectionTable &table, size_t trials, uint64_t seed);
MonteCarloEstimate monte_carlo(
    const TargetState &t, const ChannelPair &c, CorrectionSource source, size_t trials, uint64_t seed);

/// Classical bits sent per run: (i, j), (p, q), and one bit per controller.
int ccc_count(int n, int m);

/// Bob's unnormalized (B1, B2, B3, B4) state after Alice's measurements and
/// the controllers' measurements; its squared norm is the probability of
/// reaching it. `controller_bits` lists x1..xn then y1..ym.
StateVector bob_state_after_step3(
    const TargetState &t, const ChannelPair &c, int i, int j, int p, int q, std::span<const uint8_t> controller_bits);

/// Applies Bob's Pauli layer, adjoins the ancilla, applies v_matrix(i, j)
/// and projects the ancilla onto |ancilla>.
StateVector complete_branch(
    const StateVector &bob, const PauliLayer &layer, int i, int j, const ChannelPair &c, uint8_t ancilla);

/// Fidelity of a possibly-zero residual against the target (0 if zero).
double branch_fidelity(const StateVector &residual, const StateVector &target);

/// "%.12g" formatting used by every CSV writer.
std::string format_float(double v);

/// Header plus one row per branch:
/// ijpqgh,controller_bits,ancilla,probability,fidelity
void write_branch_csv(std::ostream &out, const RunReport &report);

}  // namespace mcrsp

#endif
