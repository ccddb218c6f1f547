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

#ifndef MCRSP_ORACLE_H
#define MCRSP_ORACLE_H

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "mcrsp/correction_table.h"
#include "mcrsp/protocol.h"

namespace mcrsp {

/// No Pauli layer completes some branch: the protocol model is inconsistent.
struct DerivationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixed generic point used to derive the shipped oracle table: amplitudes
/// proportional to (2, 3, 4, 5), phases (0.3, 0.7, 1.1).
TargetState generic_derivation_target();
/// a1 = sqrt(0.3), b1 = sqrt(0.2), one controller per channel.
ChannelPair generic_derivation_channels();

/// The i-th Pauli layer in search order: I < X < Z < XZ per qubit, with B1 the
/// fastest-varying position.
PauliLayer candidate_layer(size_t rank);
inline constexpr size_t NUM_CANDIDATE_LAYERS = 256;

/// True if `layer`, applied for `key`, leaves Bob with the target on the
/// ancilla-|0> outcome. Needs n >= 1 and m >= 1 so every (g, h) is reachable.
bool layer_works(const TargetState &t, const ChannelPair &c, const OutcomeKey &key, const PauliLayer &layer);

/// Brute-force search for Bob's corrections: for each key, the first
/// candidate layer (in search order) that works. Throws DerivationError if a
/// key has no working layer. `candidates_tried`, if given, receives the number
/// of layers examined per key.
CorrectionTable derive_correction_table(
    const TargetState &t, const ChannelPair &c, std::array<int, 64> *candidates_tried = nullptr);

/// Table derived once at the generic point.
const CorrectionTable &oracle_table();
const CorrectionTable &table_for(CorrectionSource source);

struct DiffEntry {
    OutcomeKey key;
    PauliLayer paper;
    PauliLayer derived;
    /// The printed layer also completes the branch (correction non-unique).
    bool paper_layer_works = false;
};

struct TableDiff {
    std::vector<DiffEntry> entries;

    bool empty() const {
        return entries.empty();
    }
    size_t non_unique_count() const;
    size_t error_count() const;
};

/// Layers are compared factor by factor; since I, X, Z, XZ are distinct up to
/// global phase this is equality modulo global phase.
TableDiff compare_with_paper(
    const CorrectionTable &derived,
    const CorrectionTable &paper,
    const TargetState &t = generic_derivation_target(),
    const ChannelPair &c = generic_derivation_channels());

/// CSV with header key,paper,derived,paper_layer_works. Layers are written
/// with '+' between factors so each fits in one field.
void write_diff_csv(std::ostream &out, const TableDiff &diff);

struct TargetValidation {
    TargetState target;
    double min_success_fidelity = 0;
    double tsp = 0;
    double tsp_deviation = 0;
};

struct TableValidation {
    std::vector<TargetValidation> per_target;

    double min_fidelity() const;
    double max_tsp_deviation() const;
};

/// Runs the full enumeration with `table` for every target and records the
/// worst success-branch fidelity and |tsp - 4 (a1 b1)^2|.
TableValidation validate_table(
    const CorrectionTable &table, std::span<const TargetState> targets, const ChannelPair &c);

}  // namespace mcrsp

#endif
