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

#include "mcrsp/oracle.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "mcrsp/engine.h"
#include "mcrsp/metrics.h"

namespace mcrsp {

namespace {

// One measurement record consistent with parities (g, h): the first
// controller on each side carries the parity, the rest read 0.
std::vector<uint8_t> representative_bits(const ChannelPair &c, const OutcomeKey &key) {
    std::vector<uint8_t> bits(static_cast<size_t>(c.n + c.m), 0);
    bits[0] = key.g;
    bits[static_cast<size_t>(c.n)] = key.h;
    return bits;
}

void require_controllers(const ChannelPair &c) {
    if (c.n < 1 || c.m < 1) {
        throw ValidationError("correction derivation needs n >= 1 and m >= 1 so that every parity occurs");
    }
}

bool completes(const StateVector &bob, const StateVector &target, const OutcomeKey &key, const PauliLayer &layer, const ChannelPair &c) {
    auto residual = complete_branch(bob, layer, key.i, key.j, c, 0);
    return branch_fidelity(residual, target) >= SUCCESS_FIDELITY;
}

StateVector bob_for_key(const TargetState &t, const ChannelPair &c, const OutcomeKey &key) {
    auto bits = representative_bits(c, key);
    return bob_state_after_step3(t, c, key.i, key.j, key.p, key.q, bits);
}

std::string layer_field(const PauliLayer &layer) {
    std::string s = layer_str(layer);
    std::replace(s.begin(), s.end(), ',', '+');
    return s;
}

}  // namespace

TargetState generic_derivation_target() {
    return TargetState::make(2, 3, 4, 5, 0.3, 0.7, 1.1, true);
}

ChannelPair generic_derivation_channels() {
    return ChannelPair::from_small(std::sqrt(0.3), std::sqrt(0.2), 1, 1);
}

PauliLayer candidate_layer(size_t rank) {
    if (rank >= NUM_CANDIDATE_LAYERS) {
        throw ValidationError("candidate layer rank must be < 256");
    }
    PauliLayer layer{};
    for (size_t k = 0; k < 4; k++) {
        layer[k] = static_cast<Pauli>((rank >> (2 * k)) & 3);
    }
    return layer;
}

bool layer_works(const TargetState &t, const ChannelPair &c, const OutcomeKey &key, const PauliLayer &layer) {
    require_controllers(c);
    return completes(bob_for_key(t, c, key), build_target(t), key, layer, c);
}

CorrectionTable derive_correction_table(const TargetState &t, const ChannelPair &c, std::array<int, 64> *candidates_tried) {
    t.validate();
    c.validate();
    require_controllers(c);
    auto target = build_target(t);
    std::array<PauliLayer, 64> layers{};
    for (size_t k = 0; k < 64; k++) {
        auto key = OutcomeKey::from_index(k);
        auto bob = bob_for_key(t, c, key);
        bool found = false;
        int tried = 0;
        for (size_t rank = 0; rank < NUM_CANDIDATE_LAYERS && !found; rank++) {
            tried++;
            auto layer = candidate_layer(rank);
            if (completes(bob, target, key, layer, c)) {
                layers[k] = layer;
                found = true;
            }
        }
        if (candidates_tried) {
            (*candidates_tried)[k] = tried;
        }
        if (!found) {
            throw DerivationError("no Pauli layer completes the branch for key " + key.str());
        }
    }
    return CorrectionTable(layers, Provenance::derived);
}

const CorrectionTable &oracle_table() {
    static const CorrectionTable table =
        derive_correction_table(generic_derivation_target(), generic_derivation_channels());
    return table;
}

const CorrectionTable &table_for(CorrectionSource source) {
    return source == CorrectionSource::oracle ? oracle_table() : paper_table();
}

size_t TableDiff::non_unique_count() const {
    return static_cast<size_t>(std::count_if(entries.begin(), entries.end(), [](const DiffEntry &e) {
        return e.paper_layer_works;
    }));
}

size_t TableDiff::error_count() const {
    return entries.size() - non_unique_count();
}

TableDiff compare_with_paper(
    const CorrectionTable &derived, const CorrectionTable &paper, const TargetState &t, const ChannelPair &c) {
    TableDiff diff;
    for (size_t k = 0; k < 64; k++) {
        if (derived.at(k) == paper.at(k)) {
            continue;
        }
        auto key = OutcomeKey::from_index(k);
        diff.entries.push_back(DiffEntry{key, paper.at(k), derived.at(k), layer_works(t, c, key, paper.at(k))});
    }
    return diff;
}

void write_diff_csv(std::ostream &out, const TableDiff &diff) {
    out << "key,paper,derived,paper_layer_works\n";
    for (const auto &e : diff.entries) {
        out << e.key.str() << ',' << layer_field(e.paper) << ',' << layer_field(e.derived) << ','
            << (e.paper_layer_works ? "true" : "false") << '\n';
    }
}

double TableValidation::min_fidelity() const {
    double worst = 1;
    for (const auto &v : per_target) {
        worst = std::min(worst, v.min_success_fidelity);
    }
    return worst;
}

double TableValidation::max_tsp_deviation() const {
    double worst = 0;
    for (const auto &v : per_target) {
        worst = std::max(worst, v.tsp_deviation);
    }
    return worst;
}

TableValidation validate_table(const CorrectionTable &table, std::span<const TargetState> targets, const ChannelPair &c) {
    TableValidation out;
    double expected = tsp_formula(c.a1, c.b1);
    for (const auto &t : targets) {
        auto report = enumerate_branches(t, c, table);
        out.per_target.push_back(TargetValidation{t, report.min_success_fidelity(), report.tsp, std::abs(report.tsp - expected)});
    }
    return out;
}

}  // namespace mcrsp
