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

#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "mcrsp/engine.h"
#include "mcrsp/random_params.h"

using namespace mcrsp;

namespace {

// Hand-derived corrections: (i, j) flip the (B1, B2) and (B3, B4) pairs with
// X, and the X-basis parities p^g and q^h each leave a relative sign that a
// single Z on B1 or B3 removes. Where both X and Z are needed the cheaper
// search position is B1/B3 itself.
PauliLayer expected_layer(const OutcomeKey &key) {
    auto combine = [](bool x, bool z) {
        return x ? (z ? Pauli::XZ : Pauli::X) : (z ? Pauli::Z : Pauli::I);
    };
    return {
        combine(key.i, key.p ^ key.g),
        combine(key.i, false),
        combine(key.j, key.q ^ key.h),
        combine(key.j, false),
    };
}

}  // namespace

TEST(oracle, candidate_order) {
    ASSERT_EQ(candidate_layer(0), (PauliLayer{Pauli::I, Pauli::I, Pauli::I, Pauli::I}));
    ASSERT_EQ(candidate_layer(1), (PauliLayer{Pauli::X, Pauli::I, Pauli::I, Pauli::I}));
    ASSERT_EQ(candidate_layer(2), (PauliLayer{Pauli::Z, Pauli::I, Pauli::I, Pauli::I}));
    ASSERT_EQ(candidate_layer(4), (PauliLayer{Pauli::I, Pauli::X, Pauli::I, Pauli::I}));
    ASSERT_EQ(candidate_layer(255), (PauliLayer{Pauli::XZ, Pauli::XZ, Pauli::XZ, Pauli::XZ}));
    std::set<std::string> seen;
    for (size_t r = 0; r < NUM_CANDIDATE_LAYERS; r++) {
        seen.insert(layer_str(candidate_layer(r)));
    }
    ASSERT_EQ(seen.size(), NUM_CANDIDATE_LAYERS);
}

TEST(oracle, derivation_examples) {
    const auto &t = oracle_table();
    ASSERT_EQ(t.provenance(), Provenance::derived);
    ASSERT_EQ(t.at(OutcomeKey::parse("000000")), parse_layer("I,I,I,I"));
    ASSERT_EQ(t.at(OutcomeKey::parse("000010")), parse_layer("Z,I,I,I"));
    ASSERT_EQ(t.at(OutcomeKey::parse("000001")), parse_layer("I,I,Z,I"));
    ASSERT_EQ(t.at(OutcomeKey::parse("110000")), parse_layer("X,X,X,X"));
}

TEST(oracle, derived_table_matches_hand_derivation) {
    const auto &t = oracle_table();
    for (size_t k = 0; k < 64; k++) {
        auto key = OutcomeKey::from_index(k);
        ASSERT_EQ(t.at(key), expected_layer(key)) << key.str();
    }
}

TEST(oracle, derivation_is_deterministic_and_bounded) {
    std::array<int, 64> tried{};
    auto a = derive_correction_table(generic_derivation_target(), generic_derivation_channels(), &tried);
    auto b = derive_correction_table(generic_derivation_target(), generic_derivation_channels());
    ASSERT_EQ(a, b);
    ASSERT_EQ(a, oracle_table());
    for (int n : tried) {
        ASSERT_GE(n, 1);
        ASSERT_LE(n, static_cast<int>(NUM_CANDIDATE_LAYERS));
    }
}

TEST(oracle, derivation_is_target_independent) {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 3; k++) {
        auto t = random_target(rng);
        auto c = random_channels(rng, 1, 1);
        ASSERT_EQ(derive_correction_table(t, c), oracle_table()) << k;
    }
}

TEST(oracle, derivation_needs_both_controller_sides) {
    ASSERT_THROW(
        derive_correction_table(generic_derivation_target(), ChannelPair::from_small(0.3, 0.4, 0, 1)),
        ValidationError);
}

TEST(oracle, layer_works_examples) {
    auto t = generic_derivation_target();
    auto c = generic_derivation_channels();
    auto key = OutcomeKey::parse("000010");
    ASSERT_TRUE(layer_works(t, c, key, parse_layer("Z,I,I,I")));
    // Z on either qubit of the B1 B2 pair fixes the same sign.
    ASSERT_TRUE(layer_works(t, c, key, parse_layer("I,Z,I,I")));
    ASSERT_FALSE(layer_works(t, c, key, parse_layer("I,I,I,I")));
    ASSERT_FALSE(layer_works(t, c, key, parse_layer("I,I,Z,I")));
}

TEST(oracle, revalidation_on_fresh_targets) {
    std::mt19937_64 rng(71);
    std::vector<TargetState> targets;
    for (int k = 0; k < 10; k++) {
        targets.push_back(random_target(rng));
    }
    auto report = validate_table(oracle_table(), targets, ChannelPair::from_small(0.35, 0.55, 1, 1));
    ASSERT_EQ(report.per_target.size(), 10u);
    ASSERT_GE(report.min_fidelity(), SUCCESS_FIDELITY);
    ASSERT_LT(report.max_tsp_deviation(), 1e-9);

    auto maximal = validate_table(oracle_table(), targets, ChannelPair::maximal(1, 1));
    for (const auto &v : maximal.per_target) {
        ASSERT_NEAR(v.tsp, 1, 1e-9);
    }
}

TEST(oracle, fault_injection_is_detected) {
    auto key = OutcomeKey::parse("000000");
    auto corrupted = oracle_table().with_entry(key, parse_layer("I,Z,I,I"));
    std::vector<TargetState> targets{generic_derivation_target()};
    auto report = validate_table(corrupted, targets, generic_derivation_channels());
    ASSERT_LT(report.min_fidelity(), 1 - 1e-3);
}

TEST(oracle, compare_identical_is_empty) {
    ASSERT_TRUE(compare_with_paper(oracle_table(), oracle_table()).empty());
}

TEST(oracle, compare_with_printed_table) {
    auto diff = compare_with_paper(oracle_table(), paper_table());
    std::vector<std::string> keys;
    for (const auto &e : diff.entries) {
        keys.push_back(e.key.str());
        ASSERT_EQ(e.paper, paper_table().at(e.key));
        ASSERT_EQ(e.derived, oracle_table().at(e.key));
        ASSERT_NE(e.paper, e.derived);
        ASSERT_FALSE(e.paper_layer_works) << e.key.str();
    }
    ASSERT_EQ(keys, (std::vector<std::string>{"000111", "001010", "001011", "001110", "011000"}));
    ASSERT_EQ(diff.error_count(), 5u);
    ASSERT_EQ(diff.non_unique_count(), 0u);
}

TEST(oracle, equivalent_alternative_is_non_unique) {
    auto key = OutcomeKey::parse("000010");
    auto alt = oracle_table().with_entry(key, parse_layer("I,Z,I,I"));
    auto diff = compare_with_paper(oracle_table(), alt);
    ASSERT_EQ(diff.entries.size(), 1u);
    ASSERT_TRUE(diff.entries[0].paper_layer_works);
    ASSERT_EQ(diff.non_unique_count(), 1u);
    ASSERT_EQ(diff.error_count(), 0u);
}

TEST(oracle, diff_csv_format) {
    TableDiff diff;
    diff.entries.push_back(DiffEntry{
        OutcomeKey::parse("001110"), parse_layer("I,I,I,I"), parse_layer("I,I,Z,I"), false});
    std::ostringstream out;
    write_diff_csv(out, diff);
    ASSERT_EQ(out.str(), "key,paper,derived,paper_layer_works\n001110,I+I+I+I,I+I+Z+I,false\n");
}

TEST(oracle, table_for_source) {
    ASSERT_EQ(&table_for(CorrectionSource::oracle), &oracle_table());
    ASSERT_EQ(&table_for(CorrectionSource::paper), &paper_table());
}
