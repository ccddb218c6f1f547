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

#include "mcrsp/correction_table.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace mcrsp;

TEST(correction_table, printed_rows) {
    ASSERT_EQ(paper_table1(OutcomeKey::parse("000000")), parse_layer("I,I,I,I"));
    ASSERT_EQ(paper_table1(OutcomeKey::parse("000010")), parse_layer("Z,I,I,I"));
    ASSERT_EQ(paper_table1(OutcomeKey::parse("000001")), parse_layer("I,I,Z,I"));
    ASSERT_EQ(paper_table1(OutcomeKey::parse("110000")), parse_layer("X,X,X,X"));
    ASSERT_EQ(paper_table().provenance(), Provenance::paper);
}

TEST(correction_table, embedded_copy_matches_data_file) {
    auto from_file = load_table(MCRSP_PAPER_TABLE_PATH, Provenance::paper);
    ASSERT_EQ(from_file, paper_table());
}

TEST(correction_table, write_parse_round_trip) {
    std::ostringstream out;
    write_table(out, paper_table());
    ASSERT_EQ(parse_table(out.str(), Provenance::paper), paper_table());
}

TEST(correction_table, with_entry_replaces_one_row) {
    auto key = OutcomeKey::parse("000000");
    auto t = paper_table().with_entry(key, parse_layer("I,Z,I,I"));
    ASSERT_EQ(t.at(key), parse_layer("I,Z,I,I"));
    for (size_t k = 1; k < 64; k++) {
        ASSERT_EQ(t.at(k), paper_table().at(k));
    }
}

TEST(correction_table, parse_ignores_comments_and_blank_lines) {
    std::ostringstream out;
    out << "# header\n\n";
    write_table(out, paper_table());
    out << "   \n# trailer\n";
    ASSERT_EQ(parse_table(out.str(), Provenance::paper), paper_table());
}

TEST(correction_table, parse_errors) {
    std::ostringstream full;
    write_table(full, paper_table());
    std::string text = full.str();

    // Missing key.
    std::string missing = text.substr(text.find('\n') + 1);
    ASSERT_THROW(parse_table(missing, Provenance::paper), ValidationError);
    // Duplicate key.
    ASSERT_THROW(parse_table(text + "000000 I,I,I,I\n", Provenance::paper), ValidationError);
    // Bad Pauli name.
    ASSERT_THROW(parse_table("000000 I,I,Y,I\n", Provenance::paper), ValidationError);
    // Missing layer.
    ASSERT_THROW(parse_table("000000\n", Provenance::paper), ValidationError);
}

TEST(correction_table, load_missing_file) {
    auto dir = mcrsp::testing::scratch_dir("correction_table_missing");
    ASSERT_THROW(load_table(dir / "nope.txt", Provenance::paper), std::runtime_error);
}

TEST(correction_table, source_names) {
    ASSERT_EQ(parse_source("oracle"), CorrectionSource::oracle);
    ASSERT_EQ(parse_source("paper"), CorrectionSource::paper);
    ASSERT_THROW(parse_source("other"), ValidationError);
    ASSERT_STREQ(source_name(CorrectionSource::oracle), "oracle");
    ASSERT_STREQ(provenance_name(Provenance::derived), "derived");
}
