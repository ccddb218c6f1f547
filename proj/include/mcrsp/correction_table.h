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

#ifndef MCRSP_CORRECTION_TABLE_H
#define MCRSP_CORRECTION_TABLE_H

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "mcrsp/protocol.h"

namespace mcrsp {

enum class Provenance { derived, paper };
enum class CorrectionSource { oracle, paper };

const char *provenance_name(Provenance p);
const char *source_name(CorrectionSource s);
CorrectionSource parse_source(std::string_view text);

/// Bob's Pauli correction for each of the 64 outcome keys ijpqgh.
class CorrectionTable {
   public:
    CorrectionTable(std::array<PauliLayer, 64> layers, Provenance provenance)
        : layers_(layers), provenance_(provenance) {
    }

    const PauliLayer &at(const OutcomeKey &key) const {
        return layers_[key.index()];
    }
    const PauliLayer &at(size_t index) const {
        return layers_.at(index);
    }
    Provenance provenance() const {
        return provenance_;
    }
    const std::array<PauliLayer, 64> &layers() const {
        return layers_;
    }

    /// Copy with a single entry replaced.
    CorrectionTable with_entry(const OutcomeKey &key, const PauliLayer &layer) const;

    bool operator==(const CorrectionTable &) const = default;

   private:
    std::array<PauliLayer, 64> layers_;
    Provenance provenance_;
};

/// Table text format: one line per key, `ijpqgh <B1>,<B2>,<B3>,<B4>`.
/// Blank lines and lines starting with '#' are ignored. All 64 keys must be
/// present exactly once.
CorrectionTable parse_table(std::istream &in, Provenance provenance);
CorrectionTable parse_table(std::string_view text, Provenance provenance);
/// Throws std::runtime_error if the file cannot be opened.
CorrectionTable load_table(const std::filesystem::path &path, Provenance provenance);
/// Writes 64 lines in key order.
void write_table(std::ostream &out, const CorrectionTable &table);

/// The printed correction table, transcribed verbatim (suspect rows included).
std::string_view paper_table_text();
const CorrectionTable &paper_table();
PauliLayer paper_table1(const OutcomeKey &key);

}  // namespace mcrsp

#endif
