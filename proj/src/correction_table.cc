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

namespace mcrsp {

const char *provenance_name(Provenance p) {
    return p == Provenance::derived ? "derived" : "paper";
}

const char *source_name(CorrectionSource s) {
    return s == CorrectionSource::oracle ? "oracle" : "paper";
}

CorrectionSource parse_source(std::string_view text) {
    if (text == "oracle") {
        return CorrectionSource::oracle;
    }
    if (text == "paper") {
        return CorrectionSource::paper;
    }
    throw ValidationError("correction source must be 'oracle' or 'paper', got '" + std::string(text) + "'");
}

CorrectionTable CorrectionTable::with_entry(const OutcomeKey &key, const PauliLayer &layer) const {
    auto layers = layers_;
    layers[key.index()] = layer;
    return CorrectionTable(layers, provenance_);
}

CorrectionTable parse_table(std::istream &in, Provenance provenance) {
    std::array<PauliLayer, 64> layers{};
    std::array<bool, 64> seen{};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        std::string_view body(line.data() + first, last - first + 1);
        auto space = body.find(' ');
        if (space == std::string_view::npos) {
            throw ValidationError("table line " + std::to_string(line_no) + ": expected 'ijpqgh <layer>'");
        }
        auto rest = body.substr(space);
        rest.remove_prefix(rest.find_first_not_of(' '));
        OutcomeKey key;
        PauliLayer layer;
        try {
            key = OutcomeKey::parse(body.substr(0, space));
            layer = parse_layer(rest);
        } catch (const ValidationError &e) {
            throw ValidationError("table line " + std::to_string(line_no) + ": " + e.what());
        }
        if (seen[key.index()]) {
            throw ValidationError("table line " + std::to_string(line_no) + ": duplicate key " + key.str());
        }
        seen[key.index()] = true;
        layers[key.index()] = layer;
    }
    for (size_t k = 0; k < seen.size(); k++) {
        if (!seen[k]) {
            throw ValidationError("table is missing key " + OutcomeKey::from_index(k).str());
        }
    }
    return CorrectionTable(layers, provenance);
}

CorrectionTable parse_table(std::string_view text, Provenance provenance) {
    std::istringstream in{std::string(text)};
    return parse_table(in, provenance);
}

CorrectionTable load_table(const std::filesystem::path &path, Provenance provenance) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open table file '" + path.string() + "'");
    }
    return parse_table(in, provenance);
}

void write_table(std::ostream &out, const CorrectionTable &table) {
    for (size_t k = 0; k < 64; k++) {
        out << OutcomeKey::from_index(k).str() << ' ' << layer_str(table.at(k)) << '\n';
    }
}

const CorrectionTable &paper_table() {
    static const CorrectionTable table = parse_table(paper_table_text(), Provenance::paper);
    return table;
}

PauliLayer paper_table1(const OutcomeKey &key) {
    return paper_table().at(key);
}

}  // namespace mcrsp
