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

#ifndef MCRSP_CONFIG_H
#define MCRSP_CONFIG_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "mcrsp/correction_table.h"
#include "mcrsp/protocol.h"

namespace mcrsp {

/// Everything a CLI run depends on. The defaults describe the canonical
/// cluster target over maximally entangled channels with one controller on
/// each side.
struct RunConfig {
    TargetState target = TargetState::cluster();
    ChannelPair channels = ChannelPair::maximal(1, 1);
    uint64_t seed = 42;
    size_t trials = 10000;
    CorrectionSource source = CorrectionSource::oracle;
    double tolerance = 1e-9;
    std::string out;
    int resolution = 21;
    /// Optional replacement for the built-in printed correction table.
    std::string paper_table;

    void validate() const;
};

/// Raw `key = value` assignments in file order of precedence (later wins).
using ConfigEntries = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment. Throws ValidationError
/// on malformed lines.
ConfigEntries parse_config_entries(std::istream &in);

/// Applies entries on top of `base`. Unknown keys are rejected. When only one
/// of (a0, a1) or (b0, b1) is given, the other is completed as the positive
/// root of the normalization. The result is validated.
RunConfig apply_config(const ConfigEntries &entries, RunConfig base = {});

}  // namespace mcrsp

#endif
