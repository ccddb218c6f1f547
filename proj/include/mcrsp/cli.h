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

#ifndef MCRSP_CLI_H
#define MCRSP_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "mcrsp/config.h"

namespace mcrsp {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_VALIDATION = 1,
    EXIT_VERIFICATION = 2,
    EXIT_IO = 3,
};

int cmd_enumerate(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_mc(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_table(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_metrics(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(std::ostream &out);

/// Entry point. `args` excludes the program name, e.g.
/// {"enumerate", "--config", "run.cfg"}.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mcrsp

#endif
