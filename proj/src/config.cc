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

#include "mcrsp/config.h"

#include <charconv>
#include <cmath>
#include <istream>

namespace mcrsp {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string &key, const std::string &v) {
    try {
        size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return d;
    } catch (const std::exception &) {
        throw ValidationError("config key '" + key + "' expects a number, got '" + v + "'");
    }
}

template <typename Int>
Int to_int(const std::string &key, const std::string &v) {
    Int out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ValidationError("config key '" + key + "' expects an integer, got '" + v + "'");
    }
    return out;
}

}  // namespace

void RunConfig::validate() const {
    target.validate();
    channels.validate();
    if (trials < 1) {
        throw ValidationError("trials must be at least 1");
    }
    if (!(tolerance > 0) || !std::isfinite(tolerance)) {
        throw ValidationError("tolerance must be a positive number");
    }
    if (resolution < 2) {
        throw ValidationError("resolution must be at least 2");
    }
}

ConfigEntries parse_config_entries(std::istream &in) {
    ConfigEntries entries;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        auto body = trim(line);
        if (body.empty()) {
            continue;
        }
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        auto key = trim(std::string_view(body).substr(0, eq));
        auto value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ValidationError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        entries[key] = value;
    }
    return entries;
}

RunConfig apply_config(const ConfigEntries &entries, RunConfig base) {
    RunConfig c = std::move(base);
    bool has_a0 = false, has_a1 = false, has_b0 = false, has_b1 = false;
    for (const auto &[key, v] : entries) {
        if (key == "alpha") {
            c.target.alpha = to_double(key, v);
        } else if (key == "beta") {
            c.target.beta = to_double(key, v);
        } else if (key == "gamma") {
            c.target.gamma = to_double(key, v);
        } else if (key == "delta") {
            c.target.delta = to_double(key, v);
        } else if (key == "phi0") {
            c.target.phi0 = to_double(key, v);
        } else if (key == "phi1") {
            c.target.phi1 = to_double(key, v);
        } else if (key == "phi2") {
            c.target.phi2 = to_double(key, v);
        } else if (key == "a0") {
            c.channels.a0 = to_double(key, v);
            has_a0 = true;
        } else if (key == "a1") {
            c.channels.a1 = to_double(key, v);
            has_a1 = true;
        } else if (key == "b0") {
            c.channels.b0 = to_double(key, v);
            has_b0 = true;
        } else if (key == "b1") {
            c.channels.b1 = to_double(key, v);
            has_b1 = true;
        } else if (key == "n" || key == "n_controllers") {
            c.channels.n = to_int<int>(key, v);
        } else if (key == "m" || key == "m_controllers") {
            c.channels.m = to_int<int>(key, v);
        } else if (key == "seed") {
            c.seed = to_int<uint64_t>(key, v);
        } else if (key == "trials") {
            c.trials = to_int<size_t>(key, v);
        } else if (key == "source" || key == "correction_source") {
            c.source = parse_source(v);
        } else if (key == "tolerance") {
            c.tolerance = to_double(key, v);
        } else if (key == "out" || key == "output") {
            c.out = v;
        } else if (key == "resolution") {
            c.resolution = to_int<int>(key, v);
        } else if (key == "paper_table") {
            c.paper_table = v;
        } else {
            throw ValidationError("unknown config key '" + key + "'");
        }
    }
    auto complete = [](double given) {
        return std::sqrt(std::max(0.0, 1 - given * given));
    };
    if (has_a1 && !has_a0) {
        c.channels.a0 = complete(c.channels.a1);
    } else if (has_a0 && !has_a1) {
        c.channels.a1 = complete(c.channels.a0);
    }
    if (has_b1 && !has_b0) {
        c.channels.b0 = complete(c.channels.b1);
    } else if (has_b0 && !has_b1) {
        c.channels.b1 = complete(c.channels.b0);
    }
    c.validate();
    return c;
}

}  // namespace mcrsp
