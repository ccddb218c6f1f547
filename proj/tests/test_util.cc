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

#include "test_util.h"

#include <fstream>
#include <sstream>

namespace mcrsp::testing {

DenseOperator random_unitary(std::mt19937_64 &rng, size_t dim) {
    std::normal_distribution<double> g;
    std::vector<std::vector<Amplitude>> rows(dim, std::vector<Amplitude>(dim));
    for (auto &r : rows) {
        for (auto &v : r) {
            v = {g(rng), g(rng)};
        }
    }
    for (size_t r = 0; r < dim; r++) {
        for (size_t prev = 0; prev < r; prev++) {
            Amplitude dot = 0;
            for (size_t k = 0; k < dim; k++) {
                dot += std::conj(rows[prev][k]) * rows[r][k];
            }
            for (size_t k = 0; k < dim; k++) {
                rows[r][k] -= dot * rows[prev][k];
            }
        }
        double n = 0;
        for (auto &v : rows[r]) {
            n += std::norm(v);
        }
        for (auto &v : rows[r]) {
            v /= std::sqrt(n);
        }
    }
    std::vector<Amplitude> e;
    for (auto &r : rows) {
        e.insert(e.end(), r.begin(), r.end());
    }
    return DenseOperator(dim, std::move(e));
}

std::vector<std::vector<Amplitude>> random_basis(std::mt19937_64 &rng, size_t dim) {
    auto u = random_unitary(rng, dim);
    std::vector<std::vector<Amplitude>> basis;
    for (size_t r = 0; r < dim; r++) {
        auto row = u.row(r);
        basis.emplace_back(row.begin(), row.end());
    }
    return basis;
}

StateVector random_state(std::mt19937_64 &rng, std::vector<std::string> labels) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(size_t{1} << labels.size());
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return StateVector(std::move(labels), std::move(amps));
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a.amp(k) - b.amp(k)));
    }
    return worst;
}

std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("mcrsp_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace mcrsp::testing
