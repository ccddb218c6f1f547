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

#include "mcrsp/metrics.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "mcrsp/engine.h"
#include "mcrsp/statevec.h"

namespace mcrsp {

namespace {

// Grid endpoints are computed in floating point, so allow a hair of slack at
// the domain edge.
constexpr double DOMAIN_SLACK = 1e-9;

void require_small(double v, const char *name) {
    if (!std::isfinite(v) || std::abs(v) > MAX_SMALL_COEFFICIENT + DOMAIN_SLACK) {
        throw ValidationError(std::string(name) + " must satisfy |" + name + "| <= 1/sqrt(2)");
    }
}

double xlog2x(double x) {
    return x <= 0 ? 0.0 : x * std::log2(x);
}

double grid_point(int k, int resolution, double lo, double hi) {
    if (k == resolution - 1) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(resolution - 1);
}

void require_resolution(int resolution) {
    if (resolution < 2) {
        throw ValidationError("resolution must be at least 2");
    }
}

}  // namespace

double tsp_formula(double a1, double b1) {
    require_small(a1, "a1");
    require_small(b1, "b1");
    double ab = a1 * b1;
    return 4 * ab * ab;
}

double shannon_entropy(double f) {
    require_small(f, "f");
    double w = std::min(f * f, 0.5);
    return std::max(0.0, -xlog2x(w) - xlog2x(1 - w));
}

void EfficiencyInputs::validate() const {
    if (n_s <= 0 || n_q <= 0 || n_c <= 0) {
        throw ValidationError("n_s, n_q, n_c must be positive");
    }
    if (!(tsp >= 0 && tsp <= 1)) {
        throw ValidationError("tsp must lie in [0, 1]");
    }
}

double intrinsic_efficiency(const EfficiencyInputs &e) {
    e.validate();
    return static_cast<double>(e.n_s) / static_cast<double>(e.n_q + e.n_c) * e.tsp;
}

std::vector<SchemeRow> comparison_table() {
    struct Printed {
        const char *label;
        int n_q;
        int n_c;
        double tsp;
        double percent;
    };
    // Resource qubits: entangled-state qubits plus auxiliary single qubits.
    static const Printed printed[] = {
        {"Ref. [Y.B] (six 2-qubit ETs)", 12, 8, 1.0 / 16, 1.25},
        {"Ref. [Y.B] (two 6-qubit ETs)", 12, 8, 1.0 / 16, 1.25},
        {"Ref. [D.Wan6]", 8, 4, 0.25, 8.33},
        {"Ref. [D.Wang5]", 8, 4, 0.25, 8.33},
        {"Ref. [K.Hou333]", 8, 4, 0.25, 8.33},
        {"Ref. [Y.B.11]", 12, 8, 1.0, 20.00},
        {"Ref. [K.Hou]", 7, 3, 0.25, 10.00},
        {"Current scheme", 8, 4, 1.0, 33.33},
    };
    std::vector<SchemeRow> rows;
    for (const auto &p : printed) {
        EfficiencyInputs in{4, p.n_q, p.n_c, p.tsp};
        rows.push_back(SchemeRow{p.label, in.n_s, in.n_q, in.n_c, in.tsp, intrinsic_efficiency(in), p.percent});
    }
    return rows;
}

std::vector<SweepPoint> tsp_sweep(int resolution) {
    require_resolution(resolution);
    std::vector<SweepPoint> out;
    for (int r = 0; r < resolution; r++) {
        double a1 = grid_point(r, resolution, 0, MAX_SMALL_COEFFICIENT);
        for (int s = 0; s < resolution; s++) {
            double b1 = grid_point(s, resolution, 0, MAX_SMALL_COEFFICIENT);
            out.push_back(SweepPoint{a1, b1, tsp_formula(a1, b1)});
        }
    }
    return out;
}

std::vector<EntropyPoint> entropy_curve(int resolution) {
    require_resolution(resolution);
    std::vector<EntropyPoint> out;
    for (int k = 0; k < resolution; k++) {
        double f = grid_point(k, resolution, -MAX_SMALL_COEFFICIENT, MAX_SMALL_COEFFICIENT);
        // Mirror the grid exactly so the curve is even to the last bit.
        int mirror = resolution - 1 - k;
        if (mirror < k) {
            f = -out[static_cast<size_t>(mirror)].f;
        } else if (mirror == k) {
            f = 0;
        }
        out.push_back(EntropyPoint{f, shannon_entropy(f)});
    }
    return out;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepPoint> &sweep) {
    out << "a1,b1,tsp\n";
    for (const auto &p : sweep) {
        out << format_float(p.a1) << ',' << format_float(p.b1) << ',' << format_float(p.tsp) << '\n';
    }
}

void write_entropy_csv(std::ostream &out, const std::vector<EntropyPoint> &curve) {
    out << "f,entropy\n";
    for (const auto &p : curve) {
        out << format_float(p.f) << ',' << format_float(p.entropy) << '\n';
    }
}

std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", fraction * 100);
    return buf;
}

void write_comparison_csv(std::ostream &out, const std::vector<SchemeRow> &rows) {
    out << "scheme,n_s,n_q,n_c,tsp,eta,eta_percent\n";
    for (const auto &r : rows) {
        out << '"' << r.label << '"' << ',' << r.n_s << ',' << r.n_q << ',' << r.n_c << ',' << format_float(r.tsp)
            << ',' << format_float(r.eta) << ',' << format_percent(r.eta) << '\n';
    }
}

void write_comparison_text(std::ostream &out, const std::vector<SchemeRow> &rows) {
    size_t width = 6;
    for (const auto &r : rows) {
        width = std::max(width, r.label.size());
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-*s  %4s  %4s  %4s  %8s  %8s\n", static_cast<int>(width), "Scheme", "N_s", "N_q",
                  "N_c", "TSP", "eta");
    out << buf;
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "%-*s  %4d  %4d  %4d  %8.4f  %8s\n", static_cast<int>(width), r.label.c_str(),
                      r.n_s, r.n_q, r.n_c, r.tsp, format_percent(r.eta).c_str());
        out << buf;
    }
}

}  // namespace mcrsp
