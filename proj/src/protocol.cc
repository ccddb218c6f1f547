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

#include "mcrsp/protocol.h"

#include <cmath>
#include <numbers>

namespace mcrsp {

namespace {

constexpr int MAX_CONTROLLERS = 11;
// a1 = 1/sqrt2 gives a0 = sqrt(1 - a1^2), which can round a hair below a1.
constexpr double BOUND_SLACK = 1e-12;

Amplitude phase(double theta) {
    return std::polar(1.0, theta);
}

void require_bit(int b, const char *name) {
    if (b != 0 && b != 1) {
        throw ValidationError(std::string(name) + " must be a bit (0 or 1)");
    }
}

}  // namespace

TargetState TargetState::make(
    double alpha, double beta, double gamma, double delta, double phi0, double phi1, double phi2, bool normalize) {
    TargetState t{alpha, beta, gamma, delta, phi0, phi1, phi2};
    if (normalize) {
        double n2 = alpha * alpha + beta * beta + gamma * gamma + delta * delta;
        if (!(n2 > 0) || !std::isfinite(n2)) {
            throw ValidationError("target amplitudes must be finite and not all zero");
        }
        double s = 1 / std::sqrt(n2);
        t.alpha *= s;
        t.beta *= s;
        t.gamma *= s;
        t.delta *= s;
    }
    t.validate();
    return t;
}

TargetState TargetState::cluster() {
    return make(0.5, 0.5, 0.5, 0.5, 0, 0, std::numbers::pi);
}

void TargetState::validate() const {
    for (double v : {alpha, beta, gamma, delta, phi0, phi1, phi2}) {
        if (!std::isfinite(v)) {
            throw ValidationError("target parameters must be finite");
        }
    }
    double n2 = alpha * alpha + beta * beta + gamma * gamma + delta * delta;
    if (std::abs(n2 - 1) > PARAMETER_TOL) {
        throw ValidationError("target amplitudes violate alpha^2+beta^2+gamma^2+delta^2 = 1");
    }
    for (double p : {phi0, phi1, phi2}) {
        if (p < 0 || p > 2 * std::numbers::pi) {
            throw ValidationError("target phases must lie in [0, 2pi]");
        }
    }
}

ChannelPair ChannelPair::from_small(double a1, double b1, int n, int m) {
    ChannelPair c{std::sqrt(1 - a1 * a1), a1, std::sqrt(1 - b1 * b1), b1, n, m};
    c.validate();
    return c;
}

ChannelPair ChannelPair::maximal(int n, int m) {
    ChannelPair c;
    c.n = n;
    c.m = m;
    c.validate();
    return c;
}

void ChannelPair::validate() const {
    for (double v : {a0, a1, b0, b1}) {
        if (!std::isfinite(v)) {
            throw ValidationError("channel coefficients must be finite");
        }
    }
    if (std::abs(a0 * a0 + a1 * a1 - 1) > PARAMETER_TOL) {
        throw ValidationError("channel 1 violates a0^2 + a1^2 = 1");
    }
    if (std::abs(b0 * b0 + b1 * b1 - 1) > PARAMETER_TOL) {
        throw ValidationError("channel 2 violates b0^2 + b1^2 = 1");
    }
    if (std::abs(a1) > std::abs(a0) + BOUND_SLACK) {
        throw ValidationError("channel bound violated: |a1| > |a0|");
    }
    if (std::abs(b1) > std::abs(b0) + BOUND_SLACK) {
        throw ValidationError("channel bound violated: |b1| > |b0|");
    }
    if (n < 0 || m < 0) {
        throw ValidationError("controller counts n, m must be non-negative");
    }
    if (n + m > MAX_CONTROLLERS) {
        throw ValidationError("n + m must not exceed " + std::to_string(MAX_CONTROLLERS));
    }
}

size_t OutcomeKey::index() const {
    return (size_t{i} << 5) | (size_t{j} << 4) | (size_t{p} << 3) | (size_t{q} << 2) | (size_t{g} << 1) | size_t{h};
}

OutcomeKey OutcomeKey::from_index(size_t index) {
    if (index >= 64) {
        throw ValidationError("outcome key index must be < 64");
    }
    auto bit = [&](int shift) {
        return static_cast<uint8_t>((index >> shift) & 1);
    };
    return OutcomeKey{bit(5), bit(4), bit(3), bit(2), bit(1), bit(0)};
}

OutcomeKey OutcomeKey::parse(std::string_view text) {
    if (text.size() != 6) {
        throw ValidationError("outcome key must have six bits 'ijpqgh'");
    }
    size_t index = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') {
            throw ValidationError("outcome key must contain only '0' and '1'");
        }
        index = (index << 1) | static_cast<size_t>(ch - '0');
    }
    return from_index(index);
}

std::string OutcomeKey::str() const {
    std::string s;
    for (uint8_t b : {i, j, p, q, g, h}) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

const char *pauli_name(Pauli p) {
    switch (p) {
        case Pauli::I:
            return "I";
        case Pauli::X:
            return "X";
        case Pauli::Z:
            return "Z";
        case Pauli::XZ:
            return "XZ";
    }
    return "?";
}

Pauli parse_pauli(std::string_view text) {
    if (text == "I") {
        return Pauli::I;
    }
    if (text == "X") {
        return Pauli::X;
    }
    if (text == "Z") {
        return Pauli::Z;
    }
    if (text == "XZ") {
        return Pauli::XZ;
    }
    throw ValidationError("unknown Pauli '" + std::string(text) + "' (expected I, X, Z or XZ)");
}

std::string layer_str(const PauliLayer &layer) {
    std::string s;
    for (size_t k = 0; k < layer.size(); k++) {
        if (k) {
            s.push_back(',');
        }
        s += pauli_name(layer[k]);
    }
    return s;
}

PauliLayer parse_layer(std::string_view text) {
    PauliLayer layer{};
    size_t k = 0;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (k >= layer.size()) {
            throw ValidationError("Pauli layer must have exactly four factors");
        }
        layer[k++] = parse_pauli(token);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (k != layer.size()) {
        throw ValidationError("Pauli layer must have exactly four factors");
    }
    return layer;
}

DenseOperator pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return DenseOperator(2, {1, 0, 0, 1});
        case Pauli::X:
            return DenseOperator(2, {0, 1, 1, 0});
        case Pauli::Z:
            return DenseOperator(2, {1, 0, 0, -1});
        case Pauli::XZ:
            // Z * X
            return DenseOperator(2, {0, 1, -1, 0});
    }
    throw ValidationError("invalid Pauli");
}

std::vector<std::string> charlie_labels(int n) {
    std::vector<std::string> out;
    for (int k = 1; k <= n; k++) {
        out.push_back("C" + std::to_string(k));
    }
    return out;
}

std::vector<std::string> dick_labels(int m) {
    std::vector<std::string> out;
    for (int k = 1; k <= m; k++) {
        out.push_back("D" + std::to_string(k));
    }
    return out;
}

StateVector build_target(const TargetState &t) {
    t.validate();
    std::vector<Amplitude> amps(16);
    amps[0b0000] = t.alpha;
    amps[0b0011] = t.beta * phase(t.phi0);
    amps[0b1100] = t.gamma * phase(t.phi1);
    amps[0b1111] = t.delta * phase(t.phi2);
    return StateVector(BOB_QUBITS, std::move(amps));
}

StateVector build_cluster_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 12) {
        throw ValidationError("cluster state size must be in [1, 12]");
    }
    size_t n = static_cast<size_t>(num_qubits);
    std::vector<std::string> labels;
    for (size_t k = 1; k <= n; k++) {
        labels.push_back("Q" + std::to_string(k));
    }
    double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
    std::vector<Amplitude> amps(size_t{1} << n);
    for (size_t x = 0; x < amps.size(); x++) {
        // Qubit s contributes Z on qubit s+1 whenever it sits in |0>.
        int sign = 1;
        for (size_t s = 0; s + 1 < n; s++) {
            bool bit_s = (x >> (n - 1 - s)) & 1;
            bool bit_next = (x >> (n - 2 - s)) & 1;
            if (!bit_s && bit_next) {
                sign = -sign;
            }
        }
        amps[x] = scale * sign;
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector build_channels(const ChannelPair &c) {
    c.validate();
    auto ghz = [](std::vector<std::string> labels, double zero, double one) {
        std::vector<Amplitude> amps(size_t{1} << labels.size());
        amps.front() = zero;
        amps.back() = one;
        return StateVector(std::move(labels), std::move(amps));
    };
    std::vector<std::string> first{"A1", "A2", "B1", "B2"};
    for (auto &l : charlie_labels(c.n)) {
        first.push_back(l);
    }
    std::vector<std::string> second{"A3", "A4", "B3", "B4"};
    for (auto &l : dick_labels(c.m)) {
        second.push_back(l);
    }
    return tensor(ghz(std::move(first), c.a0, c.a1), ghz(std::move(second), c.b0, c.b1));
}

DenseOperator alice_basis(const TargetState &t) {
    t.validate();
    Amplitude e0 = phase(-t.phi0);
    Amplitude e1 = phase(-t.phi1);
    Amplitude e2 = phase(-t.phi2);
    double a = t.alpha, b = t.beta, g = t.gamma, d = t.delta;
    return DenseOperator(
        4,
        {
            a, b * e0,  g * e1,  d * e2,   //
            b, -a * e0, d * e1,  -g * e2,  //
            g, -d * e0, -a * e1, b * e2,   //
            d, g * e0,  -b * e1, -a * e2,  //
        });
}

std::vector<std::vector<Amplitude>> alice_basis_kets(const TargetState &t) {
    auto q = alice_basis(t);
    std::vector<std::vector<Amplitude>> kets;
    for (size_t r = 0; r < 4; r++) {
        auto row = q.row(r);
        kets.emplace_back(row.begin(), row.end());
    }
    return kets;
}

DenseOperator alice_correction(int i, int j, const TargetState &t) {
    require_bit(i, "i");
    require_bit(j, "j");
    t.validate();
    double p0 = t.phi0, p1 = t.phi1, p2 = t.phi2;
    std::array<Amplitude, 4> d;
    switch (2 * i + j) {
        case 0:
            d = {1, 1, 1, 1};
            break;
        case 1:
            d = {phase(p0), -phase(-p0), phase(p2 - p1), -phase(p1 - p2)};
            break;
        case 2:
            d = {phase(p1), -phase(p2 - p0), -phase(-p1), phase(p0 - p2)};
            break;
        default:
            d = {phase(p2), phase(p1 - p0), -phase(p0 - p1), -phase(-p2)};
            break;
    }
    return DenseOperator::diagonal(d);
}

VBlocks v_blocks(int i, int j, const ChannelPair &c) {
    require_bit(i, "i");
    require_bit(j, "j");
    c.validate();
    double ra = c.a1 / c.a0;
    double rb = c.b1 / c.b0;
    double rab = ra * rb;
    VBlocks v{};
    switch (2 * i + j) {
        case 0:
            v.w = {rab, ra, rb, 1};
            break;
        case 1:
            v.w = {ra, rab, 1, rb};
            break;
        case 2:
            v.w = {rb, 1, rab, ra};
            break;
        default:
            v.w = {1, rb, ra, rab};
            break;
    }
    for (size_t k = 0; k < 4; k++) {
        v.u[k] = std::sqrt(std::max(0.0, 1 - v.w[k] * v.w[k]));
    }
    return v;
}

DenseOperator v_matrix(int i, int j, const ChannelPair &c) {
    auto blocks = v_blocks(i, j, c);
    auto op = DenseOperator(8, std::vector<Amplitude>(64));
    for (size_t k = 0; k < 4; k++) {
        op.at(k, k) = blocks.w[k];
        op.at(k, k + 4) = blocks.u[k];
        op.at(k + 4, k) = blocks.u[k];
        op.at(k + 4, k + 4) = -blocks.w[k];
    }
    return op;
}

uint8_t parity(std::span<const uint8_t> bits) {
    uint8_t acc = 0;
    for (uint8_t b : bits) {
        acc ^= (b & 1);
    }
    return acc;
}

}  // namespace mcrsp
