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

#include "mcrsp/statevec.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace mcrsp {

namespace {

constexpr size_t MAX_QUBITS = 24;

bool is_finite(Amplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

// Bit weight of register position `pos` in a big-endian register of `n` qubits.
size_t weight_of(size_t pos, size_t n) {
    return size_t{1} << (n - 1 - pos);
}

std::vector<size_t> target_positions(const StateVector &state, std::span<const std::string> targets) {
    std::vector<size_t> result;
    result.reserve(targets.size());
    for (const auto &t : targets) {
        size_t p = state.position(t);
        if (std::find(result.begin(), result.end(), p) != result.end()) {
            throw ValidationError("duplicate target qubit '" + t + "'");
        }
        result.push_back(p);
    }
    return result;
}

// Enumerates, for every assignment of the non-target qubits, the base index
// with all target bits cleared. Order follows the non-target qubits' register
// order, big-endian.
std::vector<size_t> rest_bases(size_t n, const std::vector<size_t> &target_pos) {
    std::vector<size_t> rest_weights;
    for (size_t p = 0; p < n; p++) {
        if (std::find(target_pos.begin(), target_pos.end(), p) == target_pos.end()) {
            rest_weights.push_back(weight_of(p, n));
        }
    }
    size_t k = rest_weights.size();
    std::vector<size_t> bases(size_t{1} << k);
    for (size_t r = 0; r < bases.size(); r++) {
        size_t idx = 0;
        for (size_t b = 0; b < k; b++) {
            if ((r >> (k - 1 - b)) & 1) {
                idx |= rest_weights[b];
            }
        }
        bases[r] = idx;
    }
    return bases;
}

// Offsets of each target-subspace index (big-endian over targets).
std::vector<size_t> target_offsets(size_t n, const std::vector<size_t> &target_pos) {
    size_t k = target_pos.size();
    std::vector<size_t> offsets(size_t{1} << k);
    for (size_t t = 0; t < offsets.size(); t++) {
        size_t idx = 0;
        for (size_t b = 0; b < k; b++) {
            if ((t >> (k - 1 - b)) & 1) {
                idx |= weight_of(target_pos[b], n);
            }
        }
        offsets[t] = idx;
    }
    return offsets;
}

}  // namespace

StateVector::StateVector(std::vector<std::string> labels, std::vector<Amplitude> amps)
    : labels_(std::move(labels)), amps_(std::move(amps)) {
    if (labels_.size() > MAX_QUBITS) {
        throw ValidationError("register exceeds " + std::to_string(MAX_QUBITS) + " qubits");
    }
    if (amps_.size() != (size_t{1} << labels_.size())) {
        throw ValidationError("amplitude count must equal 2^(number of labels)");
    }
    std::set<std::string> seen;
    for (const auto &l : labels_) {
        if (!seen.insert(l).second) {
            throw ValidationError("duplicate qubit label '" + l + "'");
        }
    }
    for (const auto &a : amps_) {
        if (!is_finite(a)) {
            throw ValidationError("non-finite amplitude");
        }
    }
}

StateVector StateVector::basis(std::vector<std::string> labels, size_t index) {
    std::vector<Amplitude> amps(size_t{1} << labels.size());
    if (index >= amps.size()) {
        throw ValidationError("basis index out of range");
    }
    amps[index] = 1;
    return StateVector(std::move(labels), std::move(amps));
}

size_t StateVector::position(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw ValidationError("unknown qubit label '" + std::string(label) + "'");
    }
    return static_cast<size_t>(it - labels_.begin());
}

bool StateVector::has_label(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

double StateVector::squared_norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

StateVector StateVector::normalized() const {
    double n2 = squared_norm();
    if (n2 == 0) {
        throw ValidationError("cannot normalize the zero vector");
    }
    return scaled(1.0 / std::sqrt(n2));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(squared_norm() - 1) <= tol;
}

StateVector StateVector::scaled(Amplitude factor) const {
    std::vector<Amplitude> out(amps_);
    for (auto &a : out) {
        a *= factor;
    }
    return StateVector(labels_, std::move(out));
}

DenseOperator::DenseOperator(size_t dim, std::vector<Amplitude> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || (dim_ & (dim_ - 1)) != 0) {
        throw ValidationError("operator dimension must be a power of two");
    }
    if (entries_.size() != dim_ * dim_) {
        throw ValidationError("operator entry count must equal dim*dim");
    }
    for (const auto &a : entries_) {
        if (!is_finite(a)) {
            throw ValidationError("non-finite operator entry");
        }
    }
}

DenseOperator DenseOperator::identity(size_t dim) {
    std::vector<Amplitude> e(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        e[k * dim + k] = 1;
    }
    return DenseOperator(dim, std::move(e));
}

DenseOperator DenseOperator::diagonal(std::span<const Amplitude> diag) {
    size_t dim = diag.size();
    std::vector<Amplitude> e(dim * dim);
    for (size_t k = 0; k < dim; k++) {
        e[k * dim + k] = diag[k];
    }
    return DenseOperator(dim, std::move(e));
}

size_t DenseOperator::num_qubits() const {
    size_t q = 0;
    while ((size_t{1} << q) < dim_) {
        q++;
    }
    return q;
}

DenseOperator DenseOperator::adjoint() const {
    std::vector<Amplitude> e(dim_ * dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            e[c * dim_ + r] = std::conj(at(r, c));
        }
    }
    return DenseOperator(dim_, std::move(e));
}

DenseOperator DenseOperator::operator*(const DenseOperator &rhs) const {
    if (rhs.dim_ != dim_) {
        throw ValidationError("operator dimension mismatch");
    }
    std::vector<Amplitude> e(dim_ * dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            Amplitude a = at(r, k);
            if (a == Amplitude{}) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                e[r * dim_ + c] += a * rhs.at(k, c);
            }
        }
    }
    return DenseOperator(dim_, std::move(e));
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<std::string> labels(a.labels());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<Amplitude> amps(a.size() * b.size());
    for (size_t x = 0; x < a.size(); x++) {
        for (size_t y = 0; y < b.size(); y++) {
            amps[x * b.size() + y] = a.amp(x) * b.amp(y);
        }
    }
    // Duplicate labels are rejected by the constructor.
    return StateVector(std::move(labels), std::move(amps));
}

StateVector apply(const StateVector &state, const DenseOperator &op, std::span<const std::string> targets) {
    auto pos = target_positions(state, targets);
    if ((size_t{1} << pos.size()) != op.dim()) {
        throw ValidationError("operator dimension does not match number of targets");
    }
    size_t n = state.num_qubits();
    auto bases = rest_bases(n, pos);
    auto offsets = target_offsets(n, pos);
    size_t d = op.dim();

    std::vector<Amplitude> out(state.amps().begin(), state.amps().end());
    std::vector<Amplitude> in(d);
    for (size_t base : bases) {
        for (size_t t = 0; t < d; t++) {
            in[t] = state.amp(base | offsets[t]);
        }
        for (size_t r = 0; r < d; r++) {
            Amplitude acc = 0;
            for (size_t c = 0; c < d; c++) {
                acc += op.at(r, c) * in[c];
            }
            out[base | offsets[r]] = acc;
        }
    }
    return StateVector(state.labels(), std::move(out));
}

StateVector apply(const StateVector &state, const DenseOperator &op, std::initializer_list<std::string> targets) {
    return apply(state, op, std::span<const std::string>(targets.begin(), targets.size()));
}

double orthonormality_error(std::span<const std::vector<Amplitude>> basis) {
    double worst = 0;
    for (size_t r = 0; r < basis.size(); r++) {
        for (size_t c = r; c < basis.size(); c++) {
            if (basis[r].size() != basis[c].size()) {
                return INFINITY;
            }
            Amplitude dot = 0;
            for (size_t k = 0; k < basis[r].size(); k++) {
                dot += std::conj(basis[r][k]) * basis[c][k];
            }
            double expected = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expected));
        }
    }
    return worst;
}

Projection project(
    const StateVector &state,
    std::span<const std::string> targets,
    std::span<const std::vector<Amplitude>> basis,
    size_t outcome,
    double tol) {
    auto pos = target_positions(state, targets);
    size_t d = size_t{1} << pos.size();
    if (outcome >= basis.size()) {
        throw ValidationError("measurement outcome index out of range");
    }
    for (const auto &v : basis) {
        if (v.size() != d) {
            throw ValidationError("basis vector dimension does not match number of targets");
        }
    }
    if (orthonormality_error(basis) > tol) {
        throw ValidationError("measurement basis is not orthonormal");
    }

    size_t n = state.num_qubits();
    auto bases = rest_bases(n, pos);
    auto offsets = target_offsets(n, pos);
    const auto &ket = basis[outcome];

    std::vector<Amplitude> out(bases.size());
    double prob = 0;
    for (size_t r = 0; r < bases.size(); r++) {
        Amplitude acc = 0;
        for (size_t t = 0; t < d; t++) {
            acc += std::conj(ket[t]) * state.amp(bases[r] | offsets[t]);
        }
        out[r] = acc;
        prob += std::norm(acc);
    }

    std::vector<std::string> rest_labels;
    for (size_t p = 0; p < n; p++) {
        if (std::find(pos.begin(), pos.end(), p) == pos.end()) {
            rest_labels.push_back(state.labels()[p]);
        }
    }
    return Projection{StateVector(std::move(rest_labels), std::move(out)), prob};
}

StateVector reorder(const StateVector &state, std::span<const std::string> new_order) {
    if (new_order.size() != state.num_qubits()) {
        throw ValidationError("reorder requires a permutation of the existing labels");
    }
    auto pos = target_positions(state, new_order);
    size_t n = state.num_qubits();
    auto offsets = target_offsets(n, pos);
    std::vector<Amplitude> out(state.size());
    for (size_t k = 0; k < out.size(); k++) {
        out[k] = state.amp(offsets[k]);
    }
    return StateVector(std::vector<std::string>(new_order.begin(), new_order.end()), std::move(out));
}

double fidelity(const StateVector &a, const StateVector &b) {
    double na = a.squared_norm();
    double nb = b.squared_norm();
    if (na == 0 || nb == 0) {
        throw ValidationError("fidelity is undefined for the zero vector");
    }
    const StateVector &bb = a.labels() == b.labels() ? b : reorder(b, a.labels());
    Amplitude dot = 0;
    for (size_t k = 0; k < a.size(); k++) {
        dot += std::conj(a.amp(k)) * bb.amp(k);
    }
    double f = std::norm(dot) / (na * nb);
    return std::clamp(f, 0.0, 1.0);
}

bool is_unitary(const DenseOperator &op, double tol) {
    auto prod = op * op.adjoint();
    for (size_t r = 0; r < op.dim(); r++) {
        for (size_t c = 0; c < op.dim(); c++) {
            Amplitude expected = r == c ? 1.0 : 0.0;
            if (std::abs(prod.at(r, c) - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

const std::vector<std::vector<Amplitude>> &computational_basis() {
    static const std::vector<std::vector<Amplitude>> basis{{1, 0}, {0, 1}};
    return basis;
}

const std::vector<std::vector<Amplitude>> &plus_minus_basis() {
    static const double s = 1 / std::sqrt(2.0);
    static const std::vector<std::vector<Amplitude>> basis{{s, s}, {s, -s}};
    return basis;
}

}  // namespace mcrsp
