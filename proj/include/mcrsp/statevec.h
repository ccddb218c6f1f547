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

#ifndef MCRSP_STATEVEC_H
#define MCRSP_STATEVEC_H

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcrsp {

using Amplitude = std::complex<double>;

/// Raised when an input violates a documented invariant. The message names
/// the violated invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double DEFAULT_ORTHONORMALITY_TOL = 1e-10;
inline constexpr double DEFAULT_UNITARITY_TOL = 1e-12;

/// Dense pure state over an ordered register of named qubits.
///
/// Indexing is big-endian: the first label is the most significant bit of the
/// amplitude index. States are not required to be normalized; intermediate
/// results of `project` carry their squared norm as the branch probability.
class StateVector {
   public:
    StateVector(std::vector<std::string> labels, std::vector<Amplitude> amps);

    /// Computational basis state |index> over `labels`.
    static StateVector basis(std::vector<std::string> labels, size_t index);

    const std::vector<std::string> &labels() const {
        return labels_;
    }
    std::span<const Amplitude> amps() const {
        return amps_;
    }
    Amplitude amp(size_t index) const {
        return amps_[index];
    }
    size_t num_qubits() const {
        return labels_.size();
    }
    size_t size() const {
        return amps_.size();
    }

    /// Position of `label` in the register. Throws ValidationError if absent.
    size_t position(std::string_view label) const;
    bool has_label(std::string_view label) const;

    double squared_norm() const;
    /// Throws ValidationError for the zero vector.
    StateVector normalized() const;
    bool is_normalized(double tol = 1e-12) const;

    StateVector scaled(Amplitude factor) const;

    bool operator==(const StateVector &other) const = default;

   private:
    std::vector<std::string> labels_;
    std::vector<Amplitude> amps_;
};

/// Square operator on a power-of-two dimensional space, row-major, big-endian.
class DenseOperator {
   public:
    DenseOperator(size_t dim, std::vector<Amplitude> entries);

    static DenseOperator identity(size_t dim);
    static DenseOperator diagonal(std::span<const Amplitude> diag);

    size_t dim() const {
        return dim_;
    }
    size_t num_qubits() const;
    Amplitude at(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    Amplitude &at(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    std::span<const Amplitude> row(size_t r) const {
        return std::span<const Amplitude>(entries_).subspan(r * dim_, dim_);
    }

    DenseOperator adjoint() const;
    DenseOperator operator*(const DenseOperator &rhs) const;

    bool operator==(const DenseOperator &other) const = default;

   private:
    size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Result of a projective measurement outcome. The residual is left
/// unnormalized: its squared norm equals `probability`.
struct Projection {
    StateVector residual;
    double probability;
};

StateVector tensor(const StateVector &a, const StateVector &b);

/// Applies `op` to `targets`. The first target is the operator's most
/// significant bit.
StateVector apply(const StateVector &state, const DenseOperator &op, std::span<const std::string> targets);
StateVector apply(const StateVector &state, const DenseOperator &op, std::initializer_list<std::string> targets);

/// Projects `targets` onto basis[outcome] (a ket over the targets, big-endian
/// in target order) and traces them out. The basis must be orthonormal.
Projection project(
    const StateVector &state,
    std::span<const std::string> targets,
    std::span<const std::vector<Amplitude>> basis,
    size_t outcome,
    double tol = DEFAULT_ORTHONORMALITY_TOL);

/// |<a|b>|^2 / (|a|^2 |b|^2). Labels are matched by name, so the two states
/// may list their qubits in different orders.
double fidelity(const StateVector &a, const StateVector &b);

bool is_unitary(const DenseOperator &op, double tol = DEFAULT_UNITARITY_TOL);

StateVector reorder(const StateVector &state, std::span<const std::string> new_order);

/// Max deviation of the Gram matrix of `basis` from identity.
double orthonormality_error(std::span<const std::vector<Amplitude>> basis);

/// Single-qubit bases used throughout: {|0>,|1>} and {|+>,|->}.
const std::vector<std::vector<Amplitude>> &computational_basis();
const std::vector<std::vector<Amplitude>> &plus_minus_basis();

}  // namespace mcrsp

#endif
