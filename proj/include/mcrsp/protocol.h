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

#ifndef MCRSP_PROTOCOL_H
#define MCRSP_PROTOCOL_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mcrsp/statevec.h"

namespace mcrsp {

inline constexpr double PARAMETER_TOL = 1e-9;

/// Classical description of the four-qubit cluster-type state
///     alpha|0000> + beta e^{i phi0}|0011> + gamma e^{i phi1}|1100> + delta e^{i phi2}|1111>
/// that Alice wants Bob to end up holding.
struct TargetState {
    double alpha = 1;
    double beta = 0;
    double gamma = 0;
    double delta = 0;
    double phi0 = 0;
    double phi1 = 0;
    double phi2 = 0;

    /// Validating constructor. With `normalize` set, the four amplitudes are
    /// rescaled to unit norm instead of being rejected.
    static TargetState make(
        double alpha, double beta, double gamma, double delta, double phi0, double phi1, double phi2,
        bool normalize = false);

    /// The canonical four-qubit cluster state (|0000>+|0011>+|1100>-|1111>)/2.
    static TargetState cluster();

    /// Throws ValidationError naming the violated invariant.
    void validate() const;

    bool operator==(const TargetState &) const = default;
};

/// The two GHZ-class resource states
///     a0|0>^{n+4} + a1|1>^{n+4}   over A1 A2 B1 B2 C1..Cn
///     b0|0>^{m+4} + b1|1>^{m+4}   over A3 A4 B3 B4 D1..Dm
/// Coefficients are real and |a0| >= |a1|, |b0| >= |b1|.
struct ChannelPair {
    double a0 = 1 / 1.4142135623730951;
    double a1 = 1 / 1.4142135623730951;
    double b0 = 1 / 1.4142135623730951;
    double b1 = 1 / 1.4142135623730951;
    int n = 1;
    int m = 1;

    /// Channels parameterized by their smaller coefficients; a0, b0 are the
    /// positive roots completing the normalization.
    static ChannelPair from_small(double a1, double b1, int n, int m);
    static ChannelPair maximal(int n, int m);

    void validate() const;

    bool operator==(const ChannelPair &) const = default;
};

/// Classical record of one branch as Bob sees it: Alice's (i, j) and (p, q),
/// and the controller parities g (Charlies) and h (Dicks).
struct OutcomeKey {
    uint8_t i = 0;
    uint8_t j = 0;
    uint8_t p = 0;
    uint8_t q = 0;
    uint8_t g = 0;
    uint8_t h = 0;

    /// Index of the key read as the binary number ijpqgh.
    size_t index() const;
    static OutcomeKey from_index(size_t index);
    /// Parses a six-character bit string "ijpqgh".
    static OutcomeKey parse(std::string_view text);
    std::string str() const;

    bool operator==(const OutcomeKey &) const = default;
};

enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, XZ = 3 };

/// One single-qubit correction per Bob qubit, ordered B1, B2, B3, B4.
/// XZ means X applied first, then Z.
using PauliLayer = std::array<Pauli, 4>;

const char *pauli_name(Pauli p);
Pauli parse_pauli(std::string_view text);
/// Comma-separated form, e.g. "XZ,X,I,I".
std::string layer_str(const PauliLayer &layer);
PauliLayer parse_layer(std::string_view text);
DenseOperator pauli_matrix(Pauli p);

/// Register names.
inline const std::vector<std::string> BOB_QUBITS{"B1", "B2", "B3", "B4"};
inline const std::string ANCILLA = "BA";
std::vector<std::string> charlie_labels(int n);
std::vector<std::string> dick_labels(int m);

/// Target state over (B1, B2, B3, B4).
StateVector build_target(const TargetState &t);

/// One-dimensional N-qubit cluster state, qubits named Q1..QN.
StateVector build_cluster_state(int num_qubits);

/// Both channels, register order [A1, A2, B1, B2, C1..Cn, A3, A4, B3, B4, D1..Dm].
StateVector build_channels(const ChannelPair &c);

/// Alice's two-qubit measurement matrix. Row (2i+j) holds the coefficients of
/// |L_ij> over (|00>, |01>, |10>, |11>) of (A1, A3).
DenseOperator alice_basis(const TargetState &t);

/// Rows of `alice_basis` as measurement kets.
std::vector<std::vector<Amplitude>> alice_basis_kets(const TargetState &t);

/// Alice's diagonal phase correction on (A2, A4) after outcome (i, j).
DenseOperator alice_correction(int i, int j, const TargetState &t);

/// Bob's 8x8 three-qubit operator for outcome (i, j). Its bit order is
/// (BA, B1, B3): index = 4*b_A + 2*b_B1 + b_B3, so the top-left 4x4 block
/// acts on the ancilla-|0> subspace.
DenseOperator v_matrix(int i, int j, const ChannelPair &c);

/// The diagonals of the W and U blocks of `v_matrix`, in (B1, B3) order
/// 00, 01, 10, 11.
struct VBlocks {
    std::array<double, 4> w;
    std::array<double, 4> u;
};
VBlocks v_blocks(int i, int j, const ChannelPair &c);

/// XOR of all bits; 0 for an empty list.
uint8_t parity(std::span<const uint8_t> bits);

}  // namespace mcrsp

#endif
