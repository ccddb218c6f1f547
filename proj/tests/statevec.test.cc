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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace mcrsp;
using mcrsp::testing::max_abs_diff;
using mcrsp::testing::random_basis;
using mcrsp::testing::random_state;
using mcrsp::testing::random_unitary;

namespace {

const double S = 1 / std::sqrt(2.0);

StateVector ket(std::vector<std::string> labels, std::vector<Amplitude> amps) {
    return StateVector(std::move(labels), std::move(amps));
}

}  // namespace

TEST(statevec, constructor_rejects_bad_sizes_and_labels) {
    ASSERT_THROW(ket({"a"}, {1, 0, 0}), ValidationError);
    ASSERT_THROW(ket({"a", "a"}, {1, 0, 0, 0}), ValidationError);
    ASSERT_THROW(ket({"a"}, {NAN, 0}), ValidationError);
    ASSERT_THROW(ket({"a"}, {INFINITY, 0}), ValidationError);
}

TEST(statevec, tensor_basis_product) {
    auto s = tensor(StateVector::basis({"a"}, 0), StateVector::basis({"b"}, 1));
    ASSERT_EQ(s.labels(), (std::vector<std::string>{"a", "b"}));
    ASSERT_EQ(s.amp(0b01), Amplitude(1));
    ASSERT_EQ(s.squared_norm(), 1);
}

TEST(statevec, tensor_distributes) {
    auto s = tensor(ket({"a"}, {S, S}), StateVector::basis({"b"}, 0));
    ASSERT_NEAR(max_abs_diff(s, ket({"a", "b"}, {S, 0, S, 0})), 0, 1e-15);
}

TEST(statevec, tensor_ghz_pair_support) {
    auto ghz = [](std::vector<std::string> l) {
        std::vector<Amplitude> a(size_t{1} << l.size());
        a.front() = S;
        a.back() = S;
        return StateVector(std::move(l), std::move(a));
    };
    auto s = tensor(ghz({"a", "b", "c"}), ghz({"d", "e", "f"}));
    int nonzero = 0;
    for (auto a : s.amps()) {
        if (std::abs(a) > 0) {
            nonzero++;
            ASSERT_NEAR(a.real(), 0.5, 1e-15);
        }
    }
    ASSERT_EQ(nonzero, 4);
}

TEST(statevec, tensor_rejects_duplicate_labels) {
    ASSERT_THROW(tensor(StateVector::basis({"a"}, 0), StateVector::basis({"a"}, 0)), ValidationError);
}

TEST(statevec, apply_x_flips) {
    DenseOperator x(2, {0, 1, 1, 0});
    auto s = apply(StateVector::basis({"q"}, 0), x, {"q"});
    ASSERT_EQ(s, StateVector::basis({"q"}, 1));
}

TEST(statevec, apply_z_on_second_qubit) {
    DenseOperator z(2, {1, 0, 0, -1});
    auto s = apply(ket({"a", "b"}, {S, S, 0, 0}), z, {"b"});
    ASSERT_NEAR(max_abs_diff(s, ket({"a", "b"}, {S, -S, 0, 0})), 0, 1e-15);
}

TEST(statevec, apply_respects_target_order) {
    // CNOT with control = first target.
    DenseOperator cnot(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    auto s = StateVector::basis({"a", "b", "c"}, 0b001);  // c = 1
    ASSERT_EQ(apply(s, cnot, {"c", "a"}), StateVector::basis({"a", "b", "c"}, 0b101));
    ASSERT_EQ(apply(s, cnot, {"a", "c"}), s);
}

TEST(statevec, apply_unitary_preserves_norm) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        auto s = random_state(rng, {"a", "b", "c", "d"});
        auto u = random_unitary(rng, 4);
        ASSERT_TRUE(is_unitary(u, 1e-12));
        auto out = apply(s, u, {"d", "b"});
        ASSERT_NEAR(out.squared_norm(), s.squared_norm(), 1e-12 * s.squared_norm());
    }
}

TEST(statevec, apply_errors) {
    auto s = StateVector::basis({"a", "b"}, 0);
    ASSERT_THROW(apply(s, DenseOperator::identity(2), {"zz"}), ValidationError);
    ASSERT_THROW(apply(s, DenseOperator::identity(4), {"a"}), ValidationError);
    ASSERT_THROW(apply(s, DenseOperator::identity(4), {"a", "a"}), ValidationError);
}

TEST(statevec, project_zero_onto_plus_minus) {
    auto basis = plus_minus_basis();
    auto r = project(StateVector::basis({"q"}, 0), std::vector<std::string>{"q"}, basis, 0);
    ASSERT_NEAR(r.probability, 0.5, 1e-15);
    ASSERT_EQ(r.residual.num_qubits(), 0u);
    ASSERT_NEAR(r.residual.squared_norm(), 0.5, 1e-15);
}

TEST(statevec, project_bell_in_computational_basis) {
    std::vector<std::vector<Amplitude>> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    auto bell = ket({"a", "b"}, {S, 0, 0, S});
    std::vector<std::string> targets{"a", "b"};
    const double expected[] = {0.5, 0, 0, 0.5};
    for (size_t k = 0; k < 4; k++) {
        ASSERT_NEAR(project(bell, targets, basis, k).probability, expected[k], 1e-15);
    }
}

TEST(statevec, project_keeps_remaining_label_order) {
    auto s = StateVector::basis({"a", "b", "c", "d"}, 0b0110);
    std::vector<std::vector<Amplitude>> basis{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    // c = 1, a = 0 -> outcome index 0b10 in (c, a) order.
    auto r = project(s, std::vector<std::string>{"c", "a"}, basis, 0b10);
    ASSERT_NEAR(r.probability, 1, 1e-15);
    ASSERT_EQ(r.residual, StateVector::basis({"b", "d"}, 0b10));
    ASSERT_EQ(project(s, std::vector<std::string>{"c", "a"}, basis, 0b01).probability, 0);
}

TEST(statevec, project_conserves_total_probability) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; trial++) {
        auto s = random_state(rng, {"a", "b", "c", "d", "e"});
        auto basis = random_basis(rng, 4);
        std::vector<std::string> targets{"e", "b"};
        double total = 0;
        for (size_t k = 0; k < 4; k++) {
            auto r = project(s, targets, basis, k);
            ASSERT_NEAR(r.residual.squared_norm(), r.probability, 1e-12 * s.squared_norm());
            ASSERT_EQ(r.residual.labels(), (std::vector<std::string>{"a", "c", "d"}));
            total += r.probability;
        }
        ASSERT_NEAR(total, s.squared_norm(), 1e-10 * s.squared_norm());
    }
}

TEST(statevec, project_rejects_bad_basis) {
    auto s = StateVector::basis({"q"}, 0);
    std::vector<std::string> t{"q"};
    std::vector<std::vector<Amplitude>> skew{{1, 0}, {S, S}};
    ASSERT_THROW(project(s, t, skew, 0), ValidationError);
    std::vector<std::vector<Amplitude>> wrong_dim{{1, 0, 0, 0}};
    ASSERT_THROW(project(s, t, wrong_dim, 0), ValidationError);
    ASSERT_THROW(project(s, t, computational_basis(), 2), ValidationError);
}

TEST(statevec, fidelity_basics) {
    std::mt19937_64 rng(3);
    auto psi = random_state(rng, {"a", "b", "c"});
    ASSERT_NEAR(fidelity(psi, psi), 1, 1e-12);
    ASSERT_EQ(fidelity(StateVector::basis({"q"}, 0), StateVector::basis({"q"}, 1)), 0);
    for (int k = 0; k < 20; k++) {
        double theta = 2 * std::numbers::pi * std::uniform_real_distribution<double>()(rng);
        ASSERT_NEAR(fidelity(psi.scaled(std::polar(1.0, theta)), psi), 1, 1e-12);
    }
}

TEST(statevec, fidelity_symmetric_and_phase_invariant) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    for (int k = 0; k < 30; k++) {
        auto a = random_state(rng, {"x", "y"});
        auto b = random_state(rng, {"x", "y"});
        double f = fidelity(a, b);
        ASSERT_GE(f, 0);
        ASSERT_LE(f, 1);
        ASSERT_NEAR(f, fidelity(b, a), 1e-12);
        ASSERT_NEAR(f, fidelity(a.scaled(std::polar(2.0, u(rng))), b.scaled(std::polar(0.5, u(rng)))), 1e-12);
    }
}

TEST(statevec, fidelity_rejects_zero_vector) {
    auto zero = ket({"q"}, {0, 0});
    ASSERT_THROW(fidelity(zero, StateVector::basis({"q"}, 0)), ValidationError);
}

TEST(statevec, fidelity_matches_labels_by_name) {
    auto a = StateVector::basis({"x", "y"}, 0b01);
    auto b = StateVector::basis({"y", "x"}, 0b10);
    ASSERT_EQ(fidelity(a, b), 1);
    ASSERT_THROW(fidelity(a, StateVector::basis({"x", "z"}, 0)), ValidationError);
}

TEST(statevec, is_unitary_examples) {
    ASSERT_TRUE(is_unitary(DenseOperator::identity(4)));
    std::vector<Amplitude> d{1, 2};
    ASSERT_FALSE(is_unitary(DenseOperator::diagonal(d)));
}

TEST(statevec, reorder_swaps_bits) {
    auto s = StateVector::basis({"q1", "q2"}, 0b01);
    std::vector<std::string> order{"q2", "q1"};
    ASSERT_EQ(reorder(s, order), StateVector::basis({"q2", "q1"}, 0b10));
}

TEST(statevec, reorder_round_trip_and_fidelity_invariance) {
    std::mt19937_64 rng(13);
    std::vector<std::string> labels{"a", "b", "c", "d"};
    std::vector<std::string> perm{"c", "a", "d", "b"};
    for (int k = 0; k < 10; k++) {
        auto s = random_state(rng, labels);
        auto t = random_state(rng, labels);
        ASSERT_EQ(reorder(reorder(s, perm), labels), s);
        ASSERT_NEAR(fidelity(reorder(s, perm), reorder(t, perm)), fidelity(s, t), 1e-12);
    }
}

TEST(statevec, reorder_rejects_non_permutation) {
    auto s = StateVector::basis({"a", "b"}, 0);
    std::vector<std::string> short_order{"a"};
    std::vector<std::string> dup{"a", "a"};
    std::vector<std::string> unknown{"a", "z"};
    ASSERT_THROW(reorder(s, short_order), ValidationError);
    ASSERT_THROW(reorder(s, dup), ValidationError);
    ASSERT_THROW(reorder(s, unknown), ValidationError);
}

TEST(statevec, normalized_and_zero) {
    auto s = ket({"q"}, {3, 4});
    ASSERT_NEAR(s.normalized().squared_norm(), 1, 1e-15);
    ASSERT_TRUE(s.normalized().is_normalized());
    ASSERT_THROW(ket({"q"}, {0, 0}).normalized(), ValidationError);
}
