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

#include "mcrsp/engine.h"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "mcrsp/oracle.h"
#include "mcrsp/random_params.h"

namespace mcrsp {

namespace {

const std::vector<std::string> ALICE_PAIR{"A1", "A3"};
const std::vector<std::string> ALICE_REST{"A2", "A4"};

std::vector<std::string> controller_labels(const ChannelPair &c) {
    auto labels = charlie_labels(c.n);
    for (auto &d : dick_labels(c.m)) {
        labels.push_back(d);
    }
    return labels;
}

Projection measure_single(const StateVector &s, const std::string &label, const std::vector<std::vector<Amplitude>> &basis, int outcome) {
    return project(s, std::span<const std::string>(&label, 1), basis, static_cast<size_t>(outcome));
}

// Steps 1-2 up to Alice's phase correction: the unnormalized state after
// outcome (i, j) with U^(ij) applied to (A2, A4).
StateVector alice_stage(const StateVector &channels, const TargetState &t, int i, int j, double *prob) {
    auto kets = alice_basis_kets(t);
    auto proj = project(channels, ALICE_PAIR, kets, static_cast<size_t>(2 * i + j));
    if (prob) {
        *prob = proj.probability;
    }
    return apply(proj.residual, alice_correction(i, j, t), ALICE_REST);
}

StateVector before_ancilla_measurement(const StateVector &bob, const PauliLayer &layer, int i, int j, const ChannelPair &c) {
    StateVector s = bob;
    for (size_t k = 0; k < BOB_QUBITS.size(); k++) {
        if (layer[k] != Pauli::I) {
            s = apply(s, pauli_matrix(layer[k]), {BOB_QUBITS[k]});
        }
    }
    s = tensor(s, StateVector::basis({ANCILLA}, 0));
    return apply(s, v_matrix(i, j, c), {ANCILLA, "B1", "B3"});
}

std::vector<Message> message_log(const OutcomeKey &key, std::span<const uint8_t> reported, const ChannelPair &c) {
    std::vector<Message> log;
    log.push_back(Message{"Alice", "Bob", {key.i, key.j}, 2});
    log.push_back(Message{"Alice", "Bob", {key.p, key.q}, 2});
    auto labels = controller_labels(c);
    for (size_t k = 0; k < labels.size(); k++) {
        std::string name = (labels[k][0] == 'C' ? "Charlie" : "Dick") + labels[k].substr(1);
        log.push_back(Message{name, "Bob", {reported[k]}, 3});
    }
    return log;
}

OutcomeKey key_for(int i, int j, int p, int q, std::span<const uint8_t> reported, const ChannelPair &c) {
    auto n = static_cast<size_t>(c.n);
    return OutcomeKey{
        static_cast<uint8_t>(i),
        static_cast<uint8_t>(j),
        static_cast<uint8_t>(p),
        static_cast<uint8_t>(q),
        parity(reported.subspan(0, n)),
        parity(reported.subspan(n)),
    };
}

// Final stage shared by enumeration and sampling.
BranchOutcome finish(
    const StateVector &target,
    const OutcomeKey &key,
    std::vector<uint8_t> actual_bits,
    std::span<const uint8_t> reported,
    const StateVector &post_v,
    uint8_t ancilla,
    double norm_factor,
    const ChannelPair &c) {
    auto proj = measure_single(post_v, ANCILLA, computational_basis(), ancilla);
    BranchOutcome out;
    out.key = key;
    out.controller_bits = std::move(actual_bits);
    out.ancilla = ancilla;
    out.probability = proj.probability;
    out.norm_factor = norm_factor;
    out.fid = branch_fidelity(proj.residual, target);
    out.bob_state = std::move(proj.residual);
    out.messages = message_log(key, reported, c);
    return out;
}

struct Enumerator {
    const TargetState &t;
    const ChannelPair &c;
    const CorrectionTable &table;
    const EngineOptions &options;
    StateVector target;
    std::vector<std::string> controllers;
    std::vector<BranchOutcome> branches;

    int i = 0, j = 0, p = 0, q = 0;
    double norm_factor = 0;
    std::vector<uint8_t> bits{};

    void controllers_from(const StateVector &s, size_t depth) {
        if (depth == controllers.size()) {
            leaf(s);
            return;
        }
        for (int b = 0; b < 2; b++) {
            auto proj = measure_single(s, controllers[depth], plus_minus_basis(), b);
            bits.push_back(static_cast<uint8_t>(b));
            controllers_from(proj.residual, depth + 1);
            bits.pop_back();
        }
    }

    void leaf(const StateVector &bob) {
        std::vector<uint8_t> reported = bits;
        if (options.flipped_controller) {
            reported.at(*options.flipped_controller) ^= 1;
        }
        auto key = key_for(i, j, p, q, reported, c);
        auto post_v = before_ancilla_measurement(bob, table.at(key), i, j, c);
        for (uint8_t a = 0; a < 2; a++) {
            branches.push_back(finish(target, key, bits, reported, post_v, a, norm_factor, c));
        }
    }
};

}  // namespace

size_t BranchOutcome::message_bits() const {
    size_t total = 0;
    for (const auto &m : messages) {
        total += m.bits.size();
    }
    return total;
}

double RunReport::total_probability() const {
    double total = 0;
    for (const auto &b : branches) {
        total += b.probability;
    }
    return total;
}

double RunReport::min_success_fidelity() const {
    double worst = 1;
    for (const auto &b : branches) {
        if (b.ancilla == 0 && b.probability > 0) {
            worst = std::min(worst, b.fid);
        }
    }
    return worst;
}

double branch_fidelity(const StateVector &residual, const StateVector &target) {
    if (residual.squared_norm() == 0) {
        return 0;
    }
    return fidelity(residual, target);
}

int ccc_count(int n, int m) {
    if (n < 0 || m < 0) {
        throw ValidationError("controller counts n, m must be non-negative");
    }
    return m + n + 4;
}

StateVector bob_state_after_step3(
    const TargetState &t, const ChannelPair &c, int i, int j, int p, int q, std::span<const uint8_t> controller_bits) {
    auto labels = controller_labels(c);
    if (controller_bits.size() != labels.size()) {
        throw ValidationError("expected one controller bit per controller (n + m)");
    }
    auto s = alice_stage(build_channels(c), t, i, j, nullptr);
    s = measure_single(s, "A2", plus_minus_basis(), p).residual;
    s = measure_single(s, "A4", plus_minus_basis(), q).residual;
    for (size_t k = 0; k < labels.size(); k++) {
        s = measure_single(s, labels[k], plus_minus_basis(), controller_bits[k]).residual;
    }
    return s;
}

StateVector complete_branch(
    const StateVector &bob, const PauliLayer &layer, int i, int j, const ChannelPair &c, uint8_t ancilla) {
    auto post_v = before_ancilla_measurement(bob, layer, i, j, c);
    return measure_single(post_v, ANCILLA, computational_basis(), ancilla).residual;
}

RunReport enumerate_branches(
    const TargetState &t, const ChannelPair &c, const CorrectionTable &table, const EngineOptions &options) {
    t.validate();
    c.validate();
    Enumerator e{t, c, table, options, build_target(t), controller_labels(c), {}, 0, 0, 0, 0, 0, {}};
    if (options.flipped_controller && *options.flipped_controller >= e.controllers.size()) {
        throw ValidationError("flipped controller index out of range");
    }
    auto channels = build_channels(c);
    for (e.i = 0; e.i < 2; e.i++) {
        for (e.j = 0; e.j < 2; e.j++) {
            auto s = alice_stage(channels, t, e.i, e.j, &e.norm_factor);
            for (e.p = 0; e.p < 2; e.p++) {
                auto sp = measure_single(s, "A2", plus_minus_basis(), e.p).residual;
                for (e.q = 0; e.q < 2; e.q++) {
                    auto sq = measure_single(sp, "A4", plus_minus_basis(), e.q).residual;
                    e.controllers_from(sq, 0);
                }
            }
        }
    }

    RunReport report;
    report.branches = std::move(e.branches);
    for (const auto &b : report.branches) {
        if (b.success()) {
            report.tsp += b.probability;
        }
    }
    report.ccc = ccc_count(c.n, c.m);
    report.target = t;
    report.channels = c;
    report.correction_source =
        table.provenance() == Provenance::derived ? CorrectionSource::oracle : CorrectionSource::paper;
    return report;
}

RunReport enumerate_branches(const TargetState &t, const ChannelPair &c, CorrectionSource source) {
    return enumerate_branches(t, c, table_for(source));
}

namespace {

size_t draw(std::mt19937_64 &rng, std::span<const double> weights) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    double r = uniform01(rng) * total;
    size_t last_nonzero = 0;
    for (size_t k = 0; k < weights.size(); k++) {
        if (weights[k] > 0) {
            last_nonzero = k;
            if (r < weights[k]) {
                return k;
            }
        }
        r -= weights[k];
    }
    return last_nonzero;
}

struct Sampler {
    const TargetState &t;
    const ChannelPair &c;
    const CorrectionTable &table;
    StateVector target;
    std::vector<std::string> controllers;
    std::array<StateVector, 4> alice_states;
    std::array<double, 4> alice_probs{};

    Sampler(const TargetState &t_, const ChannelPair &c_, const CorrectionTable &table_)
        : t(t_),
          c(c_),
          table(table_),
          target(build_target(t_)),
          controllers(controller_labels(c_)),
          alice_states{target, target, target, target} {
        auto channels = build_channels(c);
        for (int k = 0; k < 4; k++) {
            alice_states[k] = alice_stage(channels, t, k >> 1, k & 1, &alice_probs[k]);
        }
    }

    Projection measure_drawn(std::mt19937_64 &rng, const StateVector &s, const std::string &label, const std::vector<std::vector<Amplitude>> &basis, int *outcome) {
        auto p0 = measure_single(s, label, basis, 0);
        auto p1 = measure_single(s, label, basis, 1);
        std::array<double, 2> w{p0.probability, p1.probability};
        *outcome = static_cast<int>(draw(rng, w));
        return *outcome == 0 ? std::move(p0) : std::move(p1);
    }

    BranchOutcome sample(std::mt19937_64 &rng) {
        size_t ij = draw(rng, alice_probs);
        int i = static_cast<int>(ij >> 1), j = static_cast<int>(ij & 1);
        int p = 0, q = 0;
        auto s = measure_drawn(rng, alice_states[ij], "A2", plus_minus_basis(), &p).residual;
        s = measure_drawn(rng, s, "A4", plus_minus_basis(), &q).residual;
        std::vector<uint8_t> bits;
        for (const auto &label : controllers) {
            int b = 0;
            s = measure_drawn(rng, s, label, plus_minus_basis(), &b).residual;
            bits.push_back(static_cast<uint8_t>(b));
        }
        auto key = key_for(i, j, p, q, bits, c);
        auto post_v = before_ancilla_measurement(s, table.at(key), i, j, c);
        int a = 0;
        measure_drawn(rng, post_v, ANCILLA, computational_basis(), &a);
        return finish(target, key, bits, bits, post_v, static_cast<uint8_t>(a), alice_probs[ij], c);
    }
};

}  // namespace

BranchOutcome sample_run(const TargetState &t, const ChannelPair &c, const CorrectionTable &table, uint64_t seed) {
    t.validate();
    c.validate();
    std::mt19937_64 rng(seed);
    Sampler sampler(t, c, table);
    return sampler.sample(rng);
}

BranchOutcome sample_run(const TargetState &t, const ChannelPair &c, CorrectionSource source, uint64_t seed) {
    return sample_run(t, c, table_for(source), seed);
}

MonteCarloEstimate monte_carlo(
    const TargetState &t, const ChannelPair &c, const CorrectionTable &table, size_t trials, uint64_t seed) {
    if (trials < 1) {
        throw ValidationError("trials must be at least 1");
    }
    t.validate();
    c.validate();
    std::mt19937_64 rng(seed);
    Sampler sampler(t, c, table);
    MonteCarloEstimate est;
    est.trials = trials;
    for (size_t k = 0; k < trials; k++) {
        if (sampler.sample(rng).success()) {
            est.successes++;
        }
    }
    double p = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.estimate = p;
    est.std_error = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    return est;
}

MonteCarloEstimate monte_carlo(
    const TargetState &t, const ChannelPair &c, CorrectionSource source, size_t trials, uint64_t seed) {
    return monte_carlo(t, c, table_for(source), trials, seed);
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_branch_csv(std::ostream &out, const RunReport &report) {
    out << "ijpqgh,controller_bits,ancilla,probability,fidelity\n";
    auto n = static_cast<size_t>(report.channels.n);
    for (const auto &b : report.branches) {
        std::string bits;
        for (size_t k = 0; k < b.controller_bits.size(); k++) {
            if (k == n) {
                bits.push_back('|');
            }
            bits.push_back(static_cast<char>('0' + b.controller_bits[k]));
        }
        if (b.controller_bits.size() == n) {
            bits.push_back('|');
        }
        out << b.key.str() << ',' << bits << ',' << int{b.ancilla} << ',' << format_float(b.probability) << ','
            << format_float(b.fid) << '\n';
    }
}

}  // namespace mcrsp
