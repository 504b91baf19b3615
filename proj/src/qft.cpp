// Copyright 2026 The qalgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qalgo/qft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "qalgo/error.hpp"

namespace qalgo {

namespace {

Matrix fourier_matrix(std::size_t d, double sign) {
    if (d < 2) {
        fail(ErrorCode::InvalidArgument, "QFT dimension must be >= 2");
    }
    if (d > 2048) {
        fail(ErrorCode::InvalidArgument, "dense QFT limited to d <= 2048");
    }
    const auto n = static_cast<Eigen::Index>(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    // Roots indexed by (c * x mod d) keep the phase argument exact.
    std::vector<Amplitude> roots(d);
    for (std::size_t j = 0; j < d; ++j) {
        roots[j] = std::polar(scale, sign * 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d));
    }
    Matrix m(n, n);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t x = 0; x < d; ++x) {
            m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(x)) = roots[(c * x) % d];
        }
    }
    return m;
}

} // namespace

Operator qft_direct(std::size_t d) { return Operator::dense(fourier_matrix(d, -1.0)); }

Operator qft_inverse(std::size_t d) { return Operator::dense(fourier_matrix(d, +1.0)); }

std::size_t QftCircuit::pre_swap_gate_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [](const QftGate &g) { return g.kind != QftGate::Kind::Swap; }));
}

QftCircuit qft_circuit(std::size_t n) {
    if (n < 1 || n > 20) {
        fail(ErrorCode::InvalidArgument, "qft_circuit: n must lie in [1, 20]");
    }
    QftCircuit c;
    c.n = n;
    for (std::size_t j = 0; j < n; ++j) {
        c.gates.push_back({QftGate::Kind::W, j, 0, 0});
        for (std::size_t ctl = j + 1; ctl < n; ++ctl) {
            c.gates.push_back({QftGate::Kind::ControlledB, j, ctl, static_cast<unsigned>(ctl - j)});
        }
    }
    for (std::size_t j = 0; j < n / 2; ++j) {
        c.gates.push_back({QftGate::Kind::Swap, j, n - 1 - j, 0});
    }
    return c;
}

namespace {

const Operator &controlled_b(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, Operator> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache.emplace(k, controlled(b_gate(k))).first;
    }
    return it->second;
}

} // namespace

void apply_circuit_inplace(const QftCircuit &circuit, State &s, std::span<const std::size_t> qubits) {
    if (qubits.size() != circuit.n) {
        fail(ErrorCode::DimensionMismatch, "circuit on " + std::to_string(circuit.n) + " qubits applied to " +
                                               std::to_string(qubits.size()) + " subsystems");
    }
    static const Operator w = hadamard();
    static const Operator swap = swap_gate();
    for (const auto &g : circuit.gates) {
        switch (g.kind) {
        case QftGate::Kind::W:
            apply_inplace(w, s, {qubits[g.target]});
            break;
        case QftGate::Kind::ControlledB:
            apply_inplace(controlled_b(g.k), s, {qubits[g.control], qubits[g.target]});
            break;
        case QftGate::Kind::Swap:
            apply_inplace(swap, s, {qubits[g.target], qubits[g.control]});
            break;
        }
    }
}

Matrix densify(const QftCircuit &circuit) {
    const std::size_t d = std::size_t{1} << circuit.n;
    const RegisterLayout layout = RegisterLayout::qubits(circuit.n);
    std::vector<std::size_t> qubits(circuit.n);
    std::iota(qubits.begin(), qubits.end(), 0);
    Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t x = 0; x < d; ++x) {
        State s = basis_index_state(layout, x);
        apply_circuit_inplace(circuit, s, qubits);
        const auto amp = s.amplitudes();
        for (std::size_t c = 0; c < d; ++c) {
            m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(x)) = amp[c];
        }
    }
    return m;
}

void apply_qft_inplace(State &s, std::size_t subsystem, bool inverse) {
    const RegisterLayout original = s.layout();
    const std::size_t d = original.dim(subsystem);
    if (!std::has_single_bit(d)) {
        apply_inplace(inverse ? qft_inverse(d) : qft_direct(d), s, {subsystem});
        return;
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(d));
    s.relayout(original.split_into_qubits(subsystem));
    std::vector<std::size_t> qubits(n);
    std::iota(qubits.begin(), qubits.end(), subsystem);
    const QftCircuit circuit = qft_circuit(n);
    auto amp = s.mutable_amplitudes();
    // The transform matrix is symmetric, so QFT^{-1} = conj(QFT) and
    // QFT^{-1} v = conj(QFT conj(v)).
    if (inverse) {
        for (auto &a : amp) {
            a = std::conj(a);
        }
    }
    apply_circuit_inplace(circuit, s, qubits);
    if (inverse) {
        for (auto &a : amp) {
            a = std::conj(a);
        }
    }
    s.relayout(original);
}

} // namespace qalgo
