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

/**
 * @file qft.hpp
 * Quantum Fourier transform over Z_d.
 *
 * Sign convention: the forward transform has entries d^{-1/2} e^{-2 pi i c x / d}
 * (row c, column x); the inverse uses e^{+2 pi i c x / d}.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qalgo/gates.hpp"

namespace qalgo {

Operator qft_direct(std::size_t d);
Operator qft_inverse(std::size_t d);

struct QftGate {
    enum class Kind { W, ControlledB, Swap };
    Kind kind;
    /// Qubit position within the register (0 = most significant).
    std::size_t target;
    /// Control qubit for ControlledB, partner qubit for Swap, unused for W.
    std::size_t control;
    /// B_k index for ControlledB.
    unsigned k;
};

/// Gate list for QFT on Z_{2^n}: for each qubit position j, W on j followed
/// by controlled-B_k with control j + k; then swaps reversing the qubit order.
struct QftCircuit {
    std::size_t n = 0;
    std::vector<QftGate> gates;

    /// Gates other than the final swaps; equals n(n+1)/2.
    [[nodiscard]] std::size_t pre_swap_gate_count() const;
};

QftCircuit qft_circuit(std::size_t n);

/// Runs the circuit on the listed qubit subsystems (position 0 first).
void apply_circuit_inplace(const QftCircuit &circuit, State &s, std::span<const std::size_t> qubits);

/// Dense 2^n x 2^n matrix the circuit implements.
Matrix densify(const QftCircuit &circuit);

/**
 * Applies QFT_d (or its inverse) to subsystem `subsystem` of dimension d.
 * Power-of-two dimensions go through the gate circuit on a temporary qubit
 * regrouping of that subsystem; other dimensions use the dense transform.
 */
void apply_qft_inplace(State &s, std::size_t subsystem, bool inverse = false);

} // namespace qalgo
