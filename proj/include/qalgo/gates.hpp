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
 * @file gates.hpp
 * Unitary operators and their application to subsystems of a State.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "qalgo/qstate.hpp"

namespace qalgo {

using Matrix = Eigen::MatrixXcd;

inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kPhaseModulusTolerance = 1e-12;

/**
 * @brief A unitary in one of four storage forms.
 *
 * - Dense: full matrix, checked for U^dagger U = I on construction.
 * - Permutation: basis map |i> -> |map[i]>, must be a bijection.
 * - Diagonal: |i> -> phase[i] |i>, each |phase| = 1.
 * - Controlled: `num_controls` qubit controls (most significant local digits)
 *   in front of an inner operator, which acts when every control is |1>.
 *
 * Operators are immutable once built and may be shared across threads.
 */
class Operator {
  public:
    enum class Form { Dense, Permutation, Diagonal, Controlled };

    static Operator dense(Matrix m);
    static Operator permutation(std::vector<std::size_t> map);
    static Operator diagonal(std::vector<Amplitude> phases);
    static Operator controlled(Operator inner, std::size_t num_controls = 1);
    static Operator identity(std::size_t dim);

    [[nodiscard]] Form form() const noexcept;
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] const Matrix &matrix() const;
    [[nodiscard]] std::span<const std::size_t> permutation_map() const;
    [[nodiscard]] std::span<const Amplitude> phases() const;
    [[nodiscard]] const Operator &inner() const;
    [[nodiscard]] std::size_t num_controls() const;

    [[nodiscard]] Matrix to_matrix() const;
    [[nodiscard]] Operator adjoint() const;

    /// out = U in, on a local vector of length dim(). `in` and `out` must not alias.
    void apply_local(std::span<const Amplitude> in, std::span<Amplitude> out) const;

  private:
    struct DenseForm {
        Matrix m;
    };
    struct PermutationForm {
        std::vector<std::size_t> map;
    };
    struct DiagonalForm {
        std::vector<Amplitude> phases;
    };
    struct ControlledForm {
        std::shared_ptr<const Operator> inner;
        std::size_t num_controls;
    };

    Operator(std::variant<DenseForm, PermutationForm, DiagonalForm, ControlledForm> form, std::size_t dim)
        : form_(std::move(form)), dim_(dim) {}

    std::variant<DenseForm, PermutationForm, DiagonalForm, ControlledForm> form_;
    std::size_t dim_;
};

/// Max entry of |U^dagger U - I|.
double unitarity_defect(const Matrix &m);

/// Applies `op` to the listed subsystems (in the given order, first most
/// significant) and the identity elsewhere. Targets need not be adjacent.
void apply_inplace(const Operator &op, State &s, std::span<const std::size_t> targets);
void apply_inplace(const Operator &op, State &s, std::initializer_list<std::size_t> targets);
State apply(const Operator &op, State s, std::span<const std::size_t> targets);
State apply(const Operator &op, State s, std::initializer_list<std::size_t> targets);

/// Single-qubit Walsh-Hadamard W.
Operator hadamard();
Operator not_gate();
Operator swap_gate();

/// W_n = W^{(x) n} as a dense 2^n x 2^n operator.
Operator walsh_hadamard(std::size_t n);

/// Applies W to each listed qubit subsystem in turn.
void apply_walsh_hadamard_inplace(State &s, std::span<const std::size_t> qubits);

/// R_phi = diag(1, e^{-i phi}).
Operator phase_shift(double phi);

/// B_k = R_{pi / 2^k}.
Operator b_gate(unsigned k);

/// |0><0| (x) I + |1><1| (x) U.
inline Operator controlled(Operator u) { return Operator::controlled(std::move(u), 1); }

/// Total function {0..2^m-1} -> {0..2^k-1}, stored as a table.
class OracleFunction {
  public:
    OracleFunction(unsigned input_bits, unsigned output_bits, std::vector<std::uint64_t> table);

    [[nodiscard]] unsigned input_bits() const noexcept { return m_; }
    [[nodiscard]] unsigned output_bits() const noexcept { return k_; }
    [[nodiscard]] std::size_t domain_size() const noexcept { return table_.size(); }
    [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const { return table_.at(x); }
    [[nodiscard]] std::span<const std::uint64_t> table() const noexcept { return table_; }

  private:
    unsigned m_;
    unsigned k_;
    std::vector<std::uint64_t> table_;
};

/// U_f : |x>|y> -> |x>|y xor f(x)> on m + k qubits (Permutation form).
Operator standard_oracle(const OracleFunction &f);

/// |x> -> |f(x)>; NotBijective unless f is a bijection with m == k.
Operator minimal_oracle(const OracleFunction &f);

/// Boolean f seen through phase kickback: |x> -> (-1)^{f(x)} |x>.
Operator phase_oracle(const OracleFunction &f);

/// d-ary analogue of the standard oracle used with qudit registers:
/// |x>|y> -> |x>|(y + f(x)) mod out_dim>. Requires f(x) < out_dim.
Operator modular_oracle(std::span<const std::uint64_t> table, std::size_t out_dim);

} // namespace qalgo
