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
 * @file qstate.hpp
 * Dense state vectors over mixed-radix register layouts.
 *
 * Index encoding: subsystem 0 is the most significant digit, so a digit
 * string (i_0, ..., i_{n-1}) over dims (d_0, ..., d_{n-1}) sits at
 * i_0 * (d_1 ... d_{n-1}) + ... + i_{n-1}. For qubits this is the usual
 * binary expansion 2^{n-1} i_0 + ... + i_{n-1}.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qalgo {

using Amplitude = std::complex<double>;

/// Tolerance on | ||s|| - 1 | accepted by State's constructor.
inline constexpr double kNormTolerance = 1e-10;

class RegisterLayout {
  public:
    explicit RegisterLayout(std::vector<std::size_t> dims);

    static RegisterLayout qubits(std::size_t n);

    [[nodiscard]] const std::vector<std::size_t> &dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t size() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t dim(std::size_t subsystem) const { return dims_.at(subsystem); }
    [[nodiscard]] std::size_t total_dim() const noexcept { return total_; }

    /// Distance in the amplitude array between consecutive digits of `subsystem`.
    [[nodiscard]] std::size_t stride(std::size_t subsystem) const { return strides_.at(subsystem); }

    [[nodiscard]] std::size_t encode(std::span<const std::size_t> digits) const;
    [[nodiscard]] std::vector<std::size_t> decode(std::size_t index) const;

    [[nodiscard]] RegisterLayout concat(const RegisterLayout &other) const;

    /// Replaces subsystem `subsystem` (dimension 2^n) by n qubits, most
    /// significant first. The amplitude array is unchanged by this regrouping.
    [[nodiscard]] RegisterLayout split_into_qubits(std::size_t subsystem) const;

    bool operator==(const RegisterLayout &other) const { return dims_ == other.dims_; }

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 1;
};

/**
 * @brief Unit vector in the space described by a RegisterLayout.
 *
 * A State is a value: copies are independent, and the only mutating entry
 * points are the in-place kernels of the gates/qft modules, which require the
 * caller to hold the object exclusively.
 */
class State {
  public:
    /// Throws InvalidArgument if the size does not match or the norm differs
    /// from 1 by more than kNormTolerance.
    State(RegisterLayout layout, std::vector<Amplitude> amplitudes);

    /// Scales `amplitudes` to unit norm first (InvalidArgument if zero).
    static State normalized(RegisterLayout layout, std::vector<Amplitude> amplitudes);

    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amp_; }
    [[nodiscard]] Amplitude operator[](std::size_t index) const { return amp_[index]; }
    [[nodiscard]] std::size_t total_dim() const noexcept { return amp_.size(); }
    [[nodiscard]] double norm() const;

    /// Same amplitudes, different grouping of subsystems (total_dim must agree).
    [[nodiscard]] State with_layout(RegisterLayout layout) const &;
    [[nodiscard]] State with_layout(RegisterLayout layout) &&;

    /// Explicit renormalization; nothing else renormalizes implicitly.
    [[nodiscard]] State renormalized() const;

    /// Raw access for in-place kernels. Norm is the caller's responsibility.
    [[nodiscard]] std::span<Amplitude> mutable_amplitudes() noexcept { return amp_; }
    void relayout(RegisterLayout layout);

  private:
    RegisterLayout layout_;
    std::vector<Amplitude> amp_;
};

State basis_state(const RegisterLayout &layout, std::span<const std::size_t> digits);
State basis_state(const RegisterLayout &layout, std::initializer_list<std::size_t> digits);
State basis_index_state(const RegisterLayout &layout, std::size_t index);

State tensor(const State &a, const State &b);

/// <a|b>, conjugate-linear in the first argument.
Amplitude inner_product(const State &a, const State &b);

/// True iff |<a|b>| >= 1 - tol.
bool equal_up_to_global_phase(const State &a, const State &b, double tol = 1e-10);

/// Absolute threshold on the second singular value used by is_product_across.
inline constexpr double kProductRankThreshold = 1e-10;

/// Singular values (descending) of the amplitude matrix whose rows are the
/// subsystems before `cut` and columns the ones from `cut` on.
std::vector<double> schmidt_coefficients(const State &s, std::size_t cut);

bool is_product_across(const State &s, std::size_t cut);

/// Factors a product state into (left, right) with left (x) right == s.
/// Throws InvalidCut if the cut is out of range and InvalidArgument if the
/// state is entangled across the cut (residual above 1e-9).
std::pair<State, State> split_product(const State &s, std::size_t cut);

/// Multiplies by the global phase that makes the first amplitude with
/// modulus above 1e-12 real and positive.
State canonicalize_phase(State s);

} // namespace qalgo
