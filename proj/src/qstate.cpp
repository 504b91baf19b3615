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

#include "qalgo/qstate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "qalgo/error.hpp"

namespace qalgo {

RegisterLayout::RegisterLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        fail(ErrorCode::InvalidArgument, "register layout needs at least one subsystem");
    }
    strides_.assign(dims_.size(), 1);
    for (std::size_t i = dims_.size(); i-- > 0;) {
        if (dims_[i] < 2) {
            fail(ErrorCode::InvalidArgument,
                 "subsystem " + std::to_string(i) + " has dimension " + std::to_string(dims_[i]) +
                     " (must be >= 2)");
        }
        strides_[i] = total_;
        if (total_ > std::numeric_limits<std::size_t>::max() / dims_[i]) {
            fail(ErrorCode::InvalidArgument, "register layout dimension overflows");
        }
        total_ *= dims_[i];
    }
}

RegisterLayout RegisterLayout::qubits(std::size_t n) { return RegisterLayout(std::vector<std::size_t>(n, 2)); }

std::size_t RegisterLayout::encode(std::span<const std::size_t> digits) const {
    if (digits.size() != dims_.size()) {
        fail(ErrorCode::IndexOutOfRange, "expected " + std::to_string(dims_.size()) + " digits, got " +
                                             std::to_string(digits.size()));
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= dims_[i]) {
            fail(ErrorCode::IndexOutOfRange, "digit " + std::to_string(digits[i]) + " out of range for subsystem " +
                                                 std::to_string(i) + " of dimension " + std::to_string(dims_[i]));
        }
        index += digits[i] * strides_[i];
    }
    return index;
}

std::vector<std::size_t> RegisterLayout::decode(std::size_t index) const {
    if (index >= total_) {
        fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(index) + " >= " + std::to_string(total_));
    }
    std::vector<std::size_t> digits(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        digits[i] = index / strides_[i];
        index %= strides_[i];
    }
    return digits;
}

RegisterLayout RegisterLayout::concat(const RegisterLayout &other) const {
    std::vector<std::size_t> dims = dims_;
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return RegisterLayout(std::move(dims));
}

RegisterLayout RegisterLayout::split_into_qubits(std::size_t subsystem) const {
    const std::size_t d = dim(subsystem);
    if (!std::has_single_bit(d)) {
        fail(ErrorCode::InvalidArgument, "subsystem dimension " + std::to_string(d) + " is not a power of two");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(d));
    std::vector<std::size_t> dims(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(subsystem));
    dims.insert(dims.end(), n, 2);
    dims.insert(dims.end(), dims_.begin() + static_cast<std::ptrdiff_t>(subsystem) + 1, dims_.end());
    return RegisterLayout(std::move(dims));
}

namespace {

double norm_of(std::span<const Amplitude> amp) {
    double sum = 0.0;
    for (const auto &a : amp) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

} // namespace

State::State(RegisterLayout layout, std::vector<Amplitude> amplitudes)
    : layout_(std::move(layout)), amp_(std::move(amplitudes)) {
    if (amp_.size() != layout_.total_dim()) {
        fail(ErrorCode::InvalidArgument, "state has " + std::to_string(amp_.size()) + " amplitudes, layout needs " +
                                             std::to_string(layout_.total_dim()));
    }
    const double n = norm_of(amp_);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
        fail(ErrorCode::InvalidArgument, "state is not unit norm (norm " + std::to_string(n) + ")");
    }
}

State State::normalized(RegisterLayout layout, std::vector<Amplitude> amplitudes) {
    const double n = norm_of(amplitudes);
    if (!(n > 0.0) || !std::isfinite(n)) {
        fail(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    return State(std::move(layout), std::move(amplitudes));
}

double State::norm() const { return norm_of(amp_); }

State State::with_layout(RegisterLayout layout) const & {
    State copy = *this;
    copy.relayout(std::move(layout));
    return copy;
}

State State::with_layout(RegisterLayout layout) && {
    relayout(std::move(layout));
    return std::move(*this);
}

void State::relayout(RegisterLayout layout) {
    if (layout.total_dim() != layout_.total_dim()) {
        fail(ErrorCode::LayoutMismatch, "relayout changes total dimension");
    }
    layout_ = std::move(layout);
}

State State::renormalized() const { return normalized(layout_, amp_); }

State basis_state(const RegisterLayout &layout, std::span<const std::size_t> digits) {
    return basis_index_state(layout, layout.encode(digits));
}

State basis_state(const RegisterLayout &layout, std::initializer_list<std::size_t> digits) {
    return basis_state(layout, std::span<const std::size_t>(digits.begin(), digits.size()));
}

State basis_index_state(const RegisterLayout &layout, std::size_t index) {
    if (index >= layout.total_dim()) {
        fail(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Amplitude> amp(layout.total_dim());
    amp[index] = 1.0;
    return State(layout, std::move(amp));
}

State tensor(const State &a, const State &b) {
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    std::vector<Amplitude> amp(lhs.size() * rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            amp[i * rhs.size() + j] = lhs[i] * rhs[j];
        }
    }
    // Product of two unit vectors; the 1e-10 tolerance absorbs rounding.
    return State(a.layout().concat(b.layout()), std::move(amp));
}

Amplitude inner_product(const State &a, const State &b) {
    if (!(a.layout() == b.layout())) {
        fail(ErrorCode::LayoutMismatch, "inner product of states with different layouts");
    }
    Amplitude sum = 0.0;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += std::conj(x[i]) * y[i];
    }
    return sum;
}

bool equal_up_to_global_phase(const State &a, const State &b, double tol) {
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

namespace {

std::pair<std::size_t, std::size_t> cut_shape(const State &s, std::size_t cut) {
    const auto &layout = s.layout();
    if (cut < 1 || cut >= layout.size()) {
        fail(ErrorCode::InvalidCut, "cut " + std::to_string(cut) + " must lie in [1, " +
                                        std::to_string(layout.size() - 1) + "]");
    }
    const std::size_t cols = layout.stride(cut - 1);
    return {layout.total_dim() / cols, cols};
}

Eigen::MatrixXcd amplitude_matrix(const State &s, std::size_t rows, std::size_t cols) {
    // Row-major amplitude array == (rows x cols) matrix in row-major order.
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    const auto amp = s.amplitudes();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = amp[i * cols + j];
        }
    }
    return m;
}

} // namespace

std::vector<double> schmidt_coefficients(const State &s, std::size_t cut) {
    const auto [rows, cols] = cut_shape(s, cut);
    const Eigen::MatrixXcd m = amplitude_matrix(s, rows, cols);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto &sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

bool is_product_across(const State &s, std::size_t cut) {
    const auto sv = schmidt_coefficients(s, cut);
    return sv.size() < 2 || sv[1] <= kProductRankThreshold;
}

std::pair<State, State> split_product(const State &s, std::size_t cut) {
    const auto [rows, cols] = cut_shape(s, cut);
    const auto amp = s.amplitudes();
    const auto pivot = static_cast<std::size_t>(
        std::max_element(amp.begin(), amp.end(), [](Amplitude x, Amplitude y) { return std::abs(x) < std::abs(y); }) -
        amp.begin());
    const std::size_t pc = pivot % cols;

    // Left factor: the pivot column. Right factor: projection of the rows onto it.
    std::vector<Amplitude> left(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        left[i] = amp[i * cols + pc];
    }
    double ln = 0.0;
    for (const auto &x : left) {
        ln += std::norm(x);
    }
    ln = std::sqrt(ln);
    for (auto &x : left) {
        x /= ln;
    }
    std::vector<Amplitude> right(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        Amplitude acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            acc += std::conj(left[i]) * amp[i * cols + j];
        }
        right[j] = acc;
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            residual += std::norm(amp[i * cols + j] - left[i] * right[j]);
        }
    }
    if (std::sqrt(residual) > 1e-9) {
        fail(ErrorCode::InvalidArgument, "state is entangled across cut " + std::to_string(cut));
    }
    const auto &dims = s.layout().dims();
    RegisterLayout left_layout(std::vector<std::size_t>(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(cut)));
    RegisterLayout right_layout(std::vector<std::size_t>(dims.begin() + static_cast<std::ptrdiff_t>(cut), dims.end()));
    return {State::normalized(std::move(left_layout), std::move(left)),
            State::normalized(std::move(right_layout), std::move(right))};
}

State canonicalize_phase(State s) {
    auto amp = s.mutable_amplitudes();
    for (const auto &a : amp) {
        const double mag = std::abs(a);
        if (mag > 1e-12) {
            const Amplitude phase = std::conj(a) / mag;
            for (auto &x : amp) {
                x *= phase;
            }
            // Exact real positive pivot, not merely to rounding.
            *std::find_if(amp.begin(), amp.end(), [](Amplitude x) { return std::abs(x) > 1e-12; }) = mag;
            break;
        }
    }
    return s;
}

} // namespace qalgo
