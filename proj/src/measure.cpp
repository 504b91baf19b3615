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

#include "qalgo/measure.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qalgo/error.hpp"

namespace qalgo {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

constexpr std::size_t kMaxMaterializedDim = 4096;

} // namespace

Measurement Measurement::computational_basis(std::size_t dim) {
    if (dim < 2) {
        fail(ErrorCode::InvalidArgument, "computational basis measurement needs dim >= 2");
    }
    return Measurement(dim, {});
}

Measurement Measurement::from_operators(std::vector<Matrix> ops) {
    if (ops.empty()) {
        fail(ErrorCode::InvalidArgument, "measurement needs at least one operator");
    }
    const auto dim = static_cast<std::size_t>(ops.front().rows());
    for (const auto &op : ops) {
        if (static_cast<std::size_t>(op.rows()) != dim || static_cast<std::size_t>(op.cols()) != dim) {
            fail(ErrorCode::DimensionMismatch, "measurement operators must share one square shape");
        }
    }
    Measurement m(dim, std::move(ops));
    const double defect = m.completeness_defect();
    if (!(defect <= kCompletenessTolerance)) {
        fail(ErrorCode::IncompleteMeasurement, "sum M^dagger M deviates from I by " + std::to_string(defect));
    }
    return m;
}

std::size_t Measurement::num_outcomes() const noexcept { return ops_.empty() ? dim_ : ops_.size(); }

Matrix Measurement::op(std::size_t m) const {
    if (m >= num_outcomes()) {
        fail(ErrorCode::IndexOutOfRange, "measurement outcome " + std::to_string(m) + " out of range");
    }
    if (!ops_.empty()) {
        return ops_[m];
    }
    if (dim_ > kMaxMaterializedDim) {
        fail(ErrorCode::InvalidArgument, "refusing to materialize a projector of dimension " + std::to_string(dim_));
    }
    Matrix p = Matrix::Zero(idx(dim_), idx(dim_));
    p(idx(m), idx(m)) = 1.0;
    return p;
}

double Measurement::completeness_defect() const {
    if (ops_.empty()) {
        return 0.0;
    }
    Matrix sum = Matrix::Zero(idx(dim_), idx(dim_));
    for (const auto &op : ops_) {
        sum.noalias() += op.adjoint() * op;
    }
    return (sum - Matrix::Identity(idx(dim_), idx(dim_))).cwiseAbs().maxCoeff();
}

double OutcomeDistribution::total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

namespace {

void check_dims(const State &s, const Measurement &m) {
    if (m.dim() != s.total_dim()) {
        fail(ErrorCode::DimensionMismatch, "measurement of dimension " + std::to_string(m.dim()) +
                                               " on a state of dimension " + std::to_string(s.total_dim()));
    }
}

Eigen::VectorXcd as_vector(const State &s) {
    const auto amp = s.amplitudes();
    return Eigen::Map<const Eigen::VectorXcd>(amp.data(), idx(amp.size()));
}

State post_from_vector(const RegisterLayout &layout, const Eigen::VectorXcd &v) {
    return canonicalize_phase(State::normalized(layout, std::vector<Amplitude>(v.data(), v.data() + v.size())));
}

} // namespace

OutcomeDistribution distribution(const State &s, const Measurement &m, bool with_post_states) {
    check_dims(s, m);
    OutcomeDistribution out;
    const auto amp = s.amplitudes();
    if (m.is_computational_basis()) {
        out.probs.resize(amp.size());
        for (std::size_t i = 0; i < amp.size(); ++i) {
            out.probs[i] = std::norm(amp[i]);
            if (with_post_states && out.probs[i] >= kNegligibleProbability) {
                out.post_states.emplace(i, basis_index_state(s.layout(), i));
            }
        }
        return out;
    }
    const Eigen::VectorXcd v = as_vector(s);
    out.probs.resize(m.num_outcomes());
    for (std::size_t k = 0; k < m.num_outcomes(); ++k) {
        const Eigen::VectorXcd w = m.op(k) * v;
        out.probs[k] = w.squaredNorm();
        if (with_post_states && out.probs[k] >= kNegligibleProbability) {
            out.post_states.emplace(k, post_from_vector(s.layout(), w));
        }
    }
    return out;
}

std::size_t sample_index(std::span<const double> probs, RandomStream &rng) {
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (!(total > 0.0)) {
        fail(ErrorCode::InvalidArgument, "cannot sample from an all-zero distribution");
    }
    const double u = rng.uniform() * total;
    double cum = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        cum += probs[i];
        if (cum > u) {
            return i;
        }
    }
    return last_positive;
}

MeasurementResult sample(const State &s, const Measurement &m, RandomStream &rng) {
    check_dims(s, m);
    if (m.is_computational_basis()) {
        std::vector<double> probs(s.total_dim());
        const auto amp = s.amplitudes();
        for (std::size_t i = 0; i < amp.size(); ++i) {
            probs[i] = std::norm(amp[i]);
        }
        const std::size_t k = sample_index(probs, rng);
        return {k, basis_index_state(s.layout(), k)};
    }
    const Eigen::VectorXcd v = as_vector(s);
    std::vector<Eigen::VectorXcd> images;
    std::vector<double> probs;
    for (std::size_t k = 0; k < m.num_outcomes(); ++k) {
        images.push_back(m.op(k) * v);
        const double p = images.back().squaredNorm();
        probs.push_back(p >= kNegligibleProbability ? p : 0.0);
    }
    const std::size_t k = sample_index(probs, rng);
    return {k, post_from_vector(s.layout(), images[k])};
}

namespace {

struct RegisterIndexer {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> strides;
    std::size_t outcomes = 1;

    RegisterIndexer(const RegisterLayout &layout, std::span<const std::size_t> subsystems) {
        std::vector<char> seen(layout.size(), 0);
        for (const auto r : subsystems) {
            if (r >= layout.size()) {
                fail(ErrorCode::InvalidRegister, "register " + std::to_string(r) + " does not exist");
            }
            if (seen[r]) {
                fail(ErrorCode::InvalidRegister, "register " + std::to_string(r) + " listed twice");
            }
            seen[r] = 1;
            dims.push_back(layout.dim(r));
            strides.push_back(layout.stride(r));
            outcomes *= layout.dim(r);
        }
        if (subsystems.empty()) {
            fail(ErrorCode::InvalidRegister, "no registers to measure");
        }
    }

    [[nodiscard]] std::size_t outcome_of(std::size_t index) const {
        std::size_t k = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            k = k * dims[i] + (index / strides[i]) % dims[i];
        }
        return k;
    }
};

} // namespace

std::vector<double> register_probabilities(const State &s, std::span<const std::size_t> subsystems) {
    const RegisterIndexer ri(s.layout(), subsystems);
    std::vector<double> probs(ri.outcomes, 0.0);
    const auto amp = s.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        probs[ri.outcome_of(i)] += std::norm(amp[i]);
    }
    return probs;
}

State project_register(const State &s, std::span<const std::size_t> subsystems, std::size_t outcome) {
    const RegisterIndexer ri(s.layout(), subsystems);
    if (outcome >= ri.outcomes) {
        fail(ErrorCode::IndexOutOfRange, "register outcome " + std::to_string(outcome) + " out of range");
    }
    const auto amp = s.amplitudes();
    std::vector<Amplitude> projected(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (ri.outcome_of(i) == outcome) {
            projected[i] = amp[i];
        }
    }
    return canonicalize_phase(State::normalized(s.layout(), std::move(projected)));
}

OutcomeDistribution register_distribution(const State &s, std::span<const std::size_t> subsystems,
                                          bool with_post_states) {
    OutcomeDistribution out;
    out.probs = register_probabilities(s, subsystems);
    if (with_post_states) {
        for (std::size_t k = 0; k < out.probs.size(); ++k) {
            if (out.probs[k] >= kNegligibleProbability) {
                out.post_states.emplace(k, project_register(s, subsystems, k));
            }
        }
    }
    return out;
}

MeasurementResult measure_subsystems(const State &s, std::span<const std::size_t> subsystems, RandomStream &rng) {
    auto probs = register_probabilities(s, subsystems);
    for (auto &p : probs) {
        if (p < kNegligibleProbability) {
            p = 0.0;
        }
    }
    const std::size_t k = sample_index(probs, rng);
    return {k, project_register(s, subsystems, k)};
}

MeasurementResult measure_register(const State &s, std::size_t reg, RandomStream &rng) {
    const std::size_t regs[] = {reg};
    return measure_subsystems(s, regs, rng);
}

Measurement compose(const Measurement &m, const Measurement &n) {
    if (m.dim() != n.dim()) {
        fail(ErrorCode::DimensionMismatch, "composed measurements must act on the same dimension");
    }
    std::vector<Matrix> ops;
    ops.reserve(m.num_outcomes() * n.num_outcomes());
    for (std::size_t j = 0; j < n.num_outcomes(); ++j) {
        const Matrix nj = n.op(j);
        for (std::size_t i = 0; i < m.num_outcomes(); ++i) {
            ops.push_back(m.op(i) * nj);
        }
    }
    return Measurement::from_operators(std::move(ops));
}

Measurement distinguishing_measurement(std::span<const State> states) {
    if (states.empty()) {
        fail(ErrorCode::InvalidArgument, "need at least one state to distinguish");
    }
    const std::size_t dim = states.front().total_dim();
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const double overlap = std::abs(inner_product(states[i], states[j]));
            if (overlap > 1e-10) {
                fail(ErrorCode::NotOrthogonal, "states " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " overlap by " + std::to_string(overlap));
            }
        }
    }
    std::vector<Matrix> ops;
    Matrix rest = Matrix::Identity(idx(dim), idx(dim));
    ops.emplace_back();
    for (const auto &s : states) {
        const Eigen::VectorXcd v = as_vector(s);
        Matrix proj = v * v.adjoint();
        rest -= proj;
        ops.push_back(std::move(proj));
    }
    ops.front() = std::move(rest);
    return Measurement::from_operators(std::move(ops));
}

} // namespace qalgo
