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
 * @file measure.hpp
 * Operator-set measurements {M_m} with sum_m M_m^dagger M_m = I, exact outcome
 * distributions, and seeded sampling.
 */

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "qalgo/gates.hpp"
#include "qalgo/qstate.hpp"
#include "qalgo/random.hpp"

namespace qalgo {

inline constexpr double kCompletenessTolerance = 1e-10;

/// Outcomes below this probability get no post-state.
inline constexpr double kNegligibleProbability = 1e-14;

class Measurement {
  public:
    /// M_m = |m><m| for m in [0, dim). Stored implicitly.
    static Measurement computational_basis(std::size_t dim);

    /// General family; throws IncompleteMeasurement if the completeness
    /// relation fails by more than kCompletenessTolerance.
    static Measurement from_operators(std::vector<Matrix> ops);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t num_outcomes() const noexcept;
    [[nodiscard]] bool is_computational_basis() const noexcept { return ops_.empty(); }

    /// M_m as a dense matrix (materialized for the computational basis).
    [[nodiscard]] Matrix op(std::size_t m) const;

    /// Max entry of |sum M^dagger M - I|.
    [[nodiscard]] double completeness_defect() const;

  private:
    Measurement(std::size_t dim, std::vector<Matrix> ops) : dim_(dim), ops_(std::move(ops)) {}

    std::size_t dim_;
    std::vector<Matrix> ops_;
};

inline Measurement computational_basis(std::size_t dim) { return Measurement::computational_basis(dim); }

struct OutcomeDistribution {
    std::vector<double> probs;
    /// Renormalized, phase-canonical post-measurement states; outcomes with
    /// probability below kNegligibleProbability are absent.
    std::map<std::size_t, State> post_states;

    [[nodiscard]] double total() const;
};

OutcomeDistribution distribution(const State &s, const Measurement &m, bool with_post_states = true);

struct MeasurementResult {
    std::size_t outcome;
    State post;
};

/// Inverse-CDF draw from `probs` with a single uniform variate.
std::size_t sample_index(std::span<const double> probs, RandomStream &rng);

MeasurementResult sample(const State &s, const Measurement &m, RandomStream &rng);

/// Marginal probabilities of the joint computational-basis outcome of the
/// listed subsystems (first listed most significant).
std::vector<double> register_probabilities(const State &s, std::span<const std::size_t> subsystems);

/// Computational-basis measurement of the listed subsystems only
/// (M_a (x) I on the rest).
OutcomeDistribution register_distribution(const State &s, std::span<const std::size_t> subsystems,
                                          bool with_post_states = true);

/// Post-state after observing `outcome` on the listed subsystems.
State project_register(const State &s, std::span<const std::size_t> subsystems, std::size_t outcome);

MeasurementResult measure_subsystems(const State &s, std::span<const std::size_t> subsystems, RandomStream &rng);
MeasurementResult measure_register(const State &s, std::size_t reg, RandomStream &rng);

/// L_{(n,m)} = M_m N_n (measure N first, then M), outcome index n * |M| + m.
Measurement compose(const Measurement &m, const Measurement &n);

/// Outcome i (1-based) is M_i = |psi_i><psi_i|; outcome 0 is I - sum_i M_i.
Measurement distinguishing_measurement(std::span<const State> states);

} // namespace qalgo
