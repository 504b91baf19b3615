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
 * @file period.hpp
 * Quantum period finding.
 *
 * Two drivers share one report type:
 *  - period_find_exact works on Z_d with d-dimensional registers and assumes
 *    the period divides d. Every nonzero outcome c is a multiple of d/r.
 *  - period_find is the general version: a q-dimensional first register
 *    (q = choose_q(N)), an L-qubit second register holding f(x) with
 *    2^L >= N, and continued-fraction recovery of r from c/q.
 *
 * Functions are passed as value tables; the oracle acts as a permutation.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qalgo/numtheory.hpp"
#include "qalgo/qstate.hpp"
#include "qalgo/random.hpp"
#include "qalgo/run_mode.hpp"

namespace qalgo {

/// Largest joint register dimension simulated as one state vector.
inline constexpr std::size_t kMaxStateDim = std::size_t{1} << 20;

struct PeriodRepetition {
    /// Observed second-register value f(x0).
    u64 second_register = 0;
    /// Observed first-register value after the transform.
    u64 c = 0;
    std::optional<u64> candidate;
    /// True if the candidate would push the running lcm to N or beyond.
    bool discarded = false;
    u64 lcm_so_far = 1;
};

struct PeriodRunReport {
    std::string variant;
    RunMode mode = RunMode::Sample;
    /// Modulus N (general) or group size d (exact).
    u64 n = 0;
    /// Dimension of the transformed register.
    u64 q = 0;
    unsigned first_bits = 0;
    unsigned second_bits = 0;
    u64 second_dim = 0;
    std::size_t repetition_budget = 0;
    bool precheck_hit = false;
    std::vector<PeriodRepetition> repetitions;
    std::optional<u64> r;
    /// Distribution mode only: exact outcome probabilities of each register.
    std::vector<double> first_register_probs;
    std::vector<double> second_register_probs;
    /// Distribution mode only: probability a single run returns r directly.
    std::optional<double> exact_success_prob;
};

struct PeriodOptions {
    /// Classical scan for periods below 19 before any quantum work.
    bool precheck = true;
};

/// ceil(10 * max(1, ln ln x) * ln(1/eps)), at least 1.
std::size_t repetition_count(double x, double eps);

/// x -> y^x mod n for x in [0, len).
std::vector<u64> modexp_table(u64 y, u64 n, std::size_t len);

/// True if table[x + p] == table[x] wherever both are defined.
bool has_period(std::span<const u64> table, u64 p);

/// Least period of the table in the windowed sense of has_period.
u64 minimal_period(std::span<const u64> table);

/// Divides out primes of l while the table keeps period l / p.
u64 reduce_period(std::span<const u64> table, u64 l);

/// QFT_d |0> on register 1, then |x>|y> -> |x>|(y + f(x)) mod out_dim>.
State exact_period_state(std::span<const u64> table, std::size_t out_dim);

/// Throws NotPeriodic if the repetitions never produce a verified period
/// that divides d.
PeriodRunReport period_find_exact(std::span<const u64> table, RunMode mode, RandomStream &rng, double eps = 0.01);

/// W_n on n qubits and U_f into L qubits; table.size() must be 2^n.
State period_state(std::span<const u64> table, unsigned second_bits);

/// Exact p(c) for the general driver, summed over second-register outcomes.
std::vector<double> period_outcome_distribution(std::span<const u64> table, u64 n);

/// table.size() must equal choose_q(n). Throws VerificationFailed when no
/// verified period is found within the repetition budget.
PeriodRunReport period_find(std::span<const u64> table, u64 n, RunMode mode, RandomStream &rng, double eps = 0.01,
                            PeriodOptions options = {});

} // namespace qalgo
