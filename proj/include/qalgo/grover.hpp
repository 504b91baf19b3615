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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalgo/gates.hpp"
#include "qalgo/random.hpp"
#include "qalgo/run_mode.hpp"

namespace qalgo {

/// sin(theta/2) = sqrt(M/N), R = floor(acos(sqrt(M/N)) / theta).
struct GroverPlan {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double theta = 0.0;
    std::uint64_t r = 0;
};

/// Throws NoSolutions for M = 0, InvalidArgument for M > N.
GroverPlan grover_plan(std::uint64_t n, std::uint64_t m);

/// sin^2((2k+1) theta / 2).
double grover_success_probability(const GroverPlan &plan, std::uint64_t k);

/// 2|psi><psi| - I on n qubits, built as W T W with T = 2|0><0| - I.
Operator inversion_about_mean(unsigned n);

/// Search-register states (ancilla removed) after 0..k_max applications of G.
std::vector<State> grover_trajectory(const OracleFunction &f, std::size_t k_max);

struct GroverReport {
    std::uint64_t n = 0;
    /// Solution count used for the plan; estimated when not supplied.
    std::uint64_t m = 0;
    bool m_estimated = false;
    std::optional<double> count_estimate;
    /// "grover", "random-sample" (M > N/2), or "none" (no solutions seen).
    std::string strategy;
    std::optional<GroverPlan> plan;
    std::uint64_t outcome = 0;
    bool found = false;
    /// Distribution mode: exact probability of measuring a solution.
    std::optional<double> success_prob;
};

/// G applied R times to W|0...0> with a (|0> - |1>)/sqrt(2) oracle ancilla,
/// then a measurement of the search register.
GroverReport grover_search(const OracleFunction &f, RunMode mode, RandomStream &rng,
                           std::optional<std::uint64_t> known_m = std::nullopt);

struct CountReport {
    std::uint64_t n = 0;
    std::uint64_t range = 0;
    std::uint64_t outcome = 0;
    double estimate = 0.0;
    double error_bound = 0.0;
    /// Distribution mode only.
    std::vector<double> outcome_probs;
    std::optional<double> prob_within_bound;
};

/// N sin^2(pi c / R).
double bht_estimate(std::uint64_t n, std::uint64_t range, std::uint64_t c);

/// (2 pi / R) sqrt(t N) + pi^2 N / R^2.
double bht_error_bound(std::uint64_t n, std::uint64_t t, std::uint64_t range);

/// Counting-register distribution after controlled powers of G and QFT_R.
std::vector<double> bht_outcome_distribution(const OracleFunction &f, unsigned range_bits);

/// Estimates the number of x with f(x) = 1 using R = 2^range_bits.
CountReport bht_count(const OracleFunction &f, unsigned range_bits, RunMode mode, RandomStream &rng);

} // namespace qalgo
