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
 * @file watrous.hpp
 * Order of a solvable black-box group from a subnormal chain.
 *
 * R registers are indexed by group element (dimension |G|, identity at 0).
 * A registers are indexed by Z_M. The two oracles are
 *   V_G^g : |a>|x> -> |a>|g^a x>      U_G : |x>|y> -> |x>|x y>
 * Each chain step j first estimates r_j = [H_j : H_{j-1}] with a Fourier
 * pipeline on |0>|H_{j-1}>, then turns copies of |H_{j-1}> into copies of
 * |H_j> = |<g_j> H_{j-1}>, fixing coset phases with U_G^c.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qalgo/gates.hpp"
#include "qalgo/group.hpp"
#include "qalgo/qstate.hpp"
#include "qalgo/random.hpp"
#include "qalgo/run_mode.hpp"

namespace qalgo {

/// Cap on the joint A x R dimension simulated in phase 1.
inline constexpr std::size_t kMaxPhase1Dim = std::size_t{1} << 22;

/// |H|^{-1/2} sum_{h in H} |h> in an R register.
State uniform_subgroup_state(const BlackBoxGroup &g, const Subgroup &h);

Operator v_operator(const BlackBoxGroup &g, Element gen, std::size_t a_dim);
Operator u_operator(const BlackBoxGroup &g);

/// Smallest power of two >= |G|^2 2^{ceil(log2(1/eps))}.
std::uint64_t phase1_register_size(std::size_t group_order, double eps);

struct Phase1Report {
    std::uint64_t a_dim = 0;
    std::size_t repetition_budget = 0;
    std::vector<std::uint64_t> observed;
    std::vector<std::optional<std::uint64_t>> candidates;
    std::uint64_t r = 0;
    /// Distribution mode: A-register outcome probabilities.
    std::vector<double> outcome_probs;
    /// Distribution mode: probability one outcome yields r directly.
    std::optional<double> single_shot_prob;
    /// Distribution mode: probability the repetitions reach a multiple of r.
    std::optional<double> success_prob;
};

/// Estimates the order of gH in <g>H/H. h_state must hold |H>.
/// Throws ChainViolation if H is not normal in <g>H.
Phase1Report watrous_phase1(const BlackBoxGroup &g, Element gen, const Subgroup &h, const State &h_state, double eps,
                            RunMode mode, RandomStream &rng);

/// (1/sqrt r) sum_a e^{2 pi i a b / r} |g^a H>.
struct CosetPhaseState {
    State state;
    std::uint64_t r = 1;
    std::uint64_t b = 0;
    Element g;
};

/// A-register distribution of the stage-1 measurement.
std::vector<double> phase2_b_distribution(const BlackBoxGroup &g, Element gen, const State &h_state, std::uint64_t r);

/// QFT_r^{-1}, V_G^g, QFT_r^{-1} on |0>|H>, then a measurement of A.
CosetPhaseState watrous_phase2_stage1(const BlackBoxGroup &g, Element gen, const State &h_state, std::uint64_t r,
                                      RandomStream &rng);

/// Least c >= 0 with c b' = b mod r. Throws NoSolution if gcd(b', r) does not divide b.
std::uint64_t correction_exponent(std::uint64_t b, std::uint64_t b_helper, std::uint64_t r);

struct CorrectionResult {
    State corrected;
    State helper;
    std::uint64_t c = 0;
};

/// U_G^c on target (x) helper with c b' = b mod r.
CorrectionResult phase_correction(const CosetPhaseState &target, const CosetPhaseState &helper,
                                  const BlackBoxGroup &g);

/// Probability that the helper pairing succeeds for m iid draws from b_probs.
double pairing_success_probability(const std::vector<double> &b_probs, std::uint64_t r, std::size_t m);

struct WatrousStep {
    Element g;
    Phase1Report phase1;
    std::size_t copies_in = 0;
    std::size_t copies_out = 0;
    std::size_t attempts = 0;
    /// b values observed on each attempt.
    std::vector<std::vector<std::uint64_t>> b_values;
    std::uint64_t helper_b = 0;
    /// Smallest |<out|H_j>| over the produced copies.
    double min_fidelity = 1.0;
    std::optional<double> pairing_success;
    std::optional<double> step_success;
};

struct GroupOrderReport {
    std::uint64_t order = 1;
    std::vector<WatrousStep> steps;
    std::size_t max_attempts = 0;
    std::optional<double> success_prob;
};

/// Product of the relative orders along the chain. Throws CorrectionStuck
/// when no helper pairing works within max_attempts regenerations.
GroupOrderReport group_order(const BlackBoxGroup &g, const PolycyclicChain &chain, double eps, RunMode mode,
                             RandomStream &rng, std::size_t max_attempts = 20);

} // namespace qalgo
