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

#include "qalgo/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qalgo/error.hpp"
#include "qalgo/measure.hpp"
#include "qalgo/qft.hpp"

namespace qalgo {

namespace {

using std::numbers::pi;

constexpr unsigned kMaxCountingInputBits = 10;

void require_single_output(const OracleFunction &f) {
    if (f.output_bits() != 1) {
        fail(ErrorCode::InvalidArgument, "search oracles must have a one-bit output");
    }
}

std::uint64_t count_solutions(const OracleFunction &f) {
    return static_cast<std::uint64_t>(std::count(f.table().begin(), f.table().end(), std::uint64_t{1}));
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v(to - from);
    std::iota(v.begin(), v.end(), from);
    return v;
}

Operator reflection_about_zero(unsigned n) {
    std::vector<Amplitude> t(std::size_t{1} << n, Amplitude(-1.0));
    t[0] = 1.0;
    return Operator::diagonal(std::move(t));
}

// W|0...0> on n qubits, then (|0> - |1>)/sqrt(2) on the ancilla.
State grover_initial_state(unsigned n) {
    State s = basis_index_state(RegisterLayout::qubits(n + 1), 1);
    const auto all = range(0, n + 1);
    apply_walsh_hadamard_inplace(s, all);
    return s;
}

void apply_grover_iteration(State &s, const Operator &oracle, const Operator &t, unsigned n) {
    const auto all = range(0, n + 1);
    const auto reg = range(0, n);
    apply_inplace(oracle, s, all);
    apply_walsh_hadamard_inplace(s, reg);
    apply_inplace(t, s, reg);
    apply_walsh_hadamard_inplace(s, reg);
}

// Drops the ancilla, which stays (|0> - |1>)/sqrt(2) throughout.
State search_register(const State &s, unsigned n) {
    const auto amp = s.amplitudes();
    std::vector<Amplitude> out(std::size_t{1} << n);
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = amp[2 * x] * std::numbers::sqrt2;
    }
    return State::normalized(RegisterLayout::qubits(n), std::move(out));
}

} // namespace

GroverPlan grover_plan(std::uint64_t n, std::uint64_t m) {
    if (m == 0) {
        fail(ErrorCode::NoSolutions, "Grover plan needs at least one solution");
    }
    if (m > n) {
        fail(ErrorCode::InvalidArgument, "M = " + std::to_string(m) + " exceeds N = " + std::to_string(n));
    }
    GroverPlan p;
    p.n = n;
    p.m = m;
    const double ratio = std::sqrt(static_cast<double>(m) / static_cast<double>(n));
    p.theta = 2.0 * std::asin(ratio);
    // Guard against acos/asin rounding when the quotient is an exact integer.
    p.r = static_cast<std::uint64_t>(std::floor(std::acos(ratio) / p.theta + 1e-9));
    return p;
}

double grover_success_probability(const GroverPlan &plan, std::uint64_t k) {
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * plan.theta / 2.0);
    return s * s;
}

Operator inversion_about_mean(unsigned n) {
    if (n < 1 || n > 12) {
        fail(ErrorCode::InvalidArgument, "inversion_about_mean supports 1 <= n <= 12");
    }
    const Matrix w = walsh_hadamard(n).matrix();
    return Operator::dense(w * reflection_about_zero(n).to_matrix() * w);
}

std::vector<State> grover_trajectory(const OracleFunction &f, std::size_t k_max) {
    require_single_output(f);
    const unsigned n = f.input_bits();
    const Operator oracle = standard_oracle(f);
    const Operator t = reflection_about_zero(n);
    State s = grover_initial_state(n);
    std::vector<State> out;
    out.push_back(search_register(s, n));
    for (std::size_t k = 0; k < k_max; ++k) {
        apply_grover_iteration(s, oracle, t, n);
        out.push_back(search_register(s, n));
    }
    return out;
}

GroverReport grover_search(const OracleFunction &f, RunMode mode, RandomStream &rng,
                           std::optional<std::uint64_t> known_m) {
    require_single_output(f);
    const unsigned n = f.input_bits();
    GroverReport report;
    report.n = f.domain_size();
    if (known_m) {
        report.m = *known_m;
    } else {
        const unsigned range_bits = std::min<unsigned>((n + 1) / 2 + 3, 20 - std::min(n, 20U));
        const CountReport count = bht_count(f, range_bits, mode, rng);
        report.m_estimated = true;
        report.count_estimate = count.estimate;
        report.m = static_cast<std::uint64_t>(std::llround(count.estimate));
    }

    if (report.m == 0 || 2 * report.m > report.n) {
        report.strategy = report.m == 0 ? "none" : "random-sample";
        report.outcome = rng.uniform_int(0, report.n - 1);
        report.found = f(report.outcome) == 1;
        if (mode == RunMode::Distribution) {
            report.success_prob = static_cast<double>(count_solutions(f)) / static_cast<double>(report.n);
        }
        return report;
    }

    report.strategy = "grover";
    report.plan = grover_plan(report.n, report.m);
    const Operator oracle = standard_oracle(f);
    const Operator t = reflection_about_zero(n);
    State s = grover_initial_state(n);
    for (std::uint64_t k = 0; k < report.plan->r; ++k) {
        apply_grover_iteration(s, oracle, t, n);
    }
    const auto reg = range(0, n);
    const auto probs = register_probabilities(s, reg);
    if (mode == RunMode::Distribution) {
        double success = 0.0;
        for (std::size_t x = 0; x < probs.size(); ++x) {
            if (f(x) == 1) {
                success += probs[x];
            }
        }
        report.success_prob = std::clamp(success, 0.0, 1.0);
        report.outcome = static_cast<std::uint64_t>(std::max_element(probs.begin(), probs.end()) - probs.begin());
    } else {
        report.outcome = measure_subsystems(s, reg, rng).outcome;
    }
    report.found = f(report.outcome) == 1;
    return report;
}

double bht_estimate(std::uint64_t n, std::uint64_t range_size, std::uint64_t c) {
    const double s = std::sin(pi * static_cast<double>(c) / static_cast<double>(range_size));
    return static_cast<double>(n) * s * s;
}

double bht_error_bound(std::uint64_t n, std::uint64_t t, std::uint64_t range_size) {
    const double r = static_cast<double>(range_size);
    const double nn = static_cast<double>(n);
    return 2.0 * pi / r * std::sqrt(static_cast<double>(t) * nn) + pi * pi * nn / (r * r);
}

std::vector<double> bht_outcome_distribution(const OracleFunction &f, unsigned range_bits) {
    require_single_output(f);
    const unsigned n = f.input_bits();
    if (range_bits < 1 || n > kMaxCountingInputBits || range_bits + n > 20) {
        fail(ErrorCode::InvalidArgument, "counting register sizes exceed the simulation cap");
    }
    Matrix g = inversion_about_mean(n).matrix() * phase_oracle(f).to_matrix();

    State s = basis_index_state(RegisterLayout::qubits(range_bits + n), 0);
    const auto all = range(0, range_bits + n);
    apply_walsh_hadamard_inplace(s, all);

    std::vector<std::size_t> targets(n + 1);
    std::iota(targets.begin() + 1, targets.end(), range_bits);
    // Counting qubit j has weight 2^{range_bits-1-j}; walk from least significant.
    for (std::size_t j = range_bits; j-- > 0;) {
        targets[0] = j;
        apply_inplace(Operator::controlled(Operator::dense(g), 1), s, targets);
        if (j > 0) {
            g = g * g;
        }
    }
    const auto counting = range(0, range_bits);
    apply_circuit_inplace(qft_circuit(range_bits), s, counting);
    return register_probabilities(s, counting);
}

CountReport bht_count(const OracleFunction &f, unsigned range_bits, RunMode mode, RandomStream &rng) {
    CountReport report;
    report.n = f.domain_size();
    report.range = std::uint64_t{1} << range_bits;
    const auto probs = bht_outcome_distribution(f, range_bits);
    if (mode == RunMode::Distribution) {
        const std::uint64_t t = count_solutions(f);
        report.outcome = static_cast<std::uint64_t>(std::max_element(probs.begin(), probs.end()) - probs.begin());
        report.error_bound = bht_error_bound(report.n, t, report.range);
        double within = 0.0;
        for (std::size_t c = 0; c < probs.size(); ++c) {
            if (std::abs(bht_estimate(report.n, report.range, c) - static_cast<double>(t)) < report.error_bound) {
                within += probs[c];
            }
        }
        report.prob_within_bound = within;
        report.outcome_probs = probs;
    } else {
        report.outcome = sample_index(probs, rng);
    }
    report.estimate = bht_estimate(report.n, report.range, report.outcome);
    if (mode == RunMode::Sample) {
        report.error_bound = bht_error_bound(report.n, static_cast<std::uint64_t>(std::llround(report.estimate)),
                                             report.range);
    }
    return report;
}

} // namespace qalgo
