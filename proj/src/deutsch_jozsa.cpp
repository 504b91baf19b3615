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

#include "qalgo/deutsch_jozsa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "qalgo/error.hpp"
#include "qalgo/measure.hpp"

namespace qalgo {

std::string_view to_string(DjVerdict v) { return v == DjVerdict::Constant ? "constant" : "balanced"; }

namespace {

void require_single_output(const OracleFunction &f) {
    if (f.output_bits() != 1) {
        fail(ErrorCode::InvalidArgument, "Deutsch-Jozsa needs a one-bit output, got " +
                                             std::to_string(f.output_bits()));
    }
}

// W on every qubit of |0...0>|1>, then U_f.
State kicked_state(const OracleFunction &f) {
    const std::size_t m = f.input_bits();
    const RegisterLayout layout = RegisterLayout::qubits(m + 1);
    State s = basis_index_state(layout, 1);
    std::vector<std::size_t> all(m + 1);
    std::iota(all.begin(), all.end(), 0);
    apply_walsh_hadamard_inplace(s, all);
    apply_inplace(standard_oracle(f), s, all);
    return s;
}

} // namespace

DjReport deutsch_jozsa(const OracleFunction &f, RunMode mode, RandomStream &rng) {
    require_single_output(f);
    const std::size_t ones = std::count(f.table().begin(), f.table().end(), std::uint64_t{1});
    const std::size_t n = f.domain_size();
    if (ones != 0 && ones != n && 2 * ones != n) {
        fail(ErrorCode::PromiseViolated, "f has " + std::to_string(ones) + " ones out of " + std::to_string(n));
    }

    const std::size_t m = f.input_bits();
    State s = kicked_state(f);
    std::vector<std::size_t> input(m);
    std::iota(input.begin(), input.end(), 0);
    apply_walsh_hadamard_inplace(s, input);

    DjReport report;
    report.m = static_cast<unsigned>(m);
    const auto probs = register_probabilities(s, input);
    report.p_zero = probs[0];
    if (mode == RunMode::Sample) {
        report.observed = measure_subsystems(s, input, rng).outcome;
        report.verdict = *report.observed == 0 ? DjVerdict::Constant : DjVerdict::Balanced;
    } else {
        report.verdict = report.p_zero > 0.5 ? DjVerdict::Constant : DjVerdict::Balanced;
    }
    return report;
}

State build_D_state(const OracleFunction &f) {
    require_single_output(f);
    const State s = kicked_state(f);
    // The ancilla is the least significant qubit and holds (|0> - |1>)/sqrt(2)
    // exactly, so the register amplitude of x is sqrt(2) times that of |x>|0>.
    const auto amp = s.amplitudes();
    std::vector<Amplitude> d(f.domain_size());
    for (std::size_t x = 0; x < d.size(); ++x) {
        d[x] = amp[2 * x] * std::numbers::sqrt2;
    }
    return State::normalized(RegisterLayout::qubits(f.input_bits()), std::move(d));
}

} // namespace qalgo
