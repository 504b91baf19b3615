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
#include <optional>
#include <string>
#include <vector>

#include "qalgo/numtheory.hpp"
#include "qalgo/period.hpp"
#include "qalgo/random.hpp"
#include "qalgo/run_mode.hpp"

namespace qalgo {

struct FactorOptions {
    std::size_t max_attempts = 20;
    PeriodOptions period;
};

struct FactorAttempt {
    u64 y = 0;
    /// gcd(y, N) when it already exceeds 1.
    std::optional<u64> gcd_shortcut;
    std::optional<PeriodRunReport> period;
    std::optional<u64> r;
    std::optional<u64> factor;
    /// One of: gcd, factor, odd-order, trivial-root, period-failed.
    std::string outcome;
};

struct FactorReport {
    u64 n = 0;
    /// even, prime-power, or quantum.
    std::string route;
    std::vector<FactorAttempt> attempts;
    u64 factor = 0;
};

/// Single pass of the reduction for a fixed y.
FactorAttempt shor_attempt(u64 n, u64 y, RunMode mode, RandomStream &rng, double eps, const PeriodOptions &options);

/// Nontrivial factor of composite n. Throws InputPrime for prime n and
/// Timeout after max_attempts random picks without success.
FactorReport shor_factor(u64 n, RandomStream &rng, double eps = 0.01, RunMode mode = RunMode::Sample,
                         const FactorOptions &options = {});

} // namespace qalgo
