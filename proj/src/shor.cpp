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

#include "qalgo/shor.hpp"

#include "qalgo/error.hpp"

namespace qalgo {

FactorAttempt shor_attempt(u64 n, u64 y, RunMode mode, RandomStream &rng, double eps, const PeriodOptions &options) {
    FactorAttempt a;
    a.y = y;
    const u64 g = gcd(y, n);
    if (g > 1) {
        a.gcd_shortcut = g;
        a.factor = g;
        a.outcome = "gcd";
        return a;
    }
    const auto table = modexp_table(y, n, choose_q(n));
    try {
        a.period = period_find(table, n, mode, rng, eps, options);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::VerificationFailed) {
            throw;
        }
        a.outcome = "period-failed";
        return a;
    }
    const u64 r = *a.period->r;
    a.r = r;
    if (r % 2 != 0) {
        a.outcome = "odd-order";
        return a;
    }
    const u64 half = modpow(y, r / 2, n);
    if (half == n - 1) {
        a.outcome = "trivial-root";
        return a;
    }
    const u64 f = gcd(half + 1, n);
    if (f > 1 && f < n) {
        a.factor = f;
        a.outcome = "factor";
    } else {
        a.outcome = "trivial-root";
    }
    return a;
}

FactorReport shor_factor(u64 n, RandomStream &rng, double eps, RunMode mode, const FactorOptions &options) {
    if (n < 4) {
        fail(ErrorCode::InvalidArgument, "N must be a composite >= 4");
    }
    if (is_prime(n)) {
        fail(ErrorCode::InputPrime, std::to_string(n) + " is prime");
    }
    FactorReport report;
    report.n = n;
    if (n % 2 == 0) {
        report.route = "even";
        report.factor = 2;
        return report;
    }
    if (const auto pp = is_prime_power(n)) {
        report.route = "prime-power";
        report.factor = pp->first;
        return report;
    }
    report.route = "quantum";
    for (std::size_t i = 0; i < options.max_attempts; ++i) {
        const u64 y = rng.uniform_int(2, n - 1);
        report.attempts.push_back(shor_attempt(n, y, mode, rng, eps, options.period));
        if (report.attempts.back().factor) {
            report.factor = *report.attempts.back().factor;
            return report;
        }
    }
    fail(ErrorCode::Timeout, "no factor of " + std::to_string(n) + " after " + std::to_string(options.max_attempts) +
                                 " attempts");
}

} // namespace qalgo
