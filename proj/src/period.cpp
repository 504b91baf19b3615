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

#include "qalgo/period.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "qalgo/error.hpp"
#include "qalgo/gates.hpp"
#include "qalgo/measure.hpp"
#include "qalgo/qft.hpp"

namespace qalgo {

namespace {

constexpr double kSupportThreshold = 1e-12;
constexpr u64 kPrecheckLimit = 19;

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 0.5)) {
        fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1/2)");
    }
}

bool has_cyclic_period(std::span<const u64> table, u64 p) {
    const std::size_t d = table.size();
    for (std::size_t x = 0; x < d; ++x) {
        if (table[(x + p) % d] != table[x]) {
            return false;
        }
    }
    return true;
}

unsigned bits_for(u64 n) {
    unsigned l = 0;
    while ((u64{1} << l) < n) {
        ++l;
    }
    return std::max(l, 1U);
}

std::vector<double> transformed_probs(std::vector<Amplitude> slice) {
    const std::size_t q = slice.size();
    State s = State::normalized(RegisterLayout({q}), std::move(slice));
    apply_qft_inplace(s, 0);
    std::vector<double> probs(q);
    const auto amp = s.amplitudes();
    for (std::size_t c = 0; c < q; ++c) {
        probs[c] = std::norm(amp[c]);
    }
    return probs;
}

// Amplitudes of |x>|b> over x, for the given second-register value.
std::vector<Amplitude> slice_first_register(const State &s, std::size_t second_dim, std::size_t b) {
    const std::size_t q = s.total_dim() / second_dim;
    const auto amp = s.amplitudes();
    std::vector<Amplitude> out(q);
    for (std::size_t x = 0; x < q; ++x) {
        out[x] = amp[x * second_dim + b];
    }
    return out;
}

} // namespace

std::size_t repetition_count(double x, double eps) {
    check_eps(eps);
    const double loglog = x > std::numbers::e ? std::log(std::log(x)) : 0.0;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(10.0 * std::max(1.0, loglog) *
                                                                       std::log(1.0 / eps))));
}

std::vector<u64> modexp_table(u64 y, u64 n, std::size_t len) {
    std::vector<u64> t(len);
    u64 acc = 1 % n;
    for (std::size_t x = 0; x < len; ++x) {
        t[x] = acc;
        acc = mulmod(acc, y, n);
    }
    return t;
}

bool has_period(std::span<const u64> table, u64 p) {
    if (p == 0) {
        return false;
    }
    for (std::size_t x = 0; x + p < table.size(); ++x) {
        if (table[x + p] != table[x]) {
            return false;
        }
    }
    return true;
}

u64 minimal_period(std::span<const u64> table) {
    for (u64 p = 1; p < table.size(); ++p) {
        if (has_period(table, p)) {
            return p;
        }
    }
    return table.size();
}

u64 reduce_period(std::span<const u64> table, u64 l) {
    u64 rest = l;
    while (rest > 1) {
        const u64 p = smallest_prime_factor(rest);
        while (rest % p == 0) {
            rest /= p;
            if (l % p == 0 && has_period(table, l / p)) {
                l /= p;
            }
        }
    }
    return l;
}

State exact_period_state(std::span<const u64> table, std::size_t out_dim) {
    const std::size_t d = table.size();
    if (d * out_dim > kMaxStateDim) {
        fail(ErrorCode::InvalidArgument, "register dimensions exceed the simulation cap");
    }
    State s = basis_state(RegisterLayout({d, out_dim}), {0, 0});
    apply_inplace(qft_direct(d), s, {0});
    apply_inplace(modular_oracle(table, out_dim), s, {0, 1});
    return s;
}

PeriodRunReport period_find_exact(std::span<const u64> table, RunMode mode, RandomStream &rng, double eps) {
    const std::size_t d = table.size();
    if (d < 2) {
        fail(ErrorCode::InvalidArgument, "exact period finding needs d >= 2");
    }
    const u64 out_dim = std::max<u64>(d, *std::max_element(table.begin(), table.end()) + 1);

    PeriodRunReport report;
    report.variant = "exact";
    report.mode = mode;
    report.n = d;
    report.q = d;
    report.second_dim = out_dim;
    report.repetition_budget = repetition_count(static_cast<double>(d), eps);

    const State prepared = exact_period_state(table, out_dim);
    const std::size_t second[] = {1};
    const std::size_t first[] = {0};

    if (mode == RunMode::Distribution) {
        report.second_register_probs = register_probabilities(prepared, second);
        State transformed = prepared;
        apply_qft_inplace(transformed, 0);
        report.first_register_probs = register_probabilities(transformed, first);
        u64 l = 1;
        for (std::size_t c = 1; c < d; ++c) {
            if (report.first_register_probs[c] > kSupportThreshold) {
                l = lcm(l, d / gcd(c, d));
            }
        }
        if (!has_cyclic_period(table, l)) {
            fail(ErrorCode::NotPeriodic, "support lcm " + std::to_string(l) + " is not a period");
        }
        report.r = l;
        double success = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            const u64 cand = c == 0 ? 1 : d / gcd(c, d);
            if (cand == l) {
                success += report.first_register_probs[c];
            }
        }
        report.exact_success_prob = std::clamp(success, 0.0, 1.0);
        return report;
    }

    u64 l = 1;
    for (std::size_t rep = 0; rep < report.repetition_budget; ++rep) {
        const auto after_f = measure_subsystems(prepared, second, rng);
        State s = after_f.post;
        apply_qft_inplace(s, 0);
        const auto seen = measure_subsystems(s, first, rng);
        PeriodRepetition entry;
        entry.second_register = after_f.outcome;
        entry.c = seen.outcome;
        if (entry.c != 0) {
            entry.candidate = d / gcd(entry.c, d);
            l = lcm(l, *entry.candidate);
        }
        entry.lcm_so_far = l;
        report.repetitions.push_back(entry);
        if (has_cyclic_period(table, l)) {
            report.r = l;
            return report;
        }
    }
    fail(ErrorCode::NotPeriodic, "no verified period dividing " + std::to_string(d) + " after " +
                                     std::to_string(report.repetition_budget) + " repetitions");
}

State period_state(std::span<const u64> table, unsigned second_bits) {
    const std::size_t q = table.size();
    if (!std::has_single_bit(q) || q < 2) {
        fail(ErrorCode::InvalidArgument, "first register size must be a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(q));
    if ((q << second_bits) > kMaxStateDim) {
        fail(ErrorCode::InvalidArgument, "register dimensions exceed the simulation cap");
    }
    const OracleFunction f(n, second_bits, std::vector<u64>(table.begin(), table.end()));
    State s = basis_index_state(RegisterLayout::qubits(n + second_bits), 0);
    std::vector<std::size_t> all(n + second_bits);
    std::iota(all.begin(), all.end(), 0);
    apply_walsh_hadamard_inplace(s, std::span<const std::size_t>(all).first(n));
    apply_inplace(standard_oracle(f), s, all);
    return s;
}

namespace {

struct GeneralSetup {
    u64 q;
    unsigned n_bits;
    unsigned l_bits;
    std::vector<std::size_t> second;
};

GeneralSetup general_setup(std::span<const u64> table, u64 n) {
    GeneralSetup g;
    g.q = choose_q(n);
    if (table.size() != g.q) {
        fail(ErrorCode::InvalidArgument, "table length " + std::to_string(table.size()) + " != q = " +
                                             std::to_string(g.q));
    }
    g.n_bits = static_cast<unsigned>(std::countr_zero(g.q));
    g.l_bits = bits_for(n);
    for (unsigned i = 0; i < g.l_bits; ++i) {
        g.second.push_back(g.n_bits + i);
    }
    return g;
}

} // namespace

std::vector<double> period_outcome_distribution(std::span<const u64> table, u64 n) {
    const GeneralSetup g = general_setup(table, n);
    const State s = period_state(table, g.l_bits);
    const auto p2 = register_probabilities(s, g.second);
    const std::size_t second_dim = std::size_t{1} << g.l_bits;
    std::vector<double> p(g.q, 0.0);
    for (std::size_t b = 0; b < p2.size(); ++b) {
        if (p2[b] < kNegligibleProbability) {
            continue;
        }
        const auto cond = transformed_probs(slice_first_register(s, second_dim, b));
        for (std::size_t c = 0; c < g.q; ++c) {
            p[c] += p2[b] * cond[c];
        }
    }
    return p;
}

PeriodRunReport period_find(std::span<const u64> table, u64 n, RunMode mode, RandomStream &rng, double eps,
                            PeriodOptions options) {
    const GeneralSetup g = general_setup(table, n);
    PeriodRunReport report;
    report.variant = "general";
    report.mode = mode;
    report.n = n;
    report.q = g.q;
    report.first_bits = g.n_bits;
    report.second_bits = g.l_bits;
    report.second_dim = u64{1} << g.l_bits;
    report.repetition_budget = repetition_count(static_cast<double>(n), eps);

    if (options.precheck) {
        for (u64 p = 1; p < kPrecheckLimit && p < g.q; ++p) {
            if (has_period(table, p)) {
                report.precheck_hit = true;
                report.r = p;
                return report;
            }
        }
    }

    const State s = period_state(table, g.l_bits);
    const auto p2 = register_probabilities(s, g.second);

    if (mode == RunMode::Distribution) {
        report.second_register_probs = p2;
        report.first_register_probs = period_outcome_distribution(table, n);
        const auto &p = report.first_register_probs;
        std::vector<std::size_t> order(g.q);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
        u64 l = 1;
        for (const auto c : order) {
            if (p[c] < kSupportThreshold) {
                break;
            }
            if (const auto cand = recover_period(c, g.q, n); cand && lcm(l, *cand) < n) {
                l = lcm(l, *cand);
            }
        }
        if (!has_period(table, l)) {
            fail(ErrorCode::VerificationFailed, "distribution lcm " + std::to_string(l) + " is not a period");
        }
        const u64 r = reduce_period(table, l);
        report.r = r;
        double success = 0.0;
        for (std::size_t c = 0; c < g.q; ++c) {
            if (recover_period(c, g.q, n) == std::optional<u64>(r)) {
                success += p[c];
            }
        }
        report.exact_success_prob = std::clamp(success, 0.0, 1.0);
        return report;
    }

    const std::size_t second_dim = std::size_t{1} << g.l_bits;
    std::map<std::size_t, std::vector<double>> conditional;
    u64 l = 1;
    for (std::size_t rep = 0; rep < report.repetition_budget; ++rep) {
        PeriodRepetition entry;
        const std::size_t b = sample_index(p2, rng);
        auto it = conditional.find(b);
        if (it == conditional.end()) {
            it = conditional.emplace(b, transformed_probs(slice_first_register(s, second_dim, b))).first;
        }
        entry.second_register = b;
        entry.c = sample_index(it->second, rng);
        entry.candidate = recover_period(entry.c, g.q, n);
        if (entry.candidate) {
            const u64 next = lcm(l, *entry.candidate);
            if (next < n) {
                l = next;
            } else {
                entry.discarded = true;
            }
        }
        entry.lcm_so_far = l;
        report.repetitions.push_back(entry);
        if (has_period(table, l)) {
            report.r = reduce_period(table, l);
            return report;
        }
    }
    fail(ErrorCode::VerificationFailed, "no verified period below " + std::to_string(n) + " after " +
                                            std::to_string(report.repetition_budget) + " repetitions");
}

} // namespace qalgo
