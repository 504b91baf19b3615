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

#include "qalgo/watrous.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "qalgo/error.hpp"
#include "qalgo/measure.hpp"
#include "qalgo/numtheory.hpp"
#include "qalgo/period.hpp"
#include "qalgo/qft.hpp"

namespace qalgo {

namespace {

constexpr double kSupportThreshold = 1e-12;

void check_r_register(const BlackBoxGroup &g, const State &s) {
    if (s.layout() != RegisterLayout({g.order()})) {
        fail(ErrorCode::DimensionMismatch, "R register must have dimension |G| = " + std::to_string(g.order()));
    }
}

bool power_in(const BlackBoxGroup &g, Element gen, const Subgroup &h, std::uint64_t l) {
    return h.contains(g.pow(gen, static_cast<std::int64_t>(l)));
}

std::uint64_t reduce_order(const BlackBoxGroup &g, Element gen, const Subgroup &h, std::uint64_t l) {
    std::uint64_t rest = l;
    while (rest > 1) {
        const std::uint64_t p = smallest_prime_factor(rest);
        while (rest % p == 0) {
            rest /= p;
            if (l % p == 0 && power_in(g, gen, h, l / p)) {
                l /= p;
            }
        }
    }
    return l;
}

// R-register factor of |b> (x) |psi>, phase fixed at the first nonzero entry.
State slice_r_register(const State &s, std::size_t group_order, std::size_t b) {
    const auto amp = s.amplitudes();
    std::vector<Amplitude> out(amp.begin() + static_cast<std::ptrdiff_t>(b * group_order),
                               amp.begin() + static_cast<std::ptrdiff_t>((b + 1) * group_order));
    return canonicalize_phase(State::normalized(RegisterLayout({group_order}), std::move(out)));
}

State stage1_state(const BlackBoxGroup &g, Element gen, const State &h_state, std::uint64_t r) {
    State s = tensor(basis_index_state(RegisterLayout({r}), 0), h_state);
    apply_qft_inplace(s, 0, true);
    apply_inplace(v_operator(g, gen, r), s, {0, 1});
    apply_qft_inplace(s, 0, true);
    return s;
}

} // namespace

State uniform_subgroup_state(const BlackBoxGroup &g, const Subgroup &h) {
    std::vector<Amplitude> amp(g.order());
    const double a = 1.0 / std::sqrt(static_cast<double>(h.size()));
    for (const auto e : h.elements()) {
        if (e.index >= g.order()) {
            fail(ErrorCode::NotASubgroup, "subgroup element outside the group");
        }
        amp[e.index] = a;
    }
    make_subgroup(g, std::vector<Element>(h.elements().begin(), h.elements().end()));
    return State(RegisterLayout({g.order()}), std::move(amp));
}

Operator v_operator(const BlackBoxGroup &g, Element gen, std::size_t a_dim) {
    const std::size_t n = g.order();
    std::vector<std::size_t> map(a_dim * n);
    Element ga = g.identity();
    for (std::size_t a = 0; a < a_dim; ++a) {
        for (std::uint32_t x = 0; x < n; ++x) {
            map[a * n + x] = a * n + g.mul(ga, Element{x}).index;
        }
        ga = g.mul(ga, gen);
    }
    return Operator::permutation(std::move(map));
}

Operator u_operator(const BlackBoxGroup &g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> map(n * n);
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
            map[x * n + y] = x * n + g.mul(Element{x}, Element{y}).index;
        }
    }
    return Operator::permutation(std::move(map));
}

std::uint64_t phase1_register_size(std::size_t group_order, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) {
        fail(ErrorCode::InvalidArgument, "eps must lie in (0, 1/2)");
    }
    const auto k = static_cast<unsigned>(std::ceil(std::log2(1.0 / eps)));
    const std::uint64_t target = static_cast<std::uint64_t>(group_order) * group_order << k;
    std::uint64_t n = 2;
    while (n < target) {
        n <<= 1;
    }
    return n;
}

Phase1Report watrous_phase1(const BlackBoxGroup &g, Element gen, const Subgroup &h, const State &h_state, double eps,
                            RunMode mode, RandomStream &rng) {
    check_r_register(g, h_state);
    std::vector<Element> gens(h.elements().begin(), h.elements().end());
    gens.push_back(gen);
    if (!is_normal_in(g, h, generate_subgroup(g, gens))) {
        fail(ErrorCode::ChainViolation, "H is not normal in <g>H");
    }

    Phase1Report report;
    report.a_dim = phase1_register_size(g.order(), eps);
    if (report.a_dim * g.order() > kMaxPhase1Dim) {
        fail(ErrorCode::InvalidArgument, "phase-1 registers exceed the simulation cap; raise eps or shrink G");
    }
    report.repetition_budget = repetition_count(static_cast<double>(g.order()), eps);

    State s = tensor(basis_index_state(RegisterLayout({report.a_dim}), 0), h_state);
    apply_qft_inplace(s, 0, true);
    apply_inplace(v_operator(g, gen, report.a_dim), s, {0, 1});
    apply_qft_inplace(s, 0, false);
    const std::size_t a_reg[] = {0};
    const auto probs = register_probabilities(s, a_reg);

    const std::uint64_t bound = g.order() + 1;
    auto candidate = [&](std::uint64_t b) { return recover_period(b, report.a_dim, bound); };

    if (mode == RunMode::Distribution) {
        std::vector<std::size_t> order(probs.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });
        std::uint64_t l = 1;
        std::map<std::uint64_t, double> cand_mass;
        double none_mass = 0.0;
        for (const auto b : order) {
            if (probs[b] < kSupportThreshold) {
                none_mass += probs[b];
                continue;
            }
            if (const auto v = candidate(b)) {
                cand_mass[*v] += probs[b];
                if (lcm(l, *v) <= g.order()) {
                    l = lcm(l, *v);
                }
            } else {
                none_mass += probs[b];
            }
        }
        if (!power_in(g, gen, h, l)) {
            fail(ErrorCode::VerificationFailed, "support lcm " + std::to_string(l) + " does not reach H");
        }
        report.r = reduce_order(g, gen, h, l);
        report.single_shot_prob = cand_mass.contains(report.r) ? cand_mass[report.r] : 0.0;

        // Exact law of the running lcm over the repetition budget.
        std::map<std::uint64_t, double> state{{1, 1.0}};
        for (std::size_t rep = 0; rep < report.repetition_budget; ++rep) {
            std::map<std::uint64_t, double> next;
            for (const auto &[cur, p] : state) {
                next[cur] += p * none_mass;
                for (const auto &[v, q] : cand_mass) {
                    const std::uint64_t m = lcm(cur, v);
                    next[m <= g.order() ? m : cur] += p * q;
                }
            }
            state = std::move(next);
        }
        double success = 0.0;
        for (const auto &[cur, p] : state) {
            if (cur % report.r == 0) {
                success += p;
            }
        }
        report.success_prob = std::clamp(success, 0.0, 1.0);
        report.outcome_probs = probs;
        return report;
    }

    std::uint64_t l = 1;
    for (std::size_t rep = 0; rep < report.repetition_budget; ++rep) {
        const std::uint64_t b = sample_index(probs, rng);
        const auto v = candidate(b);
        report.observed.push_back(b);
        report.candidates.push_back(v);
        if (v && lcm(l, *v) <= g.order()) {
            l = lcm(l, *v);
        }
        if (power_in(g, gen, h, l)) {
            report.r = reduce_order(g, gen, h, l);
            return report;
        }
    }
    fail(ErrorCode::VerificationFailed, "no verified order after " + std::to_string(report.repetition_budget) +
                                            " repetitions");
}

std::vector<double> phase2_b_distribution(const BlackBoxGroup &g, Element gen, const State &h_state, std::uint64_t r) {
    check_r_register(g, h_state);
    if (r == 1) {
        return {1.0};
    }
    const std::size_t a_reg[] = {0};
    return register_probabilities(stage1_state(g, gen, h_state, r), a_reg);
}

CosetPhaseState watrous_phase2_stage1(const BlackBoxGroup &g, Element gen, const State &h_state, std::uint64_t r,
                                      RandomStream &rng) {
    check_r_register(g, h_state);
    if (r == 0) {
        fail(ErrorCode::InvalidArgument, "relative order must be positive");
    }
    if (r == 1) {
        return {canonicalize_phase(h_state), 1, 0, gen};
    }
    const State s = stage1_state(g, gen, h_state, r);
    const std::size_t a_reg[] = {0};
    const auto seen = measure_subsystems(s, a_reg, rng);
    return {slice_r_register(seen.post, g.order(), seen.outcome), r, seen.outcome, gen};
}

std::uint64_t correction_exponent(std::uint64_t b, std::uint64_t b_helper, std::uint64_t r) {
    if (r == 0) {
        fail(ErrorCode::InvalidArgument, "relative order must be positive");
    }
    b %= r;
    b_helper %= r;
    if (b % gcd(b_helper, r) != 0) {
        fail(ErrorCode::NoSolution, "c * " + std::to_string(b_helper) + " = " + std::to_string(b) + " mod " +
                                        std::to_string(r) + " has no solution");
    }
    for (std::uint64_t c = 0; c < r; ++c) {
        if (c * b_helper % r == b) {
            return c;
        }
    }
    fail(ErrorCode::NoSolution, "no correction exponent found");
}

CorrectionResult phase_correction(const CosetPhaseState &target, const CosetPhaseState &helper,
                                  const BlackBoxGroup &g) {
    if (target.r != helper.r || target.g != helper.g) {
        fail(ErrorCode::InvalidArgument, "target and helper must come from the same step");
    }
    check_r_register(g, target.state);
    check_r_register(g, helper.state);
    CorrectionResult out{target.state, helper.state, correction_exponent(target.b, helper.b, target.r)};
    if (out.c == 0) {
        return out;
    }
    State pair = tensor(target.state, helper.state);
    const Operator u = u_operator(g);
    for (std::uint64_t i = 0; i < out.c; ++i) {
        apply_inplace(u, pair, {0, 1});
    }
    auto [left, right] = split_product(pair, 1);
    out.corrected = canonicalize_phase(std::move(left));
    out.helper = canonicalize_phase(std::move(right));
    return out;
}

double pairing_success_probability(const std::vector<double> &b_probs, std::uint64_t r, std::size_t m) {
    if (r <= 1 || m <= 1) {
        return 1.0;
    }
    double total = 0.0;
    for (std::uint64_t d = 1; d <= r; ++d) {
        if (r % d != 0) {
            continue;
        }
        double a = 0.0;
        double not_exact = 0.0;
        for (std::uint64_t b = 0; b < b_probs.size(); ++b) {
            if (b % d == 0) {
                a += b_probs[b];
                if (gcd(b, r) != d) {
                    not_exact += b_probs[b];
                }
            }
        }
        const auto mm = static_cast<double>(m);
        total += std::pow(a, mm) - std::pow(not_exact, mm);
    }
    return std::clamp(total, 0.0, 1.0);
}

GroupOrderReport group_order(const BlackBoxGroup &g, const PolycyclicChain &chain, double eps, RunMode mode,
                             RandomStream &rng, std::size_t max_attempts) {
    if (max_attempts == 0) {
        fail(ErrorCode::InvalidArgument, "max_attempts must be positive");
    }
    GroupOrderReport report;
    report.max_attempts = max_attempts;
    const std::size_t k = chain.gens.size();
    if (k == 0) {
        if (mode == RunMode::Distribution) {
            report.success_prob = 1.0;
        }
        return report;
    }
    std::vector<State> copies(k + 1, basis_index_state(RegisterLayout({g.order()}), 0));
    double success = 1.0;

    for (std::size_t j = 1; j <= k; ++j) {
        WatrousStep step;
        step.g = chain.gens[j - 1];
        const Subgroup &h = chain.subgroups[j - 1];
        step.copies_in = copies.size();
        step.phase1 = watrous_phase1(g, step.g, h, copies.front(), eps, mode, rng);
        const std::uint64_t r = step.phase1.r;

        if (r == 1) {
            copies.pop_back();
            step.attempts = 0;
        } else {
            std::vector<State> produced;
            while (produced.empty()) {
                if (step.attempts == max_attempts) {
                    fail(ErrorCode::CorrectionStuck, "no solvable helper pairing after " +
                                                         std::to_string(max_attempts) + " attempts at step " +
                                                         std::to_string(j));
                }
                ++step.attempts;
                std::vector<CosetPhaseState> stage;
                std::vector<std::uint64_t> bs;
                for (const auto &c : copies) {
                    stage.push_back(watrous_phase2_stage1(g, step.g, c, r, rng));
                    bs.push_back(stage.back().b);
                }
                step.b_values.push_back(bs);
                std::size_t helper = 0;
                for (std::size_t i = 1; i < bs.size(); ++i) {
                    if (gcd(bs[i], r) < gcd(bs[helper], r)) {
                        helper = i;
                    }
                }
                try {
                    std::vector<State> out;
                    for (std::size_t i = 0; i < stage.size(); ++i) {
                        if (i != helper) {
                            out.push_back(phase_correction(stage[i], stage[helper], g).corrected);
                        }
                    }
                    produced = std::move(out);
                    step.helper_b = bs[helper];
                } catch (const Error &e) {
                    if (e.code() != ErrorCode::NoSolution) {
                        throw;
                    }
                }
            }
            copies = std::move(produced);
        }
        step.copies_out = copies.size();

        const State target = uniform_subgroup_state(g, chain.subgroups[j]);
        for (const auto &c : copies) {
            step.min_fidelity = std::min(step.min_fidelity, std::abs(inner_product(target, c)));
        }
        if (mode == RunMode::Distribution) {
            const double p2 = r == 1 ? 1.0
                                     : pairing_success_probability(
                                           phase2_b_distribution(g, step.g, uniform_subgroup_state(g, h), r), r,
                                           step.copies_in);
            step.pairing_success = p2;
            step.step_success =
                *step.phase1.success_prob * (1.0 - std::pow(1.0 - p2, static_cast<double>(max_attempts)));
            success *= *step.step_success;
        }
        report.order *= r;
        report.steps.push_back(std::move(step));
    }
    if (mode == RunMode::Distribution) {
        report.success_prob = std::clamp(success, 0.0, 1.0);
    }
    return report;
}

} // namespace qalgo
