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

#include "qalgo/report.hpp"

#include <algorithm>
#include <string>

namespace qalgo {

namespace {

template <typename T> Json optional_json(const std::optional<T> &v) { return v ? Json(*v) : Json(nullptr); }

// Summed probabilities can land a few ulps outside [0, 1].
double probability(double p) { return std::clamp(p, 0.0, 1.0); }

Json optional_probability(const std::optional<double> &v) { return v ? Json(probability(*v)) : Json(nullptr); }

const char *gate_kind(QftGate::Kind k) {
    switch (k) {
    case QftGate::Kind::W:
        return "W";
    case QftGate::Kind::ControlledB:
        return "CB";
    case QftGate::Kind::Swap:
        return "SWAP";
    }
    return "?";
}

} // namespace

Json state_to_json(const State &s) {
    Json amps = Json::array();
    for (const auto a : s.amplitudes()) {
        amps.push_back(Json::array({a.real(), a.imag()}));
    }
    return Json{{"dims", s.layout().dims()}, {"amplitudes", std::move(amps)}};
}

Json circuit_to_json(const QftCircuit &c) {
    Json gates = Json::array();
    for (const auto &g : c.gates) {
        Json j{{"gate", gate_kind(g.kind)}, {"target", g.target}};
        if (g.kind == QftGate::Kind::ControlledB) {
            j["control"] = g.control;
            j["k"] = g.k;
        } else if (g.kind == QftGate::Kind::Swap) {
            j["partner"] = g.control;
        }
        gates.push_back(std::move(j));
    }
    return Json{{"n", c.n}, {"pre_swap_gate_count", c.pre_swap_gate_count()}, {"gates", std::move(gates)}};
}

Json distribution_to_json(std::span<const double> probs, double min_prob) {
    Json out = Json::object();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] >= min_prob) {
            out[std::to_string(i)] = probability(probs[i]);
        }
    }
    return out;
}

Json to_json(const DjReport &r) {
    return Json{{"m", r.m},
                {"verdict", to_string(r.verdict)},
                {"p_zero", probability(r.p_zero)},
                {"observed", optional_json(r.observed)}};
}

Json to_json(const PeriodRunReport &r) {
    Json reps = Json::array();
    for (const auto &e : r.repetitions) {
        reps.push_back(Json{{"second_register", e.second_register},
                            {"c", e.c},
                            {"candidate", optional_json(e.candidate)},
                            {"discarded", e.discarded},
                            {"lcm", e.lcm_so_far}});
    }
    Json j{{"variant", r.variant},
           {"n", r.n},
           {"q", r.q},
           {"second_dim", r.second_dim},
           {"repetition_budget", r.repetition_budget},
           {"precheck_hit", r.precheck_hit},
           {"repetitions", std::move(reps)},
           {"r", optional_json(r.r)}};
    if (r.variant == "general") {
        j["first_bits"] = r.first_bits;
        j["second_bits"] = r.second_bits;
    }
    if (r.mode == RunMode::Distribution && !r.precheck_hit) {
        j["first_register_probs"] = distribution_to_json(r.first_register_probs);
        j["second_register_probs"] = distribution_to_json(r.second_register_probs);
        j["exact_success_prob"] = optional_probability(r.exact_success_prob);
    }
    return j;
}

Json to_json(const FactorReport &r) {
    Json attempts = Json::array();
    for (const auto &a : r.attempts) {
        Json j{{"y", a.y}, {"outcome", a.outcome}, {"gcd_shortcut", optional_json(a.gcd_shortcut)},
               {"r", optional_json(a.r)}, {"factor", optional_json(a.factor)}};
        if (a.period) {
            j["period"] = to_json(*a.period);
        }
        attempts.push_back(std::move(j));
    }
    return Json{{"N", r.n}, {"route", r.route}, {"factor", r.factor}, {"cofactor", r.n / r.factor},
                {"attempts", std::move(attempts)}};
}

Json to_json(const GroverReport &r) {
    Json j{{"N", r.n},
           {"M", r.m},
           {"M_estimated", r.m_estimated},
           {"count_estimate", optional_json(r.count_estimate)},
           {"strategy", r.strategy},
           {"outcome", r.outcome},
           {"found", r.found},
           {"success_prob", optional_probability(r.success_prob)}};
    if (r.plan) {
        j["plan"] = Json{{"theta", r.plan->theta}, {"R", r.plan->r}};
    }
    return j;
}

Json to_json(const CountReport &r) {
    Json j{{"N", r.n}, {"R", r.range}, {"outcome", r.outcome}, {"estimate", r.estimate}, {"error_bound", r.error_bound}};
    if (r.prob_within_bound) {
        j["outcome_probs"] = distribution_to_json(r.outcome_probs);
        j["prob_within_bound"] = probability(*r.prob_within_bound);
    }
    return j;
}

Json to_json(const GroupOrderReport &r, const BlackBoxGroup &g) {
    Json steps = Json::array();
    for (const auto &s : r.steps) {
        Json p1{{"A_dim", s.phase1.a_dim},
                {"repetition_budget", s.phase1.repetition_budget},
                {"observed", s.phase1.observed},
                {"r", s.phase1.r},
                {"single_shot_prob", optional_probability(s.phase1.single_shot_prob)},
                {"success_prob", optional_probability(s.phase1.success_prob)}};
        Json cands = Json::array();
        for (const auto &c : s.phase1.candidates) {
            cands.push_back(optional_json(c));
        }
        p1["candidates"] = std::move(cands);
        steps.push_back(Json{{"generator", g.label(s.g)},
                             {"encoded", g.encode(s.g)},
                             {"phase1", std::move(p1)},
                             {"copies_in", s.copies_in},
                             {"copies_out", s.copies_out},
                             {"attempts", s.attempts},
                             {"b_values", s.b_values},
                             {"helper_b", s.helper_b},
                             {"min_fidelity", s.min_fidelity},
                             {"pairing_success", optional_probability(s.pairing_success)},
                             {"step_success", optional_probability(s.step_success)}});
    }
    return Json{{"order", r.order},
                {"group_bits", g.bit_length()},
                {"max_attempts", r.max_attempts},
                {"steps", std::move(steps)},
                {"success_prob", optional_probability(r.success_prob)}};
}

} // namespace qalgo
