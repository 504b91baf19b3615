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

#include <span>

#include <json.hpp>

#include "qalgo/deutsch_jozsa.hpp"
#include "qalgo/grover.hpp"
#include "qalgo/period.hpp"
#include "qalgo/qft.hpp"
#include "qalgo/shor.hpp"
#include "qalgo/watrous.hpp"

namespace qalgo {

using Json = nlohmann::ordered_json;

/// {"dims": [...], "amplitudes": [[re, im], ...]}
Json state_to_json(const State &s);
Json circuit_to_json(const QftCircuit &c);

/// {"outcome": probability} for outcomes with probability >= min_prob.
Json distribution_to_json(std::span<const double> probs, double min_prob = 1e-15);

Json to_json(const DjReport &r);
Json to_json(const PeriodRunReport &r);
Json to_json(const FactorReport &r);
Json to_json(const GroverReport &r);
Json to_json(const CountReport &r);
Json to_json(const GroupOrderReport &r, const BlackBoxGroup &g);

} // namespace qalgo
