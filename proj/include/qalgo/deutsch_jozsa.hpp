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
#include <string_view>

#include "qalgo/gates.hpp"
#include "qalgo/random.hpp"
#include "qalgo/run_mode.hpp"

namespace qalgo {

enum class DjVerdict { Constant, Balanced };

std::string_view to_string(DjVerdict v);

struct DjReport {
    unsigned m = 0;
    DjVerdict verdict = DjVerdict::Constant;
    /// Exact probability of reading 0...0 on the input register.
    double p_zero = 0.0;
    /// Drawn outcome in sample mode.
    std::optional<std::size_t> observed;
};

/// One oracle query on W|0...0>|1>, then W on the input register and a
/// measurement. Throws PromiseViolated when f is neither constant nor balanced
/// and InvalidArgument when f has more than one output bit.
DjReport deutsch_jozsa(const OracleFunction &f, RunMode mode, RandomStream &rng);

/// 2^{-m/2} sum_x (-1)^{f(x)} |x>, obtained by phase kickback.
State build_D_state(const OracleFunction &f);

} // namespace qalgo
