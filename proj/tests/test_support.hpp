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

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qalgo/error.hpp"
#include "qalgo/qstate.hpp"

namespace qtest {

using qalgo::Amplitude;
using qalgo::RegisterLayout;
using qalgo::State;

inline State random_state(const RegisterLayout &layout, std::mt19937_64 &gen) {
    std::normal_distribution<double> normal;
    std::vector<Amplitude> amp(layout.total_dim());
    for (auto &a : amp) {
        a = {normal(gen), normal(gen)};
    }
    return State::normalized(layout, std::move(amp));
}

inline State make_state(std::vector<std::size_t> dims, std::vector<Amplitude> amp) {
    return State::normalized(RegisterLayout(std::move(dims)), std::move(amp));
}

inline double max_diff(const State &a, const State &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.total_dim(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

inline double max_diff(const std::vector<Amplitude> &a, const State &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

inline bool throws_code(const std::function<void()> &fn, qalgo::ErrorCode code) {
    try {
        fn();
    } catch (const qalgo::Error &e) {
        return e.code() == code;
    }
    return false;
}

} // namespace qtest
