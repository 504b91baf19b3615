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

#include <string_view>

namespace qalgo {

/// Sample draws outcomes from a seeded stream; Distribution reports the
/// exact outcome probabilities instead.
enum class RunMode { Sample, Distribution };

inline std::string_view to_string(RunMode m) { return m == RunMode::Sample ? "sample" : "distribution"; }

} // namespace qalgo
