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

#include <cstdint>
#include <random>

namespace qalgo {

/**
 * @brief Seeded, splittable random stream.
 *
 * Backed by std::mt19937_64. Child streams obtained with split() are seeded
 * from (parent seed, split counter) through SplitMix64, so a tree of streams
 * is fully determined by the root seed regardless of how much randomness each
 * branch consumes.
 */
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [lo, hi] (inclusive), unbiased.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    RandomStream split();

  private:
    std::uint64_t seed_;
    std::uint64_t splits_ = 0;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace qalgo
