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

#include "qalgo/random.hpp"

#include "qalgo/error.hpp"

namespace qalgo {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) {
        fail(ErrorCode::InvalidArgument, "uniform_int: empty range");
    }
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) {
        return next_u64();
    }
    const std::uint64_t range = span + 1;
    // Rejection keeps the draw unbiased and independent of the std
    // distribution implementation.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x = next_u64();
    while (x >= limit) {
        x = next_u64();
    }
    return lo + x % range;
}

RandomStream RandomStream::split() {
    ++splits_;
    return RandomStream(splitmix64(seed_ ^ splitmix64(splits_ * 0x632be59bd9b4e019ULL)));
}

} // namespace qalgo
