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
#include <optional>
#include <utility>
#include <vector>

namespace qalgo {

using u64 = std::uint64_t;

/// Largest modulus accepted by choose_q (keeps q below 2^63).
inline constexpr u64 kMaxModulus = u64{1} << 31;

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// y^a mod n, n >= 1.
u64 modpow(u64 y, u64 a, u64 n);
u64 mulmod(u64 a, u64 b, u64 n);

/// Least r >= 1 with y^r = 1 mod n. Throws NotCoprime.
u64 multiplicative_order(u64 y, u64 n);

/// Canonical expansion [a0; a1, ..., an] with an > 1 when n > 0.
struct ContinuedFraction {
    std::vector<u64> terms;
};

struct Convergent {
    u64 p;
    u64 q;
    bool operator==(const Convergent &) const = default;
};

/// Throws ZeroDenominator when q = 0.
ContinuedFraction continued_fraction(u64 p, u64 q);
std::vector<Convergent> convergents(const ContinuedFraction &cf);

/// Power of two q with n^2 <= q < 2 n^2.
u64 choose_q(u64 n);

/// Denominator r < n of a convergent s/r of c/q with |c/q - s/r| <= 1/(2q).
/// Largest such r wins; nullopt when c = 0 or nothing qualifies.
std::optional<u64> recover_period(u64 c, u64 q, u64 n);

u64 euler_phi(u64 n);
bool is_prime(u64 n);

/// Largest x with x^k <= n.
u64 integer_root(u64 n, unsigned k);

/// (p, k) with n = p^k, p prime, k >= 1; nullopt otherwise.
std::optional<std::pair<u64, unsigned>> is_prime_power(u64 n);

/// Smallest prime factor, n >= 2.
u64 smallest_prime_factor(u64 n);

} // namespace qalgo
