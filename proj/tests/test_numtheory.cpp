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

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "qalgo/numtheory.hpp"
#include "test_support.hpp"

using namespace qalgo;
using qtest::throws_code;

namespace {

/// Euclid with explicit remainders, kept separate from the library routine.
u64 euclid(u64 a, u64 b) {
    while (b != 0) {
        const u64 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

u64 phi_by_scan(u64 n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k) {
        count += euclid(k, n) == 1 ? 1 : 0;
    }
    return count;
}

} // namespace

TEST_CASE("gcd and modular exponentiation") {
    CHECK(gcd(125, 37) == 1);
    CHECK(gcd(0, 9) == 9);
    CHECK(gcd(84, 36) == 12);
    CHECK(lcm(4, 6) == 12);
    CHECK(modpow(4, 3, 21) == 1);
    CHECK(modpow(4, 1, 21) == 4);
    CHECK(modpow(4, 2, 21) == 16);
    CHECK(modpow(11, 0, 21) == 1);
    std::mt19937_64 gen(1);
    for (int t = 0; t < 200; ++t) {
        const u64 n = 2 + gen() % (kMaxModulus - 2);
        const u64 y = gen() % n;
        const u64 a = gen() % 64;
        u64 expected = 1 % n;
        for (u64 i = 0; i < a; ++i) {
            expected = static_cast<u64>((static_cast<unsigned __int128>(expected) * y) % n);
        }
        CHECK(modpow(y, a, n) == expected);
    }
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(4, 21) == 3);
    CHECK(multiplicative_order(7, 15) == 4);
    CHECK(multiplicative_order(1, 35) == 1);
    CHECK(throws_code([] { (void)multiplicative_order(6, 21); }, ErrorCode::NotCoprime));
}

TEST_CASE("continued fractions and convergents") {
    const auto cf = continued_fraction(125, 37);
    CHECK(cf.terms == std::vector<u64>{3, 2, 1, 1, 1, 4});
    const std::vector<Convergent> expected = {{3, 1}, {7, 2}, {10, 3}, {17, 5}, {27, 8}, {125, 37}};
    CHECK(convergents(cf) == expected);

    const auto zero = continued_fraction(0, 5);
    CHECK(zero.terms == std::vector<u64>{0});
    CHECK(convergents(zero) == std::vector<Convergent>{{0, 1}});

    CHECK(continued_fraction(1, 2).terms == std::vector<u64>{0, 2});
    CHECK(throws_code([] { (void)continued_fraction(3, 0); }, ErrorCode::ZeroDenominator));
}

TEST_CASE("round trip through random rationals") {
    std::mt19937_64 gen(2);
    for (int t = 0; t < 1000; ++t) {
        const u64 q = 1 + gen() % 999999;
        const u64 p = gen() % (10 * q);
        const auto cf = continued_fraction(p, q);
        for (std::size_t i = 1; i < cf.terms.size(); ++i) {
            CHECK(cf.terms[i] >= 1);
        }
        if (cf.terms.size() > 1) {
            CHECK(cf.terms.back() > 1);
        }
        const auto cv = convergents(cf);
        const u64 g = euclid(p, q);
        CHECK(cv.back() == Convergent{p / g, q / g});
        for (const auto &c : cv) {
            CHECK(euclid(c.p, c.q) == 1);
        }
    }
}

TEST_CASE("close rationals have the nearby fraction as a convergent") {
    std::mt19937_64 gen(3);
    const u64 scale = 1000000;
    for (int t = 0; t < 1000; ++t) {
        const u64 r = 2 + gen() % 98;
        u64 s = 1 + gen() % (r - 1);
        while (euclid(s, r) != 1) {
            s = 1 + gen() % (r - 1);
        }
        // x = s/r + k/(r * scale) with |k| < scale / (2r) keeps |x - s/r| < 1/(2 r^2).
        const auto bound = static_cast<std::int64_t>((scale - 1) / (2 * r));
        const std::int64_t k = static_cast<std::int64_t>(gen() % (2 * bound + 1)) - bound;
        const u64 num = static_cast<u64>(static_cast<std::int64_t>(s * scale) + k);
        const auto cv = convergents(continued_fraction(num, r * scale));
        CHECK(std::find(cv.begin(), cv.end(), Convergent{s, r}) != cv.end());
    }
}

TEST_CASE("choice of q") {
    CHECK(choose_q(21) == 512);
    CHECK(choose_q(15) == 256);
    CHECK(choose_q(2) == 4);
    for (u64 n = 2; n < 5000; n += 7) {
        const u64 q = choose_q(n);
        CHECK(std::has_single_bit(q));
        CHECK(n * n <= q);
        CHECK(q < 2 * n * n);
    }
    CHECK(throws_code([] { (void)choose_q(1); }, ErrorCode::InvalidArgument));
}

TEST_CASE("period recovery") {
    CHECK(recover_period(7, 21, 21) == std::optional<u64>{3});
    CHECK_FALSE(recover_period(0, 512, 21).has_value());
    CHECK(recover_period(128, 512, 15) == std::optional<u64>{4});
    CHECK_FALSE(recover_period(127, 512, 15).has_value());
    CHECK(recover_period(64, 256, 15) == std::optional<u64>{4});

    for (u64 q : {256, 512, 1024, 4096}) {
        for (u64 r = 2; r <= 64; r *= 2) {
            for (u64 s = 1; s < r; s += 2) {
                CHECK(recover_period(s * q / r, q, r + 1) == std::optional<u64>{r});
                CHECK(recover_period(s * q / r, q, 1000) == std::optional<u64>{r});
            }
        }
    }
    // Exact multiples for non-power-of-two r with q a multiple of r.
    for (u64 r = 2; r < 40; ++r) {
        const u64 q = r * 97;
        for (u64 s = 1; s < r; ++s) {
            if (euclid(s, r) == 1) {
                CHECK(recover_period(s * q / r, q, r + 5) == std::optional<u64>{r});
            }
        }
    }
}

TEST_CASE("Euler phi") {
    CHECK(euler_phi(21) == 12);
    CHECK(euler_phi(1) == 1);
    for (u64 n = 1; n <= 500; ++n) {
        CHECK(euler_phi(n) == phi_by_scan(n));
    }
    for (u64 r = 19; r <= 10000; ++r) {
        const double ratio = static_cast<double>(euler_phi(r)) / static_cast<double>(r);
        CHECK(ratio > 1.0 / (4.0 * std::log(std::log(static_cast<double>(r)))));
    }
}

TEST_CASE("prime powers") {
    CHECK(is_prime_power(27) == std::optional<std::pair<u64, unsigned>>{{3, 3}});
    CHECK_FALSE(is_prime_power(21).has_value());
    CHECK(is_prime_power(1024) == std::optional<std::pair<u64, unsigned>>{{2, 10}});
    CHECK(is_prime_power(13) == std::optional<std::pair<u64, unsigned>>{{13, 1}});
    CHECK_FALSE(is_prime_power(36).has_value());
    CHECK(is_prime_power(2147395600ULL) == std::nullopt);
    CHECK(is_prime_power(1977326743ULL) == std::optional<std::pair<u64, unsigned>>{{7, 11}});
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(1));
    CHECK(smallest_prime_factor(91) == 7);
    CHECK(integer_root(1000000, 3) == 100);
    CHECK(integer_root(999999, 3) == 99);
}
