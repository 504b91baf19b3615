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

#include "qalgo/numtheory.hpp"

#include <string>

#include "qalgo/error.hpp"

namespace qalgo {

using u128 = unsigned __int128;
using i128 = __int128;

u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        const u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return a / gcd(a, b) * b;
}

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 modpow(u64 y, u64 a, u64 n) {
    if (n == 0) {
        fail(ErrorCode::InvalidArgument, "modpow modulus must be positive");
    }
    u64 result = 1 % n;
    y %= n;
    while (a > 0) {
        if (a & 1) {
            result = mulmod(result, y, n);
        }
        y = mulmod(y, y, n);
        a >>= 1;
    }
    return result;
}

u64 multiplicative_order(u64 y, u64 n) {
    if (n < 1 || gcd(y % n, n) != 1) {
        fail(ErrorCode::NotCoprime, "gcd(" + std::to_string(y) + ", " + std::to_string(n) + ") != 1");
    }
    if (n == 1) {
        return 1;
    }
    u64 r = 1;
    u64 acc = y % n;
    while (acc != 1) {
        acc = mulmod(acc, y, n);
        ++r;
    }
    return r;
}

ContinuedFraction continued_fraction(u64 p, u64 q) {
    if (q == 0) {
        fail(ErrorCode::ZeroDenominator, "continued fraction of p/0");
    }
    ContinuedFraction cf;
    while (q != 0) {
        cf.terms.push_back(p / q);
        const u64 rem = p % q;
        p = q;
        q = rem;
    }
    return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction &cf) {
    std::vector<Convergent> out;
    u128 p_prev = 0, q_prev = 1;
    u128 p_cur = 1, q_cur = 0;
    for (const u64 a : cf.terms) {
        const u128 p_next = a * p_cur + p_prev;
        const u128 q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        out.push_back({static_cast<u64>(p_cur), static_cast<u64>(q_cur)});
    }
    return out;
}

u64 choose_q(u64 n) {
    if (n < 2 || n >= kMaxModulus) {
        fail(ErrorCode::InvalidArgument, "choose_q needs 2 <= N < 2^31, got " + std::to_string(n));
    }
    const u64 lo = n * n;
    u64 q = 1;
    while (q < lo) {
        q <<= 1;
    }
    return q;
}

std::optional<u64> recover_period(u64 c, u64 q, u64 n) {
    if (q == 0 || c >= q) {
        fail(ErrorCode::InvalidArgument, "recover_period needs 0 <= c < q");
    }
    if (c == 0) {
        return std::nullopt;
    }
    std::optional<u64> best;
    for (const auto &cv : convergents(continued_fraction(c, q))) {
        if (cv.q >= n) {
            break;
        }
        // |c/q - s/r| <= 1/(2q)  <=>  2 |c r - s q| <= r
        const i128 diff = static_cast<i128>(c) * cv.q - static_cast<i128>(cv.p) * q;
        const u128 mag = static_cast<u128>(diff < 0 ? -diff : diff);
        if (2 * mag <= cv.q) {
            best = cv.q;
        }
    }
    return best;
}

u64 euler_phi(u64 n) {
    if (n == 0) {
        fail(ErrorCode::InvalidArgument, "euler_phi(0) is undefined");
    }
    u64 result = n;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

u64 smallest_prime_factor(u64 n) {
    if (n < 2) {
        fail(ErrorCode::InvalidArgument, "smallest_prime_factor needs n >= 2");
    }
    if (n % 2 == 0) {
        return 2;
    }
    for (u64 p = 3; p <= n / p; p += 2) {
        if (n % p == 0) {
            return p;
        }
    }
    return n;
}

bool is_prime(u64 n) { return n >= 2 && smallest_prime_factor(n) == n; }

u64 integer_root(u64 n, unsigned k) {
    if (k == 0) {
        fail(ErrorCode::InvalidArgument, "integer_root with k = 0");
    }
    if (k == 1 || n < 2) {
        return n;
    }
    auto pow_le = [&](u64 x) {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= x;
            if (acc > n) {
                return false;
            }
        }
        return true;
    };
    u64 lo = 1, hi = u64{1} << ((64 + k - 1) / k);
    while (lo < hi) {
        const u64 mid = lo + (hi - lo + 1) / 2;
        if (pow_le(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::optional<std::pair<u64, unsigned>> is_prime_power(u64 n) {
    if (n < 2) {
        return std::nullopt;
    }
    for (unsigned k = 63; k >= 1; --k) {
        const u64 p = integer_root(n, k);
        if (p < 2) {
            continue;
        }
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= p;
        }
        if (acc == n && is_prime(p)) {
            return std::make_pair(p, k);
        }
    }
    return std::nullopt;
}

} // namespace qalgo
