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

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "qalgo/qft.hpp"
#include "test_support.hpp"

using namespace qalgo;

namespace {

/// Textbook DFT entry computed in long double, independent of the library's root table.
Amplitude reference_entry(std::size_t d, std::size_t c, std::size_t x, double sign) {
    const long double angle = sign * 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(c * x) /
                              static_cast<long double>(d);
    const long double scale = 1.0L / std::sqrt(static_cast<long double>(d));
    return {static_cast<double>(scale * std::cos(angle)), static_cast<double>(scale * std::sin(angle))};
}

double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("matrix entries follow the forward sign convention") {
    for (std::size_t d : {2, 3, 5, 8, 21}) {
        const Matrix q = qft_direct(d).matrix();
        const Matrix qi = qft_inverse(d).matrix();
        double worst = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t x = 0; x < d; ++x) {
                const auto ci = static_cast<Eigen::Index>(c);
                const auto xi = static_cast<Eigen::Index>(x);
                worst = std::max(worst, std::abs(q(ci, xi) - reference_entry(d, c, x, -1.0)));
                worst = std::max(worst, std::abs(qi(ci, xi) - reference_entry(d, c, x, +1.0)));
            }
        }
        CHECK(worst < 1e-14);
    }
}

TEST_CASE("QFT on Z_2 is W") {
    CHECK(max_abs(qft_direct(2).matrix() - hadamard().to_matrix()) < 1e-15);
    CHECK(max_abs(qft_inverse(2).matrix() - hadamard().to_matrix()) < 1e-15);
}

TEST_CASE("QFT_21 maps the period-3 comb onto multiples of 7") {
    std::vector<Amplitude> psi0(21, 0.0);
    for (std::size_t k = 0; k < 7; ++k) {
        psi0[3 * k] = 1.0;
    }
    const State in = State::normalized(RegisterLayout({21}), psi0);
    State out = apply(qft_direct(21), in, {0});
    const double third = 1.0 / std::sqrt(3.0);
    for (std::size_t c = 0; c < 21; ++c) {
        const double expected = (c % 7 == 0) ? third : 0.0;
        CHECK(std::abs(out[c] - expected) < 1e-12);
    }
    const State back = apply(qft_inverse(21), out, {0});
    CHECK(qtest::max_diff(back, in) < 1e-12);

    State via_helper = in;
    apply_qft_inplace(via_helper, 0);
    CHECK(qtest::max_diff(via_helper, out) < 1e-12);
}

TEST_CASE("transforms are unitary and mutually inverse") {
    for (std::size_t d : {2, 3, 8, 21}) {
        const Matrix q = qft_direct(d).matrix();
        const auto n = static_cast<Eigen::Index>(d);
        CHECK(max_abs(q * q.adjoint() - Matrix::Identity(n, n)) < 1e-10);
        CHECK(max_abs(qft_inverse(d).matrix() * q - Matrix::Identity(n, n)) < 1e-10);
    }
    CHECK(qtest::throws_code([] { (void)qft_direct(1); }, ErrorCode::InvalidArgument));
}

TEST_CASE("gate circuits") {
    const QftCircuit one = qft_circuit(1);
    REQUIRE(one.gates.size() == 1);
    CHECK(one.gates[0].kind == QftGate::Kind::W);
    CHECK(max_abs(densify(one) - hadamard().to_matrix()) < 1e-15);

    const QftCircuit four = qft_circuit(4);
    CHECK(four.pre_swap_gate_count() == 10);
    CHECK(max_abs(densify(four) - qft_direct(16).matrix()) < 1e-10);

    for (std::size_t n = 1; n <= 8; ++n) {
        const QftCircuit c = qft_circuit(n);
        CHECK(c.pre_swap_gate_count() == n * (n + 1) / 2);
        CHECK(c.pre_swap_gate_count() <= n * n);
        CHECK(max_abs(densify(c) - qft_direct(std::size_t{1} << n).matrix()) < 1e-10);
    }
}

TEST_CASE("power-of-two helper matches the dense transform inside a larger register") {
    std::mt19937_64 gen(4);
    const RegisterLayout layout({3, 16, 2});
    const State s = qtest::random_state(layout, gen);
    for (bool inverse : {false, true}) {
        State fast = s;
        apply_qft_inplace(fast, 1, inverse);
        const State slow = apply(inverse ? qft_inverse(16) : qft_direct(16), s, {1});
        CHECK(qtest::max_diff(fast, slow) < 1e-12);
        CHECK(fast.layout() == layout);
    }
}

TEST_CASE("periodic inputs concentrate on multiples of n/r") {
    std::mt19937_64 gen(8);
    std::normal_distribution<double> normal;
    const std::pair<std::size_t, std::size_t> cases[] = {{10, 2}, {12, 3}, {21, 3}, {16, 4}};
    for (const auto &[n, r] : cases) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Amplitude> base(r);
            for (auto &b : base) {
                b = {normal(gen), normal(gen)};
            }
            std::vector<Amplitude> f(n);
            for (std::size_t a = 0; a < n; ++a) {
                f[a] = base[a % r];
            }
            State s = State::normalized(RegisterLayout({n}), f);
            apply_qft_inplace(s, 0);
            double off = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c % (n / r) != 0) {
                    off = std::max(off, std::abs(s[c]));
                }
            }
            CHECK(off <= 1e-10);
        }
    }
}

TEST_CASE("character orthogonality") {
    for (std::size_t m = 1; m <= 64; ++m) {
        double worst = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t d = 0; d < m; ++d) {
                std::complex<long double> sum = 0.0L;
                for (std::size_t a = 0; a < m; ++a) {
                    const long double t = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(m);
                    sum += std::polar(1.0L, t * static_cast<long double>(c * a)) *
                           std::polar(1.0L, -t * static_cast<long double>(d * a));
                }
                const double expected = (c == d) ? static_cast<double>(m) : 0.0;
                worst = std::max(worst, static_cast<double>(std::abs(sum - static_cast<long double>(expected))));
            }
        }
        CHECK(worst < 1e-9);
    }
    // The library's rows are scaled characters, so the same relation holds for them.
    for (std::size_t m : {2, 5, 16, 33, 64}) {
        const Matrix q = qft_direct(m).matrix() * std::sqrt(static_cast<double>(m));
        const Matrix gram = q * q.adjoint();
        const auto n = static_cast<Eigen::Index>(m);
        CHECK(max_abs(gram - static_cast<double>(m) * Matrix::Identity(n, n)) < 1e-9);
    }
}
