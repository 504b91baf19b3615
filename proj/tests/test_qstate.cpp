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
#include <complex>
#include <random>

#include "qalgo/gates.hpp"
#include "qalgo/qstate.hpp"
#include "test_support.hpp"

using namespace qalgo;
using qtest::make_state;
using qtest::throws_code;

namespace {

const double kS = 1.0 / std::sqrt(2.0);
const Amplitude kI{0.0, 1.0};

} // namespace

TEST_CASE("layout indexing is most-significant-first") {
    const RegisterLayout l({2, 3, 4});
    CHECK(l.total_dim() == 24);
    CHECK(l.stride(0) == 12);
    CHECK(l.stride(2) == 1);
    const std::size_t digits[] = {1, 2, 3};
    CHECK(l.encode(digits) == 1 * 12 + 2 * 4 + 3);
    CHECK(l.decode(23) == std::vector<std::size_t>{1, 2, 3});
    CHECK(throws_code([] { RegisterLayout({2, 1}); }, ErrorCode::InvalidArgument));
}

TEST_CASE("basis states") {
    const State zero = basis_state(RegisterLayout({2}), {0});
    CHECK(zero[0] == Amplitude(1.0));
    CHECK(zero[1] == Amplitude(0.0));

    const State eleven = basis_state(RegisterLayout::qubits(2), {1, 1});
    CHECK(eleven[3] == Amplitude(1.0));
    CHECK(std::abs(eleven.norm() - 1.0) < 1e-15);

    CHECK(throws_code([] { (void)basis_state(RegisterLayout({2}), {2}); }, ErrorCode::IndexOutOfRange));
}

TEST_CASE("state constructor rejects non-unit vectors") {
    CHECK(throws_code([] { State(RegisterLayout({2}), {1.0, 1.0}); }, ErrorCode::InvalidArgument));
    CHECK(throws_code([] { State::normalized(RegisterLayout({2}), {0.0, 0.0}); }, ErrorCode::InvalidArgument));
    CHECK(throws_code([] { State(RegisterLayout({2}), {1.0}); }, ErrorCode::InvalidArgument));
}

TEST_CASE("tensor products") {
    const RegisterLayout q({2});
    const State ket0 = basis_state(q, {0});
    const State ket1 = basis_state(q, {1});
    const State t = tensor(ket0, ket1);
    CHECK(t.layout().dims() == std::vector<std::size_t>{2, 2});
    CHECK(t[1] == Amplitude(1.0));

    const State plus = make_state({2}, {1.0, 1.0});
    const State plus0 = tensor(plus, ket0);
    CHECK(std::abs(plus0[0] - kS) < 1e-15);
    CHECK(std::abs(plus0[2] - kS) < 1e-15);
    CHECK(std::abs(plus0[1]) < 1e-15);

    const State minus = make_state({2}, {1.0, -1.0});
    const State pm = tensor(plus, minus);
    const double expected[] = {0.5, -0.5, 0.5, -0.5};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(pm[i] - expected[i]) < 1e-15);
    }
}

TEST_CASE("inner products") {
    const RegisterLayout q({2});
    CHECK(std::abs(inner_product(basis_state(q, {0}), basis_state(q, {0})) - 1.0) < 1e-15);
    CHECK(std::abs(inner_product(basis_state(q, {0}), basis_state(q, {1}))) < 1e-15);

    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        const State x1 = qtest::random_state(RegisterLayout({3}), gen);
        const State x2 = qtest::random_state(RegisterLayout({3}), gen);
        const State s = qtest::random_state(RegisterLayout({2, 2}), gen);
        const Amplitude full = inner_product(tensor(x1, s), tensor(x2, s));
        // Direct sum over the smaller space.
        Amplitude direct{0.0};
        for (std::size_t i = 0; i < 3; ++i) {
            direct += std::conj(x1[i]) * x2[i];
        }
        CHECK(std::abs(full - direct) < 1e-12);

        const Amplitude self = inner_product(s, s);
        CHECK(std::abs(self.imag()) < 1e-12);
        CHECK(std::abs(self.real() - 1.0) < 1e-12);
    }
}

TEST_CASE("global phase equivalence") {
    const State a = make_state({2}, {kI, kI});
    const State b = make_state({2}, {1.0, 1.0});
    const State c = make_state({2}, {1.0, kI});
    CHECK(equal_up_to_global_phase(a, b));
    CHECK_FALSE(equal_up_to_global_phase(b, c));
    CHECK(equal_up_to_global_phase(c, c));

    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    for (int trial = 0; trial < 20; ++trial) {
        const State s = qtest::random_state(RegisterLayout({2, 3}), gen);
        std::vector<Amplitude> v1(s.amplitudes().begin(), s.amplitudes().end());
        std::vector<Amplitude> v2 = v1;
        const Amplitude p1 = std::polar(1.0, angle(gen));
        const Amplitude p2 = std::polar(1.0, angle(gen));
        for (std::size_t i = 0; i < v1.size(); ++i) {
            v1[i] *= p1;
            v2[i] *= p2;
        }
        const State s1(s.layout(), v1);
        const State s2(s.layout(), v2);
        CHECK(equal_up_to_global_phase(s, s));
        CHECK(equal_up_to_global_phase(s, s1) == equal_up_to_global_phase(s1, s));
        CHECK(equal_up_to_global_phase(s, s1));
        CHECK(equal_up_to_global_phase(s1, s2));
        CHECK(equal_up_to_global_phase(s, s2));
    }
}

TEST_CASE("entanglement detection") {
    const State bell = make_state({2, 2}, {1.0, 0.0, 0.0, 1.0});
    CHECK_FALSE(is_product_across(bell, 1));

    std::vector<Amplitude> v(16, 0.0);
    v[2 * 4 + 0] = v[2 * 4 + 1] = v[2 * 4 + 3] = 1.0;
    const State disentangled = make_state({4, 4}, v);
    CHECK(is_product_across(disentangled, 1));
    const auto [left, right] = split_product(disentangled, 1);
    CHECK(equal_up_to_global_phase(left, basis_state(RegisterLayout({4}), {2})));
    CHECK(equal_up_to_global_phase(right, make_state({4}, {1.0, 1.0, 0.0, 1.0})));

    const State signed_state = make_state({2, 2}, {1.0, 1.0, 1.0, -1.0});
    CHECK_FALSE(is_product_across(signed_state, 1));

    const auto sc = schmidt_coefficients(bell, 1);
    REQUIRE(sc.size() == 2);
    CHECK(std::abs(sc[0] - kS) < 1e-12);
    CHECK(std::abs(sc[1] - kS) < 1e-12);

    CHECK(throws_code([&] { (void)is_product_across(bell, 0); }, ErrorCode::InvalidCut));
}

TEST_CASE("random product states split at the seam") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 25; ++trial) {
        const State a = qtest::random_state(RegisterLayout({2, 3}), gen);
        const State b = qtest::random_state(RegisterLayout({4}), gen);
        const State t = tensor(a, b);
        CHECK(std::abs(t.norm() - 1.0) < 1e-10);
        CHECK(is_product_across(t, 2));
        const auto [x, y] = split_product(t, 2);
        CHECK(equal_up_to_global_phase(tensor(x, y), t));
    }
}

TEST_CASE("canonical phase makes the first nonzero amplitude real positive") {
    const State s = make_state({2}, {0.0, kI});
    const State c = canonicalize_phase(s);
    CHECK(std::abs(c[1] - 1.0) < 1e-15);
    const State z = make_state({2, 2}, {-1.0, 0.0, kI, 0.0});
    const State cz = canonicalize_phase(z);
    CHECK(cz[0].real() > 0.0);
    CHECK(std::abs(cz[0].imag()) < 1e-15);
    CHECK(equal_up_to_global_phase(z, cz));
}

TEST_CASE("normalization drift stays small over many gate applications") {
    std::mt19937_64 gen(5);
    State s = qtest::random_state(RegisterLayout::qubits(6), gen);
    const Operator ops[] = {hadamard(), phase_shift(0.37), b_gate(3), not_gate()};
    std::uniform_int_distribution<std::size_t> pick_q(0, 5);
    for (int step = 0; step < 1000; ++step) {
        apply_inplace(ops[step % 4], s, {pick_q(gen)});
    }
    CHECK(std::abs(s.norm() - 1.0) < 1e-10);
}
