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

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <random>

#include "qalgo/measure.hpp"
#include "test_support.hpp"

using namespace qalgo;
using qtest::make_state;
using qtest::throws_code;

namespace {

const std::size_t kReg0[] = {0};
const std::size_t kReg1[] = {1};
const std::size_t kBoth[] = {0, 1};

Matrix random_unitary(std::size_t d, std::mt19937_64 &gen) {
    std::normal_distribution<double> normal;
    const auto n = static_cast<Eigen::Index>(d);
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = {normal(gen), normal(gen)};
        }
    }
    return Eigen::HouseholderQR<Matrix>(a).householderQ() * Matrix::Identity(n, n);
}

/// Projectors onto a random partition of a random orthonormal basis.
Measurement random_projective(std::size_t d, std::size_t parts, std::mt19937_64 &gen) {
    const Matrix u = random_unitary(d, gen);
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<Matrix> ops(parts, Matrix::Zero(n, n));
    std::uniform_int_distribution<std::size_t> pick(0, parts - 1);
    for (Eigen::Index k = 0; k < n; ++k) {
        // The first `parts` columns seed each block so no projector is empty.
        const std::size_t part = static_cast<std::size_t>(k) < parts ? static_cast<std::size_t>(k) : pick(gen);
        ops[part] += u.col(k) * u.col(k).adjoint();
    }
    return Measurement::from_operators(std::move(ops));
}

std::vector<double> explicit_probs(const State &s, const Measurement &m) {
    const auto amp = s.amplitudes();
    const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(amp.data(), static_cast<Eigen::Index>(amp.size()));
    std::vector<double> p;
    for (std::size_t k = 0; k < m.num_outcomes(); ++k) {
        p.push_back((v.adjoint() * m.op(k).adjoint() * m.op(k) * v)(0, 0).real());
    }
    return p;
}

} // namespace

TEST_CASE("computational basis on one qubit") {
    const Amplitude a{0.6, 0.0};
    const Amplitude b{0.0, 0.8};
    const State s(RegisterLayout({2}), {a, b});
    const auto dist = distribution(s, computational_basis(2));
    CHECK(std::abs(dist.probs[0] - std::norm(a)) < 1e-15);
    CHECK(std::abs(dist.probs[1] - std::norm(b)) < 1e-15);
    CHECK(equal_up_to_global_phase(dist.post_states.at(0), basis_state(RegisterLayout({2}), {0})));

    const State one = basis_state(RegisterLayout({2}), {1});
    const auto d1 = distribution(one, computational_basis(2));
    CHECK(d1.probs[1] == 1.0);
    CHECK(d1.post_states.count(0) == 0);
    RandomStream rng(42);
    for (int i = 0; i < 10; ++i) {
        const auto r = sample(one, computational_basis(2), rng);
        CHECK(r.outcome == 1);
        CHECK(r.post[1] == Amplitude(1.0));
    }
    CHECK(throws_code([] { (void)computational_basis(1); }, ErrorCode::InvalidArgument));
    CHECK(throws_code([&] { (void)distribution(one, computational_basis(4)); }, ErrorCode::DimensionMismatch));
}

TEST_CASE("uniform two-qubit state") {
    const State s = make_state({2, 2}, {1.0, 1.0, 1.0, 1.0});
    const auto dist = distribution(s, computational_basis(4));
    for (double p : dist.probs) {
        CHECK(std::abs(p - 0.25) < 1e-15);
    }
}

TEST_CASE("seeded sampling is reproducible") {
    const State plus = make_state({2}, {1.0, 1.0});
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    RandomStream r1(1234);
    RandomStream r2(1234);
    for (int i = 0; i < 64; ++i) {
        first.push_back(sample(plus, computational_basis(2), r1).outcome);
        second.push_back(sample(plus, computational_basis(2), r2).outcome);
    }
    CHECK(first == second);
}

TEST_CASE("sample frequencies lie within 3 sigma of the Born probabilities") {
    const double pa = 0.3;
    const State s(RegisterLayout({2}), {std::sqrt(pa), Amplitude(0.0, std::sqrt(1.0 - pa))});
    RandomStream rng(2026);
    const int trials = 100000;
    int zeros = 0;
    for (int i = 0; i < trials; ++i) {
        zeros += sample(s, computational_basis(2), rng).outcome == 0 ? 1 : 0;
    }
    const double sigma = std::sqrt(trials * pa * (1.0 - pa));
    CHECK(std::abs(zeros - trials * pa) <= 3.0 * sigma);
}

TEST_CASE("register measurement") {
    const Amplitude a{0.1, 0.2}, b{0.3, -0.1}, c{0.5, 0.0}, d{-0.2, 0.4};
    const State psi = make_state({2, 2}, {a, b, c, d});
    const double n2 = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    const auto pq = register_probabilities(psi, kReg0);
    CHECK(std::abs(pq[0] - (std::norm(a) + std::norm(b)) / n2) < 1e-15);

    const State bell = make_state({2, 2}, {1.0, 0.0, 0.0, 1.0});
    const State after = project_register(bell, kReg0, 0);
    const auto p2 = register_probabilities(after, kReg1);
    CHECK(std::abs(p2[0] - 1.0) < 1e-15);
    CHECK(std::abs(register_probabilities(bell, kBoth)[0] - 0.5) < 1e-15);

    RandomStream rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto r = measure_register(bell, 0, rng);
        const auto r2 = measure_register(r.post, 1, rng);
        CHECK(r.outcome == r2.outcome);
    }
    CHECK(throws_code([&] { (void)measure_register(bell, 2, rng); }, ErrorCode::InvalidRegister));

    const Amplitude al{0.6}, be{0.0, 0.8}, ga{0.28}, de{0.96};
    const State prod = tensor(State(RegisterLayout({2}), {al, be}), State(RegisterLayout({2}), {ga, de}));
    CHECK(std::abs(register_probabilities(prod, kBoth)[0] - std::norm(al * ga)) < 1e-15);
}

TEST_CASE("register outcomes on product states are independent") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        const State q = qtest::random_state(RegisterLayout({3}), gen);
        const State r = qtest::random_state(RegisterLayout({4}), gen);
        const State s = tensor(q, r);
        const auto pq = register_probabilities(s, kReg0);
        const auto pr = register_probabilities(s, kReg1);
        const auto joint = register_probabilities(s, kBoth);
        double worst = 0.0;
        for (std::size_t a = 0; a < 3; ++a) {
            CHECK(std::abs(pq[a] - std::norm(q[a])) < 1e-12);
            for (std::size_t b = 0; b < 4; ++b) {
                worst = std::max(worst, std::abs(joint[a * 4 + b] - pq[a] * pr[b]));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("probabilities sum to one and match the Born rule") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + trial % 15;
        const Measurement m = random_projective(d, 1 + trial % std::min<std::size_t>(d, 5), gen);
        CHECK(m.completeness_defect() < 1e-10);
        const State s = qtest::random_state(RegisterLayout({d}), gen);
        const auto dist = distribution(s, m);
        CHECK(std::abs(dist.total() - 1.0) < 1e-9);
        const auto ref = explicit_probs(s, m);
        for (std::size_t k = 0; k < ref.size(); ++k) {
            CHECK(std::abs(dist.probs[k] - ref[k]) < 1e-12);
        }
        for (const auto &[k, post] : dist.post_states) {
            CHECK(std::abs(post.norm() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("incomplete operator families are rejected") {
    std::vector<Matrix> ops = {Matrix::Identity(2, 2) * 0.5};
    CHECK(throws_code([&] { (void)Measurement::from_operators(ops); }, ErrorCode::IncompleteMeasurement));
}

TEST_CASE("distributions ignore global phase") {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const State s = qtest::random_state(RegisterLayout({2, 3}), gen);
    const Measurement m = random_projective(6, 3, gen);
    const auto base_cb = distribution(s, computational_basis(6)).probs;
    const auto base_m = distribution(s, m).probs;
    for (int trial = 0; trial < 20; ++trial) {
        const Amplitude phase = std::polar(1.0, angle(gen));
        std::vector<Amplitude> v(s.amplitudes().begin(), s.amplitudes().end());
        for (auto &x : v) {
            x *= phase;
        }
        const State t(s.layout(), v);
        const auto cb = distribution(t, computational_basis(6)).probs;
        const auto pm = distribution(t, m).probs;
        for (std::size_t k = 0; k < cb.size(); ++k) {
            CHECK(cb[k] == doctest::Approx(base_cb[k]).epsilon(1e-15));
        }
        for (std::size_t k = 0; k < pm.size(); ++k) {
            CHECK(std::abs(pm[k] - base_m[k]) < 1e-15);
        }
    }
}

TEST_CASE("composed measurements") {
    std::mt19937_64 gen(100);
    const Measurement trivial = Measurement::from_operators({Matrix::Identity(4, 4)});
    const Measurement cb = computational_basis(4);
    const State s = qtest::random_state(RegisterLayout({4}), gen);
    CHECK(compose(cb, trivial).num_outcomes() == 4);
    const auto direct = distribution(s, cb).probs;
    const auto via = distribution(s, compose(cb, trivial)).probs;
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(direct[k] - via[k]) < 1e-12);
    }

    const auto twice = distribution(s, compose(cb, cb)).probs;
    for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t m = 0; m < 4; ++m) {
            CHECK(std::abs(twice[n * 4 + m] - (m == n ? direct[n] : 0.0)) < 1e-12);
        }
    }

    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 2 + trial % 15;
        const Measurement mm = random_projective(d, 1 + trial % std::min<std::size_t>(d, 4), gen);
        const Measurement nn = random_projective(d, 1 + (trial / 3) % std::min<std::size_t>(d, 4), gen);
        const State psi = qtest::random_state(RegisterLayout({d}), gen);
        const Measurement l = compose(mm, nn);
        CHECK(l.completeness_defect() < 1e-10);
        const auto joint = distribution(psi, l).probs;
        // Chain rule: measure N, then M on the renormalized post-state.
        const auto first = distribution(psi, nn);
        double worst = 0.0;
        for (std::size_t n = 0; n < nn.num_outcomes(); ++n) {
            for (std::size_t m = 0; m < mm.num_outcomes(); ++m) {
                double chained = 0.0;
                if (first.post_states.count(n) != 0) {
                    chained = first.probs[n] * distribution(first.post_states.at(n), mm, false).probs[m];
                }
                worst = std::max(worst, std::abs(joint[n * mm.num_outcomes() + m] - chained));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("distinguishing orthogonal states") {
    const RegisterLayout q({2});
    const std::vector<State> basis = {basis_state(q, {0}), basis_state(q, {1})};
    const Measurement mb = distinguishing_measurement(basis);
    CHECK(mb.num_outcomes() == 3);
    CHECK(mb.op(0).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((mb.op(1) - computational_basis(2).op(0)).cwiseAbs().maxCoeff() < 1e-12);

    const std::vector<State> pm = {make_state({2}, {1.0, 1.0}), make_state({2}, {1.0, -1.0})};
    const Measurement m = distinguishing_measurement(pm);
    for (std::size_t i = 0; i < pm.size(); ++i) {
        CHECK(std::abs(distribution(pm[i], m).probs[i + 1] - 1.0) < 1e-10);
    }

    std::mt19937_64 gen(6);
    const Matrix u = random_unitary(5, gen);
    std::vector<State> cols;
    for (Eigen::Index k = 0; k < 3; ++k) {
        cols.emplace_back(RegisterLayout({5}), std::vector<Amplitude>(u.col(k).data(), u.col(k).data() + 5));
    }
    const Measurement mr = distinguishing_measurement(cols);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        CHECK(std::abs(distribution(cols[i], mr).probs[i + 1] - 1.0) < 1e-10);
    }

    const std::vector<State> bad = {basis_state(q, {0}), make_state({2}, {1.0, 1.0})};
    CHECK(throws_code([&] { (void)distinguishing_measurement(bad); }, ErrorCode::NotOrthogonal));
}
