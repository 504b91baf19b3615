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

#include "qalgo/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qalgo/error.hpp"

namespace qalgo {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

} // namespace

double unitarity_defect(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const Matrix gram = m.adjoint() * m;
    return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

Operator Operator::dense(Matrix m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        fail(ErrorCode::DimensionMismatch, "dense operator must be square");
    }
    const double defect = unitarity_defect(m);
    if (!(defect <= kUnitarityTolerance)) {
        fail(ErrorCode::NotUnitary, "U^dagger U deviates from I by " + std::to_string(defect));
    }
    const auto dim = static_cast<std::size_t>(m.rows());
    return Operator(DenseForm{std::move(m)}, dim);
}

Operator Operator::permutation(std::vector<std::size_t> map) {
    std::vector<char> seen(map.size(), 0);
    for (const auto target : map) {
        if (target >= map.size() || seen[target]) {
            fail(ErrorCode::NotBijective, "permutation map is not a bijection");
        }
        seen[target] = 1;
    }
    const std::size_t dim = map.size();
    return Operator(PermutationForm{std::move(map)}, dim);
}

Operator Operator::diagonal(std::vector<Amplitude> phases) {
    for (const auto &p : phases) {
        if (std::abs(std::abs(p) - 1.0) > kPhaseModulusTolerance) {
            fail(ErrorCode::NotUnitary, "diagonal entry with modulus " + std::to_string(std::abs(p)));
        }
    }
    const std::size_t dim = phases.size();
    return Operator(DiagonalForm{std::move(phases)}, dim);
}

Operator Operator::controlled(Operator inner, std::size_t num_controls) {
    if (num_controls == 0 || num_controls > 16) {
        fail(ErrorCode::InvalidArgument, "controlled operator needs 1..16 controls");
    }
    const std::size_t dim = inner.dim() << num_controls;
    return Operator(ControlledForm{std::make_shared<const Operator>(std::move(inner)), num_controls}, dim);
}

Operator Operator::identity(std::size_t dim) {
    std::vector<std::size_t> map(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        map[i] = i;
    }
    return permutation(std::move(map));
}

Operator::Form Operator::form() const noexcept {
    return std::visit(Overloaded{[](const DenseForm &) { return Form::Dense; },
                                 [](const PermutationForm &) { return Form::Permutation; },
                                 [](const DiagonalForm &) { return Form::Diagonal; },
                                 [](const ControlledForm &) { return Form::Controlled; }},
                      form_);
}

const Matrix &Operator::matrix() const {
    if (const auto *d = std::get_if<DenseForm>(&form_)) {
        return d->m;
    }
    fail(ErrorCode::InvalidArgument, "operator is not in dense form");
}

std::span<const std::size_t> Operator::permutation_map() const {
    if (const auto *p = std::get_if<PermutationForm>(&form_)) {
        return p->map;
    }
    fail(ErrorCode::InvalidArgument, "operator is not in permutation form");
}

std::span<const Amplitude> Operator::phases() const {
    if (const auto *d = std::get_if<DiagonalForm>(&form_)) {
        return d->phases;
    }
    fail(ErrorCode::InvalidArgument, "operator is not in diagonal form");
}

const Operator &Operator::inner() const {
    if (const auto *c = std::get_if<ControlledForm>(&form_)) {
        return *c->inner;
    }
    fail(ErrorCode::InvalidArgument, "operator is not in controlled form");
}

std::size_t Operator::num_controls() const {
    if (const auto *c = std::get_if<ControlledForm>(&form_)) {
        return c->num_controls;
    }
    return 0;
}

Matrix Operator::to_matrix() const {
    return std::visit(
        Overloaded{[](const DenseForm &d) -> Matrix { return d.m; },
                   [this](const PermutationForm &p) -> Matrix {
                       Matrix m = Matrix::Zero(idx(dim_), idx(dim_));
                       for (std::size_t i = 0; i < p.map.size(); ++i) {
                           m(idx(p.map[i]), idx(i)) = 1.0;
                       }
                       return m;
                   },
                   [this](const DiagonalForm &d) -> Matrix {
                       Matrix m = Matrix::Zero(idx(dim_), idx(dim_));
                       for (std::size_t i = 0; i < d.phases.size(); ++i) {
                           m(idx(i), idx(i)) = d.phases[i];
                       }
                       return m;
                   },
                   [this](const ControlledForm &c) -> Matrix {
                       Matrix m = Matrix::Identity(idx(dim_), idx(dim_));
                       const auto inner_dim = idx(c.inner->dim());
                       const auto start = idx(dim_) - inner_dim;
                       m.block(start, start, inner_dim, inner_dim) = c.inner->to_matrix();
                       return m;
                   }},
        form_);
}

Operator Operator::adjoint() const {
    return std::visit(Overloaded{[](const DenseForm &d) { return Operator::dense(d.m.adjoint()); },
                                 [](const PermutationForm &p) {
                                     std::vector<std::size_t> inv(p.map.size());
                                     for (std::size_t i = 0; i < p.map.size(); ++i) {
                                         inv[p.map[i]] = i;
                                     }
                                     return Operator::permutation(std::move(inv));
                                 },
                                 [](const DiagonalForm &d) {
                                     std::vector<Amplitude> conj(d.phases.size());
                                     std::transform(d.phases.begin(), d.phases.end(), conj.begin(),
                                                    [](Amplitude a) { return std::conj(a); });
                                     return Operator::diagonal(std::move(conj));
                                 },
                                 [](const ControlledForm &c) {
                                     return Operator::controlled(c.inner->adjoint(), c.num_controls);
                                 }},
                      form_);
}

void Operator::apply_local(std::span<const Amplitude> in, std::span<Amplitude> out) const {
    std::visit(Overloaded{[&](const DenseForm &d) {
                              Eigen::Map<const Eigen::VectorXcd> x(in.data(), idx(in.size()));
                              Eigen::Map<Eigen::VectorXcd> y(out.data(), idx(out.size()));
                              y.noalias() = d.m * x;
                          },
                          [&](const PermutationForm &p) {
                              for (std::size_t i = 0; i < p.map.size(); ++i) {
                                  out[p.map[i]] = in[i];
                              }
                          },
                          [&](const DiagonalForm &d) {
                              for (std::size_t i = 0; i < d.phases.size(); ++i) {
                                  out[i] = d.phases[i] * in[i];
                              }
                          },
                          [&](const ControlledForm &c) {
                              const std::size_t inner_dim = c.inner->dim();
                              const std::size_t active = dim_ - inner_dim;
                              std::copy(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(active), out.begin());
                              c.inner->apply_local(in.subspan(active, inner_dim), out.subspan(active, inner_dim));
                          }},
               form_);
}

namespace {

struct FibreIndex {
    std::vector<std::size_t> local;  // offset of each local basis vector within a fibre
    std::vector<std::size_t> bases;  // offset of each fibre
};

FibreIndex fibre_index(const RegisterLayout &layout, std::span<const std::size_t> targets, std::size_t op_dim) {
    std::vector<char> is_target(layout.size(), 0);
    std::size_t target_dim = 1;
    for (const auto t : targets) {
        if (t >= layout.size()) {
            fail(ErrorCode::IndexOutOfRange, "target subsystem " + std::to_string(t) + " does not exist");
        }
        if (is_target[t]) {
            fail(ErrorCode::DuplicateTarget, "subsystem " + std::to_string(t) + " listed twice");
        }
        is_target[t] = 1;
        target_dim *= layout.dim(t);
    }
    if (targets.empty() || target_dim != op_dim) {
        fail(ErrorCode::DimensionMismatch, "operator dimension " + std::to_string(op_dim) +
                                               " does not match target dimension " + std::to_string(target_dim));
    }

    FibreIndex fi;
    fi.local.assign(op_dim, 0);
    // Mixed-radix over targets, first target most significant.
    std::size_t block = op_dim;
    for (const auto t : targets) {
        const std::size_t d = layout.dim(t);
        block /= d;
        const std::size_t stride = layout.stride(t);
        for (std::size_t k = 0; k < op_dim; ++k) {
            fi.local[k] += ((k / block) % d) * stride;
        }
    }

    std::vector<std::size_t> rest_dims;
    std::vector<std::size_t> rest_strides;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (!is_target[i]) {
            rest_dims.push_back(layout.dim(i));
            rest_strides.push_back(layout.stride(i));
        }
    }
    const std::size_t count = layout.total_dim() / op_dim;
    fi.bases.reserve(count);
    std::vector<std::size_t> digits(rest_dims.size(), 0);
    std::size_t offset = 0;
    for (std::size_t n = 0; n < count; ++n) {
        fi.bases.push_back(offset);
        for (std::size_t i = rest_dims.size(); i-- > 0;) {
            if (++digits[i] < rest_dims[i]) {
                offset += rest_strides[i];
                break;
            }
            offset -= (rest_dims[i] - 1) * rest_strides[i];
            digits[i] = 0;
        }
    }
    return fi;
}

} // namespace

void apply_inplace(const Operator &op, State &s, std::span<const std::size_t> targets) {
    const FibreIndex fi = fibre_index(s.layout(), targets, op.dim());
    auto amp = s.mutable_amplitudes();
    const std::size_t d = op.dim();

    if (op.form() == Operator::Form::Diagonal) {
        const auto phases = op.phases();
        for (const auto base : fi.bases) {
            for (std::size_t k = 0; k < d; ++k) {
                amp[base + fi.local[k]] *= phases[k];
            }
        }
        return;
    }

    std::vector<Amplitude> in(d);
    if (op.form() == Operator::Form::Permutation) {
        const auto map = op.permutation_map();
        for (const auto base : fi.bases) {
            for (std::size_t k = 0; k < d; ++k) {
                in[k] = amp[base + fi.local[k]];
            }
            for (std::size_t k = 0; k < d; ++k) {
                amp[base + fi.local[map[k]]] = in[k];
            }
        }
        return;
    }

    std::vector<Amplitude> out(d);
    for (const auto base : fi.bases) {
        for (std::size_t k = 0; k < d; ++k) {
            in[k] = amp[base + fi.local[k]];
        }
        op.apply_local(in, out);
        for (std::size_t k = 0; k < d; ++k) {
            amp[base + fi.local[k]] = out[k];
        }
    }
}

void apply_inplace(const Operator &op, State &s, std::initializer_list<std::size_t> targets) {
    apply_inplace(op, s, std::span<const std::size_t>(targets.begin(), targets.size()));
}

State apply(const Operator &op, State s, std::span<const std::size_t> targets) {
    apply_inplace(op, s, targets);
    return s;
}

State apply(const Operator &op, State s, std::initializer_list<std::size_t> targets) {
    apply_inplace(op, s, targets);
    return s;
}

Operator hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    Matrix m(2, 2);
    m << h, h, h, -h;
    return Operator::dense(std::move(m));
}

Operator not_gate() { return Operator::permutation({1, 0}); }

Operator swap_gate() { return Operator::permutation({0, 2, 1, 3}); }

Operator walsh_hadamard(std::size_t n) {
    if (n < 1 || n > 12) {
        fail(ErrorCode::InvalidArgument, "walsh_hadamard: n must lie in [1, 12] for dense form");
    }
    const std::size_t d = std::size_t{1} << n;
    const double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
    Matrix m(idx(d), idx(d));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t x = 0; x < d; ++x) {
            m(idx(k), idx(x)) = (std::popcount(k & x) % 2 == 0) ? scale : -scale;
        }
    }
    return Operator::dense(std::move(m));
}

void apply_walsh_hadamard_inplace(State &s, std::span<const std::size_t> qubits) {
    static const Operator w = hadamard();
    for (const auto q : qubits) {
        apply_inplace(w, s, {q});
    }
}

Operator phase_shift(double phi) { return Operator::diagonal({1.0, std::polar(1.0, -phi)}); }

Operator b_gate(unsigned k) { return phase_shift(std::numbers::pi / std::ldexp(1.0, static_cast<int>(k))); }

OracleFunction::OracleFunction(unsigned input_bits, unsigned output_bits, std::vector<std::uint64_t> table)
    : m_(input_bits), k_(output_bits), table_(std::move(table)) {
    if (m_ < 1 || k_ < 1 || m_ + k_ > 30) {
        fail(ErrorCode::InvalidArgument, "oracle bit widths must satisfy 1 <= m, k and m + k <= 30");
    }
    if (table_.size() != (std::size_t{1} << m_)) {
        fail(ErrorCode::InvalidArgument, "oracle table must list all 2^m inputs");
    }
    const std::uint64_t limit = std::uint64_t{1} << k_;
    for (const auto v : table_) {
        if (v >= limit) {
            fail(ErrorCode::InvalidArgument, "oracle output " + std::to_string(v) + " exceeds 2^k - 1");
        }
    }
}

Operator standard_oracle(const OracleFunction &f) {
    const std::size_t out_dim = std::size_t{1} << f.output_bits();
    std::vector<std::size_t> map(f.domain_size() * out_dim);
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
        for (std::size_t y = 0; y < out_dim; ++y) {
            map[x * out_dim + y] = x * out_dim + (y ^ f(x));
        }
    }
    return Operator::permutation(std::move(map));
}

Operator minimal_oracle(const OracleFunction &f) {
    if (f.input_bits() != f.output_bits()) {
        fail(ErrorCode::NotBijective, "minimal oracle needs equal input and output widths");
    }
    std::vector<std::size_t> map(f.table().begin(), f.table().end());
    try {
        return Operator::permutation(std::move(map));
    } catch (const Error &) {
        fail(ErrorCode::NotBijective, "function is not injective");
    }
}

Operator phase_oracle(const OracleFunction &f) {
    if (f.output_bits() != 1) {
        fail(ErrorCode::InvalidArgument, "phase oracle needs a boolean function");
    }
    std::vector<Amplitude> phases(f.domain_size());
    for (std::size_t x = 0; x < phases.size(); ++x) {
        phases[x] = f(x) ? -1.0 : 1.0;
    }
    return Operator::diagonal(std::move(phases));
}

Operator modular_oracle(std::span<const std::uint64_t> table, std::size_t out_dim) {
    std::vector<std::size_t> map(table.size() * out_dim);
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (table[x] >= out_dim) {
            fail(ErrorCode::InvalidArgument, "function value " + std::to_string(table[x]) + " >= register dimension");
        }
        for (std::size_t y = 0; y < out_dim; ++y) {
            map[x * out_dim + y] = x * out_dim + (y + table[x]) % out_dim;
        }
    }
    return Operator::permutation(std::move(map));
}

} // namespace qalgo
