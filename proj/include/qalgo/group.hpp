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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qalgo {

inline constexpr std::size_t kMaxGroupOrder = 4096;

/// Group element handle; index 0 is always the identity.
struct Element {
    std::uint32_t index = 0;
    bool operator==(const Element &) const = default;
    auto operator<=>(const Element &) const = default;
};

using Permutation = std::vector<std::uint32_t>;

/// Finite group reachable only through multiply and invert on encoded
/// elements. Construction checks every group axiom.
class BlackBoxGroup {
  public:
    /// table[i][j] is the index of i * j. Throws NotAGroup naming the axiom.
    static BlackBoxGroup from_table(const std::vector<std::vector<std::uint32_t>> &table);

    /// Closure of 0-based permutations of a common degree; p * q applies p first.
    static BlackBoxGroup from_permutations(const std::vector<Permutation> &generators);

    [[nodiscard]] std::size_t order() const noexcept { return table_.size(); }
    [[nodiscard]] unsigned bit_length() const noexcept { return bits_; }
    [[nodiscard]] Element identity() const noexcept { return {0}; }

    [[nodiscard]] Element mul(Element a, Element b) const;
    [[nodiscard]] Element inv(Element a) const;
    [[nodiscard]] Element pow(Element a, std::int64_t k) const;
    [[nodiscard]] std::uint64_t element_order(Element a) const;

    /// Fixed-width binary string of bit_length() characters.
    [[nodiscard]] std::string encode(Element a) const;
    [[nodiscard]] Element decode(std::string_view bits) const;

    /// Original table index, or cycle notation for permutation groups.
    [[nodiscard]] const std::string &label(Element a) const;
    [[nodiscard]] std::optional<Element> find_label(std::string_view label) const;
    [[nodiscard]] std::optional<Element> find_permutation(const Permutation &p) const;

  private:
    BlackBoxGroup() = default;

    void check(Element a) const;

    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::string> labels_;
    std::vector<Permutation> perms_;
    unsigned bits_ = 1;
};

/// Element set of a subgroup, sorted by index.
class Subgroup {
  public:
    Subgroup(std::size_t group_order, std::vector<Element> elements);

    [[nodiscard]] std::span<const Element> elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool contains(Element e) const { return e.index < mask_.size() && mask_[e.index] != 0; }
    bool operator==(const Subgroup &o) const { return elements_ == o.elements_; }

  private:
    std::vector<Element> elements_;
    std::vector<char> mask_;
};

Subgroup generate_subgroup(const BlackBoxGroup &g, std::span<const Element> generators);

/// Throws NotASubgroup unless the set contains the identity and is closed.
Subgroup make_subgroup(const BlackBoxGroup &g, std::vector<Element> elements);

/// k h k^{-1} in h for every k in k_group and h in h_group.
bool is_normal_in(const BlackBoxGroup &g, const Subgroup &h, const Subgroup &k);

/// g_1..g_k with H_j = <g_1..g_j>, H_{j-1} normal in H_j, H_k = G.
struct PolycyclicChain {
    std::vector<Element> gens;
    /// H_0 = {id}, ..., H_k.
    std::vector<Subgroup> subgroups;
};

/// Throws ChainViolation if some H_{j-1} is not normal in H_j or H_k != G.
PolycyclicChain make_chain(const BlackBoxGroup &g, std::vector<Element> gens);

/// "(1,2,3)(4,5)", "(1 2 3)" or "(123)" with 1-based points; "()" is the
/// identity. The result has max(degree, largest point) entries.
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);

/// Cycle notation with 1-based points, "()" for the identity.
std::string format_permutation(const Permutation &p);

} // namespace qalgo
