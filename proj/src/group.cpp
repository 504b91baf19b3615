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

#include "qalgo/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <unordered_map>

#include "qalgo/error.hpp"

namespace qalgo {

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

[[noreturn]] void not_a_group(const std::string &axiom, const std::string &detail) {
    fail(ErrorCode::NotAGroup, axiom + " fails: " + detail);
}

std::string idx(std::size_t i) { return std::to_string(i); }

// Elements reachable from the identity by right multiplication with gens.
std::vector<char> right_closure(const Table &t, std::uint32_t e, std::span<const std::uint32_t> gens) {
    std::vector<char> seen(t.size(), 0);
    std::deque<std::uint32_t> todo{e};
    seen[e] = 1;
    while (!todo.empty()) {
        const auto x = todo.front();
        todo.pop_front();
        for (const auto s : gens) {
            const auto y = t[x][s];
            if (!seen[y]) {
                seen[y] = 1;
                todo.push_back(y);
            }
        }
    }
    return seen;
}

std::string perm_key(const Permutation &p) {
    return {reinterpret_cast<const char *>(p.data()), p.size() * sizeof(std::uint32_t)};
}

} // namespace

BlackBoxGroup BlackBoxGroup::from_table(const Table &table) {
    const std::size_t n = table.size();
    if (n == 0 || n > kMaxGroupOrder) {
        fail(ErrorCode::InvalidArgument, "group order must lie in [1, " + idx(kMaxGroupOrder) + "]");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
            not_a_group("closure", "row " + idx(i) + " has " + idx(table[i].size()) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] >= n) {
                not_a_group("closure", idx(i) + " * " + idx(j) + " = " + idx(table[i][j]) + " is not an element");
            }
        }
    }

    std::optional<std::uint32_t> e;
    for (std::uint32_t c = 0; c < n && !e; ++c) {
        bool ok = true;
        for (std::uint32_t j = 0; j < n && ok; ++j) {
            ok = table[c][j] == j && table[j][c] == j;
        }
        if (ok) {
            e = c;
        }
    }
    if (!e) {
        not_a_group("identity", "no two-sided identity element");
    }

    // Relabel so the identity sits at index 0.
    auto relabel = [&](std::uint32_t i) -> std::uint32_t { return i == *e ? 0 : (i == 0 ? *e : i); };
    BlackBoxGroup g;
    g.table_.assign(n, std::vector<std::uint32_t>(n));
    g.labels_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        g.labels_[relabel(i)] = idx(i);
        for (std::uint32_t j = 0; j < n; ++j) {
            g.table_[relabel(i)][relabel(j)] = relabel(table[i][j]);
        }
    }
    const Table &t = g.table_;

    g.inverse_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        const auto it = std::find(t[a].begin(), t[a].end(), 0U);
        const auto b = static_cast<std::uint32_t>(it - t[a].begin());
        if (it == t[a].end() || t[b][a] != 0) {
            not_a_group("inverse", "element " + g.labels_[a] + " has no two-sided inverse");
        }
        g.inverse_[a] = b;
    }

    // Light's test: associativity on a generating set implies it everywhere.
    std::vector<std::uint32_t> gens;
    std::vector<char> covered = right_closure(t, 0, gens);
    for (std::uint32_t a = 0; a < n; ++a) {
        if (!covered[a]) {
            gens.push_back(a);
            covered = right_closure(t, 0, gens);
        }
    }
    for (const auto s : gens) {
        for (std::uint32_t x = 0; x < n; ++x) {
            const auto xs = t[x][s];
            for (std::uint32_t y = 0; y < n; ++y) {
                if (t[xs][y] != t[x][t[s][y]]) {
                    not_a_group("associativity", "(" + g.labels_[x] + " * " + g.labels_[s] + ") * " + g.labels_[y] +
                                                     " != " + g.labels_[x] + " * (" + g.labels_[s] + " * " +
                                                     g.labels_[y] + ")");
                }
            }
        }
    }
    g.bits_ = n <= 2 ? 1U : static_cast<unsigned>(std::bit_width(n - 1));
    return g;
}

BlackBoxGroup BlackBoxGroup::from_permutations(const std::vector<Permutation> &generators) {
    std::size_t degree = 1;
    for (const auto &p : generators) {
        degree = std::max(degree, p.size());
    }
    std::vector<Permutation> gens;
    for (const auto &p : generators) {
        Permutation q(degree);
        std::vector<char> hit(degree, 0);
        for (std::size_t x = 0; x < degree; ++x) {
            q[x] = x < p.size() ? p[x] : static_cast<std::uint32_t>(x);
            if (q[x] >= degree || hit[q[x]]) {
                fail(ErrorCode::InvalidArgument, "generator " + format_permutation(p) + " is not a bijection");
            }
            hit[q[x]] = 1;
        }
        gens.push_back(std::move(q));
    }

    Permutation id(degree);
    for (std::size_t x = 0; x < degree; ++x) {
        id[x] = static_cast<std::uint32_t>(x);
    }
    std::vector<Permutation> elems{id};
    std::unordered_map<std::string, std::uint32_t> index{{perm_key(id), 0}};
    auto compose = [degree](const Permutation &p, const Permutation &q) {
        Permutation r(degree);
        for (std::size_t x = 0; x < degree; ++x) {
            r[x] = q[p[x]];
        }
        return r;
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto &s : gens) {
            Permutation next = compose(elems[i], s);
            const auto key = perm_key(next);
            if (!index.contains(key)) {
                if (elems.size() == kMaxGroupOrder) {
                    fail(ErrorCode::InvalidArgument, "generated group exceeds order " + idx(kMaxGroupOrder));
                }
                index.emplace(key, static_cast<std::uint32_t>(elems.size()));
                elems.push_back(std::move(next));
            }
        }
    }

    const std::size_t n = elems.size();
    Table table(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            table[i][j] = index.at(perm_key(compose(elems[i], elems[j])));
        }
    }
    BlackBoxGroup g = from_table(table);
    g.perms_ = std::move(elems);
    for (std::size_t i = 0; i < n; ++i) {
        g.labels_[i] = format_permutation(g.perms_[i]);
    }
    return g;
}

void BlackBoxGroup::check(Element a) const {
    if (a.index >= order()) {
        fail(ErrorCode::IndexOutOfRange, "element " + idx(a.index) + " not in a group of order " + idx(order()));
    }
}

Element BlackBoxGroup::mul(Element a, Element b) const {
    check(a);
    check(b);
    return {table_[a.index][b.index]};
}

Element BlackBoxGroup::inv(Element a) const {
    check(a);
    return {inverse_[a.index]};
}

Element BlackBoxGroup::pow(Element a, std::int64_t k) const {
    check(a);
    Element base = k < 0 ? inv(a) : a;
    auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    Element acc = identity();
    while (e > 0) {
        if (e & 1) {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t BlackBoxGroup::element_order(Element a) const {
    check(a);
    std::uint64_t k = 1;
    for (Element x = a; x != identity(); x = mul(x, a)) {
        ++k;
    }
    return k;
}

std::string BlackBoxGroup::encode(Element a) const {
    check(a);
    std::string s(bits_, '0');
    for (unsigned i = 0; i < bits_; ++i) {
        if ((a.index >> (bits_ - 1 - i)) & 1U) {
            s[i] = '1';
        }
    }
    return s;
}

Element BlackBoxGroup::decode(std::string_view bits) const {
    if (bits.size() != bits_) {
        fail(ErrorCode::InvalidArgument, "encoded elements have " + idx(bits_) + " bits");
    }
    std::uint32_t v = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1') {
            fail(ErrorCode::InvalidArgument, "encoded element must be a bit string");
        }
        v = (v << 1) | static_cast<std::uint32_t>(c - '0');
    }
    if (v >= order()) {
        fail(ErrorCode::IndexOutOfRange, "bit string does not encode an element");
    }
    return {v};
}

const std::string &BlackBoxGroup::label(Element a) const {
    check(a);
    return labels_[a.index];
}

std::optional<Element> BlackBoxGroup::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return Element{static_cast<std::uint32_t>(i)};
        }
    }
    return std::nullopt;
}

std::optional<Element> BlackBoxGroup::find_permutation(const Permutation &p) const {
    for (std::size_t i = 0; i < perms_.size(); ++i) {
        const auto &q = perms_[i];
        bool same = true;
        for (std::size_t x = 0; x < std::max(p.size(), q.size()) && same; ++x) {
            const auto px = x < p.size() ? p[x] : x;
            const auto qx = x < q.size() ? q[x] : x;
            same = px == qx;
        }
        if (same) {
            return Element{static_cast<std::uint32_t>(i)};
        }
    }
    return std::nullopt;
}

Subgroup::Subgroup(std::size_t group_order, std::vector<Element> elements)
    : elements_(std::move(elements)), mask_(group_order, 0) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto e : elements_) {
        if (e.index >= group_order) {
            fail(ErrorCode::IndexOutOfRange, "subgroup element outside the group");
        }
        mask_[e.index] = 1;
    }
}

Subgroup generate_subgroup(const BlackBoxGroup &g, std::span<const Element> generators) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Element> elems{g.identity()};
    seen[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto s : generators) {
            const Element y = g.mul(elems[i], s);
            if (!seen[y.index]) {
                seen[y.index] = 1;
                elems.push_back(y);
            }
        }
    }
    return Subgroup(g.order(), std::move(elems));
}

Subgroup make_subgroup(const BlackBoxGroup &g, std::vector<Element> elements) {
    Subgroup h(g.order(), std::move(elements));
    if (!h.contains(g.identity())) {
        fail(ErrorCode::NotASubgroup, "set does not contain the identity");
    }
    for (const auto a : h.elements()) {
        for (const auto b : h.elements()) {
            if (!h.contains(g.mul(a, b))) {
                fail(ErrorCode::NotASubgroup, "set is not closed: " + g.label(a) + " * " + g.label(b));
            }
        }
    }
    return h;
}

bool is_normal_in(const BlackBoxGroup &g, const Subgroup &h, const Subgroup &k) {
    for (const auto x : k.elements()) {
        const Element xi = g.inv(x);
        for (const auto y : h.elements()) {
            if (!h.contains(g.mul(g.mul(x, y), xi))) {
                return false;
            }
        }
    }
    return true;
}

PolycyclicChain make_chain(const BlackBoxGroup &g, std::vector<Element> gens) {
    PolycyclicChain chain;
    chain.subgroups.push_back(Subgroup(g.order(), {g.identity()}));
    for (std::size_t j = 1; j <= gens.size(); ++j) {
        Subgroup next = generate_subgroup(g, std::span<const Element>(gens).first(j));
        if (!is_normal_in(g, chain.subgroups.back(), next)) {
            fail(ErrorCode::ChainViolation, "H_" + idx(j - 1) + " is not normal in H_" + idx(j));
        }
        chain.subgroups.push_back(std::move(next));
    }
    if (chain.subgroups.back().size() != g.order()) {
        fail(ErrorCode::ChainViolation, "chain generates a subgroup of order " +
                                            idx(chain.subgroups.back().size()) + ", not " + idx(g.order()));
    }
    chain.gens = std::move(gens);
    return chain;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t pos = 0;
    auto bad = [&](const std::string &why) {
        fail(ErrorCode::InvalidArgument, "cannot parse permutation '" + std::string(text) + "': " + why);
    };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') {
            bad("expected '('");
        }
        const auto close = text.find(')', pos);
        if (close == std::string_view::npos) {
            bad("missing ')'");
        }
        const std::string_view body = text.substr(pos + 1, close - pos - 1);
        const bool separated = body.find_first_of(", \t") != std::string_view::npos;
        std::vector<std::uint32_t> cycle;
        std::string token;
        auto flush = [&] {
            if (!token.empty()) {
                const unsigned long v = std::stoul(token);
                if (v == 0) {
                    bad("points are 1-based");
                }
                cycle.push_back(static_cast<std::uint32_t>(v - 1));
                token.clear();
            }
        };
        for (const char c : body) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                token.push_back(c);
                if (!separated) {
                    flush();
                }
            } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else {
                bad(std::string("unexpected character '") + c + "'");
            }
        }
        flush();
        cycles.push_back(std::move(cycle));
        pos = close + 1;
    }
    for (const auto &c : cycles) {
        for (const auto x : c) {
            degree = std::max<std::size_t>(degree, x + 1);
        }
    }
    Permutation p(degree);
    for (std::size_t x = 0; x < degree; ++x) {
        p[x] = static_cast<std::uint32_t>(x);
    }
    std::vector<char> used(degree, 0);
    for (const auto &c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (used[c[i]]) {
                bad("cycles are not disjoint");
            }
            used[c[i]] = 1;
            p[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return p;
}

std::string format_permutation(const Permutation &p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x] || p[x] == x) {
            continue;
        }
        out += '(';
        for (std::size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            if (y != x) {
                out += ',';
            }
            out += std::to_string(y + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

} // namespace qalgo
