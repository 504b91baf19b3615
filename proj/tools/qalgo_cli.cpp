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

// Batch driver: one subcommand per algorithm, JSON report on stdout.
// Exit codes: 0 success, 1 usage error, 2 algorithmic failure.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qalgo/error.hpp"
#include "qalgo/report.hpp"

namespace {

using qalgo::ErrorCode;
using qalgo::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    std::string mode = "sample";
    double eps = 0.01;
    int json_indent = 2;
};

qalgo::RunMode run_mode(const Globals &g) {
    return g.mode == "distribution" ? qalgo::RunMode::Distribution : qalgo::RunMode::Sample;
}

bool is_usage_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NotAGroup:
    case ErrorCode::NotASubgroup:
    case ErrorCode::ChainViolation:
    case ErrorCode::PromiseViolated:
    case ErrorCode::InputPrime:
        return true;
    default:
        return false;
    }
}

std::vector<std::uint64_t> parse_list(const std::string &text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(std::stoull(item));
        }
    }
    return out;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        }
    }
    return out;
}

qalgo::OracleFunction indicator(unsigned n, const std::string &marked) {
    if (n < 1 || n > 12) {
        throw UsageError("--n must lie in [1, 12]");
    }
    std::vector<std::uint64_t> table(std::size_t{1} << n, 0);
    for (const auto x : parse_list(marked)) {
        if (x >= table.size()) {
            throw UsageError("marked element " + std::to_string(x) + " outside [0, 2^n)");
        }
        table[x] = 1;
    }
    return qalgo::OracleFunction(n, 1, std::move(table));
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qalgo::BlackBoxGroup load_table(const std::string &path) {
    const auto j = nlohmann::json::parse(read_file(path));
    const auto &t = j.is_object() ? j.at("table") : j;
    return qalgo::BlackBoxGroup::from_table(t.get<std::vector<std::vector<std::uint32_t>>>());
}

qalgo::BlackBoxGroup load_perms(const std::string &path) {
    const std::string text = read_file(path);
    std::vector<std::string> gens;
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded()) {
        gens = (j.is_object() ? j.at("generators") : j).get<std::vector<std::string>>();
    } else {
        gens = split(text, '\n');
    }
    std::vector<qalgo::Permutation> perms;
    for (const auto &g : gens) {
        perms.push_back(qalgo::parse_permutation(g));
    }
    return qalgo::BlackBoxGroup::from_permutations(perms);
}

qalgo::Element resolve(const qalgo::BlackBoxGroup &g, const std::string &ref, bool perms) {
    std::optional<qalgo::Element> e =
        perms ? g.find_permutation(qalgo::parse_permutation(ref)) : g.find_label(ref);
    if (!e) {
        throw UsageError("chain element '" + ref + "' is not in the group");
    }
    return *e;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum algorithm simulator with reproducible JSON reports"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--mode", g.mode, "sample or distribution")
        ->check(CLI::IsMember({"sample", "distribution"}))
        ->capture_default_str();
    app.add_option("--eps", g.eps, "Failure budget in (0, 1/2)")->capture_default_str();
    app.add_option("--json-indent", g.json_indent, "Indent width, -1 for compact")->capture_default_str();

    Json params = Json::object();
    std::function<Json(qalgo::RandomStream &)> run;

    auto *dj = app.add_subcommand("dj", "Deutsch-Jozsa on a truth table");
    std::string dj_bits;
    dj->add_option("--bits", dj_bits, "f(0) f(1) ... as a 0/1 string of length 2^m")->required();
    dj->callback([&] {
        params = {{"bits", dj_bits}};
        run = [&](qalgo::RandomStream &rng) {
            const std::size_t len = dj_bits.size();
            if (len < 2 || (len & (len - 1)) != 0 || dj_bits.find_first_not_of("01") != std::string::npos) {
                throw UsageError("--bits must be a 0/1 string of power-of-two length >= 2");
            }
            std::vector<std::uint64_t> table;
            for (const char c : dj_bits) {
                table.push_back(c == '1' ? 1 : 0);
            }
            const auto m = static_cast<unsigned>(std::countr_zero(len));
            return qalgo::to_json(qalgo::deutsch_jozsa(qalgo::OracleFunction(m, 1, table), run_mode(g), rng));
        };
    });

    auto *period = app.add_subcommand("period", "Period of x -> y^x mod N");
    std::uint64_t p_n = 0, p_y = 0;
    std::string p_variant = "general";
    bool p_no_precheck = false;
    period->add_option("--N", p_n, "Modulus")->required();
    period->add_option("--y", p_y, "Base")->required();
    period->add_option("--variant", p_variant, "exact (registers over Z_N) or general")
        ->check(CLI::IsMember({"exact", "general"}))
        ->capture_default_str();
    period->add_flag("--no-precheck", p_no_precheck, "Skip the classical scan for small periods");
    period->callback([&] {
        params = {{"N", p_n}, {"y", p_y}, {"variant", p_variant}, {"precheck", !p_no_precheck}};
        run = [&](qalgo::RandomStream &rng) {
            if (p_n < 2) {
                throw UsageError("--N must be >= 2");
            }
            if (p_variant == "exact") {
                const auto table = qalgo::modexp_table(p_y, p_n, p_n);
                return qalgo::to_json(qalgo::period_find_exact(table, run_mode(g), rng, g.eps));
            }
            const auto table = qalgo::modexp_table(p_y, p_n, qalgo::choose_q(p_n));
            return qalgo::to_json(
                qalgo::period_find(table, p_n, run_mode(g), rng, g.eps, qalgo::PeriodOptions{!p_no_precheck}));
        };
    });

    auto *factor = app.add_subcommand("factor", "Factor N by order finding");
    std::uint64_t f_n = 0;
    std::size_t f_attempts = 20;
    bool f_no_precheck = false;
    factor->add_option("--N", f_n, "Composite to factor")->required();
    factor->add_option("--max-attempts", f_attempts, "Random bases to try")->capture_default_str();
    factor->add_flag("--no-precheck", f_no_precheck, "Skip the classical scan for small periods");
    factor->callback([&] {
        params = {{"N", f_n}, {"max_attempts", f_attempts}, {"precheck", !f_no_precheck}};
        run = [&](qalgo::RandomStream &rng) {
            qalgo::FactorOptions opts;
            opts.max_attempts = f_attempts;
            opts.period.precheck = !f_no_precheck;
            return qalgo::to_json(qalgo::shor_factor(f_n, rng, g.eps, run_mode(g), opts));
        };
    });

    auto *grover = app.add_subcommand("grover", "Search for a marked element");
    unsigned gr_n = 0;
    std::string gr_marked;
    bool gr_known = false;
    grover->add_option("--n", gr_n, "Input bits")->required();
    grover->add_option("--marked", gr_marked, "Comma-separated marked elements")->required();
    grover->add_flag("--known-M", gr_known, "Use the true solution count instead of counting first");
    grover->callback([&] {
        params = {{"n", gr_n}, {"marked", gr_marked}, {"known_M", gr_known}};
        run = [&](qalgo::RandomStream &rng) {
            const auto f = indicator(gr_n, gr_marked);
            std::optional<std::uint64_t> m;
            if (gr_known) {
                m = static_cast<std::uint64_t>(std::count(f.table().begin(), f.table().end(), 1U));
            }
            return qalgo::to_json(qalgo::grover_search(f, run_mode(g), rng, m));
        };
    });

    auto *count = app.add_subcommand("count", "Estimate the number of marked elements");
    unsigned c_n = 0, c_bits = 0;
    std::string c_marked;
    count->add_option("--n", c_n, "Input bits")->required();
    count->add_option("--marked", c_marked, "Comma-separated marked elements")->required();
    count->add_option("--range-bits", c_bits, "Counting register qubits (R = 2^bits)")->required();
    count->callback([&] {
        params = {{"n", c_n}, {"marked", c_marked}, {"range_bits", c_bits}};
        run = [&](qalgo::RandomStream &rng) {
            return qalgo::to_json(qalgo::bht_count(indicator(c_n, c_marked), c_bits, run_mode(g), rng));
        };
    });

    auto *group = app.add_subcommand("group-order", "Order of a solvable group from a subnormal chain");
    std::string go_table, go_perms, go_chain;
    std::size_t go_attempts = 20;
    auto *table_opt = group->add_option("--table", go_table, "JSON multiplication table file");
    group->add_option("--perms", go_perms, "Permutation generators file (JSON list or one per line)")
        ->excludes(table_opt);
    group->add_option("--chain", go_chain, "Chain generators separated by ';'")->required();
    group->add_option("--max-attempts", go_attempts, "Phase-correction regenerations per step")
        ->capture_default_str();
    group->callback([&] {
        params = {{"table", go_table}, {"perms", go_perms}, {"chain", go_chain}, {"max_attempts", go_attempts}};
        run = [&](qalgo::RandomStream &rng) {
            if (go_table.empty() == go_perms.empty()) {
                throw UsageError("exactly one of --table or --perms is required");
            }
            const bool perms = !go_perms.empty();
            const auto grp = perms ? load_perms(go_perms) : load_table(go_table);
            std::vector<qalgo::Element> gens;
            for (const auto &ref : split(go_chain, ';')) {
                gens.push_back(resolve(grp, ref, perms));
            }
            const auto chain = qalgo::make_chain(grp, gens);
            return qalgo::to_json(qalgo::group_order(grp, chain, g.eps, run_mode(g), rng, go_attempts), grp);
        };
    });

    auto *qft = app.add_subcommand("qft-check", "Compare the QFT circuit with the direct transform");
    std::size_t q_n = 0;
    bool q_dump = false;
    qft->add_option("--n", q_n, "Qubits")->required()->check(CLI::Range(1, 11));
    qft->add_flag("--dump-circuit", q_dump, "Include the gate list");
    qft->callback([&] {
        params = {{"n", q_n}, {"dump_circuit", q_dump}};
        run = [&](qalgo::RandomStream &) {
            const auto circuit = qalgo::qft_circuit(q_n);
            const auto dense = qalgo::densify(circuit);
            const auto direct = qalgo::qft_direct(std::size_t{1} << q_n).matrix();
            const double diff = (dense - direct).cwiseAbs().maxCoeff();
            Json j{{"n", q_n},
                   {"dim", std::size_t{1} << q_n},
                   {"max_abs_diff", diff},
                   {"pre_swap_gate_count", circuit.pre_swap_gate_count()},
                   {"expected_gate_count", q_n * (q_n + 1) / 2},
                   {"passed", diff <= 1e-10 && circuit.pre_swap_gate_count() == q_n * (q_n + 1) / 2}};
            if (q_dump) {
                j["circuit"] = qalgo::circuit_to_json(circuit);
            }
            return j;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (!(g.eps > 0.0 && g.eps < 0.5)) {
        std::cerr << "error: --eps must lie in (0, 1/2)\n";
        return 1;
    }

    Json report{{"command", app.get_subcommands().front()->get_name()},
                {"seed", g.seed},
                {"mode", g.mode},
                {"eps", g.eps},
                {"params", params}};
    int exit_code = 0;
    try {
        qalgo::RandomStream rng(g.seed);
        report["status"] = "ok";
        report["result"] = run(rng);
        if (report["command"] == "qft-check" && !report["result"]["passed"].get<bool>()) {
            report["status"] = "failed";
            exit_code = 2;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qalgo::Error &e) {
        if (is_usage_code(e.code())) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        report["status"] = "failed";
        report["error"] = {{"code", qalgo::to_string(e.code())}, {"message", e.what()}};
        exit_code = 2;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: malformed number: " << e.what() << "\n";
        return 1;
    }
    std::cout << report.dump(g.json_indent) << "\n";
    return exit_code;
}
