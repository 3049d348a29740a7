#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmcycle/decompose.hpp"
#include "mmcycle/io.hpp"
#include "mmcycle/oracles.hpp"
#include "mmcycle/reductions.hpp"
#include "mmcycle/skew.hpp"
#include "mmcycle/solver.hpp"

namespace mmc {
namespace cli {

// Exit codes: 0 success, 1 no cycle, 2 input/validation error,
// 3 arithmetic overflow, 4 oracle budget exceeded.
enum ExitCode {
    kOk = 0,
    kNoCycle = 1,
    kInputError = 2,
    kOverflow = 3,
    kBudget = 4,
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void print_mean(std::ostream& out, const Rational& mean) {
    out << "mean " << mean.str() << "\n";
    out << "mean-decimal " << mean.decimal(6) << "\n";
}

/// Directed view of a bigraph file: every edge must be a plain arc (o/i).
inline DirectedGraph as_directed(const BidirectedGraph& g) {
    DirectedGraph d;
    d.node_count = g.node_count;
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        if (ed.sign_u != Sign::Out || ed.sign_v != Sign::In)
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " is not a directed arc (needs 'o i')");
        d.arcs.push_back({ed.u, ed.v, ed.weight});
    }
    return d;
}

inline UndirectedGraph as_undirected(const BidirectedGraph& g) {
    UndirectedGraph u;
    u.node_count = g.node_count;
    for (const Edge& ed : g.edges) u.edges.push_back({ed.u, ed.v, ed.weight});
    return u;
}

inline bool has_asymmetric_weights(const SkewGraph& g) {
    for (const SkewViolation& v : validate_skew(g))
        if (v.kind == SkewViolationKind::AsymmetricWeight) return true;
    return false;
}

inline int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    std::string text = read_file(path);
    auto lines = mmc::detail::tokenize(text);
    bool skew = !lines.empty() && lines.front().tokens.front() == "skewgraph";
    if (skew) {
        SkewGraph g = parse_skew(text); // throws on structural violations
        if (has_asymmetric_weights(g))
            out << "warning: asymmetric arc weights (solve would reject this input)\n";
        out << "ok\n";
    } else {
        parse_bigraph(text); // throws on violations
        out << "ok\n";
    }
    (void)err;
    return kOk;
}

inline int cmd_solve(const std::string& path, bool node_simple, bool skew, bool trace,
                     std::ostream& out, std::ostream& err) {
    std::string text = read_file(path);

    BidirectedGraph bg;
    std::optional<SkewGraph> sg;
    std::optional<SkewBigraphMap> smap;
    if (skew) {
        sg = parse_skew(text);
        if (has_asymmetric_weights(*sg)) {
            err << "error: asymmetric arc weights; solve requires w(a) = w(mate(a))\n";
            return kInputError;
        }
        auto [converted, map] = skew_to_bidirected(*sg, canonical_partition(*sg));
        bg = std::move(converted);
        smap = std::move(map);
        if (node_simple) {
            err << "error: --node-simple and --skew cannot be combined\n";
            return kInputError;
        }
    } else {
        bg = parse_bigraph(text);
    }

    const BidirectedGraph* solve_graph = &bg;
    BidirectedGraph split;
    SplitBackMap back{};
    if (node_simple) {
        auto [sgraph, bmap] = split_for_node_simple(bg);
        split = std::move(sgraph);
        back = bmap;
        solve_graph = &split;
    }

    auto res = solve_min_mean_cycle(*solve_graph);
    if (!res) {
        out << "status no-cycle\n";
        return kNoCycle;
    }

    out << "status optimal\n";
    Rational mean = node_simple ? res->mean * Rational(2) : res->mean;
    print_mean(out, mean);
    if (trace) {
        int i = 0;
        for (const IterationRecord& r : res->trace)
            out << "iter " << ++i << " a " << r.shift.str() << " size " << r.set_size
                << " shifted " << r.shifted_weight.str() << " b " << r.mean_gap.str()
                << "\n";
    }
    if (node_simple) {
        Path original = canonical_cycle(bg, back.contract(res->cycle));
        out << "length " << original.size() << "\n";
        out << "cycle " << format_cycle(bg, original) << "\n";
    } else if (skew) {
        std::vector<int> arcs = tau_inverse_cycle(*sg, *smap, bg, res->cycle);
        out << "length " << arcs.size() << "\n";
        out << "cycle " << format_arc_cycle(*sg, arcs) << "\n";
    } else {
        out << "length " << res->cycle.size() << "\n";
        out << "cycle " << format_cycle(bg, res->cycle) << "\n";
    }
    out << "iterations " << res->trace.size() << "\n";
    return kOk;
}

inline int cmd_convert(const std::string& path, const std::string& from,
                       std::ostream& out, std::ostream& err) {
    std::string text = read_file(path);
    BidirectedGraph result;
    if (from == "directed") {
        result = directed_to_bidirected(as_directed(parse_bigraph(text)));
    } else if (from == "undirected") {
        result = undirected_to_bidirected(as_undirected(parse_bigraph(text))).first;
    } else if (from == "skew") {
        SkewGraph g = parse_skew(text);
        if (has_asymmetric_weights(g))
            err << "warning: asymmetric arc weights; using the representative arc's "
                   "weight per edge\n";
        result = skew_to_bidirected(g, canonical_partition(g),
                                    /*require_symmetric_weights=*/false)
                     .first;
    } else {
        err << "error: unknown --from format '" << from << "'\n";
        return kInputError;
    }
    out << serialize_bigraph(result);
    return kOk;
}

inline int cmd_decompose(const std::string& path, const std::vector<std::int64_t>& ids,
                         std::ostream& out, std::ostream& err) {
    BidirectedGraph g = parse_bigraph(read_file(path));
    std::vector<int> x;
    for (std::int64_t id : ids) {
        if (id < 0 || id >= g.m()) {
            err << "error: edge id " << id << " out of range\n";
            return kInputError;
        }
        x.push_back(static_cast<int>(id));
    }
    if (!is_balanced(g, x)) {
        err << "error: edge set is not balanced\n";
        return kInputError;
    }
    for (const Path& c : decompose_balanced(g, x))
        out << "cycle " << format_cycle(g, canonical_cycle(g, c)) << "\n";
    return kOk;
}

inline int cmd_oracle(const std::string& which, const std::string& path, int budget,
                      std::ostream& out, std::ostream& err) {
    std::string text = read_file(path);
    BidirectedGraph g = parse_bigraph(text);
    if (which == "brute") {
        auto res = brute_force_min_mean(g, budget);
        if (!res) {
            out << "status no-cycle\n";
            return kNoCycle;
        }
        out << "status optimal\n";
        print_mean(out, res->mean);
        out << "length " << res->cycle.size() << "\n";
        out << "cycle " << format_cycle(g, res->cycle) << "\n";
        return kOk;
    }
    if (which == "karp") {
        auto res = karp_min_mean(as_directed(g));
        if (!res) {
            out << "status no-cycle\n";
            return kNoCycle;
        }
        out << "status optimal\n";
        print_mean(out, res->mean);
        out << "length " << res->cycle_arcs.size() << "\n";
        Path p;
        for (int a : res->cycle_arcs) p.push_back(Step{a, true});
        out << "cycle " << format_cycle(g, canonical_cycle(g, p)) << "\n";
        return kOk;
    }
    err << "error: unknown oracle '" << which << "'\n";
    return kInputError;
}

} // namespace detail

/// Front end entry point; argv excludes the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact minimum mean edge-simple cycle solver for bidirected graphs"};
    app.require_subcommand(1);

    std::string file;
    bool node_simple = false, skew = false, trace = false;
    auto* solve = app.add_subcommand("solve", "solve the minimum mean cycle problem");
    solve->add_option("file", file)->required();
    solve->add_flag("--node-simple", node_simple,
                    "minimize over node-simple cycles via the splitting reduction");
    solve->add_flag("--skew", skew, "input is a skew-symmetric graph file");
    solve->add_flag("--trace", trace, "print one line per shift iteration");

    std::string vfile;
    auto* validate = app.add_subcommand("validate", "check a graph file");
    validate->add_option("file", vfile)->required();

    std::string cfile, cfrom, cto = "bigraph";
    auto* convert = app.add_subcommand("convert", "convert an input form to bigraph");
    convert->add_option("file", cfile)->required();
    convert->add_option("--from", cfrom, "directed | undirected | skew")->required();
    convert->add_option("--to", cto, "target format (bigraph)");

    std::string dfile;
    std::vector<std::int64_t> dedges;
    auto* decompose = app.add_subcommand("decompose", "split a balanced edge set into small cycles");
    decompose->add_option("file", dfile)->required();
    decompose->add_option("edges", dedges, "edge ids of a balanced set");

    std::string ofile, owhich;
    int obudget = 14;
    auto* oracle = app.add_subcommand("oracle", "run a verification oracle");
    oracle->add_option("which", owhich, "brute | karp")->required();
    oracle->add_option("file", ofile)->required();
    oracle->add_option("--max-edges", obudget, "enumeration budget for 'brute'");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (app.got_subcommand(solve))
            return detail::cmd_solve(file, node_simple, skew, trace, out, err);
        if (app.got_subcommand(validate)) return detail::cmd_validate(vfile, out, err);
        if (app.got_subcommand(convert)) {
            if (cto != "bigraph") {
                err << "error: only --to bigraph is supported\n";
                return kInputError;
            }
            return detail::cmd_convert(cfile, cfrom, out, err);
        }
        if (app.got_subcommand(decompose))
            return detail::cmd_decompose(dfile, dedges, out, err);
        if (app.got_subcommand(oracle))
            return detail::cmd_oracle(owhich, ofile, obudget, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kOverflow;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    err << "error: no subcommand\n";
    return kInputError;
}

} // namespace cli
} // namespace mmc
