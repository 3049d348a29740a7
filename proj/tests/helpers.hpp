#pragma once

// Random instance generators and exhaustive reference oracles shared by the
// unit and acceptance tests. Everything here is deliberately slow and
// simple; the library under test must agree with it exactly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mmcycle/bigraph.hpp"
#include "mmcycle/matching.hpp"
#include "mmcycle/oracles.hpp"
#include "mmcycle/reductions.hpp"
#include "mmcycle/skew.hpp"
#include "mmcycle/two_factor.hpp"

namespace testutil {

using mmc::BidirectedGraph;
using mmc::DirectedGraph;
using mmc::Edge;
using mmc::Multigraph;
using mmc::Path;
using mmc::Rational;
using mmc::Sign;
using mmc::SkewGraph;
using mmc::UndirectedGraph;
using mmc::WeightedEdge;

inline std::int64_t rand_weight(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Dense multigraphs on very few nodes have factorially many edge-simple
// tours, which swamps the exhaustive oracles; callers pairing this with
// cycle enumeration should pass min_n >= 3 for larger edge budgets.
inline BidirectedGraph random_bigraph(std::mt19937& rng, int max_n, int max_m,
                                      std::int64_t wlo = -5, std::int64_t whi = 5,
                                      int min_n = 1) {
    BidirectedGraph g;
    g.node_count = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    int m = std::uniform_int_distribution<int>(0, max_m)(rng);
    std::uniform_int_distribution<int> node(1, g.node_count);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < m; ++i) {
        Edge e;
        e.u = node(rng);
        e.v = node(rng);
        e.sign_u = bit(rng) ? Sign::Out : Sign::In;
        e.sign_v = (e.u == e.v) ? e.sign_u : (bit(rng) ? Sign::Out : Sign::In);
        e.weight = rand_weight(rng, wlo, whi);
        g.edges.push_back(e);
    }
    return g;
}

inline DirectedGraph random_strong_digraph(std::mt19937& rng, int max_n, int max_m,
                                           std::int64_t wlo = -20, std::int64_t whi = 20,
                                           int min_n = 2) {
    DirectedGraph d;
    d.node_count = std::uniform_int_distribution<int>(min_n, max_n)(rng);
    // A Hamiltonian cycle through a random permutation keeps it strongly
    // connected; extra random non-loop arcs fill up to the target size.
    std::vector<int> order(static_cast<std::size_t>(d.node_count));
    for (int v = 1; v <= d.node_count; ++v) order[static_cast<std::size_t>(v - 1)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < d.node_count; ++i)
        d.arcs.push_back({order[static_cast<std::size_t>(i)],
                          order[static_cast<std::size_t>((i + 1) % d.node_count)],
                          rand_weight(rng, wlo, whi)});
    int m = std::uniform_int_distribution<int>(d.node_count, max_m)(rng);
    std::uniform_int_distribution<int> node(1, d.node_count);
    while (d.m() < m) {
        int u = node(rng), v = node(rng);
        if (u == v) continue;
        d.arcs.push_back({u, v, rand_weight(rng, wlo, whi)});
    }
    return d;
}

inline UndirectedGraph random_undirected(std::mt19937& rng, int max_n, int max_m,
                                         std::int64_t wlo = -5, std::int64_t whi = 5) {
    UndirectedGraph u;
    u.node_count = std::uniform_int_distribution<int>(1, max_n)(rng);
    int m = u.node_count == 1 ? 0 : std::uniform_int_distribution<int>(0, max_m)(rng);
    std::uniform_int_distribution<int> node(1, u.node_count);
    while (u.m() < m) {
        int a = node(rng), b = node(rng);
        if (a == b) continue;
        u.edges.push_back({a, b, rand_weight(rng, wlo, whi)});
    }
    return u;
}

/// Exhaustive minimum weight perfect matching by branching on the lowest
/// unmatched vertex; nullopt when no perfect matching exists.
inline std::optional<std::int64_t> brute_min_perfect_matching(
    int n, const std::vector<WeightedEdge>& edges) {
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::optional<std::int64_t> best;
    auto rec = [&](auto&& self, std::int64_t acc) -> void {
        int v = 0;
        while (v < n && used[static_cast<std::size_t>(v)]) ++v;
        if (v == n) {
            if (!best || acc < *best) best = acc;
            return;
        }
        for (const WeightedEdge& e : edges) {
            if (e.u == e.v) continue;
            int other;
            if (e.u == v) other = e.v;
            else if (e.v == v) other = e.u;
            else continue;
            if (used[static_cast<std::size_t>(other)]) continue;
            used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(other)] = 1;
            self(self, acc + e.w);
            used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(other)] = 0;
        }
    };
    rec(rec, 0);
    return best;
}

/// Exhaustive maximum weight matching; with max_cardinality the cardinality
/// dominates the weight lexicographically.
inline std::pair<int, std::int64_t> brute_max_weight_matching(
    int n, const std::vector<WeightedEdge>& edges, bool max_cardinality) {
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::pair<int, std::int64_t> best{0, 0};
    auto better = [&](int card, std::int64_t w) {
        if (!max_cardinality) return w > best.second;
        return card > best.first || (card == best.first && w > best.second);
    };
    auto rec = [&](auto&& self, int v, int card, std::int64_t acc) -> void {
        if (v == n) {
            if (better(card, acc)) best = {card, acc};
            return;
        }
        if (used[static_cast<std::size_t>(v)]) {
            self(self, v + 1, card, acc);
            return;
        }
        self(self, v + 1, card, acc); // leave v unmatched
        for (const WeightedEdge& e : edges) {
            if (e.u == e.v) continue;
            int other;
            if (e.u == v) other = e.v;
            else if (e.v == v) other = e.u;
            else continue;
            if (other <= v || used[static_cast<std::size_t>(other)]) continue;
            used[static_cast<std::size_t>(other)] = 1;
            self(self, v + 1, card + 1, acc + e.w);
            used[static_cast<std::size_t>(other)] = 0;
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

/// Exhaustive minimum weight 2-factor over all edge subsets.
inline std::optional<std::int64_t> brute_min_two_factor(const Multigraph& h) {
    int m = h.m();
    std::optional<std::int64_t> best;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(h.n()), 0);
        std::int64_t w = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) {
                deg[static_cast<std::size_t>(h.edges[static_cast<std::size_t>(e)].u)]++;
                deg[static_cast<std::size_t>(h.edges[static_cast<std::size_t>(e)].v)]++;
                w += h.edges[static_cast<std::size_t>(e)].w;
            }
        bool ok = true;
        for (int d : deg)
            if (d != 2) { ok = false; break; }
        if (ok && (!best || w < *best)) best = w;
    }
    return best;
}

/// All balanced (or small balanced) edge subsets, by enumeration; m must be
/// small.
inline std::vector<std::vector<int>> all_balanced_sets(const BidirectedGraph& g,
                                                       bool small_only,
                                                       bool include_empty = false) {
    std::vector<std::vector<int>> out;
    int m = g.m();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (mask == 0 && !include_empty) continue;
        std::vector<int> x;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) x.push_back(e);
        if (!mmc::is_balanced(g, x)) continue;
        if (small_only && !mmc::is_small(g, x)) continue;
        out.push_back(std::move(x));
    }
    return out;
}

/// Minimum mean circuit of an undirected graph. A circuit's edge set is a
/// connected subgraph with all degrees even, and conversely, so the optimum
/// mean is min w(S)/|S| over such subsets.
inline std::optional<Rational> brute_min_mean_circuit(const UndirectedGraph& u) {
    int m = u.m();
    std::optional<Rational> best;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(u.node_count) + 1, 0);
        std::int64_t w = 0;
        int count = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u) {
                deg[static_cast<std::size_t>(u.edges[static_cast<std::size_t>(e)].u)]++;
                deg[static_cast<std::size_t>(u.edges[static_cast<std::size_t>(e)].v)]++;
                w += u.edges[static_cast<std::size_t>(e)].weight;
                ++count;
            }
        bool even = true;
        for (int d : deg)
            if (d % 2 != 0) { even = false; break; }
        if (!even) continue;
        // connectivity over the touched nodes
        std::vector<int> touched;
        for (int v = 1; v <= u.node_count; ++v)
            if (deg[static_cast<std::size_t>(v)] > 0) touched.push_back(v);
        std::vector<char> seen(static_cast<std::size_t>(u.node_count) + 1, 0);
        std::vector<int> stack{touched.front()};
        seen[static_cast<std::size_t>(touched.front())] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < m; ++e) {
                if (!(mask >> e & 1u)) continue;
                const auto& ed = u.edges[static_cast<std::size_t>(e)];
                for (int nb : {ed.u, ed.v})
                    if ((ed.u == v || ed.v == v) && !seen[static_cast<std::size_t>(nb)]) {
                        seen[static_cast<std::size_t>(nb)] = 1;
                        stack.push_back(nb);
                    }
            }
        }
        bool connected = true;
        for (int v : touched)
            if (!seen[static_cast<std::size_t>(v)]) { connected = false; break; }
        if (!connected) continue;
        Rational mean(w, count);
        if (!best || mean < *best) best = mean;
    }
    return best;
}

/// Minimum mean over node-simple edge-simple cycles, from the exhaustive
/// cycle enumeration.
inline std::optional<Rational> brute_min_mean_node_simple(const BidirectedGraph& g,
                                                          int max_edges = 14) {
    std::optional<Rational> best;
    for (const Path& c : mmc::enumerate_edge_simple_cycles(g, max_edges)) {
        if (!mmc::is_node_simple_cycle(g, c)) continue;
        Rational mean = mmc::cycle_mean(g, c);
        if (!best || mean < *best) best = mean;
    }
    return best;
}

/// Random valid skew-symmetric graph with symmetric weights: node i pairs
/// with i + half; arcs are added in mate pairs.
inline SkewGraph random_skew(std::mt19937& rng, int max_half, int max_pairs,
                             std::int64_t wlo = -5, std::int64_t whi = 5,
                             int min_half = 1) {
    SkewGraph g;
    int half = std::uniform_int_distribution<int>(min_half, max_half)(rng);
    g.node_count = 2 * half;
    g.node_mate.assign(static_cast<std::size_t>(g.node_count) + 1, 0);
    for (int v = 1; v <= half; ++v) {
        g.node_mate[static_cast<std::size_t>(v)] = v + half;
        g.node_mate[static_cast<std::size_t>(v + half)] = v;
    }
    int pairs = std::uniform_int_distribution<int>(0, max_pairs)(rng);
    std::uniform_int_distribution<int> node(1, g.node_count);
    auto tau = [&](int v) { return g.node_mate[static_cast<std::size_t>(v)]; };
    for (int i = 0; i < pairs; ++i) {
        int t = node(rng), h = node(rng);
        // the mate arc runs tau(h) -> tau(t); forbid self-loops and
        // self-mate arcs (t == tau(h))
        if (t == h || t == tau(h)) continue;
        std::int64_t w = rand_weight(rng, wlo, whi);
        int id = static_cast<int>(g.arcs.size());
        g.arcs.push_back({id + 1, t, h, w});
        g.arcs.push_back({id, tau(h), tau(t), w});
    }
    return g;
}

} // namespace testutil
