#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mmcycle/bigraph.hpp"
#include "mmcycle/rational.hpp"
#include "mmcycle/reductions.hpp"

namespace mmc {

/// Every edge-simple cycle up to rotation and reversal, by depth-first
/// search over traversal steps. Deliberately exponential; refuses graphs
/// with more than `max_edges` edges.
inline std::vector<Path> enumerate_edge_simple_cycles(const BidirectedGraph& g,
                                                      int max_edges = 14) {
    if (g.m() > max_edges)
        throw budget_error("cycle enumeration budget exceeded: " + std::to_string(g.m()) +
                           " edges > " + std::to_string(max_edges));

    std::set<std::vector<std::int64_t>> seen;
    std::vector<Path> out;
    Path walk;
    std::vector<char> used(g.edges.size(), 0);

    // Only cycles whose minimum edge id equals the first step's edge are
    // explored from that start, so each cycle is reached a bounded number
    // of times before deduplication.
    auto emit = [&](const Path& c) {
        Path canon = canonical_cycle(g, c);
        auto key = detail::CycleKey::of(g, canon).items;
        if (seen.insert(std::move(key)).second) out.push_back(std::move(canon));
    };

    std::function<void(int, int, Sign, int)> extend =
        [&](int start_node, int cur, Sign last_arrival, int min_edge) {
            if (cur == start_node && !walk.empty() &&
                arrival_sign(g, walk.back()) != departure_sign(g, walk.front()))
                emit(walk);
            for (int e = min_edge; e < g.m(); ++e) {
                if (used[static_cast<std::size_t>(e)]) continue;
                for (bool fwd : {true, false}) {
                    Step s{e, fwd};
                    if (step_tail(g, s) != cur) continue;
                    if (departure_sign(g, s) == last_arrival) continue;
                    used[static_cast<std::size_t>(e)] = 1;
                    walk.push_back(s);
                    extend(start_node, step_head(g, s), arrival_sign(g, s), min_edge);
                    walk.pop_back();
                    used[static_cast<std::size_t>(e)] = 0;
                }
            }
        };

    for (int e = 0; e < g.m(); ++e) {
        for (bool fwd : {true, false}) {
            Step s{e, fwd};
            used[static_cast<std::size_t>(e)] = 1;
            walk.push_back(s);
            extend(step_tail(g, s), step_head(g, s), arrival_sign(g, s), e);
            walk.pop_back();
            used[static_cast<std::size_t>(e)] = 0;
        }
    }

    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return canonical_less(g, a, b);
    });
    return out;
}

struct OracleResult {
    Rational mean;
    Path cycle;
};

/// Exhaustive minimum mean edge-simple cycle; ties broken exactly like the
/// solver (minimum length, then canonical order).
inline std::optional<OracleResult> brute_force_min_mean(const BidirectedGraph& g,
                                                        int max_edges = 14) {
    std::vector<Path> cycles = enumerate_edge_simple_cycles(g, max_edges);
    if (cycles.empty()) return std::nullopt;
    const Path* best = nullptr;
    Rational best_mean;
    for (const Path& c : cycles) {
        Rational m = cycle_mean(g, c);
        if (!best || m < best_mean ||
            (m == best_mean &&
             (c.size() < best->size() ||
              (c.size() == best->size() && canonical_less(g, c, *best))))) {
            best = &c;
            best_mean = m;
        }
    }
    return OracleResult{best_mean, *best};
}

// ---------------------------------------------------------------------------
// Karp's dynamic program for directed graphs

namespace detail {

/// Strongly connected components, Tarjan (iterative), 1-based nodes;
/// returns component index per node.
inline std::vector<int> strongly_connected_components(const DirectedGraph& d, int& count) {
    const int n = d.node_count;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& a : d.arcs) adj[static_cast<std::size_t>(a.from)].push_back(a.to);

    std::vector<int> index(static_cast<std::size_t>(n) + 1, -1),
        low(static_cast<std::size_t>(n) + 1, 0), comp(static_cast<std::size_t>(n) + 1, -1);
    std::vector<char> onstack(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack;
    int next_index = 0;
    count = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 1; root <= n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] =
            next_index++;
        stack.push_back(root);
        onstack[static_cast<std::size_t>(root)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[static_cast<std::size_t>(f.v)].size()) {
                int w = adj[static_cast<std::size_t>(f.v)][f.child++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        next_index++;
                    stack.push_back(w);
                    onstack[static_cast<std::size_t>(w)] = 1;
                    frames.push_back({w, 0});
                } else if (onstack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)],
                                 index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(f.v)] ==
                    index[static_cast<std::size_t>(f.v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        onstack[static_cast<std::size_t>(w)] = 0;
                        comp[static_cast<std::size_t>(w)] = count;
                        if (w == f.v) break;
                    }
                    ++count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[static_cast<std::size_t>(frames.back().v)] =
                        std::min(low[static_cast<std::size_t>(frames.back().v)],
                                 low[static_cast<std::size_t>(v)]);
            }
        }
    }
    return comp;
}

} // namespace detail

struct KarpResult {
    Rational mean;
    std::vector<int> cycle_arcs; // arc ids of a witness simple cycle
};

/// Karp's minimum mean cycle for directed graphs: per strongly connected
/// component, table D_k(v) of minimum-weight length-k walks from a root,
/// mu = min_v max_k (D_n(v) - D_k(v)) / (n - k). The witness cycle is
/// extracted from the subgraph of edges made tight by q*w - p and
/// Bellman-Ford potentials.
inline std::optional<KarpResult> karp_min_mean(const DirectedGraph& d) {
    const int n = d.node_count;
    if (n <= 0 || d.arcs.empty()) return std::nullopt;
    for (const auto& a : d.arcs)
        if (a.from == a.to)
            throw std::invalid_argument("karp_min_mean: self-loops are not allowed");

    int comp_count = 0;
    std::vector<int> comp = detail::strongly_connected_components(d, comp_count);

    bool have_mu = false;
    Rational mu;
    const std::int64_t INF = INT64_MAX / 4;

    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> members;
        for (int v = 1; v <= n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
        if (members.size() < 2) continue;
        std::vector<DirectedGraph::ArcRec> internal;
        for (const auto& a : d.arcs)
            if (comp[static_cast<std::size_t>(a.from)] == c &&
                comp[static_cast<std::size_t>(a.to)] == c)
                internal.push_back(a);
        if (internal.empty()) continue;

        const int nc = static_cast<int>(members.size());
        std::vector<int> local(static_cast<std::size_t>(n) + 1, -1);
        for (int i = 0; i < nc; ++i) local[static_cast<std::size_t>(members[i])] = i;

        // D[k][v], walks of exactly k arcs from the component root
        std::vector<std::vector<std::int64_t>> D(
            static_cast<std::size_t>(nc) + 1,
            std::vector<std::int64_t>(static_cast<std::size_t>(nc), INF));
        D[0][0] = 0;
        for (int k = 1; k <= nc; ++k) {
            for (const auto& a : internal) {
                int fu = local[static_cast<std::size_t>(a.from)];
                int tv = local[static_cast<std::size_t>(a.to)];
                if (D[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(fu)] == INF)
                    continue;
                std::int64_t cand =
                    D[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(fu)] +
                    a.weight;
                if (cand < D[static_cast<std::size_t>(k)][static_cast<std::size_t>(tv)])
                    D[static_cast<std::size_t>(k)][static_cast<std::size_t>(tv)] = cand;
            }
        }

        for (int v = 0; v < nc; ++v) {
            if (D[static_cast<std::size_t>(nc)][static_cast<std::size_t>(v)] == INF)
                continue;
            bool have_inner = false;
            Rational inner;
            for (int k = 0; k < nc; ++k) {
                if (D[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] == INF)
                    continue;
                Rational cand(
                    D[static_cast<std::size_t>(nc)][static_cast<std::size_t>(v)] -
                        D[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)],
                    nc - k);
                if (!have_inner || cand > inner) {
                    inner = cand;
                    have_inner = true;
                }
            }
            if (have_inner && (!have_mu || inner < mu)) {
                mu = inner;
                have_mu = true;
            }
        }
    }

    if (!have_mu) return std::nullopt;

    // Witness extraction: with w'(e) = q*w(e) - p there is no negative
    // cycle and some zero-weight cycle; all its edges are tight under
    // Bellman-Ford potentials, and any cycle among tight edges works.
    const std::int64_t p = mu.num();
    const std::int64_t q = mu.den();
    std::vector<std::int64_t> pot(static_cast<std::size_t>(n) + 1, 0);
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& a : d.arcs) {
            std::int64_t w2 = detail::narrow64(
                detail::int128(q) * a.weight - p, "karp reduced weight");
            if (pot[static_cast<std::size_t>(a.from)] + w2 <
                pot[static_cast<std::size_t>(a.to)]) {
                pot[static_cast<std::size_t>(a.to)] =
                    pot[static_cast<std::size_t>(a.from)] + w2;
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::vector<std::vector<std::pair<int, int>>> tight(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < d.m(); ++i) {
        const auto& a = d.arcs[static_cast<std::size_t>(i)];
        std::int64_t w2 =
            detail::narrow64(detail::int128(q) * a.weight - p, "karp reduced weight");
        if (pot[static_cast<std::size_t>(a.from)] + w2 ==
            pot[static_cast<std::size_t>(a.to)])
            tight[static_cast<std::size_t>(a.from)].push_back({a.to, i});
    }
    // find any directed cycle among tight edges
    std::vector<int> state(static_cast<std::size_t>(n) + 1, 0); // 0 new, 1 active, 2 done
    std::vector<int> via_arc(static_cast<std::size_t>(n) + 1, -1),
        parent(static_cast<std::size_t>(n) + 1, 0);
    for (int root = 1; root <= n; ++root) {
        if (state[static_cast<std::size_t>(root)] != 0) continue;
        std::vector<int> stack{root};
        state[static_cast<std::size_t>(root)] = 1;
        std::vector<std::size_t> it(static_cast<std::size_t>(n) + 1, 0);
        while (!stack.empty()) {
            int v = stack.back();
            if (it[static_cast<std::size_t>(v)] < tight[static_cast<std::size_t>(v)].size()) {
                auto [to, aid] = tight[static_cast<std::size_t>(v)]
                                      [it[static_cast<std::size_t>(v)]++];
                if (state[static_cast<std::size_t>(to)] == 1) {
                    // close the cycle v -> ... -> to
                    std::vector<int> cyc{aid};
                    int cur = v;
                    while (cur != to) {
                        cyc.push_back(via_arc[static_cast<std::size_t>(cur)]);
                        cur = parent[static_cast<std::size_t>(cur)];
                    }
                    std::reverse(cyc.begin(), cyc.end());
                    return KarpResult{mu, std::move(cyc)};
                }
                if (state[static_cast<std::size_t>(to)] == 0) {
                    state[static_cast<std::size_t>(to)] = 1;
                    parent[static_cast<std::size_t>(to)] = v;
                    via_arc[static_cast<std::size_t>(to)] = aid;
                    stack.push_back(to);
                }
            } else {
                state[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    // unreachable: a tight cycle must exist
    throw std::logic_error("karp_min_mean: no tight cycle found");
}

} // namespace mmc
