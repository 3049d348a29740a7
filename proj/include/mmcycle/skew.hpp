#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mmcycle/bigraph.hpp"

namespace mmc {

/// Directed arc of a skew-symmetric graph; arcs are stored in mate pairs.
struct Arc {
    int mate = -1; // arc id of the symmetric arc
    int tail = 0;
    int head = 0;
    std::int64_t weight = 0;
};

/// Directed multigraph with a fixed-point-free node involution and a
/// compatible arc involution. Nodes are 1..node_count (node_count even),
/// arc ids are dense indices.
struct SkewGraph {
    int node_count = 0;
    std::vector<int> node_mate; // index 1..node_count
    std::vector<Arc> arcs;

    int n() const { return node_count; }
    int m() const { return static_cast<int>(arcs.size()); }
    int mate_of(int v) const { return node_mate[static_cast<std::size_t>(v)]; }
};

enum class SkewViolationKind {
    OddNodeCount,
    FixedNode,
    BrokenNodeInvolution,
    SelfMateArc,
    BrokenArcInvolution,
    BrokenArcSymmetry,
    DanglingEndpoint,
    AsymmetricWeight,
};

struct SkewViolation {
    SkewViolationKind kind;
    int index = -1; // node or arc id, -1 if global
    std::string detail;
};

/// Checks all structural invariants; weight symmetry is reported as its
/// own violation kind so that conversion-only callers can ignore it.
inline std::vector<SkewViolation> validate_skew(const SkewGraph& g) {
    std::vector<SkewViolation> out;
    if (g.node_count <= 0 || g.node_count % 2 != 0) {
        out.push_back({SkewViolationKind::OddNodeCount, -1,
                       "node count must be positive and even"});
        return out;
    }
    if (static_cast<int>(g.node_mate.size()) < g.node_count + 1) {
        out.push_back({SkewViolationKind::BrokenNodeInvolution, -1,
                       "node mate table has the wrong size"});
        return out;
    }
    for (int v = 1; v <= g.node_count; ++v) {
        int mv = g.mate_of(v);
        if (mv < 1 || mv > g.node_count) {
            out.push_back({SkewViolationKind::BrokenNodeInvolution, v,
                           "node " + std::to_string(v) + " has a mate outside [1, n]"});
            continue;
        }
        if (mv == v)
            out.push_back({SkewViolationKind::FixedNode, v,
                           "node " + std::to_string(v) + " is its own mate"});
        else if (g.mate_of(mv) != v)
            out.push_back({SkewViolationKind::BrokenNodeInvolution, v,
                           "node mate map is not an involution at " + std::to_string(v)});
    }
    if (!out.empty()) return out;

    for (int a = 0; a < g.m(); ++a) {
        const Arc& arc = g.arcs[static_cast<std::size_t>(a)];
        if (arc.tail < 1 || arc.tail > g.node_count || arc.head < 1 ||
            arc.head > g.node_count) {
            out.push_back({SkewViolationKind::DanglingEndpoint, a,
                           "arc " + std::to_string(a) + " has an endpoint outside [1, n]"});
            continue;
        }
        if (arc.mate < 0 || arc.mate >= g.m()) {
            out.push_back({SkewViolationKind::BrokenArcInvolution, a,
                           "arc " + std::to_string(a) + " has a mate id out of range"});
            continue;
        }
        if (arc.mate == a) {
            out.push_back({SkewViolationKind::SelfMateArc, a,
                           "arc " + std::to_string(a) + " is its own mate"});
            continue;
        }
        const Arc& m = g.arcs[static_cast<std::size_t>(arc.mate)];
        if (m.mate != a) {
            out.push_back({SkewViolationKind::BrokenArcInvolution, a,
                           "arc mate map is not an involution at " + std::to_string(a)});
            continue;
        }
        if (m.tail != g.mate_of(arc.head) || m.head != g.mate_of(arc.tail))
            out.push_back({SkewViolationKind::BrokenArcSymmetry, a,
                           "mate of arc " + std::to_string(a) +
                               " does not run between the mate nodes"});
        if (m.weight != arc.weight)
            out.push_back({SkewViolationKind::AsymmetricWeight, a,
                           "arc " + std::to_string(a) + " and its mate differ in weight"});
    }
    return out;
}

inline bool is_valid_skew(const SkewGraph& g, bool require_symmetric_weights) {
    for (const SkewViolation& v : validate_skew(g)) {
        if (v.kind == SkewViolationKind::AsymmetricWeight && !require_symmetric_weights)
            continue;
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Partitions and conversions

/// One side of a partition {V1, sigma(V1)}: in_v1[v] is true for exactly
/// one node of every mate pair.
using NodePartition = std::vector<char>; // indexed 1..node_count

inline NodePartition canonical_partition(const SkewGraph& g) {
    NodePartition p(static_cast<std::size_t>(g.node_count) + 1, 0);
    for (int v = 1; v <= g.node_count; ++v)
        if (v < g.mate_of(v)) p[static_cast<std::size_t>(v)] = 1;
    return p;
}

inline bool is_node_partition(const SkewGraph& g, const NodePartition& p) {
    if (static_cast<int>(p.size()) < g.node_count + 1) return false;
    for (int v = 1; v <= g.node_count; ++v)
        if (p[static_cast<std::size_t>(v)] == p[static_cast<std::size_t>(g.mate_of(v))])
            return false;
    return true;
}

/// Correspondence data between a skew graph and its bidirected quotient.
struct SkewBigraphMap {
    // bidirected node <-> chosen V1 node
    std::vector<int> bg_node_of_skew; // 1..N, 0 if in V2 side after mapping to mate
    std::vector<int> skew_node_of_bg; // 1..N/2
    // bidirected edge id -> (representative arc, its mate); traversing the
    // representative corresponds to a forward step over the edge
    std::vector<std::pair<int, int>> arcs_of_edge;
    std::vector<int> edge_of_arc; // arc id -> edge id
};

/// Quotient construction: each arc mate pair becomes one bidirected edge.
/// The endpoint at the tail side is Out when the tail lies in V1, else In;
/// the endpoint at the head side is In when the head lies in V1, else Out.
inline std::pair<BidirectedGraph, SkewBigraphMap> skew_to_bidirected(
    const SkewGraph& g, const NodePartition& p, bool require_symmetric_weights = true) {
    if (!is_valid_skew(g, require_symmetric_weights))
        throw std::invalid_argument("skew_to_bidirected: invalid or asymmetric input");
    if (!is_node_partition(g, p))
        throw std::invalid_argument("skew_to_bidirected: not a node partition");

    SkewBigraphMap map;
    map.bg_node_of_skew.assign(static_cast<std::size_t>(g.node_count) + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.node_count; ++v) {
        if (p[static_cast<std::size_t>(v)]) {
            map.skew_node_of_bg.push_back(v);
            map.bg_node_of_skew[static_cast<std::size_t>(v)] = ++next;
        }
    }
    for (int v = 1; v <= g.node_count; ++v)
        if (!p[static_cast<std::size_t>(v)])
            map.bg_node_of_skew[static_cast<std::size_t>(v)] =
                map.bg_node_of_skew[static_cast<std::size_t>(g.mate_of(v))];
    // make skew_node_of_bg 1-based
    map.skew_node_of_bg.insert(map.skew_node_of_bg.begin(), 0);

    BidirectedGraph bg;
    bg.node_count = g.node_count / 2;
    map.edge_of_arc.assign(static_cast<std::size_t>(g.m()), -1);
    for (int a = 0; a < g.m(); ++a) {
        if (a > g.arcs[static_cast<std::size_t>(a)].mate) continue; // one edge per pair
        const Arc& arc = g.arcs[static_cast<std::size_t>(a)];
        Edge e;
        e.u = map.bg_node_of_skew[static_cast<std::size_t>(arc.tail)];
        e.v = map.bg_node_of_skew[static_cast<std::size_t>(arc.head)];
        e.sign_u = p[static_cast<std::size_t>(arc.tail)] ? Sign::Out : Sign::In;
        e.sign_v = p[static_cast<std::size_t>(arc.head)] ? Sign::In : Sign::Out;
        e.weight = arc.weight;
        int id = bg.m();
        bg.edges.push_back(e);
        map.arcs_of_edge.push_back({a, arc.mate});
        map.edge_of_arc[static_cast<std::size_t>(a)] = id;
        map.edge_of_arc[static_cast<std::size_t>(arc.mate)] = id;
    }
    return {std::move(bg), std::move(map)};
}

/// Doubling construction: node v gets the mate v + n; every edge becomes a
/// mate pair of arcs placed so that the quotient under the canonical
/// partition reproduces the edge.
inline std::pair<SkewGraph, SkewBigraphMap> bidirected_to_skew(const BidirectedGraph& bg) {
    if (!is_valid_bidirected(bg))
        throw std::invalid_argument("bidirected_to_skew: invalid bidirected graph");
    const int n = bg.node_count;
    SkewGraph g;
    g.node_count = 2 * n;
    g.node_mate.assign(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        g.node_mate[static_cast<std::size_t>(v)] = v + n;
        g.node_mate[static_cast<std::size_t>(v + n)] = v;
    }

    SkewBigraphMap map;
    map.bg_node_of_skew.assign(static_cast<std::size_t>(2 * n) + 1, 0);
    map.skew_node_of_bg.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        map.bg_node_of_skew[static_cast<std::size_t>(v)] = v;
        map.bg_node_of_skew[static_cast<std::size_t>(v + n)] = v;
        map.skew_node_of_bg[static_cast<std::size_t>(v)] = v;
    }

    map.edge_of_arc.assign(2 * static_cast<std::size_t>(bg.m()), -1);
    for (int ei = 0; ei < bg.m(); ++ei) {
        const Edge& e = bg.edges[static_cast<std::size_t>(ei)];
        int tail = e.sign_u == Sign::Out ? e.u : e.u + n;
        int head = e.sign_v == Sign::In ? e.v : e.v + n;
        int a = g.m();
        g.arcs.push_back({a + 1, tail, head, e.weight});
        g.arcs.push_back({a, g.node_mate[static_cast<std::size_t>(head)],
                          g.node_mate[static_cast<std::size_t>(tail)], e.weight});
        map.arcs_of_edge.push_back({a, a + 1});
        map.edge_of_arc[static_cast<std::size_t>(a)] = ei;
        map.edge_of_arc[static_cast<std::size_t>(a + 1)] = ei;
    }
    return {std::move(g), std::move(map)};
}

// ---------------------------------------------------------------------------
// Regular cycles and the tau correspondence

/// Arc-simple and free of symmetric arc pairs (symmetric nodes allowed).
inline bool is_regular_cycle(const SkewGraph& g, const std::vector<int>& arcs) {
    if (arcs.empty()) return false;
    std::vector<char> used(g.arcs.size(), 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        int a = arcs[i];
        if (a < 0 || a >= g.m()) throw std::out_of_range("is_regular_cycle: bad arc id");
        const Arc& arc = g.arcs[static_cast<std::size_t>(a)];
        if (used[static_cast<std::size_t>(a)] ||
            used[static_cast<std::size_t>(arc.mate)])
            return false;
        used[static_cast<std::size_t>(a)] = 1;
        int next = arcs[(i + 1) % arcs.size()];
        if (arc.head != g.arcs[static_cast<std::size_t>(next)].tail) return false;
    }
    return true;
}

inline std::int64_t arc_walk_weight(const SkewGraph& g, const std::vector<int>& arcs) {
    std::int64_t total = 0;
    for (int a : arcs)
        total = detail::narrow64(
            detail::int128(total) + g.arcs[static_cast<std::size_t>(a)].weight,
            "arc walk weight");
    return total;
}

/// tau: a regular cycle in the skew graph maps to an edge-simple cycle of
/// the quotient bidirected graph, edge by edge.
inline Path tau_cycle(const SkewGraph& g, const SkewBigraphMap& map,
                      const std::vector<int>& arcs) {
    if (!is_regular_cycle(g, arcs))
        throw std::invalid_argument("tau_cycle: input is not a regular cycle");
    Path p;
    p.reserve(arcs.size());
    for (int a : arcs) {
        int e = map.edge_of_arc[static_cast<std::size_t>(a)];
        bool forward = map.arcs_of_edge[static_cast<std::size_t>(e)].first == a;
        p.push_back(Step{e, forward});
    }
    return p;
}

/// tau^{-1}: the unique regular preimage of an edge-simple bidirected
/// cycle; forward steps lift to the representative arc, backward steps to
/// its mate.
inline std::vector<int> tau_inverse_cycle(const SkewGraph& g, const SkewBigraphMap& map,
                                          const BidirectedGraph& bg, const Path& cycle) {
    if (!is_cycle(bg, cycle) || !is_edge_simple(cycle))
        throw std::invalid_argument("tau_inverse_cycle: input is not an edge-simple cycle");
    std::vector<int> arcs;
    arcs.reserve(cycle.size());
    for (Step s : cycle) {
        auto [rep, mate] = map.arcs_of_edge[static_cast<std::size_t>(s.edge)];
        arcs.push_back(s.forward ? rep : mate);
    }
    if (!is_regular_cycle(g, arcs))
        throw std::invalid_argument("tau_inverse_cycle: preimage fails to close up");
    return arcs;
}

/// Symmetric image of a directed walk: mate arcs in reverse order.
inline std::vector<int> sigma_walk(const SkewGraph& g, const std::vector<int>& arcs) {
    std::vector<int> out;
    out.reserve(arcs.size());
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it)
        out.push_back(g.arcs[static_cast<std::size_t>(*it)].mate);
    return out;
}

} // namespace mmc
