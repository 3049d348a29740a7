#pragma once

#include <cstdint>
#include <vector>

#include "mmcycle/bigraph.hpp"

namespace mmc {

/// Plain directed multigraph, nodes 1..node_count. Self-loops are rejected
/// by the reduction: a one-arc directed loop would have to enter and leave
/// its node, which the bidirected model forbids; subdivide it instead.
struct DirectedGraph {
    struct ArcRec {
        int from = 0;
        int to = 0;
        std::int64_t weight = 0;
    };
    int node_count = 0;
    std::vector<ArcRec> arcs;

    int n() const { return node_count; }
    int m() const { return static_cast<int>(arcs.size()); }
};

inline BidirectedGraph directed_to_bidirected(const DirectedGraph& d) {
    BidirectedGraph g;
    g.node_count = d.node_count;
    g.edges.reserve(d.arcs.size());
    for (const auto& a : d.arcs) {
        if (a.from == a.to)
            throw std::invalid_argument("directed_to_bidirected: self-loops are not allowed");
        g.edges.push_back(arc(a.from, a.to, a.weight));
    }
    return g;
}

/// Plain undirected multigraph, nodes 1..node_count, no self-loops.
struct UndirectedGraph {
    struct EdgeRec {
        int u = 0;
        int v = 0;
        std::int64_t weight = 0;
    };
    int node_count = 0;
    std::vector<EdgeRec> edges;

    int n() const { return node_count; }
    int m() const { return static_cast<int>(edges.size()); }
};

struct UndirectedBackMap {
    int original_edges = 0; // bidirected edges [0, original_edges) are originals

    /// Circuit of the original graph: original edge ids of the cycle with
    /// the zero-weight node loops stripped out. Halves the length.
    std::vector<int> circuit_edges(const Path& cycle) const {
        std::vector<int> out;
        for (Step s : cycle)
            if (s.edge < original_edges) out.push_back(s.edge);
        return out;
    }
};

/// Every undirected edge becomes an edge leaving both of its ends; every
/// node gets one zero-weight loop entering it twice. The bidirected
/// optimum mean equals half the undirected optimum circuit mean.
inline std::pair<BidirectedGraph, UndirectedBackMap> undirected_to_bidirected(
    const UndirectedGraph& u) {
    BidirectedGraph g;
    g.node_count = u.node_count;
    for (const auto& e : u.edges) {
        if (e.u == e.v)
            throw std::invalid_argument("undirected_to_bidirected: self-loops are not allowed");
        g.edges.push_back(double_leaving(e.u, e.v, e.weight));
    }
    for (int v = 1; v <= u.node_count; ++v)
        g.edges.push_back(double_entering(v, v, 0));
    return {std::move(g), UndirectedBackMap{u.m()}};
}

struct SplitBackMap {
    int original_edges = 0;

    /// Contracts the zero-weight splitter edges back out of a cycle of the
    /// split graph, recovering a node-simple cycle of the original graph
    /// with half the length and the same weight.
    Path contract(const Path& cycle) const {
        Path out;
        for (Step s : cycle)
            if (s.edge < original_edges) out.push_back(s);
        return out;
    }
};

/// Node-splitting reduction: node v becomes v1 = 2v-1 (all entering
/// endpoints) and v2 = 2v (all leaving endpoints), joined by a zero-weight
/// edge from v1 to v2. Edge-simple cycles of the result are node-simple
/// and correspond to node-simple cycles of the input with doubled length.
inline std::pair<BidirectedGraph, SplitBackMap> split_for_node_simple(
    const BidirectedGraph& g) {
    if (!is_valid_bidirected(g))
        throw std::invalid_argument("split_for_node_simple: invalid bidirected graph");
    BidirectedGraph out;
    out.node_count = 2 * g.node_count;
    auto attach = [](int v, Sign s) { return s == Sign::In ? 2 * v - 1 : 2 * v; };
    for (const Edge& e : g.edges) {
        Edge ne = e;
        ne.u = attach(e.u, e.sign_u);
        ne.v = attach(e.v, e.sign_v);
        out.edges.push_back(ne);
    }
    for (int v = 1; v <= g.node_count; ++v)
        out.edges.push_back(Edge{2 * v - 1, 2 * v, Sign::Out, Sign::In, 0});
    return {std::move(out), SplitBackMap{g.m()}};
}

} // namespace mmc
