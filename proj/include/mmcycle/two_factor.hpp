#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mmcycle/bigraph.hpp"
#include "mmcycle/matching.hpp"

namespace mmc {

// ---------------------------------------------------------------------------
// Undirected weighted multigraphs with loops (loops count 2 toward degree)

struct Multigraph {
    int node_count = 0; // vertices 0..node_count-1
    std::vector<WeightedEdge> edges;

    int n() const { return node_count; }
    int m() const { return static_cast<int>(edges.size()); }
};

/// True iff the edge id subset covers every node by exactly two endpoints.
inline bool is_two_factor(const Multigraph& h, const std::vector<int>& f) {
    std::vector<int> deg(h.node_count, 0);
    std::vector<char> seen(h.edges.size(), 0);
    for (int e : f) {
        if (e < 0 || e >= h.m()) throw std::out_of_range("is_two_factor: bad edge id");
        if (seen[static_cast<std::size_t>(e)])
            throw std::invalid_argument("is_two_factor: duplicate edge id");
        seen[static_cast<std::size_t>(e)] = 1;
        deg[h.edges[e].u]++;
        deg[h.edges[e].v]++;
    }
    for (int d : deg)
        if (d != 2) return false;
    return true;
}

/// Minimum weight 2-factor via a gadget reduction to minimum weight perfect
/// matching. Per node x: copies x1, x2. Per non-loop edge e = {x, y}: nodes
/// e_x, e_y, inner edge {e_x, e_y} of weight 0, outer edges {x^k, e_x} of
/// weight w(e) and {y^k, e_y} of weight 0 (k = 1, 2). Per loop e at x:
/// nodes e_1, e_2, inner {e_1, e_2} of weight 0, edges {x^k, e_1} of weight
/// w(e) and {x^k, e_2} of weight 0. An edge belongs to the 2-factor iff its
/// inner edge is unmatched, and the matching weight equals the 2-factor
/// weight.
inline std::optional<std::vector<int>> min_weight_two_factor(const Multigraph& h) {
    const int n = h.node_count;
    const int m = h.m();
    const int gadget_nodes = 2 * n + 2 * m;

    auto copy1 = [](int x) { return 2 * x; };
    auto copy2 = [](int x) { return 2 * x + 1; };
    auto enode = [&](int e, int side) { return 2 * n + 2 * e + side; };

    std::vector<WeightedEdge> ge;
    std::vector<int> inner_edge(m, -1); // gadget edge index of e's inner edge
    for (int e = 0; e < m; ++e) {
        const WeightedEdge& ed = h.edges[e];
        inner_edge[e] = static_cast<int>(ge.size());
        ge.push_back({enode(e, 0), enode(e, 1), 0});
        if (ed.u != ed.v) {
            for (int k : {0, 1}) {
                ge.push_back({2 * ed.u + k, enode(e, 0), ed.w});
                ge.push_back({2 * ed.v + k, enode(e, 1), 0});
            }
        } else {
            for (int k : {0, 1}) {
                ge.push_back({2 * ed.u + k, enode(e, 0), ed.w});
                ge.push_back({2 * ed.u + k, enode(e, 1), 0});
            }
        }
    }

    auto matching = min_weight_perfect_matching(gadget_nodes, ge);
    if (!matching) return std::nullopt;

    std::vector<char> matched(ge.size(), 0);
    for (int k : *matching) matched[static_cast<std::size_t>(k)] = 1;
    std::vector<int> factor;
    for (int e = 0; e < m; ++e)
        if (!matched[static_cast<std::size_t>(inner_edge[e])]) factor.push_back(e);
    return factor;
}

// ---------------------------------------------------------------------------
// The split multigraph of a bidirected graph

enum class TildeKind { Origin, Auxiliary };

struct TildeEdgeInfo {
    TildeKind kind = TildeKind::Origin;
    int origin_edge = -1; // for Origin edges
    int aux_node = -1;    // for Auxiliary edges (original 1-based node)
    int aux_copy = 0;     // 1 or 2
};

/// Undirected multigraph with two nodes per original node and a label per
/// edge. Node v (1-based) owns tilde nodes 2(v-1) = "entering side" and
/// 2(v-1)+1 = "leaving side" (0-based).
struct TildeGraph {
    Multigraph graph;
    std::vector<TildeEdgeInfo> info;
    int original_nodes = 0;

    static int side1(int v) { return 2 * (v - 1); }
    static int side2(int v) { return 2 * (v - 1) + 1; }
};

/// Builds the split graph: every original edge attaches at a node's
/// entering side when it enters that node, else the leaving side; every
/// node gets two parallel zero-weight auxiliary edges between its sides.
inline TildeGraph build_tilde(const BidirectedGraph& g) {
    TildeGraph t;
    t.original_nodes = g.node_count;
    t.graph.node_count = 2 * g.node_count;
    auto attach = [](int node, Sign s) {
        return s == Sign::In ? TildeGraph::side1(node) : TildeGraph::side2(node);
    };
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edges[e];
        t.graph.edges.push_back({attach(ed.u, ed.sign_u), attach(ed.v, ed.sign_v), ed.weight});
        t.info.push_back({TildeKind::Origin, e, -1, 0});
    }
    for (int v = 1; v <= g.node_count; ++v) {
        for (int copy : {1, 2}) {
            t.graph.edges.push_back({TildeGraph::side1(v), TildeGraph::side2(v), 0});
            t.info.push_back({TildeKind::Auxiliary, -1, v, copy});
        }
    }
    return t;
}

/// phi: small balanced set -> 2-factor of the split graph. Adds the Origin
/// images of x plus, per node with d entering endpoints in x, 2-d
/// auxiliary edges.
inline std::vector<int> phi(const BidirectedGraph& g, const TildeGraph& t,
                            const std::vector<int>& x) {
    if (t.original_nodes != g.node_count)
        throw std::invalid_argument("phi: split graph does not match the input graph");
    if (!is_balanced(g, x) || !is_small(g, x))
        throw std::invalid_argument("phi: set is not small and balanced");
    detail::NodeDegrees d = detail::set_degrees(g, x);
    std::vector<int> f(x);
    // auxiliary edges sit after the m origin edges, two per node in order
    for (int v = 1; v <= g.node_count; ++v) {
        int need = 2 - d.entering[v];
        for (int c = 0; c < need; ++c) f.push_back(g.m() + 2 * (v - 1) + c);
    }
    std::sort(f.begin(), f.end());
    return f;
}

/// phi^{-1}: 2-factor of the split graph -> small balanced set (the Origin
/// edge ids it contains).
inline std::vector<int> phi_inv(const TildeGraph& t, const std::vector<int>& f) {
    if (!is_two_factor(t.graph, f))
        throw std::invalid_argument("phi_inv: not a 2-factor of the split graph");
    std::vector<int> x;
    for (int e : f)
        if (t.info[static_cast<std::size_t>(e)].kind == TildeKind::Origin)
            x.push_back(t.info[static_cast<std::size_t>(e)].origin_edge);
    std::sort(x.begin(), x.end());
    return x;
}

} // namespace mmc
