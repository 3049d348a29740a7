#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mmcycle/errors.hpp"
#include "mmcycle/rational.hpp"

namespace mmc {

/// Orientation of one edge endpoint: In means the edge is directed into
/// that endpoint's node, Out means it is directed away from it.
enum class Sign : std::uint8_t { In, Out };

inline Sign opposite(Sign s) { return s == Sign::In ? Sign::Out : Sign::In; }
inline char sign_char(Sign s) { return s == Sign::In ? 'i' : 'o'; }

/// One bidirected edge. A loop (u == v) keeps two distinct endpoint slots
/// (the u-slot and the v-slot) so walks can record which slot they used.
struct Edge {
    int u = 0;
    int v = 0;
    Sign sign_u = Sign::Out;
    Sign sign_v = Sign::In;
    std::int64_t weight = 0;

    bool is_loop() const { return u == v; }
};

/// Nodes are 1..node_count; edge ids are the dense indices into `edges`.
struct BidirectedGraph {
    int node_count = 0;
    std::vector<Edge> edges;

    int n() const { return node_count; }
    int m() const { return static_cast<int>(edges.size()); }
};

inline BidirectedGraph make_bigraph(int n, std::vector<Edge> edges) {
    return BidirectedGraph{n, std::move(edges)};
}

inline Edge arc(int from, int to, std::int64_t w) {
    return Edge{from, to, Sign::Out, Sign::In, w};
}

inline Edge double_leaving(int u, int v, std::int64_t w) {
    return Edge{u, v, Sign::Out, Sign::Out, w};
}

inline Edge double_entering(int u, int v, std::int64_t w) {
    return Edge{u, v, Sign::In, Sign::In, w};
}

// ---------------------------------------------------------------------------
// Validation

enum class BigraphViolationKind {
    NonPositiveNodeCount,
    DanglingEndpoint,
    MixedLoop,
};

struct BigraphViolation {
    BigraphViolationKind kind;
    int edge = -1; // -1 when the violation is not tied to an edge
    std::string detail;
};

inline std::vector<BigraphViolation> validate_bidirected(const BidirectedGraph& g) {
    std::vector<BigraphViolation> out;
    if (g.node_count <= 0)
        out.push_back({BigraphViolationKind::NonPositiveNodeCount, -1,
                       "node count must be positive"});
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.u < 1 || ed.u > g.node_count || ed.v < 1 || ed.v > g.node_count)
            out.push_back({BigraphViolationKind::DanglingEndpoint, e,
                           "edge " + std::to_string(e) + " has an endpoint outside [1, n]"});
        if (ed.u == ed.v && ed.sign_u != ed.sign_v)
            out.push_back({BigraphViolationKind::MixedLoop, e,
                           "edge " + std::to_string(e) + " is a loop entering and leaving its node"});
    }
    return out;
}

inline bool is_valid_bidirected(const BidirectedGraph& g) {
    return validate_bidirected(g).empty();
}

// ---------------------------------------------------------------------------
// Walks and cycles

/// One traversal step. `forward` means the edge departs through its u-slot
/// and arrives through its v-slot; backward is the other way round. The
/// flag disambiguates the traversal side of loops and of parallel edges
/// with coinciding endpoints.
struct Step {
    int edge = -1;
    bool forward = true;

    friend bool operator==(const Step&, const Step&) = default;
    friend auto operator<=>(const Step&, const Step&) = default;
};

using Path = std::vector<Step>;

inline void check_edge_id(const BidirectedGraph& g, int e) {
    if (e < 0 || e >= g.m())
        throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
}

inline int step_tail(const BidirectedGraph& g, Step s) {
    check_edge_id(g, s.edge);
    const Edge& e = g.edges[s.edge];
    return s.forward ? e.u : e.v;
}

inline int step_head(const BidirectedGraph& g, Step s) {
    check_edge_id(g, s.edge);
    const Edge& e = g.edges[s.edge];
    return s.forward ? e.v : e.u;
}

inline Sign departure_sign(const BidirectedGraph& g, Step s) {
    check_edge_id(g, s.edge);
    const Edge& e = g.edges[s.edge];
    return s.forward ? e.sign_u : e.sign_v;
}

inline Sign arrival_sign(const BidirectedGraph& g, Step s) {
    check_edge_id(g, s.edge);
    const Edge& e = g.edges[s.edge];
    return s.forward ? e.sign_v : e.sign_u;
}

/// Node sequence v_0 .. v_k of a walk (size = steps + 1).
inline std::vector<int> walk_nodes(const BidirectedGraph& g, const Path& p) {
    std::vector<int> nodes;
    if (p.empty()) return nodes;
    nodes.reserve(p.size() + 1);
    nodes.push_back(step_tail(g, p.front()));
    for (Step s : p) nodes.push_back(step_head(g, s));
    return nodes;
}

/// A walk is consistent iff consecutive steps meet at a node and form a
/// transit pair there: the arriving slot and the departing slot carry
/// opposite signs.
inline bool is_walk(const BidirectedGraph& g, const Path& p) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (step_head(g, p[i]) != step_tail(g, p[i + 1])) return false;
        if (arrival_sign(g, p[i]) == departure_sign(g, p[i + 1])) return false;
    }
    return true;
}

inline bool is_cycle(const BidirectedGraph& g, const Path& p) {
    if (p.empty() || !is_walk(g, p)) return false;
    if (step_tail(g, p.front()) != step_head(g, p.back())) return false;
    // wrap-around transit at v_0
    return arrival_sign(g, p.back()) != departure_sign(g, p.front());
}

inline bool is_edge_simple(const Path& p) {
    std::vector<int> ids;
    ids.reserve(p.size());
    for (Step s : p) ids.push_back(s.edge);
    std::sort(ids.begin(), ids.end());
    return std::adjacent_find(ids.begin(), ids.end()) == ids.end();
}

/// Visits of each node among v_0 .. v_{k-1}; a traversed loop shows its
/// node in two consecutive positions and so counts twice.
inline std::vector<int> node_visit_counts(const BidirectedGraph& g, const Path& p) {
    std::vector<int> cnt(g.node_count + 1, 0);
    for (Step s : p) ++cnt[step_tail(g, s)];
    return cnt;
}

inline bool is_small_cycle(const BidirectedGraph& g, const Path& p) {
    for (int c : node_visit_counts(g, p))
        if (c > 2) return false;
    return true;
}

inline bool is_node_simple_cycle(const BidirectedGraph& g, const Path& p) {
    if (!is_cycle(g, p)) return false;
    for (int c : node_visit_counts(g, p))
        if (c > 1) return false;
    return true;
}

inline std::int64_t walk_weight(const BidirectedGraph& g, const Path& p) {
    std::int64_t total = 0;
    for (Step s : p) {
        check_edge_id(g, s.edge);
        detail::int128 t = detail::int128(total) + g.edges[s.edge].weight;
        total = detail::narrow64(t, "walk weight");
    }
    return total;
}

inline Rational cycle_mean(const BidirectedGraph& g, const Path& p) {
    if (!is_cycle(g, p)) throw std::invalid_argument("cycle_mean: not a cycle");
    return Rational(walk_weight(g, p), static_cast<std::int64_t>(p.size()));
}

inline Path reversed_walk(const Path& p) {
    Path r(p.rbegin(), p.rend());
    for (Step& s : r) s.forward = !s.forward;
    return r;
}

// ---------------------------------------------------------------------------
// Canonical cycle form: the lexicographically smallest rotation over both
// orientations, comparing (node, edge, forward) triples position by
// position. Rotations and reversals of the same cycle normalize alike.

namespace detail {

struct CycleKey {
    std::vector<std::int64_t> items;

    static CycleKey of(const BidirectedGraph& g, const Path& p) {
        CycleKey k;
        k.items.reserve(p.size() * 3);
        for (Step s : p) {
            k.items.push_back(step_tail(g, s));
            k.items.push_back(s.edge);
            k.items.push_back(s.forward ? 0 : 1);
        }
        return k;
    }

    friend bool operator<(const CycleKey& a, const CycleKey& b) {
        return a.items < b.items;
    }
};

inline Path rotate_path(const Path& p, std::size_t i) {
    Path r;
    r.reserve(p.size());
    r.insert(r.end(), p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
    r.insert(r.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i));
    return r;
}

} // namespace detail

inline Path canonical_cycle(const BidirectedGraph& g, const Path& p) {
    if (!is_cycle(g, p)) throw std::invalid_argument("canonical_cycle: not a cycle");
    // both orientations of a loop step are the same traversal
    auto fix_loops = [&](Path q) {
        for (Step& s : q) {
            const Edge& e = g.edges[static_cast<std::size_t>(s.edge)];
            if (e.u == e.v) s.forward = true;
        }
        return q;
    };
    Path fixed = fix_loops(p);
    Path best;
    detail::CycleKey best_key;
    bool have = false;
    for (const Path& base : {fixed, fix_loops(reversed_walk(fixed))}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
            Path cand = detail::rotate_path(base, i);
            detail::CycleKey key = detail::CycleKey::of(g, cand);
            if (!have || key < best_key) {
                best = std::move(cand);
                best_key = std::move(key);
                have = true;
            }
        }
    }
    return best;
}

/// Strict total order on cycles used for deterministic tie-breaking.
inline bool canonical_less(const BidirectedGraph& g, const Path& a, const Path& b) {
    return detail::CycleKey::of(g, a).items < detail::CycleKey::of(g, b).items;
}

// ---------------------------------------------------------------------------
// Balanced and small edge sets

namespace detail {

struct NodeDegrees {
    std::vector<int> entering;
    std::vector<int> leaving;
};

inline NodeDegrees set_degrees(const BidirectedGraph& g, const std::vector<int>& x) {
    NodeDegrees d;
    d.entering.assign(g.node_count + 1, 0);
    d.leaving.assign(g.node_count + 1, 0);
    std::vector<char> seen(g.edges.size(), 0);
    for (int e : x) {
        check_edge_id(g, e);
        if (seen[static_cast<std::size_t>(e)])
            throw std::invalid_argument("edge set contains a duplicate id");
        seen[static_cast<std::size_t>(e)] = 1;
        const Edge& ed = g.edges[e];
        (ed.sign_u == Sign::In ? d.entering : d.leaving)[ed.u]++;
        (ed.sign_v == Sign::In ? d.entering : d.leaving)[ed.v]++;
    }
    return d;
}

} // namespace detail

inline bool is_balanced(const BidirectedGraph& g, const std::vector<int>& x) {
    detail::NodeDegrees d = detail::set_degrees(g, x);
    for (int v = 1; v <= g.node_count; ++v)
        if (d.entering[v] != d.leaving[v]) return false;
    return true;
}

inline bool is_small(const BidirectedGraph& g, const std::vector<int>& x) {
    detail::NodeDegrees d = detail::set_degrees(g, x);
    for (int v = 1; v <= g.node_count; ++v)
        if (d.entering[v] > 2) return false;
    return true;
}

inline std::int64_t set_weight(const BidirectedGraph& g, const std::vector<int>& x) {
    std::int64_t total = 0;
    for (int e : x) {
        check_edge_id(g, e);
        total = detail::narrow64(detail::int128(total) + g.edges[e].weight, "set weight");
    }
    return total;
}

} // namespace mmc
