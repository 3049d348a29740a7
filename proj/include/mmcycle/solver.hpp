#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "mmcycle/bigraph.hpp"
#include "mmcycle/decompose.hpp"
#include "mmcycle/rational.hpp"
#include "mmcycle/two_factor.hpp"

namespace mmc {

inline Rational shifted_weight(const BidirectedGraph& g, int e, const Rational& a) {
    check_edge_id(g, e);
    return Rational(g.edges[e].weight) - a;
}

inline Rational mean_of_set(const BidirectedGraph& g, const std::vector<int>& x) {
    if (x.empty()) throw std::invalid_argument("mean_of_set: empty set");
    return Rational(set_weight(g, x), static_cast<std::int64_t>(x.size()));
}

inline Rational shift_add(const Rational& a, const Rational& b) { return a + b; }

/// Minimum shifted-weight small balanced set for shift number a = p/q.
///
/// Works on integer weights W(e) = q*w(e) - p and on the split graph with
/// composite weights (2n+2)*W(e) - 1 on origin edges and 0 on auxiliaries;
/// since any small balanced set has at most 2n edges, minimizing the
/// composite weight minimizes sum W first and maximizes cardinality second.
/// Returns the set together with its exact shifted weight sum W / q.
inline std::pair<std::vector<int>, Rational> argmin_small_balanced(const BidirectedGraph& g,
                                                                   const Rational& a) {
    using detail::int128;
    const std::int64_t p = a.num();
    const std::int64_t q = a.den();
    const std::int64_t scale = 2 * static_cast<std::int64_t>(g.node_count) + 2;

    TildeGraph t = build_tilde(g);
    Multigraph weighted = t.graph;
    for (std::size_t k = 0; k < weighted.edges.size(); ++k) {
        if (t.info[k].kind == TildeKind::Origin) {
            int128 shifted = int128(q) * g.edges[t.info[k].origin_edge].weight - p;
            weighted.edges[k].w =
                detail::narrow64(int128(scale) * shifted - 1, "composite edge weight");
        } else {
            weighted.edges[k].w = 0;
        }
    }

    auto factor = min_weight_two_factor(weighted);
    // the all-auxiliary 2-factor always exists
    assert(factor.has_value());
    std::vector<int> x = phi_inv(t, *factor);

    int128 total_scaled = 0;
    for (int e : x) total_scaled += int128(q) * g.edges[e].weight - p;
    Rational shifted_sum =
        Rational(detail::narrow64(total_scaled, "shifted weight sum"), q);
    return {std::move(x), shifted_sum};
}

struct IterationRecord {
    Rational shift;          // a at the start of the iteration
    std::size_t set_size;    // |X|
    Rational shifted_weight; // w^a(X)
    Rational mean_gap;       // b = w^a(X) / |X|
};

struct SolveResult {
    Path cycle;
    Rational mean;
    std::vector<IterationRecord> trace;
};

/// The shift method: start at a = max w(e); repeatedly pick a minimum
/// shifted-weight small balanced set, stop when its mean gap b reaches
/// zero, then decompose it and report a member cycle (every member attains
/// mean a). Returns nullopt when the graph has no edge-simple cycle.
inline std::optional<SolveResult> solve_min_mean_cycle(const BidirectedGraph& g) {
    if (g.edges.empty()) return std::nullopt;

    std::int64_t maxw = g.edges.front().weight;
    for (const Edge& e : g.edges) maxw = std::max(maxw, e.weight);
    Rational a(maxw);

    std::vector<IterationRecord> trace;
    const std::size_t iteration_cap = 2 * static_cast<std::size_t>(g.node_count) + 2;
    while (true) {
        assert(trace.size() < iteration_cap);
        auto [x, shifted_sum] = argmin_small_balanced(g, a);
        if (x.empty()) {
            // the empty set can only win when no cycle exists at all, and
            // then already on the first iteration
            assert(trace.empty());
            return std::nullopt;
        }
        Rational b = shifted_sum / Rational(static_cast<std::int64_t>(x.size()));
        trace.push_back({a, x.size(), shifted_sum, b});
        assert(!(b > Rational(0)));
        if (b.is_zero()) {
            std::vector<Path> members = decompose_balanced(g, x);
            assert(!members.empty());
            const Path* best = nullptr;
            for (const Path& c : members) {
                assert(cycle_mean(g, c) == a);
                if (!best || c.size() < best->size() ||
                    (c.size() == best->size() && canonical_less(g, canonical_cycle(g, c),
                                                                canonical_cycle(g, *best))))
                    best = &c;
            }
            return SolveResult{canonical_cycle(g, *best), a, std::move(trace)};
        }
        a = mean_of_set(g, x); // a + b under the original weights
    }
}

} // namespace mmc
