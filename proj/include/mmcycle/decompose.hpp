#pragma once

#include <deque>
#include <vector>

#include "mmcycle/bigraph.hpp"

namespace mmc {

namespace detail {

// Slots are indexed 2*edge + side, side 0 = u-slot, side 1 = v-slot.
struct SlotRef {
    int edge = -1;
    int side = 0;

    int index() const { return 2 * edge + side; }
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

inline int slot_node(const BidirectedGraph& g, SlotRef s) {
    const Edge& e = g.edges[s.edge];
    return s.side == 0 ? e.u : e.v;
}

inline Sign slot_sign(const BidirectedGraph& g, SlotRef s) {
    const Edge& e = g.edges[s.edge];
    return s.side == 0 ? e.sign_u : e.sign_v;
}

/// Splits a cycle that passes some node three or more times into two
/// shorter cycles; keeps splitting until every piece is small.
inline void split_until_small(const BidirectedGraph& g, Path cycle,
                              std::vector<Path>& out) {
    std::deque<Path> work;
    work.push_back(std::move(cycle));
    while (!work.empty()) {
        Path c = std::move(work.front());
        work.pop_front();
        const std::size_t k = c.size();

        std::vector<int> cnt = node_visit_counts(g, c);
        int busy = -1;
        for (int v = 1; v <= g.node_count; ++v)
            if (cnt[v] >= 3) { busy = v; break; }
        if (busy < 0) {
            out.push_back(std::move(c));
            continue;
        }

        // Re-orient so that some visit of `busy` departs through an Out
        // slot. Every visit has one In and one Out slot among its arriving
        // and departing ends, so if all departures here are In, the
        // reversed cycle has them Out.
        auto find_out_departure = [&](const Path& p) -> int {
            for (std::size_t i = 0; i < p.size(); ++i)
                if (step_tail(g, p[i]) == busy && departure_sign(g, p[i]) == Sign::Out)
                    return static_cast<int>(i);
            return -1;
        };
        int at = find_out_departure(c);
        if (at < 0) {
            c = reversed_walk(c);
            at = find_out_departure(c);
        }
        c = rotate_path(c, static_cast<std::size_t>(at));

        // Positions 0 = i0 < i < j < k where the cycle stands at `busy`.
        std::vector<std::size_t> pos;
        std::vector<int> nodes = walk_nodes(g, c);
        for (std::size_t i = 0; i < k; ++i)
            if (nodes[i] == busy) pos.push_back(i);
        const std::size_t i = pos[1];
        const std::size_t j = pos[2];

        Path c1, c2;
        if (arrival_sign(g, c[i - 1]) == Sign::In) {
            c1.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            c2.assign(c.begin() + static_cast<std::ptrdiff_t>(i), c.end());
        } else if (arrival_sign(g, c[j - 1]) == Sign::In) {
            c1.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(j));
            c2.assign(c.begin() + static_cast<std::ptrdiff_t>(j), c.end());
        } else {
            // both middle visits arrive through Out slots: the segment
            // between them closes up on its own
            c1.assign(c.begin() + static_cast<std::ptrdiff_t>(i),
                      c.begin() + static_cast<std::ptrdiff_t>(j));
            c2.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
            c2.insert(c2.end(), c.begin() + static_cast<std::ptrdiff_t>(j), c.end());
        }
        work.push_back(std::move(c1));
        work.push_back(std::move(c2));
    }
}

} // namespace detail

/// Decomposes a balanced edge set into pairwise edge-disjoint small
/// edge-simple cycles whose edge sets partition the input exactly.
///
/// At every node, entering slots are paired with leaving slots in id
/// order; tracing the induced successor relation yields edge-disjoint
/// cycles, which are then split until small.
inline std::vector<Path> decompose_balanced(const BidirectedGraph& g,
                                            const std::vector<int>& x) {
    if (!is_balanced(g, x))
        throw std::invalid_argument("decompose_balanced: set is not balanced");

    using detail::SlotRef;
    std::vector<std::vector<SlotRef>> in_slots(g.node_count + 1);
    std::vector<std::vector<SlotRef>> out_slots(g.node_count + 1);
    for (int e : x) {
        for (int side : {0, 1}) {
            SlotRef s{e, side};
            int v = detail::slot_node(g, s);
            (detail::slot_sign(g, s) == Sign::In ? in_slots : out_slots)[v].push_back(s);
        }
    }

    // partner[slot index] = the opposite-sign slot it hands over to
    std::vector<SlotRef> partner(2 * g.edges.size(), SlotRef{});
    for (int v = 1; v <= g.node_count; ++v) {
        for (std::size_t i = 0; i < in_slots[v].size(); ++i) {
            partner[static_cast<std::size_t>(in_slots[v][i].index())] = out_slots[v][i];
            partner[static_cast<std::size_t>(out_slots[v][i].index())] = in_slots[v][i];
        }
    }

    std::vector<char> used(g.edges.size(), 0);
    std::vector<Path> cycles;
    for (int start : x) {
        if (used[static_cast<std::size_t>(start)]) continue;
        SlotRef first_dep{start, 0};
        SlotRef dep = first_dep;
        Path trail;
        do {
            used[static_cast<std::size_t>(dep.edge)] = 1;
            trail.push_back(Step{dep.edge, dep.side == 0});
            SlotRef arr{dep.edge, 1 - dep.side};
            dep = partner[static_cast<std::size_t>(arr.index())];
        } while (!(dep == first_dep));
        detail::split_until_small(g, std::move(trail), cycles);
    }
    return cycles;
}

} // namespace mmc
