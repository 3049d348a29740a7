#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "mmcycle/decompose.hpp"
#include "mmcycle/oracles.hpp"
#include "helpers.hpp"

using namespace mmc;

namespace {

// Checks that `parts` is an exact partition of `x` into small edge-simple
// cycles of g.
void check_partition(const BidirectedGraph& g, const std::vector<int>& x,
                     const std::vector<Path>& parts) {
    std::vector<int> covered;
    for (const Path& c : parts) {
        REQUIRE_FALSE(c.empty());
        CHECK(is_cycle(g, c));
        CHECK(is_edge_simple(c));
        CHECK(is_small_cycle(g, c));
        for (Step s : c) covered.push_back(s.edge);
    }
    std::sort(covered.begin(), covered.end());
    std::vector<int> want(x);
    std::sort(want.begin(), want.end());
    CHECK(covered == want);
}

} // namespace

TEST_CASE("decomposing a single small cycle returns it unchanged in substance") {
    BidirectedGraph g = make_bigraph(2, {double_leaving(1, 2, 1), double_entering(1, 2, 1)});
    auto parts = decompose_balanced(g, {0, 1});
    REQUIRE(parts.size() == 1);
    check_partition(g, {0, 1}, parts);
}

TEST_CASE("all balanced subsets of random graphs decompose exactly") {
    std::mt19937 rng(8301);
    for (int it = 0; it < 120; ++it) {
        BidirectedGraph g = testutil::random_bigraph(rng, 4, 7);
        for (const auto& x : testutil::all_balanced_sets(g, /*small_only=*/false)) {
            auto parts = decompose_balanced(g, x);
            check_partition(g, x, parts);
        }
    }
}

TEST_CASE("unions of edge-disjoint cycles decompose exactly") {
    std::mt19937 rng(8302);
    int done = 0;
    while (done < 150) {
        BidirectedGraph g = testutil::random_bigraph(rng, 6, 12, -5, 5, /*min_n=*/3);
        std::vector<Path> cycles;
        try {
            cycles = enumerate_edge_simple_cycles(g, 12);
        } catch (const budget_error&) {
            continue;
        }
        if (cycles.empty()) continue;
        std::shuffle(cycles.begin(), cycles.end(), rng);
        std::vector<char> taken(static_cast<std::size_t>(g.m()), 0);
        std::vector<int> x;
        for (const Path& c : cycles) {
            bool free = true;
            for (Step s : c)
                if (taken[static_cast<std::size_t>(s.edge)]) { free = false; break; }
            if (!free) continue;
            for (Step s : c) {
                taken[static_cast<std::size_t>(s.edge)] = 1;
                x.push_back(s.edge);
            }
        }
        std::sort(x.begin(), x.end());
        REQUIRE(is_balanced(g, x));
        check_partition(g, x, decompose_balanced(g, x));
        ++done;
    }
}

TEST_CASE("some member of a decomposition has mean at most the set mean") {
    std::mt19937 rng(8303);
    int done = 0;
    while (done < 100) {
        BidirectedGraph g = testutil::random_bigraph(rng, 4, 8);
        for (const auto& x : testutil::all_balanced_sets(g, /*small_only=*/false)) {
            Rational set_mean(set_weight(g, x), static_cast<std::int64_t>(x.size()));
            auto parts = decompose_balanced(g, x);
            Rational best = cycle_mean(g, parts.front());
            for (const Path& c : parts) best = std::min(best, cycle_mean(g, c));
            CHECK(best <= set_mean);
            ++done;
        }
    }
}
