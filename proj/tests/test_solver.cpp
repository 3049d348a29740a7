#include <catch2/catch_amalgamated.hpp>

#include "mmcycle/oracles.hpp"
#include "mmcycle/solver.hpp"
#include "helpers.hpp"

using namespace mmc;

TEST_CASE("hand instances") {
    SECTION("leaving/entering pair") {
        BidirectedGraph g = make_bigraph(2, {double_leaving(1, 2, 1), double_entering(1, 2, 1)});
        auto r = solve_min_mean_cycle(g);
        REQUIRE(r);
        CHECK(r->mean == Rational(1));
        CHECK(r->cycle.size() == 2);
    }
    SECTION("directed triangle") {
        BidirectedGraph g = make_bigraph(3, {arc(1, 2, 1), arc(2, 3, 2), arc(3, 1, 3)});
        auto r = solve_min_mean_cycle(g);
        REQUIRE(r);
        CHECK(r->mean == Rational(2));
        CHECK(r->cycle.size() == 3);
    }
    SECTION("negative loop pair wins") {
        BidirectedGraph g = make_bigraph(2, {arc(1, 2, 1), arc(2, 1, 1),
                                             double_entering(2, 2, -4),
                                             double_leaving(2, 2, -4)});
        auto r = solve_min_mean_cycle(g);
        REQUIRE(r);
        CHECK(r->mean == Rational(-4));
        REQUIRE(r->cycle.size() == 2);
        CHECK(r->cycle.front().edge >= 2);
    }
    SECTION("no cycle") {
        BidirectedGraph g = make_bigraph(3, {arc(1, 2, 1), arc(1, 3, 1), arc(2, 3, 1)});
        CHECK_FALSE(solve_min_mean_cycle(g).has_value());
        BidirectedGraph empty = make_bigraph(2, {});
        CHECK_FALSE(solve_min_mean_cycle(empty).has_value());
    }
}

TEST_CASE("solver equals brute force on random instances") {
    std::mt19937 rng(11001);
    for (int it = 0; it < 300; ++it) {
        BidirectedGraph g = testutil::random_bigraph(rng, 5, 9);
        auto got = solve_min_mean_cycle(g);
        auto want = brute_force_min_mean(g);
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(got->mean == want->mean);
        CHECK(is_cycle(g, got->cycle));
        CHECK(is_edge_simple(got->cycle));
        CHECK(cycle_mean(g, got->cycle) == got->mean);
        // the witness is a small cycle in canonical form (which particular
        // optimal cycle is returned depends on the terminal decomposition)
        CHECK(is_small_cycle(g, got->cycle));
        CHECK(canonical_cycle(g, got->cycle) == got->cycle);
    }
}

TEST_CASE("iteration trace obeys the method's bounds") {
    std::mt19937 rng(11002);
    for (int it = 0; it < 200; ++it) {
        BidirectedGraph g = testutil::random_bigraph(rng, 6, 12);
        auto r = solve_min_mean_cycle(g);
        if (!r) continue;
        const auto& tr = r->trace;
        REQUIRE_FALSE(tr.empty());
        CHECK(tr.size() <= static_cast<std::size_t>(2 * g.node_count + 1));
        for (std::size_t i = 0; i < tr.size(); ++i) {
            CHECK(tr[i].mean_gap <= Rational(0));
            CHECK(tr[i].shifted_weight <= Rational(0));
            if (i + 2 < tr.size()) CHECK(tr[i + 1].set_size < tr[i].set_size);
            if (i > 0) CHECK(tr[i].shift.den() <= 2 * g.node_count);
        }
        CHECK(tr.back().mean_gap == Rational(0));
        CHECK(tr.back().shift == r->mean);
    }
}

TEST_CASE("adding a constant to every weight shifts the optimum by it") {
    std::mt19937 rng(11003);
    for (int it = 0; it < 120; ++it) {
        BidirectedGraph g = testutil::random_bigraph(rng, 5, 9);
        auto base = solve_min_mean_cycle(g);
        std::int64_t c = testutil::rand_weight(rng, -7, 7);
        BidirectedGraph shifted = g;
        for (auto& e : shifted.edges) e.weight += c;
        auto moved = solve_min_mean_cycle(shifted);
        REQUIRE(base.has_value() == moved.has_value());
        if (!base) continue;
        CHECK(moved->mean == base->mean + Rational(c));
        CHECK(moved->cycle == base->cycle);
    }
}

TEST_CASE("scaling every weight scales the optimum") {
    std::mt19937 rng(11004);
    for (int it = 0; it < 80; ++it) {
        BidirectedGraph g = testutil::random_bigraph(rng, 5, 8);
        auto base = solve_min_mean_cycle(g);
        if (!base) continue;
        BidirectedGraph scaled = g;
        for (auto& e : scaled.edges) e.weight *= 3;
        auto r = solve_min_mean_cycle(scaled);
        REQUIRE(r);
        CHECK(r->mean == base->mean * Rational(3));
    }
}

TEST_CASE("argmin subproblem equals subset enumeration") {
    std::mt19937 rng(11005);
    int done = 0;
    while (done < 120) {
        BidirectedGraph g = testutil::random_bigraph(rng, 4, 8);
        auto sets = testutil::all_balanced_sets(g, /*small_only=*/true);
        if (sets.empty()) continue;
        Rational a(testutil::rand_weight(rng, -6, 6), 1 + (done % 3));
        auto [x, got] = argmin_small_balanced(g, a);
        // reference optimum over all small balanced sets, the empty set
        // included; ties prefer the larger set
        Rational best(0);
        std::size_t best_size = 0;
        for (const auto& s : sets) {
            Rational w(0);
            for (int e : s) w = w + shifted_weight(g, e, a);
            if (w < best || (w == best && s.size() > best_size)) {
                best = w;
                best_size = s.size();
            }
        }
        REQUIRE(is_balanced(g, x));
        REQUIRE(is_small(g, x));
        Rational w(0);
        for (int e : x) w = w + shifted_weight(g, e, a);
        CHECK(w == got);
        CHECK(got == best);
        CHECK(x.size() == best_size);
        ++done;
    }
}
