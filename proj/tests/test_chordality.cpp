#include <doctest.h>

#include <bit>

#include "chorded/chordality.hpp"
#include "test_util.hpp"

using namespace chorded;
using namespace testutil;

TEST_CASE("find_chorded_cycle on the basic instances") {
    Graph k4 = make_complete(4);
    auto w = find_chorded_cycle(k4);
    REQUIRE(w.has_value());
    std::string why;
    CHECK(w->validate(k4, &why));
    INFO(why);
    CHECK(!w->chords.empty());
    CHECK(w->cycle.size() == 4);

    CHECK(!find_chorded_cycle(make_cycle(7)).has_value());

    Graph pet = petersen();
    auto wp = find_chorded_cycle(pet);
    REQUIRE(wp.has_value());
    CHECK(wp->validate(pet));
    CHECK(!is_non_chorded_bruteforce(pet));  // oracle agrees a chorded cycle exists

    // determinism: same witness every time
    auto wp2 = find_chorded_cycle(pet);
    CHECK(wp->cycle == wp2->cycle);
    CHECK(wp->chords == wp2->chords);
}

TEST_CASE("brute-force oracle") {
    CHECK(!is_non_chorded_bruteforce(make_complete(4)));
    CHECK(is_non_chorded_bruteforce(make_complete_bipartite(2, 3)));
    CHECK(is_non_chorded_bruteforce(make_cycle(7)));
    CHECK_THROWS_AS(is_non_chorded_bruteforce(Graph(13)), precondition_error);
}

TEST_CASE("detector agrees with the oracle on every graph up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, GraphFilter::all, [&](const Graph& g) {
            auto w = find_chorded_cycle(g);
            REQUIRE(w.has_value() == !is_non_chorded_bruteforce(g));
            if (w) {
                std::string why;
                REQUIRE(w->validate(g, &why));
            }
            return true;
        });
    }
}

TEST_CASE("minimum degree 3 forces a chorded cycle (exhaustive small)") {
    for (int n = 4; n <= 6; ++n) {
        enumerate_graphs(n, GraphFilter::all, [&](const Graph& g) {
            int min_deg = n;
            for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
            if (min_deg >= 3) REQUIRE(find_chorded_cycle(g).has_value());
            return true;
        });
    }
}

TEST_CASE("chorded cycle from two heavily joined paths") {
    // P1 = 0-1-2-3, P2 = 4-5-6, five cross edges
    Graph g = Graph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {0, 4}, {1, 4}, {2, 5}, {3, 6}, {0, 6}});
    std::vector<int> p1{0, 1, 2, 3}, p2{4, 5, 6};
    auto w = chorded_cycle_from_two_paths(g, p1, p2);
    std::string why;
    CHECK(w.validate(g, &why));
    INFO(why);
    CHECK(!w.chords.empty());
    CHECK(w.cycle.size() < 7);  // omits at least one vertex of the union

    SUBCASE("size precondition") {
        Graph h = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5},
                                        {0, 4}, {2, 4}});
        CHECK_THROWS_AS(chorded_cycle_from_two_paths(h, {0, 1, 2}, {3, 4, 5}), precondition_error);
    }
    SUBCASE("edge-count precondition") {
        Graph h = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {0, 4}, {1, 5},
                                        {2, 6}, {3, 4}});
        CHECK_THROWS_AS(chorded_cycle_from_two_paths(h, {0, 1, 2, 3}, {4, 5, 6}),
                        precondition_error);
    }
    SUBCASE("disjointness precondition") {
        CHECK_THROWS_AS(chorded_cycle_from_two_paths(g, {0, 1, 2}, {2, 5, 6}), precondition_error);
    }
    SUBCASE("paths must be paths") {
        CHECK_THROWS_AS(chorded_cycle_from_two_paths(g, {0, 2, 1, 3}, {4, 5, 6}),
                        precondition_error);
    }
}

TEST_CASE("lemma 5 search succeeds on every qualifying instance at n = 7") {
    // all ways to add 5 cross edges between P4 and P3: exhaustive over subsets
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 7; ++v) cross.emplace_back(u, v);
    std::vector<std::pair<int, int>> base{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}};
    const int total = static_cast<int>(cross.size());
    long tried = 0;
    for (int mask = 0; mask < (1 << total); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 5) continue;
        auto edges = base;
        for (int i = 0; i < total; ++i)
            if ((mask >> i) & 1) edges.push_back(cross[i]);
        Graph g = Graph::from_edges(7, edges);
        auto w = chorded_cycle_from_two_paths(g, {0, 1, 2, 3}, {4, 5, 6});
        REQUIRE(w.validate(g));
        REQUIRE(w.cycle.size() < 7);
        ++tried;
    }
    CHECK(tried == 792);  // C(12,5)
}

TEST_CASE("edge bound 2n-4") {
    auto r = edge_bound_check(make_complete_bipartite(2, 3));
    CHECK(r.m == 6);
    CHECK(r.bound == 6);  // tight
    CHECK(r.within);

    auto r4 = edge_bound_check(make_cycle(4));
    CHECK(r4.m == 4);
    CHECK(r4.bound == 4);
    CHECK(r4.within);

    // the triangle exceeds 2n-4 and is rejected up front
    CHECK_THROWS_AS(edge_bound_check(make_cycle(3)), precondition_error);
    CHECK_THROWS_AS(edge_bound_check(make_complete(4)), chorded_input_error);
}
