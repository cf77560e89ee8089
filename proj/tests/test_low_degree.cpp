#include <doctest.h>

#include "chorded/chordality.hpp"
#include "chorded/families.hpp"
#include "chorded/low_degree.hpp"
#include "test_util.hpp"

using namespace chorded;
using namespace testutil;

namespace {

void check_output(const Graph& h, const LowDegreeIndependentSet& s) {
    for (int v : s.vertices) CHECK(h.degree(v) <= 2);
    for (size_t i = 0; i < s.vertices.size(); ++i)
        for (size_t j = i + 1; j < s.vertices.size(); ++j)
            CHECK(!h.has_edge(s.vertices[i], s.vertices[j]));
    for (int v : s.s_set) CHECK(h.degree(v) <= 2);
    // |I| >= ceil(guarantee)
    long lhs = static_cast<long>(s.vertices.size()) * s.guarantee_den;
    CHECK(lhs >= s.guarantee_num);
}

}  // namespace

TEST_CASE("tree low-degree vertices") {
    CHECK(tree_low_degree_vertices(make_path(4)) == std::vector<int>{0, 1, 2, 3});
    auto star = tree_low_degree_vertices(make_star(5));
    CHECK(star == std::vector<int>{1, 2, 3, 4, 5});  // the five leaves
    CHECK(star.size() >= 4);                         // n/2 + 1 = 4

    CHECK_THROWS_AS(tree_low_degree_vertices(make_cycle(4)), precondition_error);
    CHECK_THROWS_AS(tree_low_degree_vertices(Graph(3)), precondition_error);
    CHECK_THROWS_AS(tree_low_degree_vertices(Graph(1)), precondition_error);
}

TEST_CASE("tree independent low-degree set") {
    auto p4 = tree_independent_low_degree(make_path(4));
    CHECK(p4.vertices.size() == 2);  // alternating vertices of the path
    check_output(make_path(4), p4);
    CHECK(p4.guarantee_num == 4);
    CHECK(p4.guarantee_den == 4);

    auto star = tree_independent_low_degree(make_star(5));
    CHECK(star.vertices == std::vector<int>{1, 2, 3, 4, 5});
    check_output(make_star(5), star);
}

TEST_CASE("tree bounds hold for every labeled tree up to n = 8") {
    for (int n = 2; n <= 8; ++n) {
        long count = for_each_labeled_tree(n, [&](const Graph& t) {
            auto low = tree_low_degree_vertices(t);
            REQUIRE(2 * static_cast<long>(low.size()) >= n + 2);  // |L| >= n/2 + 1
            auto s = tree_independent_low_degree(t);
            REQUIRE(4 * static_cast<long>(s.vertices.size()) >= n);  // |I| >= n/4
            for (size_t i = 0; i < s.vertices.size(); ++i)
                for (size_t j = i + 1; j < s.vertices.size(); ++j)
                    REQUIRE(!t.has_edge(s.vertices[i], s.vertices[j]));
            return;
        });
        long expect = 1;  // n^(n-2)
        for (int i = 0; i < n - 2; ++i) expect *= n;
        REQUIRE(count == expect);
    }
}

TEST_CASE("non-chorded extraction on the named instances") {
    auto c6 = nonchorded_independent_low_degree(make_cycle(6));
    CHECK(c6.vertices == std::vector<int>{0, 2, 4});
    check_output(make_cycle(6), c6);

    Graph k23 = make_complete_bipartite(2, 3);
    auto sk = nonchorded_independent_low_degree(k23);
    CHECK(sk.vertices == std::vector<int>{2, 3, 4});  // the three degree-2 vertices
    CHECK(sk.guarantee_num == 5);
    CHECK(sk.guarantee_den == 12);
    check_output(k23, sk);

    Graph g1 = gen_g1(2);
    auto sg = nonchorded_independent_low_degree(g1);
    CHECK(sg.vertices.size() >= 1);  // guarantee: ceil(12/12)
    CHECK(sg.vertices.size() >= 4);  // the construction reaches the n/6 + 2 maximum here
    check_output(g1, sg);

    CHECK_THROWS_AS(nonchorded_independent_low_degree(make_complete(4)), chorded_input_error);
    try {
        nonchorded_independent_low_degree(make_complete(4));
    } catch (const chorded_input_error& e) {
        CHECK(e.witness.validate(make_complete(4)));
    }
}

TEST_CASE("extraction handles disconnected input componentwise") {
    // C6 and a path and an isolated vertex
    Graph g = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {6, 7}, {7, 8}});
    auto s = nonchorded_independent_low_degree(g);
    check_output(g, s);
    CHECK(s.vertices.size() >= 3 + 2 + 1);  // cycle part + path part + isolated
}

TEST_CASE("extraction and claims hold exhaustively on connected non-chorded graphs") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded_connected, [&](const Graph& g) {
            auto s = nonchorded_independent_low_degree(g);  // self-verifies its guarantees
            REQUIRE(static_cast<long>(s.vertices.size()) >= (n + 11) / 12);
            if (g.edge_count() >= g.order())  // cyclic: |S| >= n/6
                REQUIRE(6 * static_cast<long>(s.s_set.size()) >= n);
            return true;
        });
    }
}

TEST_CASE("deep check replays the block growth bound") {
    Graph g1 = gen_g1(2);
    auto rep = low_degree_deep_check(g1);
    CHECK(rep.all_ok);
    CHECK(rep.steps.size() == 2);  // two blocks

    for (int n = 3; n <= 7; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded_connected, [&](const Graph& g) {
            if (g.edge_count() < g.order()) return true;
            auto r = low_degree_deep_check(g);
            REQUIRE(r.all_ok);
            return true;
        });
    }
}
