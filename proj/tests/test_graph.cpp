#include <doctest.h>

#include <set>

#include "chorded/chordality.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "test_util.hpp"

using namespace chorded;
using namespace testutil;

TEST_CASE("parse accepts the edge-list grammar") {
    Graph c4 = Graph::parse("4 4\n0 1\n1 2\n2 3\n3 0");
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(0, 1));
    CHECK(c4.has_edge(3, 0));
    CHECK(!c4.has_edge(0, 2));

    Graph lone = Graph::parse("1 0");
    CHECK(lone.order() == 1);
    CHECK(lone.edge_count() == 0);

    Graph commented = Graph::parse("# a comment\n3 1\n\n0 2\n# trailing comment\n");
    CHECK(commented.edge_count() == 1);
    CHECK(commented.has_edge(0, 2));
}

TEST_CASE("parse rejects malformed input with distinct errors") {
    auto code_of = [](const char* text) {
        try {
            Graph::parse(text);
        } catch (const parse_error& e) {
            return e.code;
        }
        FAIL("expected parse_error");
        return parse_errc::malformed_header;
    };
    CHECK(code_of("") == parse_errc::malformed_header);
    CHECK(code_of("x y") == parse_errc::malformed_header);
    CHECK(code_of("4") == parse_errc::malformed_header);
    CHECK(code_of("3 3\n0 1\n1 2\n0 1") == parse_errc::duplicate_edge);
    CHECK(code_of("3 3\n0 1\n1 2\n1 0") == parse_errc::duplicate_edge);
    CHECK(code_of("3 1\n1 1") == parse_errc::self_loop);
    CHECK(code_of("3 1\n0 3") == parse_errc::id_out_of_range);
    CHECK(code_of("3 1\n0 -1") == parse_errc::id_out_of_range);
    CHECK(code_of("3 2\n0 1") == parse_errc::wrong_edge_count);
    CHECK(code_of("3 1\n0 1\n1 2") == parse_errc::wrong_edge_count);
    CHECK(code_of("3 1\n0 1 2") == parse_errc::bad_edge_line);
}

TEST_CASE("parse of serialize is the identity") {
    auto roundtrip = [](const Graph& g) {
        Graph h = Graph::parse(g.serialize());
        CHECK(h.order() == g.order());
        CHECK(h.edges() == g.edges());
    };
    roundtrip(Graph(0));
    roundtrip(Graph(3));
    roundtrip(make_cycle(5));
    roundtrip(petersen());
    roundtrip(gen_g1(3));
    roundtrip(gen_g2(2));
    enumerate_graphs(4, GraphFilter::all, [&](const Graph& g) {
        roundtrip(g);
        return true;
    });
}

TEST_CASE("from_edges validates") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), precondition_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), precondition_error);
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_graphs(3, GraphFilter::all, [](const Graph&) { return true; }) == 8);
    CHECK(enumerate_graphs(3, GraphFilter::connected, [](const Graph&) { return true; }) == 4);

    // non-chorded count on 4 vertices, frozen after cross-checking the oracle
    long by_filter =
        enumerate_graphs(4, GraphFilter::non_chorded, [](const Graph&) { return true; });
    long by_oracle = 0;
    enumerate_graphs(4, GraphFilter::all, [&](const Graph& g) {
        if (is_non_chorded_bruteforce(g)) ++by_oracle;
        return true;
    });
    CHECK(by_filter == 57);
    CHECK(by_oracle == by_filter);

    // lexicographic order of the upper-triangular bitstring, each graph once
    std::vector<long> codes;
    enumerate_graphs(4, GraphFilter::all, [&](const Graph& g) {
        long code = 0;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                code = (code << 1) | (g.has_edge(u, v) ? 1 : 0);
                ++bit;
            }
        codes.push_back(code);
        return true;
    });
    CHECK(codes.size() == 64);
    for (size_t i = 1; i < codes.size(); ++i) CHECK(codes[i - 1] < codes[i]);

    CHECK_THROWS_AS(enumerate_graphs(10, GraphFilter::all, [](const Graph&) { return true; }),
                    budget_error);
}

TEST_CASE("degeneracy ordering") {
    auto c5 = degeneracy_ordering(make_cycle(5));
    REQUIRE(std::holds_alternative<VertexOrdering>(c5));
    CHECK(std::get<VertexOrdering>(c5).max_back_degree == 2);

    auto k4 = degeneracy_ordering(make_complete(4));
    REQUIRE(std::holds_alternative<DenseCoreWitness>(k4));
    CHECK(std::get<DenseCoreWitness>(k4).vertices == std::vector<int>{0, 1, 2, 3});

    auto k23 = degeneracy_ordering(make_complete_bipartite(2, 3));
    REQUIRE(std::holds_alternative<VertexOrdering>(k23));
    CHECK(std::get<VertexOrdering>(k23).max_back_degree <= 2);
}

TEST_CASE("tripartition") {
    auto proper = [](const Graph& g, const Tripartition& t) {
        for (auto [u, v] : g.edges())
            if (t.color[u] == t.color[v]) return false;
        return true;
    };
    Graph c5 = make_cycle(5);
    auto t5 = tripartition(c5);
    CHECK(proper(c5, t5));
    CHECK(*std::max_element(t5.color.begin(), t5.color.end()) == 2);  // odd cycle needs 3

    Graph c4 = make_cycle(4);
    auto t4 = tripartition(c4);
    CHECK(proper(c4, t4));
    CHECK(*std::max_element(t4.color.begin(), t4.color.end()) <= 1);  // two colors suffice

    Graph g1 = gen_g1(2);
    CHECK(proper(g1, tripartition(g1)));

    CHECK_THROWS_AS(tripartition(make_complete(4)), precondition_error);
}

TEST_CASE("non-chorded graphs are 2-degenerate and tripartite (exhaustive small)") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded, [&](const Graph& g) {
            auto ord = degeneracy_ordering(g);
            REQUIRE(std::holds_alternative<VertexOrdering>(ord));
            REQUIRE(std::get<VertexOrdering>(ord).max_back_degree <= 2);
            auto t = tripartition(g);
            for (auto [u, v] : g.edges()) REQUIRE(t.color[u] != t.color[v]);
            return true;
        });
    }
}

TEST_CASE("a dense core always contains a chorded cycle (exhaustive small)") {
    for (int n = 4; n <= 6; ++n) {
        enumerate_graphs(n, GraphFilter::all, [&](const Graph& g) {
            auto ord = degeneracy_ordering(g);
            if (auto* w = std::get_if<DenseCoreWitness>(&ord)) {
                Graph core = g.induced_on(w->vertices);
                REQUIRE(find_chorded_cycle(core).has_value());
            }
            return true;
        });
    }
}
