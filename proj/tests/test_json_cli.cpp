#include <doctest.h>

#include "chorded/json_io.hpp"
#include "test_util.hpp"

using namespace chorded;
using namespace testutil;

TEST_CASE("witness JSON schema and round trip") {
    Graph k4 = make_complete(4);
    auto w = *find_chorded_cycle(k4);
    json j = to_json(w);
    CHECK(j.contains("cycle"));
    CHECK(j.contains("chords"));
    CHECK(j["chords"].is_array());
    CHECK(j["chords"][0].is_array());

    auto back = cycle_from_json(j);
    CHECK(back.cycle == w.cycle);
    CHECK(back.chords == w.chords);
    CHECK(back.validate(k4));
}

TEST_CASE("packing JSON round trip") {
    Graph k8 = make_complete(8);
    auto r = max_packing(k8, 2);
    REQUIRE(r.status == PackStatus::found);
    json j = to_json(r);
    CHECK(j["status"] == "found");
    CHECK(j["total_vertices"] == 8);

    Packing p = packing_from_json(j);
    CHECK(p.total_vertices == 8);
    CHECK(p.validate(k8));
}

TEST_CASE("deterministic serialization") {
    Graph pet = petersen();
    auto w1 = to_json(*find_chorded_cycle(pet)).dump();
    auto w2 = to_json(*find_chorded_cycle(pet)).dump();
    CHECK(w1 == w2);

    auto s1 = sigma(pet, 2);
    auto s2 = sigma(pet, 2);
    CHECK(to_json(s1).dump() == to_json(s2).dump());
}

TEST_CASE("infinity is encoded as a string, never a sentinel number") {
    auto s = sigma(make_complete(4), 2);
    json j = to_json(s);
    CHECK(j["value"].is_string());
    CHECK(j["value"] == "infinity");

    auto fin = sigma(make_cycle(5), 2);
    CHECK(to_json(fin)["value"].is_number());
}

TEST_CASE("decomposition JSON shapes") {
    Graph k23 = make_complete_bipartite(2, 3);
    auto ed = std::get<EarDecomposition>(ear_decompose(k23, {0, 1, 2, 3, 4}));
    json j = to_json(ed);
    CHECK(j.contains("base_cycle"));
    REQUIRE(j["ears"].size() == 1);
    CHECK(j["ears"][0].contains("a"));
    CHECK(j["ears"][0].contains("interior"));
    CHECK(j["ears"][0].contains("b"));

    Graph g1 = gen_g1(2);
    auto d = std::get<BlockPathDecomposition>(block_path_decompose(g1));
    json jd = to_json(d);
    CHECK(jd["blocks"].size() == 2);
    CHECK(jd["connectors"].size() == 1);
    CHECK(jd["pendants"].empty());

    auto s = nonchorded_independent_low_degree(g1);
    json js = to_json(s);
    CHECK(js.contains("I"));
    CHECK(js.contains("S"));
    CHECK(js["guarantee_num"] == 12);
    CHECK(js["guarantee_den"] == 12);
}
