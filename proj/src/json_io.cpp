#include "chorded/json_io.hpp"

namespace chorded {

namespace {

json pairs_to_json(const std::vector<std::pair<int, int>>& ps) {
    json out = json::array();
    for (auto [u, v] : ps) out.push_back(json::array({u, v}));
    return out;
}

std::vector<std::pair<int, int>> pairs_from_json(const json& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return out;
}

const char* status_name(PackStatus s) {
    switch (s) {
        case PackStatus::found: return "found";
        case PackStatus::exhausted: return "exhausted";
        case PackStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace

json to_json(const CycleWithChords& w) {
    return json{{"cycle", w.cycle}, {"chords", pairs_to_json(w.chords)}};
}

json to_json(const VertexOrdering& o) {
    return json{{"order", o.order}, {"max_back_degree", o.max_back_degree}};
}

json to_json(const DenseCoreWitness& w) { return json{{"dense_core", w.vertices}}; }

json to_json(const Tripartition& t) { return json{{"color", t.color}}; }

json to_json(const BlockCut& bc) {
    return json{{"blocks", bc.blocks},
                {"bridges", pairs_to_json(bc.bridges)},
                {"articulation_points", bc.articulation_points}};
}

json to_json(const EarDecomposition& ed) {
    json ears = json::array();
    for (const auto& e : ed.ears)
        ears.push_back(json{{"a", e.a}, {"interior", e.interior}, {"b", e.b}});
    return json{{"base_cycle", ed.base_cycle}, {"ears", ears}};
}

json to_json(const EarStemCertificate& c) {
    return json{{"per_ear_stem", c.per_ear_stem}, {"base_stems", c.base_stems}};
}

json to_json(const StemBoundReport& r) {
    return json{{"stem_count", r.stem_count},
                {"bound_num", r.bound_num},
                {"bound_den", r.bound_den},
                {"pass", r.pass}};
}

json to_json(const BlockPathDecomposition& d) {
    auto path_json = [](const BlockPathDecomposition::Path& p) {
        return json{{"a", p.a}, {"vertices", p.vertices}, {"b", p.b}};
    };
    json connectors = json::array(), pendants = json::array();
    for (const auto& p : d.connectors) connectors.push_back(path_json(p));
    for (const auto& p : d.pendants) pendants.push_back(path_json(p));
    return json{{"blocks", d.blocks}, {"connectors", connectors}, {"pendants", pendants}};
}

json to_json(const LowDegreeIndependentSet& s) {
    return json{{"I", s.vertices},
                {"S", s.s_set},
                {"guarantee_num", s.guarantee_num},
                {"guarantee_den", s.guarantee_den}};
}

json to_json(const Lemma2DeepReport& r) {
    json steps = json::array();
    for (const auto& st : r.steps)
        steps.push_back(json{{"f_order", st.f_order}, {"s_count", st.s_count}, {"ok", st.ok}});
    return json{{"steps", steps}, {"all_ok", r.all_ok}};
}

json to_json(const DegreeSumStat& s) {
    json out{{"t", s.t}};
    if (s.value) {
        out["value"] = *s.value;
        out["witness"] = s.witness;
    } else {
        out["value"] = "infinity";
    }
    return out;
}

json to_json(const Packing& p) {
    json cycles = json::array();
    for (const auto& c : p.cycles) cycles.push_back(to_json(c));
    return json{{"cycles", cycles}, {"total_vertices", p.total_vertices}};
}

json to_json(const PackResult& r) {
    json out{{"status", status_name(r.status)}, {"max_found", r.max_found}};
    json cycles = json::array();
    for (const auto& c : r.packing.cycles) cycles.push_back(to_json(c));
    out["cycles"] = cycles;
    out["total_vertices"] = r.packing.total_vertices;
    return out;
}

json to_json(const TheoremInstance& ti) {
    json out{{"k", ti.k},
             {"t", ti.t},
             {"n", ti.n},
             {"order_threshold", ti.order_threshold},
             {"degree_threshold", ti.degree_threshold},
             {"order_ok", ti.order_ok},
             {"degree_ok", ti.degree_ok}};
    if (ti.sigma_value)
        out["sigma"] = *ti.sigma_value;
    else
        out["sigma"] = "infinity";
    return out;
}

json to_json(const PriorTheoremsReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"theorem", e.theorem},
                               {"applies", e.applies},
                               {"status", e.applies ? status_name(e.status) : "skipped"}});
    return json{{"entries", entries},
                {"any_applies", r.any_applies},
                {"all_packed", r.all_packed},
                {"inconclusive", r.inconclusive}};
}

json to_json(const EdgeBoundReport& r) {
    return json{{"n", r.n}, {"m", r.m}, {"bound", r.bound}, {"within", r.within}};
}

json to_json(const MinimalPackingReport& r) {
    json cycles = json::array();
    for (const auto& c : r.cycles)
        cycles.push_back(json{{"length", c.length},
                              {"chord_count", c.chord_count},
                              {"crossing_ok", c.crossing_ok}});
    return json{{"cycles", cycles},
                {"max_outside_degree", r.max_outside_degree},
                {"ok", r.ok},
                {"violation", r.violation}};
}

json to_json(const ConjectureSweepReport& r) {
    return json{{"max_n", r.max_n},
                {"graphs_checked", r.graphs_checked},
                {"min_ratio_num", r.min_ratio_num},
                {"min_ratio_den", r.min_ratio_den},
                {"witnesses", r.witnesses},
                {"violations", r.violations},
                {"lemma2_failures", r.lemma2_failures}};
}

json to_json(const SweepReport& r) {
    return json{{"max_n", r.max_n},
                {"graphs_checked", r.graphs_checked},
                {"violations", r.violations},
                {"detail", r.detail}};
}

CycleWithChords cycle_from_json(const json& j) {
    CycleWithChords w;
    w.cycle = j.at("cycle").get<std::vector<int>>();
    w.chords = pairs_from_json(j.at("chords"));
    return w;
}

Packing packing_from_json(const json& j) {
    Packing p;
    for (const auto& c : j.at("cycles")) p.cycles.push_back(cycle_from_json(c));
    for (const auto& c : p.cycles) p.total_vertices += static_cast<long>(c.cycle.size());
    return p;
}

}  // namespace chorded
