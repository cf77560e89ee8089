#ifndef CHORDED_JSON_IO_HPP
#define CHORDED_JSON_IO_HPP

#include <json.hpp>

#include "chorded/chordality.hpp"
#include "chorded/decomposition.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "chorded/low_degree.hpp"
#include "chorded/packing.hpp"

namespace chorded {

using json = nlohmann::json;

json to_json(const CycleWithChords& w);        // {"cycle":[...], "chords":[[u,v],...]}
json to_json(const VertexOrdering& o);
json to_json(const DenseCoreWitness& w);
json to_json(const Tripartition& t);
json to_json(const BlockCut& bc);
json to_json(const EarDecomposition& ed);      // {"base_cycle":[...], "ears":[{"a","interior","b"},...]}
json to_json(const EarStemCertificate& c);
json to_json(const StemBoundReport& r);
json to_json(const BlockPathDecomposition& d); // {"blocks":[...], "connectors":[...], "pendants":[...]}
json to_json(const LowDegreeIndependentSet& s); // {"I":[...], "S":[...], "guarantee_num","guarantee_den"}
json to_json(const Lemma2DeepReport& r);
json to_json(const DegreeSumStat& s);          // value is a number or "infinity"
json to_json(const Packing& p);
json to_json(const PackResult& r);             // {"k","cycles","total_vertices","status","max_found"}
json to_json(const TheoremInstance& ti);
json to_json(const PriorTheoremsReport& r);
json to_json(const EdgeBoundReport& r);
json to_json(const MinimalPackingReport& r);
json to_json(const ConjectureSweepReport& r);
json to_json(const SweepReport& r);

CycleWithChords cycle_from_json(const json& j);
Packing packing_from_json(const json& j);

}  // namespace chorded

#endif
