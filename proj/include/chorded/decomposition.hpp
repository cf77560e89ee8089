#ifndef CHORDED_DECOMPOSITION_HPP
#define CHORDED_DECOMPOSITION_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chorded/chordality.hpp"
#include "chorded/graph.hpp"

namespace chorded {

// Biconnected components with >= 3 vertices; single-edge components are
// reported as bridges.
struct BlockCut {
    std::vector<std::vector<int>> blocks;        // sorted vertex sets, sorted between blocks
    std::vector<std::pair<int, int>> bridges;
    std::vector<int> articulation_points;
};

BlockCut block_cut(const Graph& g);

// Whether the subgraph induced on vs is biconnected (>= 3 vertices, connected,
// no articulation point).
bool is_biconnected_subset(const Graph& g, const std::vector<int>& vs);

struct TriangleFreeResult {
    bool triangle_free = false;
    std::array<int, 3> triangle{-1, -1, -1};  // evidence when not triangle-free
};

// Every non-chorded biconnected graph of order >= 4 is triangle-free; a found
// triangle is evidence the precondition failed.
TriangleFreeResult triangle_free_check(const Graph& g, const std::vector<int>& block);

struct EarDecomposition {
    struct Ear {
        int a = -1;
        std::vector<int> interior;  // nonempty: ears have >= 2 edges
        int b = -1;
    };
    std::vector<int> base_cycle;
    std::vector<Ear> ears;

    bool validate(const Graph& g, const std::vector<int>& block, std::string* why = nullptr) const;
};

// Greedy ear decomposition of a biconnected induced subgraph of order >= 4:
// base cycle through the smallest edge, then repeatedly cut the minimal arc
// containing the smallest unused edge out of a cycle through it and the
// smallest used edge. A single-edge arc is a chord: the chorded-cycle witness
// it yields is returned instead.
std::variant<EarDecomposition, CycleWithChords> ear_decompose(const Graph& g,
                                                              const std::vector<int>& block);

struct EarStemCertificate {
    std::vector<int> per_ear_stem;  // one interior vertex of block-degree 2 per ear
    std::vector<int> base_stems;    // two base-cycle vertices off all ears, degree 2
};

// Degree inspection backing the stem guarantee; throws soundness_error if the
// guaranteed vertices are missing.
EarStemCertificate ear_stem_certificate(const Graph& g, const std::vector<int>& block,
                                        const EarDecomposition& ed);

struct StemBoundReport {
    long stem_count = 0;
    long bound_num = 0;  // bound = (|b|-2)/3 + 2 as a rational bound_num/bound_den
    long bound_den = 3;
    bool pass = false;
};

StemBoundReport stem_bound_check(const Graph& g, const std::vector<int>& block);

struct BlockPathDecomposition {
    struct Path {
        int a = -1;                 // attachment in the growing subgraph
        int b = -1;                 // attachment in the new block, or a leaf (pendant)
        std::vector<int> vertices;  // full vertex sequence a..b; single vertex when a == b
    };
    std::vector<std::vector<int>> blocks;  // B_1..B_k in attachment order
    std::vector<Path> connectors;          // connector i attaches blocks[i]  (i >= 1)
    std::vector<Path> pendants;            // pendant paths ending at a leaf of the host

    bool validate(const Graph& g, std::string* why = nullptr) const;
};

// Decomposition of a connected graph with at least one cycle into blocks,
// connector paths and pendant paths. Chorded input yields the witness
// instead.
std::variant<BlockPathDecomposition, CycleWithChords> block_path_decompose(const Graph& g);

}  // namespace chorded

#endif
