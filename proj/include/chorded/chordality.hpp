#ifndef CHORDED_CHORDALITY_HPP
#define CHORDED_CHORDALITY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

// A cycle plus chord edges, all in some host graph. Used both as a
// chordality witness (chords nonempty) and as a packing member.
struct CycleWithChords {
    std::vector<int> cycle;                    // cyclic vertex order
    std::vector<std::pair<int, int>> chords;   // edges between non-consecutive cycle vertices

    bool validate(const Graph& g, std::string* why = nullptr) const;
};

// Thrown when an operation requiring non-chorded input receives a chorded
// graph; carries the offending cycle.
class chorded_input_error : public precondition_error {
public:
    chorded_input_error(const std::string& what, CycleWithChords w)
        : precondition_error(what), witness(std::move(w)) {}
    CycleWithChords witness;
};

// For each edge uv in lexicographic order, tests for two internally
// vertex-disjoint u-v paths in g - uv; their union plus uv is a cycle with
// chord uv. First witness wins.
std::optional<CycleWithChords> find_chorded_cycle(const Graph& g);

// Independent oracle: enumerates all simple cycles and checks each for a
// chord. Exponential; capped at n <= 12.
bool is_non_chorded_bruteforce(const Graph& g);

// Canonical simple-cycle enumeration: each cycle visited once, rooted at its
// smallest vertex with the smaller neighbor side first. Cycles of length
// > max_len are not expanded (max_len = 0 means no cap). Visitor returns
// false to stop. The allowed mask restricts the scan to a vertex subset.
void scan_cycles(const Graph& g, int max_len,
                 const std::function<bool(std::span<const int>)>& visit);
void scan_cycles(const Graph& g, int max_len,
                 const std::function<bool(std::span<const int>)>& visit,
                 uint64_t allowed);

// All chords of the given cycle in g.
std::vector<std::pair<int, int>> cycle_chords(const Graph& g, std::span<const int> cycle);

// Given vertex-disjoint paths p1, p2 in g with |p1|+|p2| >= 7 and at least
// five g-edges between them, returns a chorded cycle inside <V(p1) u V(p2)>
// omitting at least one vertex of the union. Exhaustive search; prefers the
// witness omitting the most vertices, ties broken lexicographically.
CycleWithChords chorded_cycle_from_two_paths(const Graph& g,
                                             const std::vector<int>& p1,
                                             const std::vector<int>& p2);

struct EdgeBoundReport {
    long n = 0;
    long m = 0;
    long bound = 0;  // 2n - 4
    bool within = false;
};

// Checks m <= 2n - 4 for a non-chorded graph, n >= 4. The bound fails for
// the triangle (n = 3, m = 3 > 2), so n < 4 is rejected.
EdgeBoundReport edge_bound_check(const Graph& g);

}  // namespace chorded

#endif
