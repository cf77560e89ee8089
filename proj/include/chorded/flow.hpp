#ifndef CHORDED_FLOW_HPP
#define CHORDED_FLOW_HPP

#include <optional>
#include <utility>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

// Two internally vertex-disjoint u-v paths, each returned as a vertex
// sequence u..v. With skip_direct_edge the edge uv (if present) is not used,
// so both paths have length >= 2. Unit vertex capacities via node splitting;
// deterministic (BFS over sorted adjacency).
std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_disjoint_paths(const Graph& g, int u, int v, bool skip_direct_edge);

// A cycle containing both edges f and e (vertex sequence, not closed).
// Edges may share one endpoint. Returns nullopt when no such cycle exists.
std::optional<std::vector<int>> cycle_through_edges(const Graph& g,
                                                    std::pair<int, int> f,
                                                    std::pair<int, int> e);

// Lexicographically least shortest path from s to t, or nullopt. banned
// vertices are avoided entirely.
std::optional<std::vector<int>> lex_shortest_path(const Graph& g, int s, int t,
                                                  const std::vector<int>& banned = {});

}  // namespace chorded

#endif
