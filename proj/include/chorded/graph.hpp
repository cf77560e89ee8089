#ifndef CHORDED_GRAPH_HPP
#define CHORDED_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chorded {

enum class parse_errc {
    malformed_header,
    bad_edge_line,
    self_loop,
    duplicate_edge,
    id_out_of_range,
    wrong_edge_count,
};

class parse_error : public std::runtime_error {
public:
    parse_error(parse_errc c, int line, const std::string& what)
        : std::runtime_error(what), code(c), line(line) {}
    parse_errc code;
    int line;
};

// Precondition violations on library operations.
class precondition_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A guaranteed-by-theory search came up empty: either a bug or a false
// precondition. Tests treat this as failure.
class soundness_error : public std::logic_error {
    using std::logic_error::logic_error;
};

class budget_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency lists are sorted, no self-loops, no parallel edges. For n <= 64
// a per-vertex neighbor bitmask is kept alongside the lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Edge-list format: header "n m", then m lines "u v"; '#' lines and blank
    // lines are skipped. Throws parse_error.
    static Graph parse(std::string_view text);
    std::string serialize() const;  // edges sorted lexicographically

    int order() const { return n_; }
    long edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;

    bool has_masks() const { return !mask_.empty(); }
    uint64_t neighbor_mask(int v) const { return mask_[v]; }

    // Same vertex count, keeping only edges with both ends in vs.
    Graph induced_on(const std::vector<int>& vs) const;

    std::vector<std::vector<int>> components() const;
    bool connected() const;

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> mask_;

    friend struct GraphRebuilder;
    void finish();  // sorts adjacency, fills masks and m_
};

// Internal enumeration hook: rebuilds a graph in place from neighbor masks,
// reusing allocated storage.
struct GraphRebuilder {
    static void rebuild(Graph& g, int n, const uint64_t* masks);
};

struct VertexOrdering {
    std::vector<int> order;    // permutation of 0..n-1
    int max_back_degree = 0;   // max #neighbors preceding a vertex
};

struct DenseCoreWitness {
    std::vector<int> vertices;  // subgraph with minimum degree >= 3
};

struct Tripartition {
    std::vector<int> color;  // values in {0,1,2}
};

// Peels a minimum-degree vertex (lowest id on ties) and reverses. If some
// subgraph has minimum degree >= 3, returns its vertex set instead.
std::variant<VertexOrdering, DenseCoreWitness> degeneracy_ordering(const Graph& g);

// Greedy coloring along the degeneracy ordering; smallest free color.
// Throws precondition_error when the graph has a dense core.
Tripartition tripartition(const Graph& g);

enum class GraphFilter {
    all,
    connected,
    non_chorded,
    non_chorded_connected,
    non_chorded_biconnected,
};

inline constexpr int kEnumerationCap = 9;

// Visits every labeled graph on n vertices passing the filter, exactly once,
// in lexicographic order of the upper-triangular adjacency bitstring (pair
// (0,1) is the most significant position). The Graph reference is a reused
// buffer: copy it if you keep it. Visitor returns false to stop early.
// Returns the number of graphs visited. Throws budget_error for n > cap.
long enumerate_graphs(int n, GraphFilter filter,
                      const std::function<bool(const Graph&)>& visit);

}  // namespace chorded

#endif
