#include "chorded/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace chorded {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    if (n <= 64) mask_.assign(n, 0);
}

void Graph::finish() {
    m_ = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        m_ += static_cast<long>(nb.size());
    }
    m_ /= 2;
    if (n_ <= 64) {
        mask_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (int u : adj_[v]) mask_[v] |= uint64_t(1) << u;
    } else {
        mask_.clear();
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("self-loop");
        if (g.has_edge(u, v)) throw precondition_error("duplicate edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        if (n <= 64) {
            g.mask_[u] |= uint64_t(1) << v;
            g.mask_[v] |= uint64_t(1) << u;
        }
    }
    g.finish();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (!mask_.empty()) return (mask_[u] >> v) & 1;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced_on(const std::vector<int>& vs) const {
    std::vector<char> in(n_, 0);
    for (int v : vs) {
        if (v < 0 || v >= n_) throw precondition_error("vertex out of range");
        in[v] = 1;
    }
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        if (!in[u]) continue;
        for (int v : adj_[u])
            if (in[v]) g.adj_[u].push_back(v);
    }
    g.finish();
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> queue;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        for (size_t i = 0; i < queue.size(); ++i)
            for (int v : adj_[queue[i]])
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
        std::sort(queue.begin(), queue.end());
        comps.push_back(queue);
    }
    return comps;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

namespace {

struct LineScanner {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    // next non-blank, non-comment line; nullopt at end
    std::optional<std::string_view> next() {
        while (pos < text.size()) {
            size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            size_t first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            return line;
        }
        return std::nullopt;
    }
};

// parses exactly `count` integers, rejecting trailing junk
bool parse_ints(std::string_view line, int count, long* out) {
    const char* p = line.data();
    const char* end = p + line.size();
    for (int i = 0; i < count; ++i) {
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p == end) return false;
        auto [next, ec] = std::from_chars(p, end, out[i]);
        if (ec != std::errc()) return false;
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    return p == end;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
    LineScanner sc{text};
    auto header = sc.next();
    if (!header)
        throw parse_error(parse_errc::malformed_header, sc.line_no, "missing header line");
    long hv[2];
    if (!parse_ints(*header, 2, hv) || hv[0] < 0 || hv[1] < 0)
        throw parse_error(parse_errc::malformed_header, sc.line_no,
                          "header must be \"n m\" with nonnegative integers");
    const long n = hv[0], m = hv[1];
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        auto line = sc.next();
        if (!line)
            throw parse_error(parse_errc::wrong_edge_count, sc.line_no,
                              "fewer edge lines than the header announced");
        long ev[2];
        if (!parse_ints(*line, 2, ev))
            throw parse_error(parse_errc::bad_edge_line, sc.line_no,
                              "edge line must be \"u v\"");
        if (ev[0] < 0 || ev[0] >= n || ev[1] < 0 || ev[1] >= n)
            throw parse_error(parse_errc::id_out_of_range, sc.line_no,
                              "vertex id outside 0..n-1");
        int u = static_cast<int>(ev[0]), v = static_cast<int>(ev[1]);
        if (u == v)
            throw parse_error(parse_errc::self_loop, sc.line_no, "self-loop");
        if (g.has_edge(u, v))
            throw parse_error(parse_errc::duplicate_edge, sc.line_no, "duplicate edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        if (n <= 64) {
            g.mask_[u] |= uint64_t(1) << v;
            g.mask_[v] |= uint64_t(1) << u;
        }
    }
    if (sc.next())
        throw parse_error(parse_errc::wrong_edge_count, sc.line_no,
                          "more edge lines than the header announced");
    g.finish();
    return g;
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << ' ' << m_ << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
    return out.str();
}

void GraphRebuilder::rebuild(Graph& g, int n, const uint64_t* masks) {
    g.n_ = n;
    g.adj_.resize(n);
    g.mask_.assign(masks, masks + n);
    long deg_sum = 0;
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        nb.clear();
        uint64_t m = masks[v];
        while (m) {
            nb.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        deg_sum += static_cast<long>(nb.size());
    }
    g.m_ = deg_sum / 2;
}

std::variant<VertexOrdering, DenseCoreWitness> degeneracy_ordering(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(n), removal;
    std::vector<char> alive(n, 1);
    removal.reserve(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
        if (deg[best] >= 3) {
            DenseCoreWitness w;
            for (int v = 0; v < n; ++v)
                if (alive[v]) w.vertices.push_back(v);
            return w;
        }
        alive[best] = 0;
        removal.push_back(best);
        for (int u : g.neighbors(best))
            if (alive[u]) --deg[u];
    }
    VertexOrdering o;
    o.order.assign(removal.rbegin(), removal.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[o.order[i]] = i;
    for (int v = 0; v < n; ++v) {
        int back = 0;
        for (int u : g.neighbors(v))
            if (pos[u] < pos[v]) ++back;
        o.max_back_degree = std::max(o.max_back_degree, back);
    }
    return o;
}

Tripartition tripartition(const Graph& g) {
    auto ord = degeneracy_ordering(g);
    if (std::holds_alternative<DenseCoreWitness>(ord))
        throw precondition_error(
            "graph has a subgraph of minimum degree >= 3; no 2-degenerate ordering");
    const auto& o = std::get<VertexOrdering>(ord);
    Tripartition t;
    t.color.assign(g.order(), -1);
    for (int v : o.order) {
        bool used[3] = {false, false, false};
        for (int u : g.neighbors(v))
            if (t.color[u] >= 0) used[t.color[u]] = true;
        int c = 0;
        while (c < 3 && used[c]) ++c;
        if (c == 3)
            throw soundness_error("greedy coloring ran out of colors on a 2-degenerate ordering");
        t.color[v] = c;
    }
    return t;
}

// ---------------------------------------------------------------------------
// labeled-graph enumeration over edge subsets, with chordality pruning

namespace {

struct MaskGraph {
    int n = 0;
    std::array<uint64_t, 16> adj{};

    void add_edge(int u, int v) {
        adj[u] |= uint64_t(1) << v;
        adj[v] |= uint64_t(1) << u;
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~(uint64_t(1) << v);
        adj[v] &= ~(uint64_t(1) << u);
    }
};

bool mask_connected(const MaskGraph& g) {
    if (g.n <= 1) return true;
    uint64_t all = (g.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n) - 1);
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[v];
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == all;
}

// Articulation-point test via DFS; assumes connected, n >= 3.
bool mask_biconnected(const MaskGraph& g) {
    if (g.n < 3) return false;
    if (!mask_connected(g)) return false;
    std::array<int, 16> disc{}, low{}, parent{};
    disc.fill(-1);
    parent.fill(-1);
    int timer = 0;
    // iterative DFS from 0
    std::array<int, 16> stack{};
    std::array<uint64_t, 16> pending{};
    int top = 0;
    stack[0] = 0;
    pending[0] = g.adj[0];
    disc[0] = low[0] = timer++;
    int root_children = 0;
    while (top >= 0) {
        int v = stack[top];
        if (pending[top]) {
            int u = std::countr_zero(pending[top]);
            pending[top] &= pending[top] - 1;
            if (disc[u] < 0) {
                parent[u] = v;
                if (v == 0) ++root_children;
                disc[u] = low[u] = timer++;
                ++top;
                stack[top] = u;
                pending[top] = g.adj[u];
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            --top;
            if (top >= 0) {
                int p = stack[top];
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) return false;  // p articulates
            }
        }
    }
    return root_children <= 1;
}

int mask_popcount_set(const MaskGraph& g, uint64_t set) {
    int edges2 = 0;
    uint64_t s = set;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        edges2 += std::popcount(g.adj[v] & set);
    }
    return edges2 / 2;
}

// Any chorded cycle present? Early-exit DFS cycle scan: cycles rooted at
// their smallest vertex; a cycle is chorded iff its vertex set spans more
// edges than its length.
struct MaskChordScan {
    const MaskGraph* g;
    std::array<int, 16> path{};
    int len = 0;
    uint64_t on_path = 0;
    uint64_t ge_root = 0;

    bool found(uint64_t cyc_mask, int cyc_len) const {
        return mask_popcount_set(*g, cyc_mask) > cyc_len;
    }

    bool dfs(int v) {  // returns true when a chorded cycle was found
        uint64_t cand = g->adj[v] & ge_root & ~on_path;
        int root = path[0];
        // close the cycle: neighbor == root and length >= 3
        if (len >= 3 && (g->adj[v] >> root) & 1) {
            if (path[1] < v) {  // canonical direction, each cycle once
                if (found(on_path, len)) return true;
            }
        }
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            path[len] = u;
            on_path |= uint64_t(1) << u;
            ++len;
            if (dfs(u)) return true;
            --len;
            on_path &= ~(uint64_t(1) << u);
        }
        return false;
    }

    bool run() {
        for (int r = 0; r + 3 < g->n + 1; ++r) {
            ge_root = ~uint64_t(0) << r;
            path[0] = r;
            on_path = uint64_t(1) << r;
            len = 1;
            if (dfs(r)) return true;
        }
        return false;
    }
};

bool mask_is_chorded(const MaskGraph& g) {
    MaskChordScan scan{&g};
    return scan.run();
}

struct Enumerator {
    int n;
    GraphFilter filter;
    const std::function<bool(const Graph&)>* visit;
    MaskGraph mg;
    std::vector<std::pair<int, int>> pairs;
    Graph buffer;
    long count = 0;
    bool stopped = false;

    bool prune_chorded() const {
        return filter == GraphFilter::non_chorded ||
               filter == GraphFilter::non_chorded_connected ||
               filter == GraphFilter::non_chorded_biconnected;
    }

    bool leaf_ok() {
        switch (filter) {
            case GraphFilter::all:
            case GraphFilter::non_chorded:
                return true;
            case GraphFilter::connected:
            case GraphFilter::non_chorded_connected:
                return mask_connected(mg);
            case GraphFilter::non_chorded_biconnected:
                return mask_biconnected(mg);
        }
        return false;
    }

    void emit() {
        if (!leaf_ok()) return;
        GraphRebuilder::rebuild(buffer, n, mg.adj.data());
        ++count;
        if (!(*visit)(buffer)) stopped = true;
    }

    void rec(size_t idx) {
        if (stopped) return;
        if (idx == pairs.size()) {
            emit();
            return;
        }
        rec(idx + 1);  // bit = 0 first: lexicographic bitstring order
        if (stopped) return;
        auto [u, v] = pairs[idx];
        mg.add_edge(u, v);
        if (!prune_chorded() || !mask_is_chorded(mg)) rec(idx + 1);
        mg.remove_edge(u, v);
    }
};

}  // namespace

long enumerate_graphs(int n, GraphFilter filter,
                      const std::function<bool(const Graph&)>& visit) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    if (n > kEnumerationCap)
        throw budget_error("enumeration capped at n <= " + std::to_string(kEnumerationCap));
    Enumerator e;
    e.n = n;
    e.filter = filter;
    e.visit = &visit;
    e.mg.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.pairs.emplace_back(u, v);
    e.rec(0);
    return e.count;
}

}  // namespace chorded
