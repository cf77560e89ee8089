#include "chorded/chordality.hpp"

#include <algorithm>
#include <bit>

#include "chorded/flow.hpp"

namespace chorded {

bool CycleWithChords::validate(const Graph& g, std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    const int len = static_cast<int>(cycle.size());
    if (len < 3) return fail("cycle shorter than 3");
    std::vector<char> on(g.order(), 0);
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < len; ++i) {
        int v = cycle[i];
        if (v < 0 || v >= g.order()) return fail("cycle vertex out of range");
        if (on[v]) return fail("repeated cycle vertex");
        on[v] = 1;
        pos[v] = i;
    }
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % len]))
            return fail("consecutive cycle vertices not adjacent");
    for (auto [u, v] : chords) {
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !on[u] || !on[v])
            return fail("chord endpoint not on cycle");
        if (!g.has_edge(u, v)) return fail("chord is not an edge");
        int d = std::abs(pos[u] - pos[v]);
        if (d == 1 || d == len - 1) return fail("chord joins consecutive cycle vertices");
    }
    return true;
}

std::optional<CycleWithChords> find_chorded_cycle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        // two internally disjoint u-v paths avoiding uv need degree >= 3 at both ends
        if (g.degree(u) < 3 || g.degree(v) < 3) continue;
        auto paths = two_disjoint_paths(g, u, v, /*skip_direct_edge=*/true);
        if (!paths) continue;
        const auto& [p1, p2] = *paths;
        CycleWithChords w;
        w.cycle = p1;
        for (size_t i = p2.size() - 2; i >= 1; --i) w.cycle.push_back(p2[i]);
        w.chords.emplace_back(u, v);
        return w;
    }
    return std::nullopt;
}

void scan_cycles(const Graph& g, int max_len,
                 const std::function<bool(std::span<const int>)>& visit,
                 uint64_t allowed) {
    const int n = g.order();
    if (n > 64) throw precondition_error("cycle scan needs n <= 64");
    if (n >= 0 && n < 64) allowed &= (uint64_t(1) << n) - 1;
    std::vector<int> path;
    path.reserve(n);
    uint64_t on_path = 0;
    bool stop = false;

    auto dfs = [&](auto&& self, int v) -> void {
        if (stop) return;
        const int root = path[0];
        const uint64_t nb = g.neighbor_mask(v) & allowed;
        if (path.size() >= 3 && ((nb >> root) & 1) && path[1] < v) {
            if (!visit(std::span<const int>(path))) {
                stop = true;
                return;
            }
        }
        if (max_len > 0 && static_cast<int>(path.size()) >= max_len) return;
        uint64_t cand = nb & ~on_path & (~uint64_t(0) << root);
        while (cand && !stop) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(u);
            on_path |= uint64_t(1) << u;
            self(self, u);
            path.pop_back();
            on_path &= ~(uint64_t(1) << u);
        }
    };

    for (int r = 0; r + 2 < n && !stop; ++r) {
        if (!((allowed >> r) & 1)) continue;
        path.assign(1, r);
        on_path = uint64_t(1) << r;
        dfs(dfs, r);
    }
}

void scan_cycles(const Graph& g, int max_len,
                 const std::function<bool(std::span<const int>)>& visit) {
    scan_cycles(g, max_len, visit, ~uint64_t(0));
}

std::vector<std::pair<int, int>> cycle_chords(const Graph& g, std::span<const int> cycle) {
    const int len = static_cast<int>(cycle.size());
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            if (j - i == 1 || (i == 0 && j == len - 1)) continue;
            int u = cycle[i], v = cycle[j];
            if (g.has_edge(u, v)) chords.emplace_back(std::min(u, v), std::max(u, v));
        }
    std::sort(chords.begin(), chords.end());
    return chords;
}

namespace {

// edges of g inside the vertex set, via masks
long edges_within(const Graph& g, uint64_t set) {
    long twice = 0;
    uint64_t s = set;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        twice += std::popcount(g.neighbor_mask(v) & set);
    }
    return twice / 2;
}

bool cycle_has_chord(const Graph& g, std::span<const int> cycle) {
    uint64_t set = 0;
    for (int v : cycle) set |= uint64_t(1) << v;
    return edges_within(g, set) > static_cast<long>(cycle.size());
}

}  // namespace

bool is_non_chorded_bruteforce(const Graph& g) {
    if (g.order() > 12)
        throw precondition_error("brute-force chordality oracle capped at n <= 12");
    bool chorded = false;
    scan_cycles(g, 0, [&](std::span<const int> cyc) {
        if (cycle_has_chord(g, cyc)) {
            chorded = true;
            return false;
        }
        return true;
    });
    return !chorded;
}

namespace {

bool is_path_in(const Graph& g, const std::vector<int>& p) {
    if (p.empty()) return false;
    std::vector<char> seen(g.order(), 0);
    for (int v : p) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

}  // namespace

CycleWithChords chorded_cycle_from_two_paths(const Graph& g,
                                             const std::vector<int>& p1,
                                             const std::vector<int>& p2) {
    if (!is_path_in(g, p1) || !is_path_in(g, p2))
        throw precondition_error("p1 and p2 must be paths of the graph");
    for (int v : p1)
        for (int u : p2)
            if (u == v) throw precondition_error("paths must be vertex-disjoint");
    if (p1.size() + p2.size() < 7)
        throw precondition_error("need |p1| + |p2| >= 7 vertices");
    long cross = 0;
    for (int v : p1)
        for (int u : p2)
            if (g.has_edge(u, v)) ++cross;
    if (cross < 5) throw precondition_error("need at least five edges between the paths");

    std::vector<int> uni(p1);
    uni.insert(uni.end(), p2.begin(), p2.end());
    Graph sub = g.induced_on(uni);
    const int usize = static_cast<int>(uni.size());

    // smallest chorded cycle omits the most vertices; scan order breaks ties
    for (int len = 4; len < usize; ++len) {
        std::optional<CycleWithChords> found;
        scan_cycles(sub, len, [&](std::span<const int> cyc) {
            if (static_cast<int>(cyc.size()) != len) return true;
            if (!cycle_has_chord(sub, cyc)) return true;
            CycleWithChords w;
            w.cycle.assign(cyc.begin(), cyc.end());
            w.chords = cycle_chords(sub, cyc);
            found = std::move(w);
            return false;
        });
        if (found) return *found;
    }
    throw soundness_error(
        "no chorded cycle omitting a vertex found inside the union; "
        "this contradicts the five-edge guarantee");
}

EdgeBoundReport edge_bound_check(const Graph& g) {
    if (g.order() < 4)
        throw precondition_error(
            "edge bound 2n-4 applies to n >= 4 only (the triangle already exceeds it)");
    if (auto w = find_chorded_cycle(g))
        throw chorded_input_error("edge bound applies to non-chorded graphs", *w);
    EdgeBoundReport r;
    r.n = g.order();
    r.m = g.edge_count();
    r.bound = 2 * r.n - 4;
    r.within = r.m <= r.bound;
    return r;
}

}  // namespace chorded
