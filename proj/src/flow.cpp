#include "chorded/flow.hpp"

#include <algorithm>
#include <queue>

namespace chorded {

namespace {

// tiny unit-capacity max flow, deterministic BFS augmentation
struct FlowNet {
    int node_count = 0;
    std::vector<std::vector<int>> out;  // arc indices per node, insertion order
    std::vector<int> to;
    std::vector<int> cap;

    explicit FlowNet(int nodes) : node_count(nodes), out(nodes) {}

    void add_arc(int u, int v, int c) {
        out[u].push_back(static_cast<int>(to.size()));
        to.push_back(v);
        cap.push_back(c);
        out[v].push_back(static_cast<int>(to.size()));
        to.push_back(u);
        cap.push_back(0);
    }

    // one augmenting path of value 1, or false
    bool augment(int s, int t) {
        std::vector<int> pred_arc(node_count, -1);
        std::vector<char> seen(node_count, 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int a : out[v]) {
                int w = to[a];
                if (!seen[w] && cap[a] > 0) {
                    seen[w] = 1;
                    pred_arc[w] = a;
                    q.push(w);
                }
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int a = pred_arc[v];
            --cap[a];
            ++cap[a ^ 1];
            v = to[a ^ 1];
        }
        return true;
    }
};

constexpr int in_node(int v) { return 2 * v; }
constexpr int out_node(int v) { return 2 * v + 1; }

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>>
two_disjoint_paths(const Graph& g, int u, int v, bool skip_direct_edge) {
    const int n = g.order();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw precondition_error("two_disjoint_paths needs two distinct vertices");
    FlowNet net(2 * n);
    for (int w = 0; w < n; ++w)
        net.add_arc(in_node(w), out_node(w), (w == u || w == v) ? 2 : 1);
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (skip_direct_edge && ((a == u && b == v) || (a == v && b == u))) continue;
            net.add_arc(out_node(a), in_node(b), 1);
        }
    int flow = 0;
    while (flow < 2 && net.augment(out_node(u), in_node(v))) ++flow;
    if (flow < 2) return std::nullopt;

    auto walk = [&]() {
        std::vector<int> path{u};
        int cur = u;
        while (cur != v) {
            int next = -1;
            for (int a : net.out[out_node(cur)]) {
                // saturated forward edge arc: even index, cap now 0
                if ((a & 1) == 0 && net.cap[a] == 0 && net.to[a] != in_node(cur)) {
                    next = net.to[a] / 2;
                    net.cap[a] = 1;  // consume so the second walk avoids it
                    break;
                }
            }
            if (next < 0) throw soundness_error("flow decomposition lost its path");
            path.push_back(next);
            cur = next;
        }
        return path;
    };
    auto p1 = walk();
    auto p2 = walk();
    return std::make_pair(std::move(p1), std::move(p2));
}

std::optional<std::vector<int>> lex_shortest_path(const Graph& g, int s, int t,
                                                  const std::vector<int>& banned) {
    const int n = g.order();
    std::vector<int> dist(n, -1);
    std::vector<char> blocked(n, 0);
    for (int b : banned) blocked[b] = 1;
    if (blocked[s] || blocked[t]) return std::nullopt;
    std::queue<int> q;
    dist[t] = 0;
    q.push(t);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!blocked[w] && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    if (dist[s] < 0) return std::nullopt;
    std::vector<int> path{s};
    int cur = s;
    while (cur != t) {
        int next = -1;
        for (int w : g.neighbors(cur))  // ascending: lex least shortest path
            if (!blocked[w] && dist[w] == dist[cur] - 1) {
                next = w;
                break;
            }
        path.push_back(next);
        cur = next;
    }
    return path;
}

std::optional<std::vector<int>> cycle_through_edges(const Graph& g,
                                                    std::pair<int, int> f,
                                                    std::pair<int, int> e) {
    auto [a, b] = f;
    auto [x, y] = e;
    if (!g.has_edge(a, b) || !g.has_edge(x, y))
        throw precondition_error("cycle_through_edges: not edges of the graph");
    if ((a == x && b == y) || (a == y && b == x))
        throw precondition_error("cycle_through_edges: edges must differ");

    // shared endpoint: path between the two free ends avoiding it
    for (int s : {a, b})
        for (int se : {x, y})
            if (s == se) {
                int p = (s == a) ? b : a;
                int q = (se == x) ? y : x;
                auto path = lex_shortest_path(g, p, q, {s});
                if (!path) return std::nullopt;
                std::vector<int> cycle{s};
                cycle.insert(cycle.end(), path->begin(), path->end());
                return cycle;
            }

    // disjoint edges: two vertex-disjoint paths from {a,b} to {x,y}
    const int n = g.order();
    const int S = 2 * n, T = 2 * n + 1;
    FlowNet net(2 * n + 2);
    for (int w = 0; w < n; ++w) net.add_arc(in_node(w), out_node(w), 1);
    auto is_forbidden = [&](int p, int q) {
        return (p == a && q == b) || (p == b && q == a) || (p == x && q == y) ||
               (p == y && q == x);
    };
    for (int p = 0; p < n; ++p)
        for (int q : g.neighbors(p))
            if (!is_forbidden(p, q)) net.add_arc(out_node(p), in_node(q), 1);
    net.add_arc(S, in_node(a), 1);
    net.add_arc(S, in_node(b), 1);
    net.add_arc(out_node(x), T, 1);
    net.add_arc(out_node(y), T, 1);
    int flow = 0;
    while (flow < 2 && net.augment(S, T)) ++flow;
    if (flow < 2) return std::nullopt;

    auto walk_from = [&](int start) {
        std::vector<int> path{start};
        int cur = start;
        while (cur != x && cur != y) {
            int next = -1;
            for (int arc : net.out[out_node(cur)]) {
                if ((arc & 1) == 0 && net.cap[arc] == 0) {
                    int head = net.to[arc];
                    if (head == T || head == in_node(cur)) continue;
                    next = head / 2;
                    net.cap[arc] = 1;
                    break;
                }
            }
            if (next < 0) throw soundness_error("flow decomposition lost its path");
            path.push_back(next);
            cur = next;
        }
        return path;
    };
    auto pa = walk_from(a);  // a .. (x or y)
    auto pb = walk_from(b);  // b .. (the other)
    // cycle: reverse(pa) then pb; f joins a-b inside, e closes the ends
    std::vector<int> cycle(pa.rbegin(), pa.rend());
    cycle.insert(cycle.end(), pb.begin(), pb.end());
    return cycle;
}

}  // namespace chorded
