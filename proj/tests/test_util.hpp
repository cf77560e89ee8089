#ifndef CHORDED_TEST_UTIL_HPP
#define CHORDED_TEST_UTIL_HPP

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "chorded/graph.hpp"

namespace testutil {

inline chorded::Graph make_path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return chorded::Graph::from_edges(n, es);
}

inline chorded::Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return chorded::Graph::from_edges(n, es);
}

inline chorded::Graph make_complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return chorded::Graph::from_edges(n, es);
}

inline chorded::Graph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) es.emplace_back(u, v);
    return chorded::Graph::from_edges(a + b, es);
}

inline chorded::Graph make_star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return chorded::Graph::from_edges(leaves + 1, es);
}

inline chorded::Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer pentagon
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        es.emplace_back(i, 5 + i);                // spokes
    }
    return chorded::Graph::from_edges(10, es);
}

// decodes a Pruefer sequence into tree edges on 0..n-1
inline std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<int, int>> edges;
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1 && leaf != v) {
                edges.emplace_back(leaf, v);
                --deg[leaf];
                --deg[v];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return edges;
}

// every labeled tree on n >= 2 vertices, via all n^(n-2) Pruefer sequences
inline long for_each_labeled_tree(int n, const std::function<void(const chorded::Graph&)>& fn) {
    if (n == 2) {
        fn(chorded::Graph::from_edges(2, {{0, 1}}));
        return 1;
    }
    long count = 0;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        fn(chorded::Graph::from_edges(n, pruefer_decode(seq)));
        ++count;
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return count;
}

// reference sigma_t: plain enumeration of all t-subsets
inline std::optional<long> naive_sigma(const chorded::Graph& g, int t) {
    const int n = g.order();
    std::optional<long> best;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == t) {
            long sum = 0;
            for (int v : pick) sum += g.degree(v);
            if (!best || sum < *best) best = sum;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (g.has_edge(u, v)) ok = false;
            if (!ok) continue;
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

}  // namespace testutil

#endif
