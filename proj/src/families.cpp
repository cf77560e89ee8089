#include "chorded/families.hpp"

#include <algorithm>
#include <numeric>

#include "chorded/chordality.hpp"
#include "chorded/low_degree.hpp"

namespace chorded {

Graph gen_sharpness_bipartite(int k, int n) {
    if (k < 1) throw precondition_error("bipartite sharpness graph needs k >= 1");
    if (n < 3 * k) throw precondition_error("bipartite sharpness graph needs n >= 3k");
    const int a = 3 * k - 1;  // small side 0..a-1, large side a..n-1
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_g1(int k) {
    if (k < 1) throw precondition_error("g1 needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < k; ++j) {
        const int b = 6 * j;  // x_i is b+i-1
        edges.emplace_back(b + 0, b + 1);
        edges.emplace_back(b + 1, b + 2);
        edges.emplace_back(b + 2, b + 3);
        edges.emplace_back(b + 3, b + 4);
        edges.emplace_back(b + 0, b + 4);
        edges.emplace_back(b + 1, b + 5);
        edges.emplace_back(b + 4, b + 5);
        if (j + 1 < k) edges.emplace_back(b + 5, b + 6);  // x6^j to x1^{j+1}
    }
    return Graph::from_edges(6 * k, edges);
}

Graph gen_g2(int rounds) {
    if (rounds < 0 || rounds > kG2RoundsCap)
        throw precondition_error("g2 rounds must lie in 0.." + std::to_string(kG2RoundsCap));
    int n = 3;
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> degree = {2, 2, 2};
    for (int r = 0; r < rounds; ++r) {
        std::vector<int> targets;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 2) targets.push_back(v);
        for (int v : targets) {
            const int a = n, b = n + 1, c = n + 2;
            n += 3;
            degree.insert(degree.end(), {3, 2, 2});
            edges.emplace_back(a, b);
            edges.emplace_back(a, c);
            edges.emplace_back(b, c);
            edges.emplace_back(v, a);
            ++degree[v];
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

struct MisSearch {
    const Graph* g;
    const std::vector<int>* pool;
    long budget;
    long nodes = 0;
    std::vector<int> chosen, best;
    std::vector<char> in_chosen;

    void rec(size_t idx) {
        if (++nodes > budget) throw budget_error("independent-set search budget exceeded");
        if (chosen.size() + (pool->size() - idx) <= best.size()) return;
        if (idx == pool->size()) {
            best = chosen;  // strict improvement only: first maximum is lex least
            return;
        }
        int v = (*pool)[idx];
        bool free = true;
        for (int w : g->neighbors(v))
            if (w < g->order() && in_chosen[w]) {
                free = false;
                break;
            }
        if (free) {
            chosen.push_back(v);
            in_chosen[v] = 1;
            rec(idx + 1);
            in_chosen[v] = 0;
            chosen.pop_back();
        }
        rec(idx + 1);
    }
};

}  // namespace

std::vector<int> max_low_degree_independent(const Graph& g, long budget) {
    std::vector<int> pool;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 2) pool.push_back(v);
    MisSearch s;
    s.g = &g;
    s.pool = &pool;
    s.budget = budget;
    s.in_chosen.assign(g.order(), 0);
    s.rec(0);
    return s.best;
}

ConjectureSweepReport conjecture_sweep(int max_n) {
    if (max_n > kEnumerationCap)
        throw budget_error("sweep capped at n <= " + std::to_string(kEnumerationCap));
    ConjectureSweepReport report;
    report.max_n = max_n;
    bool have_min = false;
    for (int n = 1; n <= max_n; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded_connected, [&](const Graph& g) {
            ++report.graphs_checked;
            auto mis = max_low_degree_independent(g);
            const long num = static_cast<long>(mis.size());
            const long den = n;
            if (6 * num < den) ++report.violations;
            // compare num/den against the incumbent minimum
            if (!have_min || num * report.min_ratio_den < report.min_ratio_num * den) {
                have_min = true;
                long gcd = std::gcd(num, den);
                report.min_ratio_num = num / (gcd ? gcd : 1);
                report.min_ratio_den = den / (gcd ? gcd : 1);
                report.witnesses.clear();
                report.witnesses.push_back(g.serialize());
            } else if (num * report.min_ratio_den == report.min_ratio_num * den &&
                       static_cast<int>(report.witnesses.size()) < kSweepWitnessCap) {
                report.witnesses.push_back(g.serialize());
            }
            try {
                nonchorded_independent_low_degree(g);
            } catch (const std::exception&) {
                ++report.lemma2_failures;
            }
            return true;
        });
    }
    return report;
}

SweepReport sweep_fact1(int max_n) {
    SweepReport report;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded, [&](const Graph& g) {
            ++report.graphs_checked;
            auto ord = degeneracy_ordering(g);
            if (std::holds_alternative<DenseCoreWitness>(ord) ||
                std::get<VertexOrdering>(ord).max_back_degree > 2) {
                if (report.violations++ == 0) report.detail = g.serialize();
                return true;
            }
            auto tp = tripartition(g);
            for (auto [u, v] : g.edges())
                if (tp.color[u] == tp.color[v]) {
                    if (report.violations++ == 0) report.detail = g.serialize();
                    return true;
                }
            return true;
        });
    }
    return report;
}

SweepReport sweep_fact2(int max_n) {
    SweepReport report;
    report.max_n = max_n;
    for (int n = 4; n <= max_n; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded, [&](const Graph& g) {
            ++report.graphs_checked;
            if (g.edge_count() > 2 * static_cast<long>(n) - 4)
                if (report.violations++ == 0) report.detail = g.serialize();
            return true;
        });
    }
    return report;
}

SweepReport sweep_prop4(int max_n) {
    SweepReport report;
    report.max_n = max_n;
    for (int n = 4; n <= max_n; ++n) {
        enumerate_graphs(n, GraphFilter::non_chorded_biconnected, [&](const Graph& g) {
            ++report.graphs_checked;
            long stems = 0;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 2) ++stems;
            if (3 * stems < static_cast<long>(n) + 4)
                if (report.violations++ == 0) report.detail = g.serialize();
            return true;
        });
    }
    return report;
}

}  // namespace chorded
