#include "chorded/low_degree.hpp"

#include <algorithm>
#include <map>

#include "chorded/chordality.hpp"
#include "chorded/decomposition.hpp"

namespace chorded {

namespace {

void require_tree(const Graph& t) {
    if (t.order() < 2 || !t.connected() || t.edge_count() != t.order() - 1)
        throw precondition_error("input is not a tree on n >= 2 vertices");
}

// proper 2-coloring of an acyclic (sub)graph given by an adjacency closure;
// roots at the smallest vertex of each piece with color 0
std::vector<int> two_color_forest(const std::vector<int>& verts,
                                  const std::function<const std::vector<int>&(int)>& adj,
                                  int n, bool* acyclic = nullptr) {
    std::vector<int> color(n, -1);
    if (acyclic) *acyclic = true;
    for (int root : verts) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<std::pair<int, int>> stack{{root, -1}};
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            for (int w : adj(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.emplace_back(w, v);
                } else if (w != parent && acyclic) {
                    *acyclic = false;
                }
            }
        }
    }
    return color;
}

// larger color class within pool; ties go to the class holding the smallest
// pool vertex
std::vector<int> larger_class(const std::vector<int>& pool, const std::vector<int>& color) {
    std::vector<int> c0, c1;
    for (int v : pool) (color[v] == 0 ? c0 : c1).push_back(v);
    if (c0.size() != c1.size()) return c0.size() > c1.size() ? c0 : c1;
    if (pool.empty()) return c0;
    return color[pool.front()] == 0 ? c0 : c1;  // pool sorted ascending
}

}  // namespace

std::vector<int> tree_low_degree_vertices(const Graph& t) {
    require_tree(t);
    std::vector<int> low;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) <= 2) low.push_back(v);
    return low;
}

LowDegreeIndependentSet tree_independent_low_degree(const Graph& t) {
    require_tree(t);
    std::vector<int> all(t.order());
    for (int v = 0; v < t.order(); ++v) all[v] = v;
    auto color = two_color_forest(
        all, [&](int v) -> const std::vector<int>& { return t.neighbors(v); }, t.order());
    LowDegreeIndependentSet out;
    out.host_n = t.order();
    out.guarantee_num = t.order();
    out.guarantee_den = 4;
    out.s_set = tree_low_degree_vertices(t);
    out.vertices = larger_class(out.s_set, color);
    return out;
}

LowDegreeIndependentSet nonchorded_independent_low_degree(const Graph& h) {
    if (auto w = find_chorded_cycle(h))
        throw chorded_input_error("low-degree extraction applies to non-chorded graphs", *w);

    const int n = h.order();
    LowDegreeIndependentSet out;
    out.host_n = n;
    out.guarantee_num = n;
    out.guarantee_den = 12;

    for (const auto& comp : h.components()) {
        long deg_sum = 0;
        bool all_deg2 = true;
        for (int v : comp) {
            deg_sum += h.degree(v);
            if (h.degree(v) != 2) all_deg2 = false;
        }
        const long comp_edges = deg_sum / 2;
        const long comp_n = static_cast<long>(comp.size());

        std::vector<int> s_comp;
        for (int v : comp)
            if (h.degree(v) <= 2) s_comp.push_back(v);

        if (comp_edges == comp_n - 1) {  // acyclic component
            out.s_set.insert(out.s_set.end(), s_comp.begin(), s_comp.end());
            if (comp_n == 1) {
                out.vertices.push_back(comp[0]);
                continue;
            }
            auto color = two_color_forest(
                comp, [&](int v) -> const std::vector<int>& { return h.neighbors(v); }, n);
            auto cls = larger_class(s_comp, color);
            out.vertices.insert(out.vertices.end(), cls.begin(), cls.end());
            continue;
        }

        // cyclic component: the proof's claim gives |S| >= |comp|/6
        if (6 * static_cast<long>(s_comp.size()) < comp_n)
            throw soundness_error("cyclic component with fewer than n/6 low-degree vertices");
        out.s_set.insert(out.s_set.end(), s_comp.begin(), s_comp.end());

        if (all_deg2 && comp_edges == comp_n) {  // the component is a cycle
            std::vector<int> order{comp[0]};
            int prev = -1, cur = comp[0];
            while (static_cast<long>(order.size()) < comp_n) {
                const auto& nb = h.neighbors(cur);
                int next = (nb[0] == prev) ? nb[1] : nb[0];
                order.push_back(next);
                prev = cur;
                cur = next;
            }
            for (long i = 0; i + 1 < comp_n; i += 2) out.vertices.push_back(order[i]);
            continue;
        }

        // otherwise <S> is a forest: 2-color it and keep the larger class
        Graph s_graph = h.induced_on(s_comp);
        bool acyclic = true;
        auto color = two_color_forest(
            s_comp, [&](int v) -> const std::vector<int>& { return s_graph.neighbors(v); }, n,
            &acyclic);
        if (!acyclic)
            throw soundness_error("low-degree vertices induce a cycle in a non-cycle component");
        auto cls = larger_class(s_comp, color);
        out.vertices.insert(out.vertices.end(), cls.begin(), cls.end());
    }

    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.s_set.begin(), out.s_set.end());

    // verify before returning
    for (int v : out.vertices)
        if (h.degree(v) > 2) throw soundness_error("extracted vertex of degree > 2");
    for (size_t i = 0; i < out.vertices.size(); ++i)
        for (size_t j = i + 1; j < out.vertices.size(); ++j)
            if (h.has_edge(out.vertices[i], out.vertices[j]))
                throw soundness_error("extracted set is not independent");
    if (static_cast<long>(out.vertices.size()) < (n + 11) / 12)
        throw soundness_error("extracted set smaller than the n/12 guarantee");
    return out;
}

Lemma2DeepReport low_degree_deep_check(const Graph& h) {
    if (auto w = find_chorded_cycle(h))
        throw chorded_input_error("deep check applies to non-chorded graphs", *w);

    Lemma2DeepReport report;
    for (const auto& comp : h.components()) {
        long deg_sum = 0;
        for (int v : comp) deg_sum += h.degree(v);
        if (deg_sum / 2 < static_cast<long>(comp.size())) continue;  // acyclic

        // standalone copy of the component
        std::map<int, int> remap;
        for (int v : comp) remap.emplace(v, static_cast<int>(remap.size()));
        std::vector<std::pair<int, int>> edges;
        for (int v : comp)
            for (int w : h.neighbors(v))
                if (v < w) edges.emplace_back(remap[v], remap[w]);
        Graph sub = Graph::from_edges(static_cast<int>(comp.size()), edges);

        auto dec = block_path_decompose(sub);
        if (std::holds_alternative<CycleWithChords>(dec))
            throw soundness_error("non-chorded graph produced a chordality witness");
        const auto& d = std::get<BlockPathDecomposition>(dec);

        std::vector<int> f_verts;
        auto add_step = [&]() {
            std::sort(f_verts.begin(), f_verts.end());
            f_verts.erase(std::unique(f_verts.begin(), f_verts.end()), f_verts.end());
            Graph fi = sub.induced_on(f_verts);
            Lemma2DeepReport::Step step;
            step.f_order = static_cast<long>(f_verts.size());
            for (int v : f_verts)
                if (fi.degree(v) <= 2) ++step.s_count;
            step.ok = 5 * step.s_count >= step.f_order + 10;
            if (!step.ok) report.all_ok = false;
            report.steps.push_back(step);
        };

        f_verts = d.blocks[0];
        add_step();
        for (size_t i = 0; i < d.connectors.size(); ++i) {
            for (int v : d.connectors[i].vertices) f_verts.push_back(v);
            for (int v : d.blocks[i + 1]) f_verts.push_back(v);
            add_step();
        }
    }
    return report;
}

}  // namespace chorded
