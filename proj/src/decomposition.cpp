#include "chorded/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "chorded/flow.hpp"

namespace chorded {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

struct BlockCutDfs {
    const Graph* g;
    std::vector<int> disc, low;
    std::vector<char> is_artic;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> edge_groups;
    int timer = 0;

    void pop_group(std::pair<int, int> until) {
        std::vector<std::pair<int, int>> grp;
        for (;;) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            grp.push_back(e);
            if (e == until) break;
        }
        edge_groups.push_back(std::move(grp));
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g->neighbors(u)) {
            if (v == parent) continue;
            if (disc[v] < 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent >= 0 || children > 1) is_artic[u] = 1;
                    pop_group({u, v});
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockCut block_cut(const Graph& g) {
    const int n = g.order();
    BlockCutDfs d;
    d.g = &g;
    d.disc.assign(n, -1);
    d.low.assign(n, 0);
    d.is_artic.assign(n, 0);
    for (int s = 0; s < n; ++s)
        if (d.disc[s] < 0) d.dfs(s, -1);

    BlockCut bc;
    for (auto& grp : d.edge_groups) {
        if (grp.size() == 1) {
            bc.bridges.push_back(norm_edge(grp[0].first, grp[0].second));
            continue;
        }
        std::vector<int> verts;
        for (auto [u, v] : grp) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        bc.blocks.push_back(std::move(verts));
    }
    std::sort(bc.bridges.begin(), bc.bridges.end());
    std::sort(bc.blocks.begin(), bc.blocks.end());
    for (int v = 0; v < n; ++v)
        if (d.is_artic[v]) bc.articulation_points.push_back(v);

    // distinct components may share at most one vertex, hence no edge
    for (size_t i = 0; i < bc.blocks.size(); ++i)
        for (size_t j = i + 1; j < bc.blocks.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(bc.blocks[i].begin(), bc.blocks[i].end(),
                                  bc.blocks[j].begin(), bc.blocks[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                throw soundness_error("two biconnected components share an edge");
        }
    return bc;
}

bool is_biconnected_subset(const Graph& g, const std::vector<int>& vs) {
    if (vs.size() < 3) return false;
    Graph sub = g.induced_on(vs);
    std::vector<char> in(g.order(), 0);
    for (int v : vs) in[v] = 1;
    // connected within vs
    std::vector<char> seen(g.order(), 0);
    std::vector<int> queue{vs[0]};
    seen[vs[0]] = 1;
    size_t reached = 1;
    for (size_t i = 0; i < queue.size(); ++i)
        for (int w : sub.neighbors(queue[i]))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    if (reached != vs.size()) return false;
    BlockCut bc = block_cut(sub);
    return bc.articulation_points.empty() && bc.bridges.empty() && bc.blocks.size() == 1;
}

TriangleFreeResult triangle_free_check(const Graph& g, const std::vector<int>& block) {
    if (block.size() < 4)
        throw precondition_error("triangle-free check applies to blocks of order >= 4");
    if (!is_biconnected_subset(g, block))
        throw precondition_error("triangle-free check applies to biconnected blocks");
    Graph sub = g.induced_on(block);
    TriangleFreeResult r;
    r.triangle_free = true;
    for (int u : block) {
        const auto& nb = sub.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (sub.has_edge(nb[i], nb[j])) {
                    r.triangle_free = false;
                    r.triangle = {u, nb[i], nb[j]};
                    std::sort(r.triangle.begin(), r.triangle.end());
                    return r;
                }
    }
    return r;
}

bool EarDecomposition::validate(const Graph& g, const std::vector<int>& block,
                                std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    Graph sub = g.induced_on(block);
    std::set<std::pair<int, int>> covered;
    std::vector<char> in_f(g.order(), 0);
    if (base_cycle.size() < 3) return fail("base cycle shorter than 3");
    for (size_t i = 0; i < base_cycle.size(); ++i) {
        int u = base_cycle[i], v = base_cycle[(i + 1) % base_cycle.size()];
        if (in_f[u]) return fail("repeated base cycle vertex");
        in_f[u] = 1;
        if (!sub.has_edge(u, v)) return fail("base cycle edge missing");
        if (!covered.insert(norm_edge(u, v)).second) return fail("duplicate base edge");
    }
    for (const auto& ear : ears) {
        if (ear.a == ear.b) return fail("ear endpoints equal");
        if (!in_f[ear.a] || !in_f[ear.b]) return fail("ear endpoint outside current subgraph");
        if (ear.interior.empty()) return fail("ear with a single edge");
        std::vector<int> seq{ear.a};
        seq.insert(seq.end(), ear.interior.begin(), ear.interior.end());
        seq.push_back(ear.b);
        for (int v : ear.interior) {
            if (in_f[v]) return fail("ear interior vertex already used");
            in_f[v] = 1;
        }
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            if (!sub.has_edge(seq[i], seq[i + 1])) return fail("ear edge missing");
            if (!covered.insert(norm_edge(seq[i], seq[i + 1])).second)
                return fail("duplicate ear edge");
        }
    }
    if (static_cast<long>(covered.size()) != sub.edge_count())
        return fail("decomposition does not cover every block edge");
    for (int v : block)
        if (!in_f[v]) return fail("block vertex not covered");
    return true;
}

namespace {

// chordality witness for a chord xy of the biconnected graph f (xy not an
// f-edge): two internally disjoint x-y paths form the cycle
CycleWithChords chord_witness(const Graph& f, int x, int y) {
    auto paths = two_disjoint_paths(f, x, y, false);
    if (!paths)
        throw soundness_error("biconnected subgraph lost its two disjoint paths");
    CycleWithChords w;
    w.cycle = paths->first;
    const auto& p2 = paths->second;
    for (size_t i = p2.size() - 2; i >= 1; --i) w.cycle.push_back(p2[i]);
    w.chords.emplace_back(std::min(x, y), std::max(x, y));
    return w;
}

}  // namespace

std::variant<EarDecomposition, CycleWithChords> ear_decompose(const Graph& g,
                                                              const std::vector<int>& block) {
    if (block.size() < 4)
        throw precondition_error("ear decomposition applies to blocks of order >= 4");
    if (!is_biconnected_subset(g, block))
        throw precondition_error("ear decomposition applies to biconnected blocks");
    Graph sub = g.induced_on(block);

    auto sub_edges = sub.edges();  // lex sorted
    auto [u0, v0] = sub_edges.front();
    {
        std::vector<std::pair<int, int>> rest(sub_edges.begin() + 1, sub_edges.end());
        Graph without = Graph::from_edges(g.order(), rest);
        auto base_path = lex_shortest_path(without, u0, v0);
        if (!base_path) throw soundness_error("edge of a biconnected block lies on no cycle");
        EarDecomposition ed;
        ed.base_cycle = *base_path;

        std::vector<char> in_f(g.order(), 0);
        std::set<std::pair<int, int>> f_edges, rem;
        for (int v : ed.base_cycle) in_f[v] = 1;
        for (size_t i = 0; i < ed.base_cycle.size(); ++i)
            f_edges.insert(norm_edge(ed.base_cycle[i],
                                     ed.base_cycle[(i + 1) % ed.base_cycle.size()]));
        for (auto e : sub_edges)
            if (!f_edges.count(e)) rem.insert(e);

        while (!rem.empty()) {
            auto f_edge = *f_edges.begin();
            auto e_edge = *rem.begin();

            if (in_f[e_edge.first] && in_f[e_edge.second]) {
                // a chord of the subgraph built so far
                std::vector<std::pair<int, int>> fe(f_edges.begin(), f_edges.end());
                Graph fg = Graph::from_edges(g.order(), fe);
                return chord_witness(fg, e_edge.first, e_edge.second);
            }

            auto cyc = cycle_through_edges(sub, f_edge, e_edge);
            if (!cyc)
                throw soundness_error("no cycle through two edges of a biconnected block");
            const int len = static_cast<int>(cyc->size());
            int ix = -1;
            for (int i = 0; i < len; ++i) {
                int a = (*cyc)[i], b = (*cyc)[(i + 1) % len];
                if (norm_edge(a, b) == e_edge) {
                    ix = i;
                    break;
                }
            }
            if (ix < 0) throw soundness_error("cycle lost the requested edge");
            // minimal arc around e_edge with both ends in the current subgraph
            int j = ix;
            while (!in_f[(*cyc)[j]]) j = (j + len - 1) % len;
            int k = (ix + 1) % len;
            while (!in_f[(*cyc)[k]]) k = (k + 1) % len;
            EarDecomposition::Ear ear;
            ear.a = (*cyc)[j];
            ear.b = (*cyc)[k];
            if (ear.a == ear.b)
                throw soundness_error("ear arc collapsed to a single attachment");
            std::vector<int> seq;
            for (int p = j; p != k; p = (p + 1) % len) seq.push_back((*cyc)[p]);
            seq.push_back(ear.b);
            ear.interior.assign(seq.begin() + 1, seq.end() - 1);
            for (int v : ear.interior) in_f[v] = 1;
            for (size_t p = 0; p + 1 < seq.size(); ++p) {
                auto edge = norm_edge(seq[p], seq[p + 1]);
                f_edges.insert(edge);
                rem.erase(edge);
            }
            ed.ears.push_back(std::move(ear));
        }
        return ed;
    }
}

EarStemCertificate ear_stem_certificate(const Graph& g, const std::vector<int>& block,
                                        const EarDecomposition& ed) {
    std::string why;
    if (!ed.validate(g, block, &why))
        throw precondition_error("invalid ear decomposition: " + why);
    Graph sub = g.induced_on(block);
    EarStemCertificate cert;
    std::vector<char> on_ear(g.order(), 0);
    for (const auto& ear : ed.ears) {
        on_ear[ear.a] = on_ear[ear.b] = 1;
        for (int v : ear.interior) on_ear[v] = 1;
    }
    for (const auto& ear : ed.ears) {
        int stem = -1;
        for (int v : ear.interior)
            if (sub.degree(v) == 2) {
                stem = v;
                break;
            }
        if (stem < 0)
            throw soundness_error("ear without an interior vertex of degree 2");
        cert.per_ear_stem.push_back(stem);
    }
    for (int v : ed.base_cycle) {
        if (on_ear[v] || sub.degree(v) != 2) continue;
        cert.base_stems.push_back(v);
        if (cert.base_stems.size() == 2) break;
    }
    if (cert.base_stems.size() < 2)
        throw soundness_error("fewer than two base-cycle stems off all ears");
    return cert;
}

StemBoundReport stem_bound_check(const Graph& g, const std::vector<int>& block) {
    if (!is_biconnected_subset(g, block))
        throw precondition_error("stem bound applies to biconnected blocks");
    Graph sub = g.induced_on(block);
    if (auto w = find_chorded_cycle(sub))
        throw chorded_input_error("stem bound applies to non-chorded blocks", *w);
    StemBoundReport r;
    for (int v : block)
        if (sub.degree(v) == 2) ++r.stem_count;
    const long nb = static_cast<long>(block.size());
    r.bound_num = nb + 4;  // (n-2)/3 + 2 == (n+4)/3
    r.bound_den = 3;
    r.pass = 3 * r.stem_count >= nb + 4;
    return r;
}

bool BlockPathDecomposition::validate(const Graph& g, std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (blocks.empty()) return fail("no blocks");
    if (connectors.size() + 1 != blocks.size()) return fail("connector count mismatch");
    std::set<std::pair<int, int>> covered;
    std::vector<char> in_f(g.order(), 0);

    auto add_block = [&](const std::vector<int>& b) {
        Graph sub = g.induced_on(b);
        for (auto e : sub.edges())
            if (!covered.insert(e).second) return false;
        for (int v : b) in_f[v] = 1;
        return true;
    };
    auto path_ok = [&](const Path& p, bool pendant) {
        if (p.vertices.empty()) return false;
        if (p.vertices.front() != p.a || p.vertices.back() != p.b) return false;
        if (p.vertices.size() == 1) return !pendant && p.a == p.b;
        std::set<int> seen;
        for (int v : p.vertices)
            if (!seen.insert(v).second) return false;
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
            if (!covered.insert(norm_edge(p.vertices[i], p.vertices[i + 1])).second)
                return false;
        }
        if (pendant && g.degree(p.b) != 1) return false;
        return true;
    };

    if (!add_block(blocks[0])) return fail("block edges overlap");
    for (size_t i = 0; i < connectors.size(); ++i) {
        const Path& p = connectors[i];
        if (!in_f[p.a]) return fail("connector start outside grown subgraph");
        for (size_t j = 1; j + 1 < p.vertices.size(); ++j)
            if (in_f[p.vertices[j]]) return fail("connector interior touches grown subgraph");
        const auto& blk = blocks[i + 1];
        if (!std::binary_search(blk.begin(), blk.end(), p.b))
            return fail("connector does not end in its block");
        if (p.vertices.size() > 1 && in_f[p.b]) return fail("connector end already grown");
        if (!path_ok(p, false)) return fail("bad connector path");
        if (!add_block(blk)) return fail("block edges overlap");
        for (int v : p.vertices) in_f[v] = 1;
    }
    for (const Path& p : pendants) {
        if (!in_f[p.a]) return fail("pendant start outside grown subgraph");
        for (size_t j = 1; j < p.vertices.size(); ++j)
            if (in_f[p.vertices[j]]) return fail("pendant revisits grown subgraph");
        if (p.vertices.size() < 2) return fail("pendant shorter than one edge");
        if (!path_ok(p, true)) return fail("bad pendant path");
        for (int v : p.vertices) in_f[v] = 1;
    }
    if (static_cast<long>(covered.size()) != g.edge_count())
        return fail("decomposition does not cover every edge");
    return true;
}

std::variant<BlockPathDecomposition, CycleWithChords> block_path_decompose(const Graph& g) {
    if (!g.connected()) throw precondition_error("block-path decomposition needs a connected graph");
    if (g.edge_count() < g.order())
        throw precondition_error("acyclic input: use the tree routines instead");
    if (auto w = find_chorded_cycle(g)) return *w;

    BlockCut bc = block_cut(g);
    if (bc.blocks.empty()) throw soundness_error("cyclic graph without a block");

    BlockPathDecomposition out;
    const int n = g.order();
    std::vector<char> in_f(n, 0);
    std::vector<char> attached(bc.blocks.size(), 0);
    std::vector<int> block_of(n, -1);  // some unattached block containing v (lex least)
    auto refresh_block_of = [&]() {
        std::fill(block_of.begin(), block_of.end(), -1);
        for (size_t b = 0; b < bc.blocks.size(); ++b) {
            if (attached[b]) continue;
            for (int v : bc.blocks[b])
                if (block_of[v] < 0) block_of[v] = static_cast<int>(b);
        }
    };

    attached[0] = 1;
    out.blocks.push_back(bc.blocks[0]);
    for (int v : bc.blocks[0]) in_f[v] = 1;

    for (size_t step = 1; step < bc.blocks.size(); ++step) {
        refresh_block_of();
        // a block already touching the grown subgraph attaches at that vertex
        int shared_block = -1, shared_vertex = -1;
        for (size_t b = 0; b < bc.blocks.size() && shared_block < 0; ++b) {
            if (attached[b]) continue;
            int cnt = 0, v_hit = -1;
            for (int v : bc.blocks[b])
                if (in_f[v]) {
                    ++cnt;
                    v_hit = v;
                }
            if (cnt > 1)
                throw soundness_error("unattached component shares two grown vertices");
            if (cnt == 1) {
                shared_block = static_cast<int>(b);
                shared_vertex = v_hit;
            }
        }
        if (shared_block >= 0) {
            BlockPathDecomposition::Path p;
            p.a = p.b = shared_vertex;
            p.vertices = {shared_vertex};
            out.connectors.push_back(std::move(p));
            out.blocks.push_back(bc.blocks[shared_block]);
            attached[shared_block] = 1;
            for (int v : bc.blocks[shared_block]) in_f[v] = 1;
            continue;
        }

        // nearest unattached block via BFS from the target side
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        for (int v = 0; v < n; ++v)
            if (block_of[v] >= 0) {
                dist[v] = 0;
                q.push(v);
            }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (in_f[v] && dist[v] >= 0 && (start < 0 || dist[v] < dist[start])) start = v;
        if (start < 0) throw soundness_error("unattached block unreachable in connected graph");

        BlockPathDecomposition::Path p;
        p.a = start;
        p.vertices = {start};
        int cur = start;
        while (dist[cur] != 0) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (dist[w] == dist[cur] - 1) {
                    next = w;
                    break;
                }
            p.vertices.push_back(next);
            cur = next;
        }
        p.b = cur;
        int b = block_of[cur];
        out.connectors.push_back(p);
        out.blocks.push_back(bc.blocks[b]);
        attached[b] = 1;
        for (int v : bc.blocks[b]) in_f[v] = 1;
        for (int v : p.vertices) in_f[v] = 1;
    }

    // remaining edges form trees hanging off the grown subgraph
    std::set<std::pair<int, int>> used;
    for (const auto& blk : out.blocks) {
        Graph sub = g.induced_on(blk);
        for (auto e : sub.edges()) used.insert(e);
    }
    for (const auto& p : out.connectors)
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
            used.insert(norm_edge(p.vertices[i], p.vertices[i + 1]));

    long remaining = g.edge_count() - static_cast<long>(used.size());
    while (remaining > 0) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (g.degree(v) == 1 && !used.count(norm_edge(v, g.neighbors(v)[0]))) leaf = v;
        if (leaf < 0) throw soundness_error("leftover edges without a leaf to start from");

        // BFS over unused edges toward the grown subgraph
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        for (int v = 0; v < n; ++v)
            if (in_f[v]) {
                dist[v] = 0;
                q.push(v);
            }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (dist[w] < 0 && !used.count(norm_edge(v, w))) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        if (dist[leaf] < 0) throw soundness_error("pendant tree detached from grown subgraph");

        std::vector<int> walk{leaf};
        int cur = leaf;
        while (dist[cur] != 0) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (dist[w] == dist[cur] - 1 && !used.count(norm_edge(cur, w))) {
                    next = w;
                    break;
                }
            walk.push_back(next);
            cur = next;
        }
        BlockPathDecomposition::Path p;
        p.a = cur;
        p.b = leaf;
        p.vertices.assign(walk.rbegin(), walk.rend());
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
            used.insert(norm_edge(p.vertices[i], p.vertices[i + 1]));
        remaining -= static_cast<long>(p.vertices.size()) - 1;
        for (int v : p.vertices) in_f[v] = 1;
        out.pendants.push_back(std::move(p));
    }
    return out;
}

}  // namespace chorded
