#include "chorded/packing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace chorded {

// ---------------------------------------------------------------------------
// sigma_t

namespace {

struct SigmaSearch {
    const Graph* g;
    int n, t;
    long budget;
    bool enforce_budget;
    long nodes = 0;
    std::optional<long> best;
    std::vector<int> best_set, chosen;
    std::vector<std::vector<long>> suffix_cheapest;  // [i][c]: sum of c smallest degrees in i..n-1
    std::vector<char> blocked;                       // adjacent to a chosen vertex

    void build_bounds() {
        suffix_cheapest.assign(n + 1, {});
        std::vector<long> degs;
        for (int i = n; i >= 0; --i) {
            if (i < n) {
                degs.push_back(g->degree(i));
                std::sort(degs.begin(), degs.end());
            }
            auto& row = suffix_cheapest[i];
            row.assign(std::min<size_t>(degs.size(), t) + 1, 0);
            for (size_t c = 1; c < row.size(); ++c) row[c] = row[c - 1] + degs[c - 1];
        }
    }

    void rec(int idx, int count, long sum) {
        if (enforce_budget && ++nodes > budget)
            throw budget_error("sigma search budget exceeded");
        if (count == t) {
            if (!best || sum < *best) {
                best = sum;
                best_set = chosen;
            }
            return;
        }
        const int need = t - count;
        if (n - idx < need) return;
        if (static_cast<size_t>(need) >= suffix_cheapest[idx].size()) return;
        if (best && sum + suffix_cheapest[idx][need] >= *best) return;
        if (!blocked[idx]) {
            chosen.push_back(idx);
            std::vector<int> newly;
            for (int w : g->neighbors(idx))
                if (w > idx && !blocked[w]) {
                    blocked[w] = 1;
                    newly.push_back(w);
                }
            rec(idx + 1, count + 1, sum + g->degree(idx));
            for (int w : newly) blocked[w] = 0;
            chosen.pop_back();
        }
        rec(idx + 1, count, sum);
    }
};

}  // namespace

DegreeSumStat sigma(const Graph& g, int t, long budget) {
    if (t < 1) throw precondition_error("sigma needs t >= 1");
    SigmaSearch s;
    s.g = &g;
    s.n = g.order();
    s.t = t;
    s.budget = budget;
    s.enforce_budget = g.order() > kSigmaExhaustiveOrder;
    s.blocked.assign(g.order(), 0);
    s.build_bounds();
    s.rec(0, 0, 0);
    DegreeSumStat out;
    out.t = t;
    out.value = s.best;
    out.witness = s.best_set;
    return out;
}

// ---------------------------------------------------------------------------
// packing search

bool Packing::validate(const Graph& g, std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<char> used(g.order(), 0);
    long total = 0;
    for (const auto& c : cycles) {
        if (c.chords.empty()) return fail("packing member without a chord");
        std::string sub_why;
        if (!c.validate(g, &sub_why)) {
            if (why) *why = sub_why;
            return false;
        }
        for (int v : c.cycle) {
            if (used[v]) return fail("packing members share a vertex");
            used[v] = 1;
        }
        total += static_cast<long>(c.cycle.size());
    }
    if (total != total_vertices) return fail("total vertex count mismatch");
    return true;
}

namespace {

long edges_within_mask(const Graph& g, uint64_t set) {
    long twice = 0;
    uint64_t s = set;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        twice += std::popcount(g.neighbor_mask(v) & set);
    }
    return twice / 2;
}

uint64_t full_mask(int n) { return n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1; }

bool residual_has_chorded_cycle(const Graph& g, uint64_t allowed) {
    bool found = false;
    scan_cycles(
        g, 0,
        [&](std::span<const int> cyc) {
            uint64_t set = 0;
            for (int v : cyc) set |= uint64_t(1) << v;
            if (edges_within_mask(g, set) > static_cast<long>(cyc.size())) {
                found = true;
                return false;
            }
            return true;
        },
        allowed);
    return found;
}

int count_components_mask(const Graph& g, uint64_t allowed) {
    int comps = 0;
    uint64_t left = allowed;
    while (left) {
        ++comps;
        uint64_t frontier = left & (~left + 1);  // lowest remaining vertex
        uint64_t seen = frontier;
        while (frontier) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbor_mask(v) & allowed;
            }
            frontier = next & ~seen;
            seen |= frontier;
        }
        left &= ~seen;
    }
    return comps;
}

struct PackSearch {
    const Graph* g;
    int n = 0;
    int k = 0;
    long budget = 0;
    long nodes = 0;
    bool aborted = false;

    bool stop_at_first = true;  // max_packing mode
    MinimalTieBreak tie_break = MinimalTieBreak::none;

    uint64_t used = 0;
    std::vector<CycleWithChords> chosen;
    int max_found = 0;

    bool found = false;
    Packing first_found;

    // minimal mode incumbents
    long best_total = -1;
    int best_components = 0;
    int best_k4 = 0;
    Packing best_packing;

    bool tick() {
        if (++nodes > budget) aborted = true;
        return !aborted;
    }

    void record_minimal() {
        long total = 0;
        for (const auto& c : chosen) total += static_cast<long>(c.cycle.size());
        int comps = 0, k4 = 0;
        if (tie_break != MinimalTieBreak::none)
            comps = count_components_mask(*g, full_mask(n) & ~used);
        if (tie_break == MinimalTieBreak::components_then_k4)
            for (const auto& c : chosen)
                if (c.cycle.size() == 4 && c.chords.size() == 2) ++k4;
        bool better;
        if (best_total < 0 || total < best_total)
            better = true;
        else if (total > best_total)
            better = false;
        else if (tie_break == MinimalTieBreak::none)
            better = false;
        else if (comps != best_components)
            better = comps < best_components;
        else if (tie_break == MinimalTieBreak::components_then_k4)
            better = k4 > best_k4;
        else
            better = false;
        if (better) {
            best_total = total;
            best_components = comps;
            best_k4 = k4;
            best_packing.cycles = chosen;
            best_packing.total_vertices = total;
        }
    }

    long chosen_total() const {
        long total = 0;
        for (const auto& c : chosen) total += static_cast<long>(c.cycle.size());
        return total;
    }

    // candidates must exceed (last_len, last_seq) in canonical order
    void rec(int last_len, const std::vector<int>& last_seq) {
        if (aborted) return;
        if (!tick()) return;
        const int depth = static_cast<int>(chosen.size());
        max_found = std::max(max_found, depth);
        if (depth == k) {
            if (stop_at_first) {
                found = true;
                first_found.cycles = chosen;
                first_found.total_vertices = chosen_total();
            } else {
                record_minimal();
            }
            return;
        }
        const uint64_t allowed = full_mask(n) & ~used;
        const int remaining = std::popcount(allowed);
        const int missing = k - depth;
        // minimal mode must reach exactly k; max mode also explores branches
        // that can only raise max_found, so the exhausted report is exact
        if (!stop_at_first && remaining < 4 * missing) return;
        if (remaining < 4) return;
        if (!residual_has_chorded_cycle(*g, allowed)) return;

        const long bound_base = chosen_total() + 4L * (missing - 1);
        // a branch can still improve the incumbent total only below this
        auto minimal_cutoff = [&](int len) {
            if (stop_at_first || best_total < 0) return false;
            if (tie_break == MinimalTieBreak::none) return bound_base + len >= best_total;
            return bound_base + len > best_total;  // equal totals may win a tie-break
        };
        // both gates are monotone in len, so the loop may break at first failure
        auto len_viable = [&](int len) {
            bool can_complete = remaining - len >= 4 * (missing - 1);
            if (!stop_at_first) return can_complete;
            bool can_improve = depth + 1 + (remaining - len) / 4 > max_found;
            return can_complete || can_improve;
        };
        for (int len = std::max(4, last_len); len <= remaining; ++len) {
            if (aborted || (stop_at_first && found)) return;
            if (!len_viable(len)) break;
            if (minimal_cutoff(len)) break;
            scan_cycles(
                *g, len,
                [&](std::span<const int> cyc) {
                    if (aborted || (stop_at_first && found)) return false;
                    if (static_cast<int>(cyc.size()) != len) return true;
                    if (!tick()) return false;
                    if (len == last_len &&
                        !std::lexicographical_compare(last_seq.begin(), last_seq.end(),
                                                      cyc.begin(), cyc.end()))
                        return true;
                    uint64_t set = 0;
                    for (int v : cyc) set |= uint64_t(1) << v;
                    if (edges_within_mask(*g, set) <= static_cast<long>(cyc.size()))
                        return true;  // chordless
                    CycleWithChords member;
                    member.cycle.assign(cyc.begin(), cyc.end());
                    member.chords = cycle_chords(*g, cyc);
                    used |= set;
                    chosen.push_back(std::move(member));
                    std::vector<int> seq(cyc.begin(), cyc.end());
                    rec(len, seq);
                    chosen.pop_back();
                    used &= ~set;
                    if (aborted || (stop_at_first && found)) return false;
                    if (!len_viable(len)) return false;  // max_found may have grown
                    return !minimal_cutoff(len);
                },
                allowed);
        }
    }
};

}  // namespace

PackResult max_packing(const Graph& g, int k_target, long budget) {
    if (k_target < 0) throw precondition_error("k must be nonnegative");
    if (g.order() > 64) throw precondition_error("packing search needs n <= 64");
    PackResult out;
    if (k_target == 0) {
        out.status = PackStatus::found;
        return out;
    }
    PackSearch s;
    s.g = &g;
    s.n = g.order();
    s.k = k_target;
    s.budget = budget;
    s.stop_at_first = true;
    s.rec(0, {});
    out.max_found = s.max_found;
    out.nodes = s.nodes;
    if (s.found) {
        out.status = PackStatus::found;
        out.packing = std::move(s.first_found);
        std::string why;
        if (!out.packing.validate(g, &why))
            throw soundness_error("search produced an invalid packing: " + why);
    } else {
        out.status = s.aborted ? PackStatus::inconclusive : PackStatus::exhausted;
    }
    return out;
}

Packing minimal_packing(const Graph& g, int k, long budget, MinimalTieBreak tie_break) {
    if (k < 1) throw precondition_error("minimal packing needs k >= 1");
    if (g.order() > 64) throw precondition_error("packing search needs n <= 64");
    PackSearch s;
    s.g = &g;
    s.n = g.order();
    s.k = k;
    s.budget = budget;
    s.stop_at_first = false;
    s.tie_break = tie_break;
    s.rec(0, {});
    if (s.aborted)
        throw budget_error("minimal packing search budget exceeded before exhaustion");
    if (s.best_total < 0)
        throw no_packing_error("no packing of the requested size exists");
    std::string why;
    if (!s.best_packing.validate(g, &why))
        throw soundness_error("search produced an invalid packing: " + why);
    return s.best_packing;
}

namespace {

// positions i1<i2 and j1<j2 on the cycle: chords cross iff exactly one of
// j1,j2 lies strictly between i1 and i2
bool chords_cross(int len, int i1, int i2, int j1, int j2) {
    (void)len;
    auto inside = [&](int x) { return i1 < x && x < i2; };
    return inside(j1) != inside(j2);
}

}  // namespace

MinimalPackingReport minimal_packing_properties(const Graph& g, const Packing& p,
                                                bool verify_minimal, long budget) {
    std::string why;
    if (!p.validate(g, &why)) throw precondition_error("invalid packing: " + why);
    if (p.cycles.empty()) throw precondition_error("empty packing");
    if (verify_minimal) {
        Packing best = minimal_packing(g, static_cast<int>(p.cycles.size()), budget);
        if (best.total_vertices < p.total_vertices)
            throw precondition_error("packing is not minimal: " +
                                     std::to_string(best.total_vertices) + " < " +
                                     std::to_string(p.total_vertices) + " vertices possible");
    }

    MinimalPackingReport report;
    std::vector<char> inside(g.order(), 0);
    for (const auto& c : p.cycles)
        for (int v : c.cycle) inside[v] = 1;

    for (const auto& c : p.cycles) {
        MinimalPackingReport::CycleFacts facts;
        facts.length = static_cast<int>(c.cycle.size());
        auto chords = cycle_chords(g, c.cycle);
        facts.chord_count = static_cast<int>(chords.size());
        if (facts.length >= 7) {
            if (facts.chord_count > 2) {
                std::ostringstream os;
                os << "cycle of length " << facts.length << " carries " << facts.chord_count
                   << " chords";
                throw soundness_error(os.str());
            }
            if (facts.chord_count == 2) {
                std::vector<int> pos(g.order(), -1);
                for (int i = 0; i < facts.length; ++i) pos[c.cycle[i]] = i;
                int i1 = pos[chords[0].first], i2 = pos[chords[0].second];
                int j1 = pos[chords[1].first], j2 = pos[chords[1].second];
                if (i1 > i2) std::swap(i1, i2);
                if (j1 > j2) std::swap(j1, j2);
                facts.crossing_ok = chords_cross(facts.length, i1, i2, j1, j2);
                if (!facts.crossing_ok)
                    throw soundness_error("two chords of a long minimal-packing member do not cross");
            }
        }
        report.cycles.push_back(facts);
    }

    for (int x = 0; x < g.order(); ++x) {
        if (inside[x]) continue;
        for (const auto& c : p.cycles) {
            int deg_c = 0;
            for (int v : c.cycle)
                if (g.has_edge(x, v)) ++deg_c;
            report.max_outside_degree = std::max(report.max_outside_degree, deg_c);
            const int len = static_cast<int>(c.cycle.size());
            std::ostringstream os;
            os << "outside vertex " << x << " sends " << deg_c << " edges to a cycle of length "
               << len;
            if (deg_c > 4) throw soundness_error(os.str());
            if (deg_c == 4 && len != 4) throw soundness_error(os.str());
            if (deg_c == 3 && len > 6) throw soundness_error(os.str());
        }
    }
    return report;
}

TheoremInstance check_hypothesis(long n, int k, int t, std::optional<long> sigma_value) {
    if (k < 1 || t < 1) throw precondition_error("hypothesis check needs k, t >= 1");
    TheoremInstance ti;
    ti.k = k;
    ti.t = t;
    ti.n = n;
    ti.sigma_value = sigma_value;
    ti.order_threshold = (10L * t - 1) * (k - 1) + 12L * t + 13;
    ti.degree_threshold = 3L * k * t - t + 1;
    ti.order_ok = n >= ti.order_threshold;
    ti.degree_ok = !sigma_value || *sigma_value >= ti.degree_threshold;
    return ti;
}

PriorTheoremsReport check_prior_theorems(const Graph& g, int k, long budget) {
    if (k < 1) throw precondition_error("prior theorem check needs k >= 1");
    PriorTheoremsReport report;
    const long n = g.order();
    long min_deg = n > 0 ? g.degree(0) : 0;
    for (int v = 1; v < g.order(); ++v) min_deg = std::min<long>(min_deg, g.degree(v));

    auto sigma_at_least = [&](int t, long threshold) {
        auto s = sigma(g, t);
        return !s.value || *s.value >= threshold;
    };

    std::vector<std::pair<int, bool>> applicability = {
        {1, n >= 4L * k && n > 0 && min_deg >= 3L * k},
        {2, n >= 4L * k && sigma_at_least(2, 6L * k - 1)},
        {3, n >= 8L * k + 5 && sigma_at_least(3, 9L * k - 2)},
        {4, n >= 11L * k + 7 && sigma_at_least(4, 12L * k - 3)},
    };
    for (auto [thm, applies] : applicability) {
        PriorTheoremsReport::Entry e;
        e.theorem = thm;
        e.applies = applies;
        if (applies) {
            report.any_applies = true;
            auto r = max_packing(g, k, budget);
            e.status = r.status;
            if (r.status == PackStatus::inconclusive)
                report.inconclusive = true;
            else if (r.status != PackStatus::found) {
                report.all_packed = false;
                throw soundness_error("hypotheses of a packing theorem hold but the exact "
                                      "search found no packing of size " + std::to_string(k));
            }
        }
        report.entries.push_back(e);
    }
    if (!report.any_applies) report.all_packed = false;
    return report;
}

}  // namespace chorded
