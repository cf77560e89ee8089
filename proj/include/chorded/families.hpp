#ifndef CHORDED_FAMILIES_HPP
#define CHORDED_FAMILIES_HPP

#include <string>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

// K_{3k-1, n-3k+1}: part A = 0..3k-2, part B = 3k-1..n-1. Requires k >= 1,
// n >= 3k.
Graph gen_sharpness_bipartite(int k, int n);

// k chained copies of the 6-vertex graph H (5-cycle x1..x5 plus x6 adjacent
// to x2 and x5). Copy j occupies vertices 6j..6j+5 with x_i at 6j+i-1; copies
// are linked by edges (6j+5, 6j+6). Requires k >= 1.
Graph gen_g1(int k);

inline constexpr int kG2RoundsCap = 8;

// Iterated triangle growth: rounds = 0 is a triangle; each round attaches a
// fresh triangle by one edge to every current degree-2 vertex (in ascending
// vertex order; new vertices are numbered consecutively). Requires
// 0 <= rounds <= kG2RoundsCap.
Graph gen_g2(int rounds);

inline constexpr long kDefaultMisBudget = 50'000'000;

// Exact maximum independent subset of S = {v : deg(v) <= 2}; the
// lexicographically least among maximum subsets. Throws budget_error when
// the subset search exceeds its node budget.
std::vector<int> max_low_degree_independent(const Graph& g, long budget = kDefaultMisBudget);

struct ConjectureSweepReport {
    int max_n = 0;
    long graphs_checked = 0;
    long min_ratio_num = 1;  // min over graphs of |max I| / n
    long min_ratio_den = 1;
    std::vector<std::string> witnesses;  // serialized minimum-ratio graphs (capped)
    long violations = 0;                 // graphs with ratio < 1/6
    long lemma2_failures = 0;            // extractor output failing its own guarantee
};

inline constexpr int kSweepWitnessCap = 16;

// Sweeps every connected non-chorded graph on up to max_n vertices, computing
// the exact low-degree independence ratio and re-verifying the n/12
// extraction on each graph.
ConjectureSweepReport conjecture_sweep(int max_n);

struct SweepReport {
    int max_n = 0;
    long graphs_checked = 0;
    long violations = 0;
    std::string detail;  // first violation, when any
};

// Non-chorded graphs up to max_n: degeneracy ordering with back-degree <= 2
// exists and greedy tripartition is proper.
SweepReport sweep_fact1(int max_n);

// Non-chorded graphs on 4..max_n vertices: m <= 2n - 4.
SweepReport sweep_fact2(int max_n);

// Non-chorded biconnected graphs on 4..max_n vertices: stem count is at
// least (n-2)/3 + 2.
SweepReport sweep_prop4(int max_n);

}  // namespace chorded

#endif
