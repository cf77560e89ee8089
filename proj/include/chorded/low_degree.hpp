#ifndef CHORDED_LOW_DEGREE_HPP
#define CHORDED_LOW_DEGREE_HPP

#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

struct LowDegreeIndependentSet {
    std::vector<int> vertices;   // I: independent, all host degrees <= 2
    int host_n = 0;
    long guarantee_num = 0;      // promised lower bound on |I| as a rational
    long guarantee_den = 1;      // (host_n/4 for trees, host_n/12 in general)
    std::vector<int> s_set;      // S: all vertices of host degree <= 2 that I was drawn from
};

// All leaves and stems of a tree; at least n/2 + 1 of them.
std::vector<int> tree_low_degree_vertices(const Graph& t);

// Larger 2-coloring class within the leaf/stem set; at least n/4 vertices.
LowDegreeIndependentSet tree_independent_low_degree(const Graph& t);

// Independent set of degree-<=2 vertices of order >= n/12 in a non-chorded
// graph, built per connected component: tree routine on acyclic components,
// alternating vertices on cycle components, otherwise the larger 2-coloring
// class of the forest <S>. Chorded input is rejected with a witness.
LowDegreeIndependentSet nonchorded_independent_low_degree(const Graph& h);

// Replays the block-path growth sequence per cyclic component and checks
// |S_i| >= |F_i|/5 + 2 at every block step.
struct Lemma2DeepReport {
    struct Step {
        long f_order = 0;   // |F_i|
        long s_count = 0;   // degree-<=2 vertices of the induced F_i
        bool ok = false;
    };
    std::vector<Step> steps;
    bool all_ok = true;
};

Lemma2DeepReport low_degree_deep_check(const Graph& h);

}  // namespace chorded

#endif
