#ifndef CHORDED_PACKING_HPP
#define CHORDED_PACKING_HPP

#include <optional>
#include <string>
#include <vector>

#include "chorded/chordality.hpp"
#include "chorded/graph.hpp"

namespace chorded {

inline constexpr long kDefaultSigmaBudget = 50'000'000;
inline constexpr long kDefaultPackBudget = 10'000'000;
inline constexpr int kSigmaExhaustiveOrder = 20;  // no budget applied at or below

struct DegreeSumStat {
    int t = 0;
    std::optional<long> value;  // nullopt: infinity (independence number < t)
    std::vector<int> witness;   // a minimum independent t-set, empty when infinite
};

// Exact minimum degree sum over independent t-sets, by branch and bound in
// vertex order; the witness is the lexicographically least minimum set.
// Budget (search nodes) applies only above kSigmaExhaustiveOrder; throws
// budget_error when exceeded.
DegreeSumStat sigma(const Graph& g, int t, long budget = kDefaultSigmaBudget);

struct Packing {
    std::vector<CycleWithChords> cycles;  // pairwise vertex-disjoint
    long total_vertices = 0;

    bool validate(const Graph& g, std::string* why = nullptr) const;
};

enum class PackStatus { found, exhausted, inconclusive };

struct PackResult {
    PackStatus status = PackStatus::inconclusive;
    Packing packing;     // the k_target-packing when found
    int max_found = 0;   // largest packing size seen (exact when exhausted)
    long nodes = 0;      // search nodes spent
};

// Exact backtracking search for k_target vertex-disjoint chorded cycles.
// Candidates are enumerated in canonical order (length, then vertex
// sequence); branches are pruned when they can neither complete a
// k_target-packing nor raise the maximum size seen, or when the residual
// graph is chord-free. "exhausted" is reported only when the full tree was
// explored within budget; max_found is then the exact maximum packing size.
PackResult max_packing(const Graph& g, int k_target, long budget = kDefaultPackBudget);

class no_packing_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MinimalTieBreak {
    none,                // minimum total vertices only
    components,          // then fewest components of g minus the packing
    components_then_k4,  // then most K4 members
};

// Among all packings of size k, one minimizing total vertex count (the first
// such in canonical order). Throws no_packing_error when no k-packing exists
// and budget_error when the search could not be completed.
Packing minimal_packing(const Graph& g, int k, long budget = kDefaultPackBudget,
                        MinimalTieBreak tie_break = MinimalTieBreak::none);

struct MinimalPackingReport {
    struct CycleFacts {
        int length = 0;
        int chord_count = 0;
        bool crossing_ok = true;  // two chords must cross (length >= 7 members)
    };
    std::vector<CycleFacts> cycles;
    int max_outside_degree = 0;
    bool ok = true;
    std::string violation;  // counterexample description when !ok
};

// Checks the minimal-packing facts: members of length >= 7 carry at most two
// chords (crossing when exactly two), and every outside vertex sends at most
// 4 edges to a member, 4 only to a 4-cycle and 3 only to a member of length
// <= 6. With verify_minimal the packing is re-checked to be minimal.
// Violations of the facts raise soundness_error with the counterexample.
MinimalPackingReport minimal_packing_properties(const Graph& g, const Packing& p,
                                                bool verify_minimal = true,
                                                long budget = kDefaultPackBudget);

struct TheoremInstance {
    int k = 0;
    int t = 0;
    long n = 0;
    std::optional<long> sigma_value;  // nullopt: infinity
    long order_threshold = 0;         // (10t-1)(k-1) + 12t + 13
    long degree_threshold = 0;        // 3kt - t + 1
    bool order_ok = false;
    bool degree_ok = false;
};

TheoremInstance check_hypothesis(long n, int k, int t, std::optional<long> sigma_value);

struct PriorTheoremsReport {
    struct Entry {
        int theorem = 0;  // 1..4
        bool applies = false;
        PackStatus status = PackStatus::inconclusive;  // meaningful when applies
    };
    std::vector<Entry> entries;
    bool any_applies = false;
    bool all_packed = true;     // every applicable theorem produced a k-packing
    bool inconclusive = false;  // some applicable search hit its budget
};

// Degree/degree-sum hypotheses of the four prior packing theorems; for each
// one g satisfies, runs max_packing and reports the outcome.
PriorTheoremsReport check_prior_theorems(const Graph& g, int k,
                                         long budget = kDefaultPackBudget);

}  // namespace chorded

#endif
