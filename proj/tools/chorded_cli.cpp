#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chorded/json_io.hpp"

using namespace chorded;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long default_budget() {
    if (const char* env = std::getenv("CHORDED_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "ignoring malformed CHORDED_BUDGET\n";
    }
    return kDefaultPackBudget;
}

struct Outcome {
    std::string status = "ok";  // ok | no_witness | inconclusive | error
    json payload = json::object();
    std::string summary;

    int exit_code() const {
        if (status == "error") return 1;
        if (status == "inconclusive") return 2;
        return 0;
    }
};

void emit(const Outcome& out, std::chrono::steady_clock::time_point started) {
    json doc{{"status", out.status}, {"payload", out.payload}};
    std::cout << doc.dump(2) << "\n";
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << out.status;
    if (!out.summary.empty()) std::cerr << ": " << out.summary;
    std::cerr << " (" << elapsed.count() << "s)\n";
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> vs(g.order());
    for (int v = 0; v < g.order(); ++v) vs[v] = v;
    return vs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chorded cycle toolkit: detection, decomposition, low-degree "
                 "independent sets, exact packing, extremal families"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string packing_path;
    int opt_t = 1, opt_k = 1, opt_n = 6, opt_rounds = 0, opt_max_n = 6;
    long opt_budget = default_budget();
    bool flag_blocks = false, flag_ears = false;
    bool flag_tree = false, flag_general = false, flag_deep = false;
    bool flag_minimal = false;
    bool flag_conjecture = false, flag_fact1 = false, flag_fact2 = false, flag_prop4 = false;

    auto* detect = app.add_subcommand("detect", "find a chorded cycle");
    detect->add_option("input", input, "edge-list file or -");

    auto* oracle = app.add_subcommand("oracle", "brute-force chordality oracle (n <= 12)");
    oracle->add_option("input", input, "edge-list file or -");

    auto* decompose = app.add_subcommand("decompose", "structure of a non-chorded graph");
    decompose->add_flag("--blocks", flag_blocks, "block-path decomposition");
    decompose->add_flag("--ears", flag_ears, "ear decomposition (biconnected input)");
    decompose->add_option("input", input, "edge-list file or -");

    auto* indep = app.add_subcommand("indep", "guaranteed low-degree independent set");
    indep->add_flag("--tree", flag_tree, "tree extraction (n/4 bound)");
    indep->add_flag("--general", flag_general, "non-chorded extraction (n/12 bound)");
    indep->add_flag("--deep", flag_deep, "also replay the block growth bound");
    indep->add_option("input", input, "edge-list file or -");

    auto* sigma_cmd = app.add_subcommand("sigma", "minimum degree sum over independent t-sets");
    sigma_cmd->add_option("--t", opt_t, "set size")->required();
    sigma_cmd->add_option("input", input, "edge-list file or -");

    auto* pack = app.add_subcommand("pack", "exact vertex-disjoint chorded-cycle packing");
    pack->add_option("--k", opt_k, "target packing size")->required();
    pack->add_flag("--minimal", flag_minimal, "minimize total vertices");
    pack->add_option("--budget", opt_budget, "search node budget");
    pack->add_option("input", input, "edge-list file or -");

    auto* hyp = app.add_subcommand("hypothesis", "degree-sum hypothesis flags for (k, t)");
    hyp->add_option("--k", opt_k, "packing size")->required();
    hyp->add_option("--t", opt_t, "independent set size")->required();
    hyp->add_option("input", input, "edge-list file or -");

    auto* gen = app.add_subcommand("gen", "extremal family generators (edge-list output)");
    gen->require_subcommand(1);
    auto* gen_bip = gen->add_subcommand("bipartite", "complete bipartite sharpness graph");
    gen_bip->add_option("--k", opt_k)->required();
    gen_bip->add_option("--n", opt_n)->required();
    auto* gen_g1_cmd = gen->add_subcommand("g1", "chained 6-vertex copies");
    gen_g1_cmd->add_option("--k", opt_k)->required();
    auto* gen_g2_cmd = gen->add_subcommand("g2", "iterated triangle growth");
    gen_g2_cmd->add_option("--rounds", opt_rounds)->required();

    auto* sweep = app.add_subcommand("sweep", "exhaustive small-graph sweeps");
    sweep->add_flag("--conjecture", flag_conjecture, "low-degree independence ratio");
    sweep->add_flag("--fact1", flag_fact1, "2-degenerate ordering and tripartition");
    sweep->add_flag("--fact2", flag_fact2, "edge bound 2n-4");
    sweep->add_flag("--prop4", flag_prop4, "stem count bound");
    sweep->add_option("--max-n", opt_max_n, "largest order to enumerate")->required();

    auto* verify = app.add_subcommand("verify", "validate a packing JSON against a graph");
    verify->add_option("--packing", packing_path, "packing JSON file")->required();
    verify->add_option("input", input, "edge-list file or -");

    CLI11_PARSE(app, argc, argv);
    auto started = std::chrono::steady_clock::now();
    Outcome out;

    try {
        if (*detect) {
            Graph g = Graph::parse(read_input(input));
            if (auto w = find_chorded_cycle(g)) {
                out.payload = to_json(*w);
                out.summary = "chorded cycle on " + std::to_string(w->cycle.size()) + " vertices";
            } else {
                out.status = "no_witness";
                out.summary = "graph is non-chorded";
            }
        } else if (*oracle) {
            Graph g = Graph::parse(read_input(input));
            bool nc = is_non_chorded_bruteforce(g);
            out.payload = json{{"non_chorded", nc}};
            out.summary = nc ? "non-chorded" : "contains a chorded cycle";
        } else if (*decompose) {
            if (flag_blocks == flag_ears)
                throw std::runtime_error("choose exactly one of --blocks / --ears");
            Graph g = Graph::parse(read_input(input));
            if (flag_ears) {
                auto r = ear_decompose(g, all_vertices(g));
                if (auto* d = std::get_if<EarDecomposition>(&r)) {
                    out.payload = to_json(*d);
                    out.summary = "base cycle of " + std::to_string(d->base_cycle.size()) +
                                  " vertices, " + std::to_string(d->ears.size()) + " ears";
                } else {
                    out.payload = json{{"witness", to_json(std::get<CycleWithChords>(r))}};
                    out.summary = "input is chorded";
                }
            } else {
                auto r = block_path_decompose(g);
                if (auto* d = std::get_if<BlockPathDecomposition>(&r)) {
                    out.payload = to_json(*d);
                    out.summary = std::to_string(d->blocks.size()) + " blocks, " +
                                  std::to_string(d->pendants.size()) + " pendant paths";
                } else {
                    out.payload = json{{"witness", to_json(std::get<CycleWithChords>(r))}};
                    out.summary = "input is chorded";
                }
            }
        } else if (*indep) {
            if (flag_tree == flag_general)
                throw std::runtime_error("choose exactly one of --tree / --general");
            Graph g = Graph::parse(read_input(input));
            LowDegreeIndependentSet s = flag_tree ? tree_independent_low_degree(g)
                                                  : nonchorded_independent_low_degree(g);
            out.payload = to_json(s);
            if (flag_deep && flag_general) out.payload["deep_check"] = to_json(low_degree_deep_check(g));
            out.summary = "|I| = " + std::to_string(s.vertices.size()) + ", |S| = " +
                          std::to_string(s.s_set.size());
        } else if (*sigma_cmd) {
            Graph g = Graph::parse(read_input(input));
            auto s = sigma(g, opt_t);
            out.payload = to_json(s);
            out.summary = s.value ? "sigma = " + std::to_string(*s.value) : "sigma = infinity";
        } else if (*pack) {
            Graph g = Graph::parse(read_input(input));
            if (flag_minimal) {
                try {
                    Packing p = minimal_packing(g, opt_k, opt_budget);
                    out.payload = to_json(p);
                    out.payload["k"] = opt_k;
                    out.payload["status"] = "found";
                    out.summary = "minimal " + std::to_string(opt_k) + "-packing on " +
                                  std::to_string(p.total_vertices) + " vertices";
                } catch (const no_packing_error&) {
                    out.status = "no_witness";
                    out.payload = json{{"k", opt_k}, {"status", "exhausted"}};
                    out.summary = "no packing of size " + std::to_string(opt_k);
                }
            } else {
                auto r = max_packing(g, opt_k, opt_budget);
                out.payload = to_json(r);
                out.payload["k"] = opt_k;
                if (r.status == PackStatus::found) {
                    out.summary = "packing of size " + std::to_string(opt_k);
                } else if (r.status == PackStatus::exhausted) {
                    out.status = "no_witness";
                    out.summary = "exhausted, maximum packing size " +
                                  std::to_string(r.max_found);
                } else {
                    out.status = "inconclusive";
                    out.summary = "budget exhausted before completion";
                }
            }
        } else if (*hyp) {
            Graph g = Graph::parse(read_input(input));
            auto s = sigma(g, opt_t);
            auto ti = check_hypothesis(g.order(), opt_k, opt_t, s.value);
            out.payload = to_json(ti);
            out.summary = std::string("order_ok=") + (ti.order_ok ? "yes" : "no") +
                          " degree_ok=" + (ti.degree_ok ? "yes" : "no");
        } else if (*gen) {
            Graph g = *gen_bip    ? gen_sharpness_bipartite(opt_k, opt_n)
                      : *gen_g1_cmd ? gen_g1(opt_k)
                                    : gen_g2(opt_rounds);
            std::cout << g.serialize();
            std::cerr << "ok: " << g.order() << " vertices, " << g.edge_count() << " edges\n";
            return 0;
        } else if (*sweep) {
            int picked = int(flag_conjecture) + int(flag_fact1) + int(flag_fact2) + int(flag_prop4);
            if (picked != 1)
                throw std::runtime_error(
                    "choose exactly one of --conjecture / --fact1 / --fact2 / --prop4");
            if (flag_conjecture) {
                auto r = conjecture_sweep(opt_max_n);
                out.payload = to_json(r);
                out.summary = "min ratio " + std::to_string(r.min_ratio_num) + "/" +
                              std::to_string(r.min_ratio_den) + " over " +
                              std::to_string(r.graphs_checked) + " graphs";
                if (r.violations || r.lemma2_failures) out.status = "error";
            } else {
                SweepReport r = flag_fact1 ? sweep_fact1(opt_max_n)
                               : flag_fact2 ? sweep_fact2(opt_max_n)
                                            : sweep_prop4(opt_max_n);
                out.payload = to_json(r);
                out.summary = std::to_string(r.violations) + " violations over " +
                              std::to_string(r.graphs_checked) + " graphs";
                if (r.violations) out.status = "error";
            }
        } else if (*verify) {
            Graph g = Graph::parse(read_input(input));
            json pj = json::parse(read_input(packing_path));
            if (pj.contains("payload")) pj = pj["payload"];  // accept pack's own output
            Packing p = packing_from_json(pj);
            std::string why;
            bool valid = p.validate(g, &why);
            out.payload = json{{"valid", valid}};
            if (!valid) out.payload["why"] = why;
            out.summary = valid ? "packing validates" : ("invalid: " + why);
        }
    } catch (const budget_error& e) {
        out.status = "inconclusive";
        out.payload = json{{"error", e.what()}};
        out.summary = e.what();
    } catch (const chorded_input_error& e) {
        out.status = "error";
        out.payload = json{{"error", e.what()}, {"witness", to_json(e.witness)}};
        out.summary = e.what();
    } catch (const std::exception& e) {
        out.status = "error";
        out.payload = json{{"error", e.what()}};
        out.summary = e.what();
    }

    emit(out, started);
    return out.exit_code();
}
