#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcount/dp.hpp"
#include "homcount/hcol.hpp"
#include "homcount/io.hpp"
#include "homcount/oracle.hpp"

using namespace homcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct SolverOptions {
    std::string engine = "hcol";
    int t = 6;
    int n0 = 10;
    std::string scale = "1";
    unsigned long long cap = kDefaultOracleCap;
    bool json = false;
    bool stats = false;
    bool debug = false;
    bool check_structure = false;
};

void add_solver_flags(CLI::App* cmd, SolverOptions& opt) {
    cmd->add_option("--engine", opt.engine, "Solver engine")
        ->check(CLI::IsMember({"hcol", "dp", "brute"}))
        ->capture_default_str();
    cmd->add_option("--t", opt.t, "Path parameter for the low-degree rule")->capture_default_str();
    cmd->add_option("--n0", opt.n0, "Exhaustive cutoff of the branching solver")
        ->capture_default_str();
    cmd->add_option("--scale", opt.scale, "Rational multiplier on the degree threshold")
        ->capture_default_str();
    cmd->add_option("--cap", opt.cap, "Map cap for --engine brute")->capture_default_str();
    cmd->add_flag("--json", opt.json, "Machine-readable output");
    cmd->add_flag("--stats", opt.stats, "Report recursion statistics on stderr");
    cmd->add_flag("--debug", opt.debug, "Arm branching assertions and per-node tracing");
    cmd->add_flag("--check-structure", opt.check_structure,
                  "Warn when the inputs miss the structural assumptions");
}

void apply_debug_env(SolverOptions& opt) {
    const char* env = std::getenv("HOMCOUNT_DEBUG");
    if (env && *env) opt.debug = true;
}

std::string shared_set_text(const TargetGraph& target, const std::vector<int>& colours) {
    std::string out = "{";
    for (std::size_t i = 0; i < colours.size(); ++i) {
        if (i) out += ",";
        out += target.name(colours[i]);
    }
    return out + "}";
}

void structure_warnings(const SolverOptions& opt, const SimpleGraph& g, const TargetGraph& target) {
    if (!opt.check_structure) return;
    if (const auto violation = common_neighbourhood_violation(target)) {
        std::cerr << "warning: target fails the common-neighbourhood condition (pair "
                  << target.name(violation->a) << "," << target.name(violation->b) << " shares "
                  << shared_set_text(target, violation->shared) << ")\n";
    }
    if (g.vertex_count() > 0 && longest_induced_path_order(g, opt.t) >= opt.t) {
        std::cerr << "warning: graph is not P_" << opt.t
                  << "-free; the subexponential node bound does not apply\n";
    }
}

void print_stats(const RecursionStats& stats, const Instance& inst, const TargetGraph& target,
                 int t) {
    std::cerr << "stats: nodes=" << stats.nodes << " max_depth=" << stats.max_depth
              << " rule_counts=[";
    for (std::size_t i = 0; i < stats.rule_counts.size(); ++i)
        std::cerr << (i ? "," : "") << stats.rule_counts[i];
    std::cerr << "]\n";
    const long long w = inst.weight();
    if (w >= 2) {
        const double c =
            4.0 * std::sqrt(static_cast<double>(t) * target.colour_count()) / std::log(2.0);
        std::cerr << "stats: weight=" << w << " bound_constant=" << c
                  << " recursion_bound=" << recursion_bound(static_cast<int>(w), t, c) << "\n";
    }
}

template <Semiring S>
typename S::Value run_engine(const SolverOptions& opt, const Instance& inst,
                             const TargetGraph& target, const S& sr) {
    if (opt.stats && opt.engine != "hcol")
        std::cerr << "stats: only reported for --engine hcol\n";
    if (opt.engine == "brute") return brute_force_solve(inst, target, sr, opt.cap);
    if (opt.engine == "dp") return dp_solve_components(inst, target, sr);
    HColConfig cfg;
    cfg.n0 = opt.n0;
    cfg.t = opt.t;
    cfg.degree_threshold_scale = parse_rational(opt.scale);
    cfg.debug = opt.debug;
    cfg.trace = opt.debug ? &std::cerr : nullptr;
    const auto out = hcol_solve(inst, target, cfg, sr);
    if (opt.stats) print_stats(out.stats, inst, target, opt.t);
    return out.value;
}

struct PartitionArgs {
    std::string graph_file, target_file, lists_file, weights_file;
    SolverOptions opt;
};

int cmd_partition(const PartitionArgs& args) {
    SolverOptions opt = args.opt;
    apply_debug_env(opt);
    const SimpleGraph g = parse_graph_file(args.graph_file);
    const TargetGraph target = parse_target_file(args.target_file);
    Instance inst;
    inst.graph = g;
    inst.lists = args.lists_file.empty()
                     ? ListAssignment::all_colours(g.vertex_count(), target.colour_count())
                     : parse_lists_file(args.lists_file, target, g.vertex_count());
    if (!args.weights_file.empty())
        inst.weights = parse_weights_file(args.weights_file, target, g.vertex_count());
    structure_warnings(opt, g, target);

    const Polynomial p = run_engine(opt, inst, target, PartitionSemiring{target.colour_count()});
    if (opt.json) {
        std::vector<std::string> names;
        for (int h = 0; h < target.colour_count(); ++h) names.push_back(target.name(h));
        std::cout << polynomial_to_json(p, names).dump() << "\n";
    } else {
        std::cout << polynomial_to_text(p, colour_tokens(target)) << "\n";
    }
    return kExitOk;
}

struct CountArgs {
    std::string graph_file, target_file;
    int k = 0;
    SolverOptions opt;
};

int cmd_count(const CountArgs& args) {
    SolverOptions opt = args.opt;
    apply_debug_env(opt);
    const SimpleGraph g = parse_graph_file(args.graph_file);
    if ((args.k > 0) == !args.target_file.empty())
        throw ParseError("count needs exactly one of --k and --target");
    const TargetGraph target =
        args.k > 0 ? TargetGraph::complete(args.k) : parse_target_file(args.target_file);
    const Instance inst = make_unit_instance(g, target.colour_count());
    structure_warnings(opt, g, target);

    const Rational value = run_engine(opt, inst, target, CountSemiring{});
    if (opt.json)
        std::cout << nlohmann::json{{"value", rational_to_string(value)}}.dump() << "\n";
    else
        std::cout << rational_to_string(value) << "\n";
    return kExitOk;
}

struct MinCostArgs {
    std::string graph_file, target_file, weights_file, lists_file;
    SolverOptions opt;
};

int cmd_mincost(const MinCostArgs& args) {
    SolverOptions opt = args.opt;
    apply_debug_env(opt);
    const SimpleGraph g = parse_graph_file(args.graph_file);
    const TargetGraph target = parse_target_file(args.target_file);
    Instance inst;
    inst.graph = g;
    inst.lists = args.lists_file.empty()
                     ? ListAssignment::all_colours(g.vertex_count(), target.colour_count())
                     : parse_lists_file(args.lists_file, target, g.vertex_count());
    inst.weights = parse_weights_file(args.weights_file, target, g.vertex_count());
    structure_warnings(opt, g, target);

    const Cost value = run_engine(opt, inst, target, MinCostSemiring{});
    if (opt.json) {
        nlohmann::json j{{"infeasible", value.is_infinite()}};
        j["value"] = value.is_infinite() ? nlohmann::json(nullptr)
                                         : nlohmann::json(rational_to_string(value.value()));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (value.is_infinite() ? "infeasible" : rational_to_string(value.value()))
                  << "\n";
    }
    return kExitOk;
}

struct IndepArgs {
    std::string graph_file;
    SolverOptions opt;
};

int cmd_indep_poly(const IndepArgs& args) {
    SolverOptions opt = args.opt;
    apply_debug_env(opt);
    const SimpleGraph g = parse_graph_file(args.graph_file);
    const TargetGraph target = TargetGraph::independent_set_target();
    const Instance inst = make_unit_instance(g, target.colour_count());

    const Polynomial full = run_engine(opt, inst, target, PartitionSemiring{2});
    const Polynomial p = full.substitute_one(target.index_of("out"));
    if (opt.json)
        std::cout << polynomial_to_json(p, {"x", "out"}).dump() << "\n";
    else
        std::cout << polynomial_to_text(p, {"x", "x_out"}) << "\n";
    return kExitOk;
}

struct DecompArgs {
    std::string graph_file;
    int root = 0;
    SolverOptions opt;
};

int cmd_decomp(const DecompArgs& args) {
    const SimpleGraph g = parse_graph_file(args.graph_file);
    if (g.vertex_count() > 0 && (args.root < 0 || args.root >= g.vertex_count()))
        throw ParseError("--root out of range");
    const PathDecomposition pd = path_decomposition_components(g, args.root);
    if (args.opt.check_structure) {
        const int order = g.vertex_count() ? longest_induced_path_order(g, args.opt.t) : 0;
        if (order >= args.opt.t) std::cerr << "warning: graph is not P_" << args.opt.t << "-free\n";
        std::cerr << "width bound for t=" << args.opt.t << ": "
                  << (width_bound_holds(g, pd, args.opt.t) ? "holds" : "exceeded") << "\n";
    }
    std::cout << decomposition_to_json(pd).dump() << "\n";
    return kExitOk;
}

int cmd_treedepth(const DecompArgs& args) {
    const SimpleGraph g = parse_graph_file(args.graph_file);
    if (g.vertex_count() > 0 && (args.root < 0 || args.root >= g.vertex_count()))
        throw ParseError("--root out of range");
    std::cout << forest_to_json(treedepth_forest_components(g, args.root)).dump() << "\n";
    return kExitOk;
}

struct CheckArgs {
    std::string graph_file, target_file;
    int t = 0;
    int cap = 16;
};

int cmd_check(const CheckArgs& args) {
    if (args.graph_file.empty() && args.target_file.empty())
        throw ParseError("check needs --graph and/or --target");
    if (!args.graph_file.empty()) {
        const SimpleGraph g = parse_graph_file(args.graph_file);
        std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
                  << " max_degree=" << g.max_degree() << "\n";
        if (g.vertex_count() > 0) {
            const int cap = std::max(1, std::max(args.cap, args.t));
            const int order = longest_induced_path_order(g, cap);
            std::cout << "longest induced path order: " << order;
            if (order == cap) std::cout << " (search capped)";
            std::cout << "\n";
            if (args.t > 0)
                std::cout << "P_" << args.t << "-free: " << (order < args.t ? "yes" : "no") << "\n";
        }
    }
    if (!args.target_file.empty()) {
        const TargetGraph target = parse_target_file(args.target_file);
        std::cout << "target: colours=" << target.colour_count()
                  << " edges=" << target.edge_count() << "\n";
        if (const auto violation = common_neighbourhood_violation(target)) {
            std::cout << "common-neighbourhood condition: FAIL (pair " << target.name(violation->a)
                      << "," << target.name(violation->b) << " shares "
                      << shared_set_text(target, violation->shared) << ")\n";
        } else {
            std::cout << "common-neighbourhood condition: PASS\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact list H-colouring partition functions, counts and optima"};
    app.require_subcommand(1);

    PartitionArgs partition_args;
    auto* partition = app.add_subcommand("partition", "Multivariate partition polynomial");
    partition->add_option("graph", partition_args.graph_file, "Graph file")->required();
    partition->add_option("target", partition_args.target_file, "Target file")->required();
    partition->add_option("--lists", partition_args.lists_file, "Colour lists file");
    partition->add_option("--weights", partition_args.weights_file, "Weights file");
    add_solver_flags(partition, partition_args.opt);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Number of list colourings");
    count->add_option("graph", count_args.graph_file, "Graph file")->required();
    count->add_option("--k", count_args.k, "Use the complete target on k colours");
    count->add_option("--target", count_args.target_file, "Target file");
    add_solver_flags(count, count_args.opt);

    MinCostArgs mincost_args;
    auto* mincost = app.add_subcommand("mincost", "Minimum total weight of a colouring");
    mincost->add_option("graph", mincost_args.graph_file, "Graph file")->required();
    mincost->add_option("target", mincost_args.target_file, "Target file")->required();
    mincost->add_option("weights", mincost_args.weights_file, "Weights file")->required();
    mincost->add_option("--lists", mincost_args.lists_file, "Colour lists file");
    add_solver_flags(mincost, mincost_args.opt);

    IndepArgs indep_args;
    auto* indep = app.add_subcommand("indep-poly", "Independence polynomial");
    indep->add_option("graph", indep_args.graph_file, "Graph file")->required();
    add_solver_flags(indep, indep_args.opt);

    DecompArgs decomp_args;
    auto* decomp = app.add_subcommand("decomp", "Path decomposition as JSON");
    decomp->add_option("graph", decomp_args.graph_file, "Graph file")->required();
    decomp->add_option("--root", decomp_args.root, "Root vertex")->capture_default_str();
    decomp->add_option("--t", decomp_args.opt.t, "Path parameter for the width bound report")
        ->capture_default_str();
    decomp->add_flag("--check-structure", decomp_args.opt.check_structure,
                     "Report the width bound on stderr");

    DecompArgs treedepth_args;
    auto* treedepth = app.add_subcommand("treedepth", "Tree-depth forest as JSON");
    treedepth->add_option("graph", treedepth_args.graph_file, "Graph file")->required();
    treedepth->add_option("--root", treedepth_args.root, "Root vertex")->capture_default_str();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Structure report for a graph or target");
    check->add_option("--graph", check_args.graph_file, "Graph file");
    check->add_option("--target", check_args.target_file, "Target file");
    check->add_option("--t", check_args.t, "Report P_t-freeness");
    check->add_option("--cap", check_args.cap, "Induced path search cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (app.got_subcommand(partition)) return cmd_partition(partition_args);
        if (app.got_subcommand(count)) return cmd_count(count_args);
        if (app.got_subcommand(mincost)) return cmd_mincost(mincost_args);
        if (app.got_subcommand(indep)) return cmd_indep_poly(indep_args);
        if (app.got_subcommand(decomp)) return cmd_decomp(decomp_args);
        if (app.got_subcommand(treedepth)) return cmd_treedepth(treedepth_args);
        if (app.got_subcommand(check)) return cmd_check(check_args);
    } catch (const OracleCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
