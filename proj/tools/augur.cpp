// augur: generate instances, solve them by iterative rounding, analyse
// witness trees and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "augur/harmonic.hpp"
#include "augur/instances.hpp"
#include "augur/io.hpp"
#include "augur/reductions.hpp"
#include "augur/rounding.hpp"
#include "augur/steiner.hpp"
#include "augur/verify.hpp"
#include "augur/witness.hpp"
#include "json.hpp"

using namespace augur;
using nlohmann::json;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* s = std::getenv("AUGUR_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
            std::cerr << "warning: ignoring malformed AUGUR_SEED\n";
        }
    }
    return 1;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    double epsilon = 0;
    int t = 3, n = 10, links = 8, cycles = 3, max_len = 5;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    json meta{{"generator", a.kind}};
    InstanceFile f;
    if (a.kind == "path-family") {
        const int t = a.epsilon > 0 ? path_family_length(a.epsilon) : a.t;
        meta["t"] = t;
        f = file_from_tree_instance(gen_path_family(t), meta);
    } else if (a.kind == "five-layer") {
        meta["witness_root"] = FiveLayer::witness_root;
        meta["leaf_order"] = "lexicographic";
        f = file_from_tree_instance(gen_five_layer(), meta);
    } else if (a.kind == "random-tree") {
        meta["n"] = a.n;
        meta["seed"] = a.seed;
        f = file_from_tree_instance(gen_random_tree_instance(a.n, a.seed), meta);
    } else if (a.kind == "random-leaf-adjacent") {
        meta["n"] = a.n;
        meta["seed"] = a.seed;
        f = file_from_tree_instance(gen_random_leaf_adjacent(a.n, a.seed), meta);
    } else if (a.kind == "random-block-tap") {
        meta["n"] = a.n, meta["seed"] = a.seed;
        f = file_from_linked(InstanceKind::block_tap, gen_random_block_tap(a.n, a.links, a.seed), meta);
    } else if (a.kind == "random-one-node-cap") {
        meta["n"] = a.n, meta["seed"] = a.seed;
        f = file_from_linked(InstanceKind::one_node_cap, gen_random_one_node_cap(a.n, a.links, a.seed), meta);
    } else if (a.kind == "random-cacap") {
        meta["cycles"] = a.cycles, meta["max_len"] = a.max_len, meta["seed"] = a.seed;
        f = file_from_linked(InstanceKind::cacap, gen_random_cacap(a.cycles, a.max_len, a.links, a.seed), meta);
    } else {
        throw CLI::ValidationError("--kind", "unknown kind " + a.kind);
    }
    emit(dump_instance(f), a.out);
    return 0;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
    std::string instance;
    int k = 4;
    std::uint64_t seed = 1;
    double cut_tolerance = 1e-7;
    std::string log;
    bool json_out = false;
};

int cmd_solve(const SolveArgs& a) {
    const InstanceFile f = load_instance(a.instance);
    json report{{"instance", a.instance}, {"kind", kind_name(f.kind)}, {"k", a.k}, {"seed", a.seed}};
    CaReduction red;
    std::optional<AugmentMode> mode;
    if (f.kind == InstanceKind::ca) {
        red.instance = f.ca();
    } else if (f.kind == InstanceKind::block_tap) {
        red = block_tap_to_ca_steiner(Tree(f.graph), f.links);
        mode = AugmentMode::node;
    } else if (f.kind == InstanceKind::cacap) {
        red = cacap_to_ca_steiner(f.graph, f.links);
        mode = AugmentMode::edge;
    } else {
        red = one_node_cap_to_ca_steiner(f.graph, f.links);
        mode = AugmentMode::node;
    }
    const auto check = validate_ca_instance(red.instance);
    if (!check.ok()) throw Failure("instance violates CA properties:\n" + check.summary());

    LpOptions lo;
    lo.cut_tolerance = a.cut_tolerance;
    RoundingResult res;
    const bool trivial = red.trivial || red.instance.terminals().size() <= 1;
    if (!trivial) {
        try {
            res = iterative_rounding(red.instance, a.k, a.seed, lo);
        } catch (const InfeasibleError& e) {
            throw Failure(std::string("infeasible: ") + e.what());
        }
    } else {
        res.feasible = true;
    }
    if (!a.log.empty()) emit(rounding_log_jsonl(res), a.log);

    bool feasible = res.feasible;
    report["iterations"] = res.log.size();
    report["steiner"] = res.steiner;
    report["cost"] = res.cost();
    if (mode) {
        const LinkSet lifted = lift_solution(res.steiner, red.trace);
        json ls = json::array();
        for (const Link& l : lifted.links) ls.push_back({l.u, l.v});
        report["links"] = ls;
        const bool ok = verify_augmentation(f.graph, lifted, *mode);
        report["augmentation_verified"] = ok;
        feasible = feasible && ok;
    }
    report["feasible"] = feasible;
    if (trivial) {
        report["opt"] = 0;
    } else {
        try {
            const int opt = brute_force_opt(red.instance).cost();
            report["opt"] = opt;
            report["ratio"] = opt > 0 ? static_cast<double>(res.cost()) / opt : 1.0;
        } catch (const CapExceeded&) {
            report["opt"] = nullptr;
        }
    }
    if (a.json_out) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "cost " << res.cost() << ", feasible " << (feasible ? "yes" : "no");
        if (report["opt"].is_number()) std::cout << ", OPT " << report["opt"].get<int>();
        std::cout << ", iterations " << res.log.size() << "\n";
    }
    return feasible ? 0 : 1;
}

// --- witness ----------------------------------------------------------------

struct WitnessArgs {
    std::string instance;
    std::string mode = "deterministic";
    std::optional<NodeId> root;
    std::string gamma = "18917/10000";
    std::string delta = "7/120";
    std::string csv;
    bool json_out = false;
};

SteinerTree optimum_of(const InstanceFile& f, const CaInstance& inst) {
    if (auto o = f.optimum()) return *o;
    const int n = inst.num_nodes();
    if (inst.graph.num_edges() == n - 1 && is_connected(inst.graph)) {
        SteinerTree t;
        t.terminals = inst.terminals();
        t.steiner = inst.steiner_nodes();
        t.edges = inst.graph.edges();
        return t;
    }
    try {
        return brute_force_opt(inst);
    } catch (const CapExceeded& e) {
        throw Failure(std::string("no stored optimum and the instance is beyond the solver cap: ") + e.what());
    }
}

int cmd_witness(const WitnessArgs& a) {
    const InstanceFile f = load_instance(a.instance);
    const CaInstance inst = f.ca();
    SteinerTree opt = optimum_of(f, inst);
    const Rational gamma = parse_rational(a.gamma);
    GammaReport rep;
    rep.mode = a.mode;
    if (a.mode == "deterministic") {
        opt = normalize_terminal_leaves(inst, opt);
        WitnessOptions wo;
        if (a.root) wo.root = *a.root;
        else if (f.metadata.contains("witness_root")) wo.root = f.metadata["witness_root"].get<NodeId>();
        if (f.metadata.value("generator", "") == "five-layer" && f.metadata.value("leaf_order", "") == "lexicographic")
            wo.leaf_rank = five_layer_leaf_rank();
        const auto w = build_witness(opt, wo);
        rep.wv = w_vector_final(w.stripped, w.final_edges);
        rep.h_average = h_average(rep.wv);
        rep.witness = w.terminal_edges;
        rep.bound = gamma;
        rep.strict = true;
        rep.audit = check_invariant_lemma(w, gamma, parse_rational(a.delta));
        rep.within_bound = rep.h_average < gamma && rep.audit->ok();
    } else if (a.mode == "tree-following") {
        opt = normalize_leaf_adjacent(inst, opt);
        rep.witness = tree_following_witness(opt);
        rep.wv = w_vector_terminal(opt, rep.witness);
        rep.h_average = h_average(rep.wv);
        rep.bound = harmonic(3);
        rep.strict = false;
        rep.within_bound = rep.h_average <= rep.bound;
    } else if (a.mode == "brute") {
        try {
            const auto g = brute_force_gamma(opt);
            rep.witness = g.witness;
        } catch (const CapExceeded& e) {
            throw Failure(e.what());
        }
        rep.wv = w_vector_terminal(opt, rep.witness);
        rep.h_average = h_average(rep.wv);
        rep.bound = gamma;
        rep.within_bound = rep.h_average < gamma;
    } else {
        throw CLI::ValidationError("--mode", "unknown mode " + a.mode);
    }
    if (!a.csv.empty()) emit(gamma_report_csv(rep), a.csv);
    if (a.json_out) {
        std::cout << gamma_report_json(rep) << "\n";
    } else {
        std::cout << a.mode << " H-average " << to_string(rep.h_average) << " = " << to_double(rep.h_average) << " ("
                  << (rep.within_bound ? "within" : "NOT within") << " bound " << to_string(rep.bound) << ")\n";
        if (rep.audit)
            std::cout << "invariant audit: " << (rep.audit->ok() ? "ok" : "FAILED") << ", " << rep.audit->subtrees
                      << " subtrees\n";
    }
    return rep.within_bound ? 0 : 1;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& suite, const verify::Options& o, bool json_out) {
    const auto results = verify::run_suite(suite, o);
    bool ok = true;
    json all = json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        if (json_out) all.push_back(verify::to_json(r));
        else std::cout << verify::summary_line(r) << "\n";
    }
    if (json_out) std::cout << json{{"suite", suite}, {"pass", ok}, {"results", all}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity augmentation via CA node Steiner trees"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    GenerateArgs ga;
    ga.seed = default_seed();
    auto* gen = app.add_subcommand("generate", "write an instance file");
    gen->add_option("--kind", ga.kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"path-family", "five-layer", "random-tree", "random-leaf-adjacent", "random-block-tap",
                               "random-one-node-cap", "random-cacap"}));
    gen->add_option("--t", ga.t, "path length")->check(CLI::Range(2, 100000));
    gen->add_option("--epsilon", ga.epsilon, "pick t so the path family is within epsilon of H(3)")
        ->check(CLI::PositiveNumber)
        ->excludes("--t");
    gen->add_option("--n", ga.n, "number of (Steiner) nodes")->check(CLI::Range(1, 100000));
    gen->add_option("--links", ga.links, "target number of links")->check(CLI::Range(1, 100000));
    gen->add_option("--cycles", ga.cycles, "cactus cycles")->check(CLI::Range(1, 10000));
    gen->add_option("--max-len", ga.max_len, "longest cactus cycle")->check(CLI::Range(3, 10000));
    gen->add_option("--seed", ga.seed, "seed (default AUGUR_SEED or 1)");
    gen->add_option("--out,-o", ga.out, "output file (default stdout)");

    SolveArgs sa;
    sa.seed = default_seed();
    auto* solve = app.add_subcommand("solve", "reduce, round, lift and verify");
    solve->add_option("instance", sa.instance, "instance file")->required()->check(CLI::ExistingFile);
    solve->add_option("--k", sa.k, "component size bound")->check(CLI::Range(2, 12));
    solve->add_option("--seed", sa.seed, "seed (default AUGUR_SEED or 1)");
    solve->add_option("--cut-tolerance", sa.cut_tolerance, "separation tolerance");
    solve->add_option("--log", sa.log, "iteration log (JSON lines), '-' for stdout");

    WitnessArgs wa;
    auto* wit = app.add_subcommand("witness", "witness tree H-average of an optimal tree");
    wit->add_option("instance", wa.instance, "instance file")->required()->check(CLI::ExistingFile);
    wit->add_option("--mode", wa.mode, "deterministic | tree-following | brute")
        ->check(CLI::IsMember({"deterministic", "tree-following", "brute"}));
    wit->add_option("--root", wa.root, "final leaf to root at (original id)");
    wit->add_option("--gamma", wa.gamma, "bound for the deterministic mode");
    wit->add_option("--delta", wa.delta, "slack term of the subtree invariant");
    wit->add_option("--csv", wa.csv, "per-node table");

    std::string suite = "all";
    verify::Options vo;
    vo.seed = default_seed();
    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember(verify::suite_names()));
    ver->add_option("--trials", vo.trials, "trials per randomized suite (0: default)")->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", vo.seed, "seed (default AUGUR_SEED or 1)");
    ver->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::Range(1, 256));
    ver->add_option("--max-terminals", vo.max_terminals, "terminal limit for the separation check")
        ->check(CLI::Range(2, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(ga);
        if (solve->parsed()) {
            sa.json_out = json_out;
            return cmd_solve(sa);
        }
        if (wit->parsed()) {
            wa.json_out = json_out;
            return cmd_witness(wa);
        }
        if (ver->parsed()) return cmd_verify(suite, vo, json_out);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Failure& e) {
        std::cerr << "augur: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "augur: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
