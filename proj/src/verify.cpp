#include "augur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "augur/decomposition.hpp"
#include "augur/harmonic.hpp"
#include "augur/instances.hpp"
#include "augur/lp.hpp"
#include "augur/reductions.hpp"
#include "augur/rounding.hpp"
#include "augur/steiner.hpp"
#include "augur/witness.hpp"

namespace augur::verify {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of trial i in a suite; suites use distinct salts.
std::uint64_t trial_seed(const Options& o, std::uint64_t salt, int i) {
    return mix(mix(o.seed) ^ mix(salt * 1000003ULL + static_cast<std::uint64_t>(i)));
}

/// Runs f(0..count-1) on `jobs` threads; results stay in index order.
template <class R>
std::vector<R> parallel_map(int count, int jobs, const std::function<R(int)>& f) {
    std::vector<R> out(count);
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&, j] {
            try {
                for (int i = next++; i < count; i = next++) out[i] = f(i);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult make(int criterion, std::string name, double limit) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.time_limit = limit;
    return r;
}

void finish(CheckResult& r, const Timer& t, bool ok, std::string detail) {
    r.seconds = t.seconds();
    r.pass = ok && r.seconds < r.time_limit;
    if (ok && !r.pass) detail += "; over time limit";
    r.detail = std::move(detail);
}

int trials_or(const Options& o, int fallback) { return o.trials > 0 ? o.trials : fallback; }

std::string fmt(double x, int prec = 6) {
    std::ostringstream s;
    s.precision(prec);
    s << std::fixed << x;
    return s.str();
}

bool spans_terminals(const SteinerTree& t, const std::vector<Edge>& witness) {
    const int q = static_cast<int>(t.terminals.size());
    if (static_cast<int>(witness.size()) != q - 1) return false;
    std::vector<int> parent(q);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto idx = [&](NodeId v) {
        auto it = std::lower_bound(t.terminals.begin(), t.terminals.end(), v);
        return it != t.terminals.end() && *it == v ? static_cast<int>(it - t.terminals.begin()) : -1;
    };
    for (const Edge& e : witness) {
        const int a = idx(e.u), b = idx(e.v);
        if (a < 0 || b < 0) return false;
        const int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

/// Random non-tree CA instance with few terminals, via the 1-Node-CAP
/// reduction or the leaf-adjacent generator.
CaReduction small_ca(std::uint64_t seed, int max_terminals) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const std::uint64_t s = rng();
        if (attempt % 2 == 0) {
            const int n = 4 + uniform_below(rng, 6);
            const auto lg = gen_random_one_node_cap(n, n, s);
            auto red = one_node_cap_to_ca_steiner(lg.graph, lg.links);
            const int q = static_cast<int>(red.instance.terminals().size());
            if (!red.trivial && q >= 2 && q <= max_terminals && red.instance.steiner_nodes().size() <= 16) return red;
        } else {
            const int n = 1 + uniform_below(rng, 4);
            auto ti = gen_random_leaf_adjacent(n, s);
            const int q = static_cast<int>(ti.instance.terminals().size());
            if (q >= 2 && q <= max_terminals) {
                CaReduction red;
                red.instance = std::move(ti.instance);
                return red;
            }
        }
    }
    throw std::runtime_error("small_ca: no instance within the terminal limit");
}

}  // namespace

CheckResult five_layer(const Options&) {
    auto r = make(1, "five-layer golden H-average", 1.0);
    const Timer timer;
    const auto fl = gen_five_layer();
    WitnessOptions wo;
    wo.root = FiveLayer::witness_root;
    wo.leaf_rank = five_layer_leaf_rank();
    const auto w = build_witness(fl.opt, wo);
    const Rational h = h_average(w_vector_final(w.stripped, w.final_edges));
    Rational expected = (135 * harmonic(2) + 36 * harmonic(4) + 44 * harmonic(5) + 9 * harmonic(8) +
                         8 * harmonic(9) + harmonic(12) + harmonic(15) + harmonic(16)) /
                        Rational(235);
    expected.canonicalize();
    const bool ok = h == expected && h > Rational(18504, 10000) && fl.opt.steiner.size() == 235 &&
                    fl.opt.terminals.size() == 360;
    r.data = {{"h_average", to_string(h)}, {"value", to_double(h)}, {"expected", to_string(expected)}};
    finish(r, timer, ok, "H-average " + to_string(h) + " = " + fmt(to_double(h)) + (h == expected ? " matches" : " differs"));
    return r;
}

CheckResult path_family(const Options&) {
    auto r = make(2, "path family H(3) - 2/(3t)", 30.0);
    const Timer timer;
    bool ok = true;
    std::string first_bad;
    for (int t = 2; t <= 50; ++t) {
        const auto p = gen_path_family(t);
        Rational dip(2, 3 * t);
        dip.canonicalize();
        const Rational expected = harmonic(3) - dip;
        const auto det = build_witness(p.opt);
        const Rational hd = h_average(w_vector_final(det.stripped, det.final_edges));
        const Rational hdt = h_average(w_vector_terminal(p.opt, det.terminal_edges));
        const auto tf = tree_following_witness(p.opt);
        const Rational ht = h_average(w_vector_terminal(p.opt, tf));
        bool good = hd == expected && hdt == expected && ht == expected && tf == det.terminal_edges;
        if (t <= 4) {
            const auto g = brute_force_gamma(p.opt);
            good = good && g.value == expected;
            r.data["brute"][std::to_string(t)] = to_string(g.value);
        }
        if (!good && ok) first_bad = "t=" + std::to_string(t);
        ok = ok && good;
    }
    finish(r, timer, ok, ok ? "t=2..50 exact, brute force t=2..4 agrees" : "mismatch at " + first_bad);
    return r;
}

CheckResult witness_bound(const Options& o) {
    auto r = make(3, "witness bound < 1.8917 with invariant audit", 120.0);
    const Timer timer;
    const int trials = trials_or(o, 500);
    struct Out {
        Rational h;
        bool ok = false;
        int subtrees = 0;
        std::string why;
    };
    const std::function<Out(int)> run = [&](int i) {
        std::mt19937_64 rng(trial_seed(o, 3, i));
        const int n = 1 + uniform_below(rng, 300);
        TerminalProfile prof;
        if (i % 3 == 1) prof = {1.0, 0.9, 0.1};  // few final internal nodes
        if (i % 3 == 2) prof = {0.0, 0.8, 0.2};
        const auto ti = gen_random_tree_instance(n, rng(), prof);
        const auto w = build_witness(ti.opt);
        Out out;
        out.h = h_average(w_vector_final(w.stripped, w.final_edges));
        const auto audit = check_invariant_lemma(w);
        out.subtrees = audit.subtrees;
        out.ok = audit.ok() && out.h < kWitnessGamma && spans_terminals(ti.opt, w.terminal_edges);
        if (!out.ok) out.why = audit.ok() ? "H-average " + to_string(out.h) : audit.failures.front();
        return out;
    };
    const auto outs = parallel_map<Out>(trials, o.jobs, run);
    bool ok = true;
    Rational worst(0);
    long subtrees = 0;
    std::string why;
    for (int i = 0; i < trials; ++i) {
        if (!outs[i].ok && ok) why = "trial " + std::to_string(i) + ": " + outs[i].why;
        ok = ok && outs[i].ok;
        worst = std::max(worst, outs[i].h);
        subtrees += outs[i].subtrees;
    }
    r.data = {{"trials", trials}, {"max_h_average", to_string(worst)}, {"subtrees_audited", subtrees}};
    finish(r, timer, ok,
           ok ? std::to_string(trials) + " trees, max H-average " + fmt(to_double(worst)) + ", " +
                    std::to_string(subtrees) + " subtrees audited"
              : why);
    return r;
}

CheckResult leaf_adjacent(const Options& o) {
    auto r = make(4, "leaf-adjacent tree-following <= H(3)", 30.0);
    const Timer timer;
    const int trials = trials_or(o, 200);
    struct Out {
        Rational h;
        bool ok = false;
    };
    const std::function<Out(int)> run = [&](int i) {
        std::mt19937_64 rng(trial_seed(o, 4, i));
        const int n = 1 + uniform_below(rng, 120);
        const auto ti = gen_random_leaf_adjacent(n, rng());
        const auto tf = tree_following_witness(ti.opt);
        Out out;
        out.h = h_average(w_vector_terminal(ti.opt, tf));
        out.ok = out.h <= harmonic(3) && spans_terminals(ti.opt, tf);
        return out;
    };
    const auto outs = parallel_map<Out>(trials, o.jobs, run);
    bool ok = true;
    Rational worst(0);
    for (const auto& x : outs) {
        ok = ok && x.ok;
        worst = std::max(worst, x.h);
    }
    r.data = {{"trials", trials}, {"max_h_average", to_string(worst)}};
    finish(r, timer, ok, std::to_string(trials) + " instances, max H-average " + fmt(to_double(worst)));
    return r;
}

CheckResult reductions(const Options& o) {
    auto r = make(5, "reduction equivalence, exhaustive subsets", 180.0);
    const Timer timer;
    const int trials = trials_or(o, 100);
    struct Out {
        bool ok = false;
        long subsets = 0;
        std::string why;
    };
    auto oracle = [](const UndirGraph& g, const LinkSet& links, const CaReduction& red, AugmentMode mode, Out& out) {
        const int m = static_cast<int>(links.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            LinkSet sub;
            std::vector<int> idx;
            for (int b = 0; b < m; ++b)
                if (mask >> b & 1) {
                    sub.add(links.links[b]);
                    idx.push_back(b);
                }
            const bool feasible = verify_augmentation(g, sub, mode);
            std::vector<char> chosen(red.instance.num_nodes(), 0);
            for (NodeId s : forward_image(idx, red.trace)) chosen[s] = 1;
            const bool connects = terminals_connected(red.instance, chosen);
            ++out.subsets;
            if (feasible != connects) {
                out.why = "subset mask " + std::to_string(mask) + (feasible ? " feasible" : " infeasible") +
                          " but image " + (connects ? "connects" : "does not connect");
                return false;
            }
        }
        return true;
    };
    const std::function<Out(int)> run = [&](int i) {
        std::mt19937_64 rng(trial_seed(o, 5, i));
        Out out;
        if (i < trials) {
            LinkedGraph lg;
            do {
                const int n = 3 + uniform_below(rng, 8);
                lg = gen_random_one_node_cap(n, 1 + uniform_below(rng, 8), rng());
            } while (lg.links.size() > 8);  // minimal feasible set over the limit
            const auto red = one_node_cap_to_ca_steiner(lg.graph, lg.links);
            out.ok = oracle(lg.graph, lg.links, red, AugmentMode::node, out);
        } else {
            LinkedGraph lg;
            do {
                const int cycles = 1 + uniform_below(rng, 4);
                lg = gen_random_cacap(cycles, 5, 1 + uniform_below(rng, 8), rng());
            } while (lg.links.size() > 8);
            const auto red = cacap_to_ca_steiner(lg.graph, lg.links);
            out.ok = oracle(lg.graph, lg.links, red, AugmentMode::edge, out);
        }
        return out;
    };
    const auto outs = parallel_map<Out>(2 * trials, o.jobs, run);
    bool ok = true;
    long subsets = 0;
    int enumerated = 0;
    std::string why;
    for (int i = 0; i < 2 * trials; ++i) {
        if (!outs[i].ok && ok) why = (i < trials ? "1-Node-CAP trial " : "CacAP trial ") + std::to_string(i % trials) + ": " + outs[i].why;
        ok = ok && outs[i].ok;
        subsets += outs[i].subsets;
        if (outs[i].subsets > 0) ++enumerated;
    }
    // generated instances that exceed 8 links count as failures of the sweep
    ok = ok && enumerated == 2 * trials;
    r.data = {{"instances", 2 * trials}, {"enumerated", enumerated}, {"subsets", subsets}};
    finish(r, timer, ok,
           ok ? std::to_string(trials) + " + " + std::to_string(trials) + " instances, " + std::to_string(subsets) +
                    " subsets"
              : (why.empty() ? "only " + std::to_string(enumerated) + " instances within 8 links" : why));
    return r;
}

CheckResult restricted(const Options& o) {
    auto r = make(6, "k-restricted decomposition bounds", 120.0);
    const Timer timer;
    const int trials = trials_or(o, 100);
    struct Out {
        bool ok = true;
        std::string why;
        double ratio[3] = {0, 0, 0};
    };
    const std::function<Out(int)> run = [&](int i) {
        std::mt19937_64 rng(trial_seed(o, 6, i));
        const int n = 1 + uniform_below(rng, 60);
        const auto ti = gen_random_tree_instance(n, rng());
        Out out;
        for (int m = 1; m <= 3; ++m) {
            const auto d = k_restricted_decompose(ti.opt, m);
            const auto audit = audit_decomposition(ti.opt, d);
            out.ratio[m - 1] = static_cast<double>(d.best_cost()) / n;
            if (!audit.ok() && out.ok) out.why = "m=" + std::to_string(m) + ": " + audit.failures.front();
            out.ok = out.ok && audit.ok();
        }
        return out;
    };
    const auto outs = parallel_map<Out>(trials, o.jobs, run);
    bool ok = true;
    std::string why;
    double worst[3] = {0, 0, 0};
    for (int i = 0; i < trials; ++i) {
        if (!outs[i].ok && ok) why = "trial " + std::to_string(i) + " " + outs[i].why;
        ok = ok && outs[i].ok;
        for (int m = 0; m < 3; ++m) worst[m] = std::max(worst[m], outs[i].ratio[m]);
    }
    r.data = {{"trials", trials}, {"max_best_ratio", {worst[0], worst[1], worst[2]}}};
    finish(r, timer, ok,
           ok ? std::to_string(trials) + " trees, worst min_j/OPT for m=1,2,3: " + fmt(worst[0], 3) + ", " +
                    fmt(worst[1], 3) + ", " + fmt(worst[2], 3)
              : why);
    return r;
}

CheckResult lp(const Options& o) {
    auto r = make(7, "LP value and separation", 120.0);
    const Timer timer;
    const int trials = trials_or(o, 40);
    bool ok = true;
    std::string why;
    double worst_gap = -1e9;
    int exact_checked = 0;
    for (int i = 0; i < trials; ++i) {
        const auto red = small_ca(trial_seed(o, 7, i), 8);
        const auto& inst = red.instance;
        const int q = static_cast<int>(inst.terminals().size());
        const auto opt = brute_force_opt(inst);
        const auto val = solve_lp(inst, q);
        worst_gap = std::max(worst_gap, val.objective - opt.cost());
        if (val.objective > opt.cost() + 1e-7) {
            if (ok) why = "trial " + std::to_string(i) + ": LP " + fmt(val.objective) + " > OPT " + std::to_string(opt.cost());
            ok = false;
        }
        if (val.components.size() <= kExactComponentLimit && exact_checked < 10) {
            LpOptions eo;
            eo.arithmetic = LpArithmetic::exact;
            const auto ex = solve_lp(inst, q, eo);
            ++exact_checked;
            if (*ex.objective_exact > Rational(opt.cost()) || std::abs(ex.objective - val.objective) > 1e-6) {
                if (ok) why = "trial " + std::to_string(i) + ": exact LP " + to_string(*ex.objective_exact);
                ok = false;
            }
        }
    }
    // separation against enumeration of every cut
    const int vectors = 50;
    int violated = 0;
    for (int i = 0; i < vectors; ++i) {
        const auto red = small_ca(trial_seed(o, 71, i / 5), o.max_terminals);
        const auto& inst = red.instance;
        const auto terms = inst.terminals();
        const int q = static_cast<int>(terms.size());
        const auto comps = enumerate_components(inst, q);
        std::mt19937_64 rng(trial_seed(o, 72, i));
        const double scale = 0.3 + 1.2 * unit_uniform(rng);
        std::vector<double> x(comps.size());
        for (auto& v : x) v = unit_uniform(rng) < 0.5 ? 0.0 : scale * unit_uniform(rng);
        const NodeId root = terms.front();
        double best = 1e18;
        std::vector<double> best_with(q, 1e18);  // min cut value over U containing terminal j
        for (int mask = 1; mask < (1 << (q - 1)); ++mask) {
            std::vector<NodeId> cut;
            for (int b = 0; b < q - 1; ++b)
                if (mask >> b & 1) cut.push_back(terms[b + 1]);
            const double v = cut_value(comps, x, cut);
            best = std::min(best, v);
            for (int b = 0; b < q - 1; ++b)
                if (mask >> b & 1) best_with[b + 1] = std::min(best_with[b + 1], v);
        }
        const double tol = 1e-7;
        const auto sep = separate(comps, x, terms, root, tol);
        bool agree = sep.has_value() == (best < 1 - tol);
        if (sep) {
            ++violated;
            const int j = static_cast<int>(std::find(terms.begin(), terms.end(), sep->witness) - terms.begin());
            agree = agree && sep->lhs < 1 - tol && std::abs(sep->lhs - best_with[j]) < 1e-9 &&
                    std::abs(cut_value(comps, x, sep->cut) - sep->lhs) < 1e-12;
        }
        for (int j = 1; j < q; ++j) {
            const double flow = min_cut_from(comps, x, terms, root, terms[j], nullptr);
            agree = agree && std::abs(flow - best_with[j]) < 1e-9;
        }
        if (!agree) {
            if (ok) why = "separation vector " + std::to_string(i) + " disagrees with enumeration";
            ok = false;
        }
    }
    r.data = {{"lp_instances", trials}, {"max_lp_minus_opt", worst_gap}, {"exact_checked", exact_checked},
              {"separation_vectors", vectors}, {"violated", violated}};
    finish(r, timer, ok,
           ok ? std::to_string(trials) + " LPs (max LP-OPT " + fmt(worst_gap, 3) + ", " + std::to_string(exact_checked) +
                    " exact), " + std::to_string(vectors) + " separation vectors (" + std::to_string(violated) +
                    " violated)"
              : why);
    return r;
}

CheckResult rounding(const Options& o) {
    auto r = make(8, "end-to-end rounding k=4", 300.0);
    const Timer timer;
    const int trials = trials_or(o, 100);
    struct Out {
        bool ok = false;
        double ratio = 1;
        std::string why;
    };
    const std::function<Out(int)> run = [&](int i) {
        std::mt19937_64 rng(trial_seed(o, 8, i));
        Out out;
        for (;;) {
            const int n = 5 + uniform_below(rng, 6);
            const auto lg = gen_random_one_node_cap(n, n, rng());
            const auto red = one_node_cap_to_ca_steiner(lg.graph, lg.links);
            if (red.trivial) continue;
            const auto res = iterative_rounding(red.instance, 4, rng());
            const LinkSet lifted = lift_solution(res.steiner, red.trace);
            const bool two_nc = verify_augmentation(lg.graph, lifted, AugmentMode::node);
            const int opt = brute_force_opt(red.instance).cost();
            out.ratio = opt > 0 ? static_cast<double>(lifted.size()) / opt : 1.0;
            out.ok = res.feasible && two_nc && static_cast<int>(lifted.size()) >= opt;
            if (!out.ok)
                out.why = std::string(two_nc ? "" : "not 2-node-connected ") + "cost " + std::to_string(lifted.size()) +
                          " OPT " + std::to_string(opt);
            return out;
        }
    };
    const auto outs = parallel_map<Out>(trials, o.jobs, run);
    bool ok = true;
    double sum = 0, worst = 0;
    std::string why;
    for (int i = 0; i < trials; ++i) {
        if (!outs[i].ok && ok) why = "pipeline " + std::to_string(i) + ": " + outs[i].why;
        ok = ok && outs[i].ok;
        sum += outs[i].ratio;
        worst = std::max(worst, outs[i].ratio);
    }
    const double mean = sum / trials;
    ok = ok && mean <= 2.5;
    r.data = {{"pipelines", trials}, {"mean_ratio", mean}, {"max_ratio", worst}, {"mean_ratio_limit", 2.5}};
    finish(r, timer, ok,
           ok ? std::to_string(trials) + " pipelines 2-node-connected, mean cost/OPT " + fmt(mean, 4) + " (<= 2.5), max " +
                    fmt(worst, 3)
              : (why.empty() ? "mean ratio " + fmt(mean, 4) : why));
    return r;
}

CheckResult structural(const Options& o) {
    auto r = make(9, "structural facts", 10.0);
    const Timer timer;
    std::vector<std::string> bad;

    int argmax = 1;
    Rational best = witness_psi(1, kWitnessDelta);
    for (int p = 2; p <= 50; ++p) {
        const Rational v = witness_psi(p, kWitnessDelta);
        if (v > best) best = v, argmax = p;
    }
    if (argmax != 4 || best != Rational(227, 120)) bad.push_back("psi maximum at p=" + std::to_string(argmax));

    // each Steiner node serves at most two terminals
    int instances = 0;
    auto half_bound = [&](const CaInstance& inst, int opt) {
        ++instances;
        if (2 * opt < static_cast<int>(inst.terminals().size())) bad.push_back("OPT < t/2");
    };
    for (int t = 2; t <= 20; ++t) half_bound(gen_path_family(t).instance, t);
    half_bound(gen_five_layer().instance, 235);
    for (int i = 0; i < 40; ++i) {
        const auto ti = gen_random_tree_instance(1 + i * 3, trial_seed(o, 9, i));
        half_bound(ti.instance, ti.opt.cost());
        const auto la = gen_random_leaf_adjacent(1 + i % 6, trial_seed(o, 91, i));
        half_bound(la.instance, brute_force_opt(la.instance).cost());
        const auto red = small_ca(trial_seed(o, 92, i), 8);
        half_bound(red.instance, brute_force_opt(red.instance).cost());
    }

    // leaf maps of random regular binary trees
    int trees = 0;
    std::mt19937_64 rng(trial_seed(o, 93, 0));
    for (int i = 0; i < 200; ++i) {
        const int internal = uniform_below(rng, 32);  // 2*internal + 1 <= 63 nodes
        UndirGraph g(1);
        std::vector<NodeId> leaves{0};
        for (int k = 0; k < internal; ++k) {
            const int pick = uniform_below(rng, static_cast<int>(leaves.size()));
            const NodeId v = leaves[pick];
            leaves.erase(leaves.begin() + pick);
            for (int c = 0; c < 2; ++c) {
                const NodeId w = g.add_node();
                g.add_edge(v, w);
                leaves.push_back(w);
            }
        }
        const Tree t(g, 0);
        std::string why;
        if (!leaf_map_valid(t, leaf_map(t), &why)) bad.push_back("leaf map: " + why);
        ++trees;
    }

    // concavity of the piecewise linear extension of H on a grid
    auto h_at = [](const Rational& x) -> Rational {
        const long fl = mpz_class(x.get_num() / x.get_den()).get_si();
        Rational frac = x - Rational(fl);
        return harmonic0(static_cast<int>(fl)) + frac * Rational(1, fl + 1);
    };
    int grid = 0;
    for (int x1 = 0; x1 <= 50; ++x1)
        for (int x2 = 0; x2 <= 50; ++x2)
            for (int k = 0; k <= 4; ++k) {
                const Rational lam(k, 4);
                Rational mid = lam * x1 + (1 - lam) * x2;
                mid.canonicalize();
                const Rational lhs = lam * harmonic0(x1) + (1 - lam) * harmonic0(x2);
                if (lhs > h_at(mid)) bad.push_back("concavity at " + std::to_string(x1) + "," + std::to_string(x2));
                ++grid;
            }

    r.data = {{"psi_argmax", argmax}, {"psi_max", to_string(best)}, {"instances", instances},
              {"binary_trees", trees}, {"grid_points", grid}};
    finish(r, timer, bad.empty(),
           bad.empty() ? "psi max 227/120 at p=4, OPT >= t/2 on " + std::to_string(instances) + " instances, " +
                             std::to_string(trees) + " leaf maps, " + std::to_string(grid) + " concavity points"
                       : bad.front());
    return r;
}

std::vector<std::string> suite_names() {
    return {"five-layer", "path-family", "witness", "leaf-adjacent", "reductions", "restricted",
            "lp",         "rounding",    "structural", "bounds",    "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& o) {
    using F = CheckResult (*)(const Options&);
    const std::vector<std::pair<std::string, F>> table = {
        {"five-layer", five_layer}, {"path-family", path_family}, {"witness", witness_bound},
        {"leaf-adjacent", leaf_adjacent}, {"reductions", reductions}, {"restricted", restricted},
        {"lp", lp}, {"rounding", rounding}, {"structural", structural}};
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const bool bounds = suite == "bounds" && i < 4;
        if (suite == "all" || bounds || suite == table[i].first) out.push_back(table[i].second(o));
    }
    if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

nlohmann::json to_json(const CheckResult& r) {
    return {{"criterion", r.criterion}, {"name", r.name},       {"pass", r.pass},
            {"detail", r.detail},       {"seconds", r.seconds}, {"time_limit", r.time_limit},
            {"data", r.data}};
}

std::string summary_line(const CheckResult& r) {
    return "criterion " + std::to_string(r.criterion) + ": " + (r.pass ? "PASS " : "FAIL ") + r.name + " (" +
           r.detail + ") [" + fmt(r.seconds, 2) + " s]";
}

}  // namespace augur::verify
