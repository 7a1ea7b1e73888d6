#include "augur/rounding.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace augur {

Contraction contract_component(const CaInstance& inst, const Component& c) {
    const int n = inst.num_nodes();
    auto check = [&](NodeId v, bool terminal) {
        if (!inst.graph.contains(v) || inst.is_terminal(v) != terminal)
            throw std::invalid_argument("contract_component: component node " + std::to_string(v) +
                                        " is not present in the instance");
    };
    if (c.terminals.empty() || !c.has_terminal(c.sink))
        throw std::invalid_argument("contract_component: malformed component");
    for (NodeId t : c.terminals) check(t, true);
    for (NodeId s : c.steiner) check(s, false);

    std::vector<char> merged(n, 0), removed(n, 0);
    for (NodeId t : c.terminals) merged[t] = 1;
    for (NodeId s : c.steiner) {
        removed[s] = 1;
        // a terminal next to a swallowed Steiner node would end up adjacent
        // to the super-terminal
        for (NodeId t : inst.graph.neighbors(s))
            if (inst.is_terminal(t)) merged[t] = 1;
    }

    Contraction out;
    out.old_to_new.assign(n, kNoNode);
    CaInstance& next = out.instance;
    for (NodeId v = 0; v < n; ++v) {
        if (removed[v]) continue;
        if (merged[v] && v != c.sink) continue;
        const NodeId id = next.graph.add_node(inst.graph.label(v));
        next.role.push_back(inst.role[v]);
        next.origin_link.push_back(inst.origin_link[v]);
        out.old_to_new[v] = id;
    }
    out.super_terminal = out.old_to_new[c.sink];
    for (NodeId v = 0; v < n; ++v) {
        if (merged[v]) out.old_to_new[v] = out.super_terminal;
        if (removed[v]) out.removed_steiner.push_back(v);
    }
    // swallowed Steiner nodes hand their other neighbours to the super-terminal
    auto image = [&](NodeId v) { return removed[v] ? out.super_terminal : out.old_to_new[v]; };
    for (const Edge& e : inst.graph.edges()) {
        const NodeId a = image(e.u), b = image(e.v);
        if (a == kNoNode || b == kNoNode || a == b) continue;
        next.graph.add_edge(a, b);
    }
    const auto around = next.graph.neighbors(out.super_terminal);
    for (std::size_t i = 0; i < around.size(); ++i)
        for (std::size_t j = i + 1; j < around.size(); ++j) next.graph.add_edge(around[i], around[j]);
    return out;
}

RoundingResult iterative_rounding(const CaInstance& inst, int k, std::uint64_t seed, const LpOptions& options) {
    if (k < 2) throw std::invalid_argument("iterative_rounding: k must be >= 2");
    RoundingResult result;
    std::mt19937_64 rng(seed);
    CaInstance cur = inst;
    // original id of every current Steiner node
    std::vector<NodeId> origin(inst.num_nodes());
    std::iota(origin.begin(), origin.end(), 0);
    std::vector<NodeId> chosen;

    for (int iter = 0;; ++iter) {
        const auto terms = cur.terminals();
        if (terms.size() <= 1) break;
        LpOptions opt = options;
        opt.root.reset();
        const int kk = std::min<int>(k, static_cast<int>(terms.size()));
        const DcrLp lp = solve_lp(cur, kk, opt);
        const std::size_t pick = sample_component(lp, rng);
        const Component& comp = lp.components[pick];

        RoundingStep step;
        step.iter = iter;
        step.objective = lp.objective;
        step.sum_x = std::accumulate(lp.x.begin(), lp.x.end(), 0.0);
        step.component_terminals = comp.terminals;
        step.component_cost = comp.cost;
        result.log.push_back(step);
        for (NodeId s : comp.steiner) chosen.push_back(origin[s]);

        Contraction con = contract_component(cur, comp);
        std::vector<NodeId> next_origin(con.instance.num_nodes(), kNoNode);
        for (NodeId v = 0; v < cur.num_nodes(); ++v) {
            const NodeId w = con.old_to_new[v];
            if (w != kNoNode && cur.is_steiner(v)) next_origin[w] = origin[v];
        }
        cur = std::move(con.instance);
        origin = std::move(next_origin);
    }

    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    result.steiner = chosen;
    std::vector<char> flags(inst.num_nodes(), 0);
    for (NodeId s : chosen) flags[s] = 1;
    result.feasible = terminals_connected(inst, flags);
    return result;
}

std::string rounding_log_jsonl(const RoundingResult& r) {
    std::string out;
    for (const auto& s : r.log) {
        nlohmann::json j{{"iter", s.iter},
                         {"objective", s.objective},
                         {"sum_x", s.sum_x},
                         {"component_terminals", s.component_terminals},
                         {"component_cost", s.component_cost}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace augur
