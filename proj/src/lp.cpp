#include "augur/lp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "augur/simplex.hpp"
#include "json.hpp"

namespace augur {

namespace {

bool crosses(const Component& c, const std::vector<char>& in_cut) {
    if (in_cut[c.sink]) return false;
    for (NodeId t : c.terminals)
        if (in_cut[t]) return true;
    return false;
}

std::vector<char> cut_flags(const std::vector<Component>& components, const std::vector<NodeId>& cut) {
    NodeId hi = 0;
    for (const auto& c : components)
        if (!c.terminals.empty()) hi = std::max(hi, c.terminals.back());
    for (NodeId t : cut) hi = std::max(hi, t);
    std::vector<char> flags(hi + 1, 0);
    for (NodeId t : cut) flags[t] = 1;
    return flags;
}

struct FlowNetwork {
    struct Arc {
        int to;
        double cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNetwork(int n) : adj(n) {}
    void add(int u, int v, double cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0.0, static_cast<int>(adj[u].size()) - 1});
    }

    /// Edmonds-Karp; leaves the residual network in place.
    double max_flow(int s, int t) {
        double total = 0;
        const double eps = 1e-12;
        for (;;) {
            std::vector<std::pair<int, int>> prev(adj.size(), {-1, -1});
            prev[s] = {s, -1};
            std::deque<int> queue{s};
            while (!queue.empty() && prev[t].first < 0) {
                const int u = queue.front();
                queue.pop_front();
                for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                    const Arc& a = adj[u][i];
                    if (a.cap > eps && prev[a.to].first < 0) {
                        prev[a.to] = {u, i};
                        queue.push_back(a.to);
                    }
                }
            }
            if (prev[t].first < 0) return total;
            double push = std::numeric_limits<double>::infinity();
            for (int v = t; v != s; v = prev[v].first) push = std::min(push, adj[prev[v].first][prev[v].second].cap);
            for (int v = t; v != s; v = prev[v].first) {
                Arc& a = adj[prev[v].first][prev[v].second];
                a.cap -= push;
                adj[v][a.rev].cap += push;
            }
            total += push;
        }
    }

    [[nodiscard]] std::vector<char> reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const Arc& a : adj[u])
                if (a.cap > 1e-12 && !seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push_back(a.to);
                }
        }
        return seen;
    }
};

}  // namespace

double cut_value(const std::vector<Component>& components, const std::vector<double>& x,
                 const std::vector<NodeId>& cut) {
    const auto flags = cut_flags(components, cut);
    double lhs = 0;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (crosses(components[i], flags)) lhs += x[i];
    return lhs;
}

double min_cut_from(const std::vector<Component>& components, const std::vector<double>& x,
                    const std::vector<NodeId>& terminals, NodeId root, NodeId t, std::vector<NodeId>* side) {
    const int q = static_cast<int>(terminals.size());
    auto index_of = [&](NodeId v) {
        return static_cast<int>(std::lower_bound(terminals.begin(), terminals.end(), v) - terminals.begin());
    };
    FlowNetwork net(q + static_cast<int>(components.size()));
    const double big = std::accumulate(x.begin(), x.end(), 0.0) + 1.0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Component& c = components[i];
        const int node = q + static_cast<int>(i);
        for (NodeId s : c.terminals)
            if (s != c.sink) net.add(index_of(s), node, big);
        if (x[i] > 0) net.add(node, index_of(c.sink), x[i]);
    }
    const double flow = net.max_flow(index_of(t), index_of(root));
    if (side) {
        const auto seen = net.reachable(index_of(t));
        side->clear();
        for (int i = 0; i < q; ++i)
            if (seen[i]) side->push_back(terminals[i]);
    }
    return flow;
}

std::optional<CutViolation> separate(const std::vector<Component>& components, const std::vector<double>& x,
                                     const std::vector<NodeId>& terminals, NodeId root, double tol) {
    for (NodeId t : terminals) {
        if (t == root) continue;
        std::vector<NodeId> side;
        const double flow = min_cut_from(components, x, terminals, root, t, &side);
        if (flow < 1 - tol) return CutViolation{side, cut_value(components, x, side), t};
    }
    return std::nullopt;
}

namespace {

template <class Scalar>
void run_cutting_planes(DcrLp& lp, const LpOptions& options) {
    std::vector<Scalar> costs;
    for (const auto& c : lp.components) costs.emplace_back(c.cost);
    CoveringDualTableau<Scalar> tableau(costs);
    std::set<std::vector<NodeId>> active;

    auto add_cut = [&](const std::vector<NodeId>& cut) {
        const auto flags = cut_flags(lp.components, cut);
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < lp.components.size(); ++i)
            if (crosses(lp.components[i], flags)) support.push_back(i);
        if (support.empty()) throw InfeasibleError("k-DCR LP is infeasible: no component leaves a terminal set");
        tableau.add_column(support);
        lp.cuts.push_back(cut);
        active.insert(cut);
    };
    for (NodeId t : lp.terminals)
        if (t != lp.root) add_cut({t});

    for (;;) {
        if (tableau.optimize() == CoveringDualTableau<Scalar>::Status::unbounded)
            throw InfeasibleError("k-DCR LP is infeasible");
        const auto sol = tableau.covering_solution();
        lp.x.assign(sol.size(), 0.0);
        for (std::size_t i = 0; i < sol.size(); ++i) lp.x[i] = std::max(0.0, ScalarTraits<Scalar>::to_double(sol[i]));
        lp.objective = ScalarTraits<Scalar>::to_double(tableau.objective());
        if constexpr (std::is_same_v<Scalar, Rational>) {
            lp.x_exact = sol;
            lp.objective_exact = tableau.objective();
        }
        lp.objective_trace.push_back(lp.objective);
        const auto violation = separate(lp.components, lp.x, lp.terminals, lp.root, options.cut_tolerance);
        if (!violation) return;
        // A repeated cut means the restricted optimum already satisfies it up
        // to rounding noise.
        if (active.count(violation->cut)) return;
        if (static_cast<int>(lp.cuts.size()) >= options.max_cuts)
            throw std::runtime_error("k-DCR LP: cut limit exceeded");
        add_cut(violation->cut);
    }
}

}  // namespace

DcrLp solve_lp_over(std::vector<Component> components, std::vector<NodeId> terminals, const LpOptions& options) {
    DcrLp lp;
    std::sort(terminals.begin(), terminals.end());
    lp.terminals = std::move(terminals);
    lp.components = std::move(components);
    if (lp.terminals.empty()) return lp;
    lp.root = options.root.value_or(lp.terminals.front());
    if (!std::binary_search(lp.terminals.begin(), lp.terminals.end(), lp.root))
        throw std::invalid_argument("solve_lp: root is not a terminal");
    lp.x.assign(lp.components.size(), 0.0);
    if (lp.terminals.size() == 1) {
        lp.objective_trace.push_back(0);
        return lp;
    }
    if (options.arithmetic == LpArithmetic::exact) {
        if (lp.components.size() > kExactComponentLimit)
            throw CapExceeded("exact LP limited to " + std::to_string(kExactComponentLimit) + " components");
        run_cutting_planes<Rational>(lp, options);
    } else {
        run_cutting_planes<double>(lp, options);
    }
    return lp;
}

DcrLp solve_lp(const CaInstance& inst, int k, const LpOptions& options) {
    if (k < 2) throw std::invalid_argument("solve_lp: k must be >= 2");
    auto components = enumerate_components(inst, k, options.component_cap);
    return solve_lp_over(std::move(components), inst.terminals(), options);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t sample_component(const DcrLp& lp, std::mt19937_64& rng) {
    const double total = std::accumulate(lp.x.begin(), lp.x.end(), 0.0);
    if (!(total > 0)) throw std::invalid_argument("sample_component: zero mass");
    const double target = unit_uniform(rng) * total;
    double acc = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < lp.x.size(); ++i) {
        if (lp.x[i] <= 0) continue;
        acc += lp.x[i];
        last = i;
        if (target < acc) return i;
    }
    return last;
}

std::string lp_to_json(const DcrLp& lp) {
    nlohmann::json j;
    j["root"] = lp.root;
    j["terminals"] = lp.terminals;
    j["objective"] = lp.objective;
    if (lp.objective_exact) j["objective_exact"] = to_string(*lp.objective_exact);
    j["cuts"] = lp.cuts;
    j["objective_trace"] = lp.objective_trace;
    auto& comps = j["components"] = nlohmann::json::array();
    for (std::size_t i = 0; i < lp.components.size(); ++i) {
        const auto& c = lp.components[i];
        comps.push_back({{"terminals", c.terminals}, {"sink", c.sink}, {"steiner", c.steiner}, {"cost", c.cost},
                         {"x", lp.x[i]}});
    }
    return j.dump(2);
}

}  // namespace augur
