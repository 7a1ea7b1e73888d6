#include "augur/steiner.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <queue>
#include <string>

namespace augur {

std::vector<NodeId> SteinerTree::nodes() const {
    std::vector<NodeId> out = terminals;
    out.insert(out.end(), steiner.begin(), steiner.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool Component::has_terminal(NodeId t) const { return std::binary_search(terminals.begin(), terminals.end(), t); }

SteinerTree spanning_steiner_tree(const CaInstance& inst, std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    SteinerTree out;
    if (nodes.empty()) return out;
    const auto& g = inst.graph;
    std::vector<char> in(g.num_nodes(), 0);
    for (NodeId v : nodes) in.at(v) = 1;
    std::vector<char> seen(g.num_nodes(), 0);
    std::deque<NodeId> queue{nodes.front()};
    seen[nodes.front()] = 1;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(v)) {
            if (!in[w] || seen[w]) continue;
            seen[w] = 1;
            out.edges.emplace_back(v, w);
            queue.push_back(w);
        }
    }
    for (NodeId v : nodes) {
        if (!seen[v]) throw InfeasibleError("spanning_steiner_tree: node set is disconnected");
        (inst.is_terminal(v) ? out.terminals : out.steiner).push_back(v);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool is_valid_steiner_tree(const CaInstance& inst, const SteinerTree& t) {
    const auto nodes = t.nodes();
    if (nodes.empty()) return t.edges.empty();
    if (t.edges.size() + 1 != nodes.size()) return false;
    for (NodeId v : t.terminals)
        if (!inst.is_terminal(v)) return false;
    for (NodeId v : t.steiner)
        if (!inst.is_steiner(v)) return false;
    std::vector<int> local(inst.num_nodes(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
    UndirGraph g(static_cast<int>(nodes.size()));
    for (const Edge& e : t.edges) {
        if (!inst.graph.has_edge(e.u, e.v) || local[e.u] < 0 || local[e.v] < 0) return false;
        if (!g.add_edge(local[e.u], local[e.v])) return false;
    }
    return is_connected(g);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Node-weighted Dreyfus-Wagner over a terminal list. Entry (mask, v) is
/// the cheapest tree spanning the terminals of `mask` plus v, relaying only
/// through Steiner nodes and terminals of `mask`.
class DreyfusWagner {
public:
    DreyfusWagner(const CaInstance& inst, std::vector<NodeId> terms)
        : inst_(inst), terms_(std::move(terms)), n_(inst.num_nodes()), q_(static_cast<int>(terms_.size())) {
        index_.assign(n_, -1);
        for (int i = 0; i < q_; ++i) index_[terms_[i]] = i;
        const std::size_t size = (std::size_t{1} << q_) * n_;
        cost_.assign(size, kInf);
        pred_.assign(size, -1);
        split_.assign(size, 0);
        for (unsigned mask = 1; mask < (1u << q_); ++mask) fill(mask);
    }

    [[nodiscard]] int cost(unsigned mask, NodeId v) const { return cost_[at(mask, v)]; }

    /// Node set of the tree behind (mask, v).
    [[nodiscard]] std::vector<NodeId> nodes(unsigned mask, NodeId v) const {
        std::vector<char> in(n_, 0);
        std::vector<std::pair<unsigned, NodeId>> stack{{mask, v}};
        while (!stack.empty()) {
            const auto [m, x] = stack.back();
            stack.pop_back();
            in[x] = 1;
            const std::size_t i = at(m, x);
            if (pred_[i] >= 0) {
                stack.push_back({m, pred_[i]});
            } else if (split_[i] != 0) {
                stack.push_back({split_[i], x});
                stack.push_back({m ^ split_[i], x});
            }
        }
        std::vector<NodeId> out;
        for (NodeId x = 0; x < n_; ++x)
            if (in[x]) out.push_back(x);
        return out;
    }

private:
    [[nodiscard]] std::size_t at(unsigned mask, NodeId v) const { return std::size_t{mask} * n_ + v; }
    [[nodiscard]] int weight(NodeId v) const { return inst_.is_steiner(v) ? 1 : 0; }
    [[nodiscard]] bool in_query(NodeId v) const { return inst_.is_steiner(v) || index_[v] >= 0; }
    [[nodiscard]] bool relay(unsigned mask, NodeId v) const {
        return inst_.is_steiner(v) || (index_[v] >= 0 && ((mask >> index_[v]) & 1u));
    }

    void fill(unsigned mask) {
        if (std::popcount(mask) == 1) {
            cost_[at(mask, terms_[std::countr_zero(mask)])] = 0;
        } else {
            const unsigned low = mask & (~mask + 1);
            for (NodeId v = 0; v < n_; ++v) {
                if (!relay(mask, v)) continue;
                int best = kInf;
                unsigned best_sub = 0;
                for (unsigned sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
                    if (!(sub & low)) continue;
                    const int a = cost_[at(sub, v)];
                    const int b = cost_[at(mask ^ sub, v)];
                    if (a >= kInf || b >= kInf) continue;
                    const int c = a + b - weight(v);
                    if (c < best) {
                        best = c;
                        best_sub = sub;
                    }
                }
                if (best < kInf) {
                    cost_[at(mask, v)] = best;
                    split_[at(mask, v)] = best_sub;
                }
            }
        }
        // Dijkstra relaxation; arc weight is the weight of the entered node.
        using Item = std::pair<int, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (NodeId v = 0; v < n_; ++v)
            if (cost_[at(mask, v)] < kInf) heap.push({cost_[at(mask, v)], v});
        std::vector<char> done(n_, 0);
        while (!heap.empty()) {
            const auto [du, u] = heap.top();
            heap.pop();
            if (done[u] || du != cost_[at(mask, u)]) continue;
            done[u] = 1;
            if (!relay(mask, u)) continue;
            for (NodeId v : inst_.graph.neighbors(u)) {
                if (!in_query(v) || done[v]) continue;
                const std::size_t iv = at(mask, v);
                if (du + weight(v) < cost_[iv]) {
                    cost_[iv] = du + weight(v);
                    pred_[iv] = u;
                    split_[iv] = 0;
                    heap.push({cost_[iv], v});
                }
            }
        }
    }

    const CaInstance& inst_;
    std::vector<NodeId> terms_;
    int n_;
    int q_;
    std::vector<int> index_;
    std::vector<int> cost_;
    std::vector<NodeId> pred_;
    std::vector<unsigned> split_;
};

std::vector<NodeId> checked_terminals(const CaInstance& inst, std::span<const NodeId> terminals, int cap) {
    std::vector<NodeId> terms(terminals.begin(), terminals.end());
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (static_cast<int>(terms.size()) > cap)
        throw CapExceeded("terminal count " + std::to_string(terms.size()) + " exceeds cap " + std::to_string(cap));
    for (NodeId t : terms)
        if (!inst.graph.contains(t) || !inst.is_terminal(t))
            throw std::invalid_argument("node " + std::to_string(t) + " is not a terminal");
    return terms;
}

}  // namespace

SteinerTree exact_steiner(const CaInstance& inst, std::span<const NodeId> terminals, int cap) {
    const auto terms = checked_terminals(inst, terminals, cap);
    if (terms.empty()) return {};
    if (terms.size() == 1) return spanning_steiner_tree(inst, terms);
    const DreyfusWagner dw(inst, terms);
    const unsigned full = (1u << terms.size()) - 1;
    if (dw.cost(full, terms.front()) >= kInf) throw InfeasibleError("exact_steiner: terminals are not connectable");
    return spanning_steiner_tree(inst, dw.nodes(full, terms.front()));
}

std::vector<Component> enumerate_components(const CaInstance& inst, int k, int cap) {
    const auto terms = checked_terminals(inst, inst.terminals(), cap);
    std::vector<Component> out;
    if (terms.size() < 2) return out;
    const DreyfusWagner dw(inst, terms);
    for (unsigned mask = 1; mask < (1u << terms.size()); ++mask) {
        const int size = std::popcount(mask);
        if (size < 2 || size > k) continue;
        const NodeId anchor = terms[std::countr_zero(mask)];
        if (dw.cost(mask, anchor) >= kInf) continue;
        const SteinerTree tree = spanning_steiner_tree(inst, dw.nodes(mask, anchor));
        Component c;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if ((mask >> i) & 1u) c.terminals.push_back(terms[i]);
        c.steiner = tree.steiner;
        c.edges = tree.edges;
        c.cost = tree.cost();
        for (NodeId sink : c.terminals) {
            c.sink = sink;
            out.push_back(c);
        }
    }
    return out;
}

SteinerTree brute_force_opt(const CaInstance& inst, int cap) {
    const auto steiner = inst.steiner_nodes();
    const int s = static_cast<int>(steiner.size());
    if (s > cap) throw CapExceeded("steiner count " + std::to_string(s) + " exceeds cap " + std::to_string(cap));
    const auto terms = inst.terminals();
    if (terms.size() <= 1) return spanning_steiner_tree(inst, terms);
    std::vector<char> chosen(inst.num_nodes(), 0);
    for (int size = 0; size <= s; ++size) {
        // Gosper's hack walks size-subsets in increasing bitmask order.
        std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
        const std::uint64_t limit = std::uint64_t{1} << s;
        while (mask < limit) {
            for (int i = 0; i < s; ++i) chosen[steiner[i]] = static_cast<char>((mask >> i) & 1u);
            if (terminals_connected(inst, chosen)) {
                std::vector<NodeId> nodes = terms;
                for (int i = 0; i < s; ++i)
                    if ((mask >> i) & 1u) nodes.push_back(steiner[i]);
                return spanning_steiner_tree(inst, nodes);
            }
            if (mask == 0) break;
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    throw InfeasibleError("brute_force_opt: terminals are not connectable");
}

}  // namespace augur
