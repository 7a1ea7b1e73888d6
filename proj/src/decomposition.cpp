#include "augur/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace augur {

std::vector<NodeId> leaf_map(const Tree& t) {
    if (!t.root()) throw std::invalid_argument("leaf_map: tree must be rooted");
    const int n = t.num_nodes();
    std::vector<NodeId> f(n, kNoNode);
    std::vector<NodeId> spare(n, kNoNode);
    // Post-order via reversed BFS order.
    std::vector<NodeId> order{*t.root()};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (NodeId c : t.children(order[i])) order.push_back(c);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId u = *it;
        const auto kids = t.children(u);
        if (kids.empty()) {
            spare[u] = u;
        } else if (kids.size() == 2) {
            f[u] = spare[kids[0]];
            spare[u] = spare[kids[1]];
        } else {
            throw std::invalid_argument("leaf_map: node " + std::to_string(u) + " has " +
                                        std::to_string(kids.size()) + " children");
        }
    }
    return f;
}

bool leaf_map_valid(const Tree& t, const std::vector<NodeId>& f, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const int n = t.num_nodes();
    if (static_cast<int>(f.size()) != n) return fail("size mismatch");
    std::vector<int> image_count(n, 0);
    std::vector<int> internal_use(n, 0);
    std::map<Edge, int> edge_use;
    for (NodeId u = 0; u < n; ++u) {
        const bool leaf = t.children(u).empty();
        if (leaf) {
            if (f[u] != kNoNode) return fail("leaf " + std::to_string(u) + " is mapped");
            continue;
        }
        const NodeId c = f[u];
        if (c == kNoNode || !t.children(c).empty()) return fail("node " + std::to_string(u) + " not mapped to a leaf");
        if (++image_count[c] > 1) return fail("leaf " + std::to_string(c) + " hit twice");
        // Walk up from the image; it must reach u.
        NodeId x = c;
        while (x != u) {
            const NodeId p = t.parent(x);
            if (p == kNoNode) return fail("f(" + std::to_string(u) + ") is not a descendant");
            if (++edge_use[Edge(x, p)] > 1) return fail("edge reused by path of " + std::to_string(u));
            if (p != u && ++internal_use[p] > 1) return fail("node " + std::to_string(p) + " internal twice");
            x = p;
        }
    }
    return true;
}

DegreeExcess degree_excess(const UndirGraph& tree) {
    DegreeExcess out;
    for (NodeId v = 0; v < tree.num_nodes(); ++v) {
        const int d = tree.degree(v);
        if (d == 1) ++out.leaves;
        if (d >= 3) out.excess += d - 2;
    }
    return out;
}

int RestrictedDecomposition::total_cost() const { return std::accumulate(costs.begin(), costs.end(), 0); }

namespace {

enum class PlusKind { root, steiner, terminal, dummy_terminal };

struct PlusNode {
    PlusKind kind;
    NodeId orig = kNoNode;
    NodeId parent = kNoNode;
    std::vector<int> children;
    int depth = 0;

    [[nodiscard]] bool leaf() const { return children.empty(); }
};

RestrictedComponent whole_tree(const SteinerTree& opt) {
    RestrictedComponent c;
    c.terminals = opt.terminals;
    c.steiner = opt.steiner;
    c.edges = opt.edges;
    c.cost = opt.cost();
    c.expanded_leaves = static_cast<int>(opt.terminals.size());
    return c;
}

}  // namespace

RestrictedDecomposition k_restricted_decompose(const SteinerTree& opt, int m) {
    if (m < 1) throw std::invalid_argument("k_restricted_decompose: m must be >= 1");
    RestrictedDecomposition d;
    d.m = m;
    d.opt_cost = opt.cost();
    const auto nodes = opt.nodes();
    const std::size_t k = m >= 30 ? std::size_t{1} << 30 : std::size_t{1} << m;

    std::map<NodeId, std::vector<NodeId>> adj;
    for (NodeId v : nodes) adj[v];
    for (const Edge& e : opt.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    const auto is_terminal = [&](NodeId v) {
        return std::binary_search(opt.terminals.begin(), opt.terminals.end(), v);
    };
    if (nodes.size() > 2) {
        for (const auto& [v, nbrs] : adj) {
            if (is_terminal(v) && nbrs.size() != 1)
                throw std::invalid_argument("k_restricted_decompose: terminal " + std::to_string(v) + " is not a leaf");
            if (!is_terminal(v) && nbrs.size() < 2)
                throw std::invalid_argument("k_restricted_decompose: Steiner node " + std::to_string(v) + " is a leaf");
        }
    }

    if (opt.terminals.size() <= k) {
        d.degenerate = true;
        d.trees.assign(m, {whole_tree(opt)});
        d.costs.assign(m, opt.cost());
        d.best = 0;
        return d;
    }

    // Binary expansion Q+.
    std::vector<PlusNode> plus;
    plus.push_back(PlusNode{PlusKind::root, kNoNode, kNoNode, {}, 0});
    const NodeId t_min = opt.terminals.front();
    const NodeId s0 = adj[t_min].front();
    struct Work {
        int node;
        NodeId orig;
        NodeId orig_parent;
    };
    std::vector<Work> work;
    auto add = [&](PlusKind kind, NodeId orig, int parent) {
        plus.push_back(PlusNode{kind, orig, parent, {}, 0});
        const int id = static_cast<int>(plus.size()) - 1;
        plus[parent].children.push_back(id);
        return id;
    };
    add(PlusKind::terminal, t_min, 0);
    work.push_back({add(PlusKind::steiner, s0, 0), s0, t_min});
    while (!work.empty()) {
        const Work w = work.back();
        work.pop_back();
        std::vector<NodeId> kids;
        for (NodeId c : adj[w.orig])
            if (c != w.orig_parent) kids.push_back(c);
        auto attach = [&](int parent, NodeId c) {
            const int id = add(is_terminal(c) ? PlusKind::terminal : PlusKind::steiner, c, parent);
            if (!is_terminal(c)) work.push_back({id, c, w.orig});
        };
        if (kids.size() == 1) {
            attach(w.node, kids[0]);
            add(PlusKind::dummy_terminal, kNoNode, w.node);
            continue;
        }
        int cur = w.node;
        for (std::size_t i = 0; i + 2 < kids.size(); ++i) {
            attach(cur, kids[i]);
            cur = add(PlusKind::steiner, w.orig, cur);
        }
        attach(cur, kids[kids.size() - 2]);
        attach(cur, kids[kids.size() - 1]);
    }
    const int n = static_cast<int>(plus.size());
    d.expanded_nodes = n;
    std::vector<int> order{0};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : plus[order[i]].children) {
            plus[c].depth = plus[order[i]].depth + 1;
            order.push_back(c);
        }

    // Leaf map: f(u) = spare(first child), spare(u) = spare(second child).
    std::vector<int> f(n, -1);
    std::vector<int> spare(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int u = *it;
        if (plus[u].leaf()) {
            spare[u] = u;
        } else {
            f[u] = spare[plus[u].children[0]];
            spare[u] = spare[plus[u].children[1]];
        }
    }
    auto label = [&](int u) { return plus[u].depth % m; };

    d.intermediate_hits.assign(n, 0);
    d.trees.resize(m);
    d.costs.assign(m, 0);
    for (int j = 0; j < m; ++j) {
        std::vector<int> roots{0};
        for (int u : order)
            if (u != 0 && plus[u].kind == PlusKind::steiner && label(u) == j) roots.push_back(u);
        for (int v : roots) {
            std::vector<char> in(n, 0);
            in[v] = 1;
            std::vector<int> stack(plus[v].children.begin(), plus[v].children.end());
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                if (plus[x].leaf()) {
                    in[x] = 1;
                } else if (label(x) == j) {
                    ++d.intermediate_hits[x];
                    for (int y = f[x]; y != x; y = plus[y].parent) in[y] = 1;
                    in[x] = 1;
                } else {
                    in[x] = 1;
                    stack.insert(stack.end(), plus[x].children.begin(), plus[x].children.end());
                }
            }
            RestrictedComponent c;
            for (int x = 0; x < n; ++x) {
                if (!in[x]) continue;
                const PlusNode& p = plus[x];
                if (p.leaf()) ++c.expanded_leaves;
                if (p.kind == PlusKind::terminal) c.terminals.push_back(p.orig);
                if (p.kind == PlusKind::steiner) c.steiner.push_back(p.orig);
                if (x == v || p.parent < 0) continue;
                const PlusNode& q = plus[p.parent];
                if (p.kind == PlusKind::dummy_terminal) continue;
                if (q.kind == PlusKind::root) continue;
                if (p.orig != q.orig) c.edges.emplace_back(p.orig, q.orig);
            }
            if (in[0] && in[1] && in[2]) c.edges.emplace_back(t_min, s0);
            for (auto* vec : {&c.terminals, &c.steiner}) {
                std::sort(vec->begin(), vec->end());
                vec->erase(std::unique(vec->begin(), vec->end()), vec->end());
            }
            std::sort(c.edges.begin(), c.edges.end());
            c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
            c.cost = static_cast<int>(c.steiner.size());
            d.costs[j] += c.cost;
            d.trees[j].push_back(std::move(c));
        }
    }
    d.best = static_cast<int>(std::min_element(d.costs.begin(), d.costs.end()) - d.costs.begin());
    // Hits only count for non-root Steiner copies.
    for (int x = 0; x < n; ++x)
        if (plus[x].kind != PlusKind::steiner) d.intermediate_hits[x] = -1;
    d.intermediate_hits.erase(std::remove(d.intermediate_hits.begin(), d.intermediate_hits.end(), -1),
                              d.intermediate_hits.end());
    return d;
}

DecompositionAudit audit_decomposition(const SteinerTree& opt, const RestrictedDecomposition& d) {
    DecompositionAudit audit;
    auto fail = [&](std::string msg) { audit.failures.push_back(std::move(msg)); };
    const std::size_t k = d.m >= 30 ? std::size_t{1} << 30 : std::size_t{1} << d.m;
    std::set<Edge> tree_edges(opt.edges.begin(), opt.edges.end());
    const auto nodes = opt.nodes();
    std::map<NodeId, int> local;
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);

    for (std::size_t j = 0; j < d.trees.size(); ++j) {
        const std::string tag = "Q_" + std::to_string(j);
        std::vector<int> uf(nodes.size());
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        int cost = 0;
        for (const auto& c : d.trees[j]) {
            if (c.expanded_leaves > static_cast<int>(k) || c.terminals.size() > k)
                fail(tag + ": component with " + std::to_string(c.expanded_leaves) + " leaves exceeds k");
            for (const Edge& e : c.edges) {
                if (!tree_edges.count(e)) {
                    fail(tag + ": edge not in the tree");
                    continue;
                }
                uf[find(local.at(e.u))] = find(local.at(e.v));
            }
            cost += c.cost;
        }
        if (cost != d.costs[j]) fail(tag + ": cost bookkeeping mismatch");
        for (NodeId t : opt.terminals)
            if (find(local.at(t)) != find(local.at(opt.terminals.front()))) {
                fail(tag + ": terminals not connected");
                break;
            }
    }
    if (!d.degenerate)
        for (int hits : d.intermediate_hits)
            if (hits != 1) {
                fail("a Steiner copy is an intermediate leaf " + std::to_string(hits) + " times");
                break;
            }
    // min_j cost <= (1 + 4/m) OPT  <=>  m * min <= (m + 4) OPT.
    if (static_cast<long long>(d.m) * d.best_cost() > static_cast<long long>(d.m + 4) * d.opt_cost)
        fail("best label cost " + std::to_string(d.best_cost()) + " above (1 + 4/m) OPT");
    if (d.total_cost() > (d.m + 4) * d.opt_cost)
        fail("total cost " + std::to_string(d.total_cost()) + " above (m + 4) OPT");
    return audit;
}

}  // namespace augur
