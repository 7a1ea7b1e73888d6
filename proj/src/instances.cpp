#include <cmath>
#include "augur/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "augur/lp.hpp"
#include "augur/reductions.hpp"

namespace augur {

int uniform_below(std::mt19937_64& rng, int n) {
    if (n <= 0) throw std::invalid_argument("uniform_below: empty range");
    const int v = static_cast<int>(unit_uniform(rng) * n);
    return std::min(v, n - 1);
}

namespace {

bool chance(std::mt19937_64& rng, double p) { return unit_uniform(rng) < p; }

std::vector<Edge> pruefer_tree(std::mt19937_64& rng, int n, int offset = 0) {
    std::vector<Edge> edges;
    if (n == 2) edges.emplace_back(offset, offset + 1);
    if (n <= 2) return edges;
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = uniform_below(rng, n);
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    // smallest current leaf each step
    std::set<int> leaves;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.insert(i);
    for (int x : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(offset + leaf, offset + x);
        if (--degree[x] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(offset + a, offset + b);
    std::sort(edges.begin(), edges.end());
    return edges;
}

template <class T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform_below(rng, i + 1)]);
}

TreeInstance finish(CaInstance inst) {
    TreeInstance out;
    out.opt.terminals = inst.terminals();
    out.opt.steiner = inst.steiner_nodes();
    out.opt.edges = inst.graph.edges();
    out.instance = std::move(inst);
    return out;
}

/// Drops links in random order while the set stays feasible and is larger
/// than `target`, then tops it up from `pool`.
LinkSet thin(std::mt19937_64& rng, const UndirGraph& g, std::vector<Link> all, std::size_t target, AugmentMode mode) {
    shuffle(rng, all);
    std::vector<Link> kept = all;
    for (const Link& l : all) {
        if (kept.size() <= target) break;
        std::vector<Link> trial;
        for (const Link& k : kept)
            if (!(k == l)) trial.push_back(k);
        if (verify_augmentation(g, LinkSet(trial), mode)) kept = std::move(trial);
    }
    for (const Link& l : all) {
        if (kept.size() >= target) break;
        if (std::find(kept.begin(), kept.end(), l) == kept.end()) kept.push_back(l);
    }
    std::sort(kept.begin(), kept.end());
    return LinkSet(kept);
}

}  // namespace

int path_family_length(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("path_family_length: eps must be positive");
    // 1e-12 keeps 2/(3*0.1) from rounding up past an integer
    return static_cast<int>(std::ceil(2.0 / (3.0 * eps) - 1e-12)) + 1;
}

TreeInstance gen_path_family(int t) {
    if (t < 2) throw std::invalid_argument("gen_path_family: t must be >= 2");
    CaInstance inst;
    for (int i = 1; i <= t; ++i) inst.add_steiner("s" + std::to_string(i));
    for (int i = 1; i <= t; ++i) {
        const NodeId a = inst.add_terminal("r" + std::to_string(i) + "_1");
        const NodeId b = inst.add_terminal("r" + std::to_string(i) + "_2");
        inst.graph.add_edge(i - 1, a);
        inst.graph.add_edge(i - 1, b);
    }
    for (int i = 1; i < t; ++i) inst.graph.add_edge(i - 1, i);
    return finish(std::move(inst));
}

TreeInstance gen_five_layer() {
    CaInstance inst;
    inst.add_steiner("r");
    for (int i = 1; i <= 9; ++i) inst.add_steiner("x" + std::to_string(i));
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 5; ++j) inst.add_steiner("y" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int k = 1; k <= 4; ++k) inst.add_steiner("z" + std::to_string(i) + std::to_string(j) + std::to_string(k));
    for (int i = 1; i <= 9; ++i) {
        inst.graph.add_edge(FiveLayer::root, FiveLayer::x(i));
        for (int j = 1; j <= 5; ++j) {
            inst.graph.add_edge(FiveLayer::x(i), FiveLayer::y(i, j));
            for (int k = 1; k <= 4; ++k) inst.graph.add_edge(FiveLayer::y(i, j), FiveLayer::z(i, j, k));
        }
    }
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int k = 1; k <= 4; ++k) {
                const NodeId z = FiveLayer::z(i, j, k);
                const std::string base = "q" + std::to_string(i) + std::to_string(j) + std::to_string(k);
                inst.graph.add_edge(z, inst.add_terminal(base + "_1"));
                inst.graph.add_edge(z, inst.add_terminal(base + "_2"));
            }
    return finish(std::move(inst));
}

std::vector<int> five_layer_leaf_rank() {
    std::vector<int> rank(235);
    int next = 0;
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int k = 1; k <= 4; ++k) rank[FiveLayer::z(i, j, k)] = next++;
    for (NodeId v = 0; v < FiveLayer::z(1, 1, 1); ++v) rank[v] = next++;
    return rank;
}

TreeInstance gen_random_tree_instance(int n, std::uint64_t seed, const TerminalProfile& profile) {
    if (n < 1) throw std::invalid_argument("gen_random_tree_instance: n must be >= 1");
    std::mt19937_64 rng(seed);
    CaInstance inst;
    for (int i = 0; i < n; ++i) inst.add_steiner("s" + std::to_string(i));
    for (const Edge& e : pruefer_tree(rng, n)) inst.graph.add_edge(e.u, e.v);
    for (int i = 0; i < n; ++i) {
        int count;
        if (n == 1) {
            count = 2;
        } else if (inst.graph.degree(i) == 1) {
            count = chance(rng, profile.leaf_two) ? 2 : 1;
        } else {
            const double u = unit_uniform(rng);
            count = u < profile.internal_zero ? 0 : (u < profile.internal_zero + profile.internal_one ? 1 : 2);
        }
        for (int c = 0; c < count; ++c)
            inst.graph.add_edge(i, inst.add_terminal("t" + std::to_string(i) + "_" + std::to_string(c)));
    }
    return finish(std::move(inst));
}

TreeInstance gen_random_leaf_adjacent(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_leaf_adjacent: n must be >= 1");
    std::mt19937_64 rng(seed);
    const int pieces = 1 + uniform_below(rng, std::max(1, n / 4));
    // piece boundaries over consecutive Steiner ids
    std::vector<int> cuts{0, n};
    while (static_cast<int>(cuts.size()) < pieces + 1) {
        const int c = 1 + uniform_below(rng, std::max(1, n - 1));
        if (c < n && std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
        if (n == 1) break;
    }
    std::sort(cuts.begin(), cuts.end());

    CaInstance inst;
    for (int i = 0; i < n; ++i) inst.add_steiner("s" + std::to_string(i));
    std::vector<Edge> tree;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p)
        for (const Edge& e : pruefer_tree(rng, cuts[p + 1] - cuts[p], cuts[p])) tree.push_back(e);
    std::vector<int> load(n, 0);
    for (std::size_t p = 1; p + 1 < cuts.size(); ++p) {
        std::vector<int> before, here;
        for (int v = 0; v < cuts[p]; ++v)
            if (load[v] < 2) before.push_back(v);
        for (int v = cuts[p]; v < cuts[p + 1]; ++v)
            if (load[v] < 2) here.push_back(v);
        if (before.empty() || here.empty()) throw std::logic_error("gen_random_leaf_adjacent: no free attachment");
        const int a = before[uniform_below(rng, static_cast<int>(before.size()))];
        const int b = here[uniform_below(rng, static_cast<int>(here.size()))];
        const NodeId r = inst.add_terminal("j" + std::to_string(p));
        tree.emplace_back(a, r);
        tree.emplace_back(b, r);
        inst.graph.add_edge(a, b);  // clique on N(r)
        ++load[a];
        ++load[b];
    }
    for (int v = 0; v < n; ++v) {
        int extra = 0;
        if (load[v] == 0) extra = (n == 1 || chance(rng, 0.3)) ? 2 : 1;
        else if (load[v] == 1) extra = chance(rng, 0.4) ? 1 : 0;
        for (int c = 0; c < extra; ++c) {
            const NodeId r = inst.add_terminal("t" + std::to_string(v) + "_" + std::to_string(c));
            tree.emplace_back(v, r);
        }
    }
    for (const Edge& e : tree) inst.graph.add_edge(e.u, e.v);
    TreeInstance out;
    out.opt.terminals = inst.terminals();
    out.opt.steiner = inst.steiner_nodes();
    std::sort(tree.begin(), tree.end());
    out.opt.edges = tree;
    out.instance = std::move(inst);
    return out;
}

LinkedGraph gen_random_block_tap(int n, int link_count, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_random_block_tap: n must be >= 3");
    std::mt19937_64 rng(seed);
    LinkedGraph out;
    out.graph = UndirGraph(n);
    for (const Edge& e : pruefer_tree(rng, n)) out.graph.add_edge(e.u, e.v);
    // leaves in DFS order, linked cyclically
    std::vector<NodeId> leaves;
    std::vector<NodeId> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        if (out.graph.degree(u) == 1) leaves.push_back(u);
        const auto& nb = out.graph.neighbors(u);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it)
            if (!seen[*it]) {
                seen[*it] = 1;
                stack.push_back(*it);
            }
    }
    std::set<Link> pool;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        const Link l(leaves[i], leaves[(i + 1) % leaves.size()]);
        if (l.u != l.v && !out.graph.has_edge(l.u, l.v)) pool.insert(l);
    }
    for (int i = 0; i < 2 * link_count; ++i) {
        const int a = uniform_below(rng, n), b = uniform_below(rng, n);
        if (a != b && !out.graph.has_edge(a, b)) pool.insert(Link(a, b));
    }
    out.links = thin(rng, out.graph, {pool.begin(), pool.end()}, static_cast<std::size_t>(link_count), AugmentMode::node);
    return out;
}

LinkedGraph gen_random_one_node_cap(int n, int link_count, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_random_one_node_cap: n must be >= 3");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        LinkedGraph out;
        out.graph = UndirGraph(n);
        for (const Edge& e : pruefer_tree(rng, n)) out.graph.add_edge(e.u, e.v);
        const int extra = uniform_below(rng, n / 3 + 1);
        for (int i = 0; i < extra; ++i) {
            const int a = uniform_below(rng, n), b = uniform_below(rng, n);
            if (a != b) out.graph.add_edge(a, b);
        }
        if (is_two_node_connected(out.graph)) continue;
        std::vector<Link> closure;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!out.graph.has_edge(a, b)) closure.emplace_back(a, b);
        out.links = thin(rng, out.graph, closure, static_cast<std::size_t>(link_count), AugmentMode::node);
        return out;
    }
    throw std::runtime_error("gen_random_one_node_cap: no non-trivial graph found");
}

LinkedGraph gen_random_cacap(int cycles, int max_len, int link_count, std::uint64_t seed) {
    if (cycles < 1 || max_len < 3) throw std::invalid_argument("gen_random_cacap: need cycles >= 1, max_len >= 3");
    std::mt19937_64 rng(seed);
    LinkedGraph out;
    auto add_cycle = [&](NodeId anchor) {
        const int len = 3 + uniform_below(rng, max_len - 2);
        std::vector<NodeId> ring{anchor};
        while (static_cast<int>(ring.size()) < len) ring.push_back(out.graph.add_node(std::to_string(out.graph.num_nodes())));
        for (int i = 0; i < len; ++i) out.graph.add_edge(ring[i], ring[(i + 1) % len]);
    };
    add_cycle(out.graph.add_node("0"));
    for (int c = 1; c < cycles; ++c) add_cycle(uniform_below(rng, out.graph.num_nodes()));
    const int n = out.graph.num_nodes();
    std::vector<Link> closure;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) closure.emplace_back(a, b);
    out.links = thin(rng, out.graph, closure, static_cast<std::size_t>(link_count), AugmentMode::edge);
    return out;
}

}  // namespace augur
