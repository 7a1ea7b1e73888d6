#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "augur/decomposition.hpp"
#include "augur/instances.hpp"
#include "doctest.h"

using namespace augur;

namespace {

// grows a rooted regular binary tree by splitting random leaves
Tree random_binary(std::mt19937_64& rng, int splits) {
    UndirGraph g(1);
    std::vector<NodeId> leaves{0};
    for (int i = 0; i < splits; ++i) {
        const int pick = uniform_below(rng, static_cast<int>(leaves.size()));
        const NodeId v = leaves[pick];
        leaves.erase(leaves.begin() + pick);
        for (int c = 0; c < 2; ++c) {
            const NodeId w = g.add_node();
            g.add_edge(v, w);
            leaves.push_back(w);
        }
    }
    return Tree(g, 0);
}

// edge sets of the u -> f(u) paths are pairwise disjoint; interiors too
bool oracle_disjoint(const Tree& t, const std::vector<NodeId>& f) {
    std::set<Edge> used_edges;
    std::set<NodeId> used_inner;
    std::set<NodeId> targets;
    for (NodeId u = 0; u < t.num_nodes(); ++u) {
        if (f[u] == kNoNode) continue;
        if (!targets.insert(f[u]).second) return false;
        const auto p = tree_path(t, u, f[u]);
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!used_edges.insert(Edge(p[i], p[i + 1])).second) return false;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (!used_inner.insert(p[i]).second) return false;
    }
    return true;
}

bool spans(const SteinerTree& opt, const std::vector<RestrictedComponent>& q) {
    std::map<NodeId, NodeId> parent;
    std::function<NodeId(NodeId)> find = [&](NodeId x) {
        if (!parent.count(x)) parent[x] = x;
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& c : q)
        for (const Edge& e : c.edges) parent[find(e.u)] = find(e.v);
    for (NodeId t : opt.terminals)
        if (find(t) != find(opt.terminals.front())) return false;
    return true;
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("leaf map on tiny trees") {
    UndirGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    const Tree t(g, 0);
    const auto f = leaf_map(t);
    CHECK((f[0] == 1 || f[0] == 2));
    CHECK(f[1] == kNoNode);
    CHECK(leaf_map_valid(t, f));

    UndirGraph h(7);
    for (int v = 1; v < 7; ++v) h.add_edge(v, (v - 1) / 2);
    const Tree full(h, 0);
    const auto fh = leaf_map(full);
    std::set<NodeId> hit;
    for (NodeId u = 0; u < 3; ++u) {
        REQUIRE(fh[u] >= 3);
        hit.insert(fh[u]);
    }
    CHECK(hit.size() == 3);
    CHECK(oracle_disjoint(full, fh));
}

TEST_CASE("leaf map on random binary trees") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Tree t = random_binary(rng, 1 + uniform_below(rng, 31));
        const auto f = leaf_map(t);
        std::string why;
        CHECK_MESSAGE(leaf_map_valid(t, f, &why), why);
        CHECK(oracle_disjoint(t, f));
    }
    UndirGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(leaf_map(Tree(path, 0)), std::invalid_argument);
}

TEST_CASE("high degree nodes are paid for by leaves") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ti = gen_random_tree_instance(1 + uniform_below(rng, 60), rng());
        UndirGraph g(ti.instance.num_nodes());
        for (const Edge& e : ti.opt.edges) g.add_edge(e.u, e.v);
        const auto d = degree_excess(g);
        int excess = 0, leaves = 0;
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            if (g.degree(v) >= 3) excess += g.degree(v) - 2;
            if (g.degree(v) == 1) ++leaves;
        }
        CHECK(d.excess == excess);
        CHECK(d.leaves == leaves);
        CHECK(d.excess <= d.leaves);
    }
}

TEST_CASE("few terminals: one component per label") {
    const auto p = gen_path_family(2);  // 4 terminals
    const auto d = k_restricted_decompose(p.opt, 2);
    CHECK(d.degenerate);
    REQUIRE(d.trees.size() == 2);
    for (int j = 0; j < 2; ++j) {
        REQUIRE(d.trees[j].size() == 1);
        CHECK(d.costs[j] == p.opt.cost());
        CHECK(d.trees[j][0].terminals == p.opt.terminals);
    }
    CHECK(audit_decomposition(p.opt, d).ok());
}

TEST_CASE("bounds on random trees") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ti = gen_random_tree_instance(1 + uniform_below(rng, 40), rng());
        const int opt = ti.opt.cost();
        for (int m = 1; m <= 3; ++m) {
            const auto d = k_restricted_decompose(ti.opt, m);
            const auto audit = audit_decomposition(ti.opt, d);
            CHECK_MESSAGE(audit.ok(), (audit.ok() ? "" : audit.failures.front()));
            CHECK(static_cast<int>(d.trees.size()) == m);
            CHECK(d.best_cost() * m <= (m + 4) * opt);
            CHECK(d.total_cost() <= (m + 4) * opt);
            for (const auto& q : d.trees) {
                CHECK(spans(ti.opt, q));
                for (const auto& c : q) CHECK(static_cast<int>(c.terminals.size()) <= (1 << m));
            }
        }
    }
}

}
