#include <algorithm>
#include <queue>
#include <random>

#include "augur/graph.hpp"
#include "augur/harmonic.hpp"
#include "augur/instances.hpp"
#include "doctest.h"

using namespace augur;

namespace {

UndirGraph path_graph(int n) {
    UndirGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

UndirGraph cycle_graph(int n) {
    UndirGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

UndirGraph complete_graph(int n) {
    UndirGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// components of g after deleting `skip` (kNoNode: nothing deleted)
int oracle_components(const UndirGraph& g, NodeId skip) {
    std::vector<char> seen(g.num_nodes(), 0);
    int comps = 0;
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
        if (s == skip || seen[s]) continue;
        ++comps;
        std::queue<NodeId> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            const NodeId v = q.front();
            q.pop();
            for (NodeId w : g.neighbors(v))
                if (w != skip && !seen[w]) seen[w] = 1, q.push(w);
        }
    }
    return comps;
}

UndirGraph random_connected(std::mt19937_64& rng, int n, double p) {
    UndirGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, uniform_below(rng, v));
    std::bernoulli_distribution extra(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (extra(rng)) g.add_edge(u, v);
    return g;
}

std::vector<NodeId> bfs_path(const UndirGraph& g, NodeId s, NodeId t) {
    std::vector<NodeId> prev(g.num_nodes(), kNoNode);
    std::queue<NodeId> q;
    q.push(s);
    prev[s] = s;
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop();
        for (NodeId w : g.neighbors(v))
            if (prev[w] == kNoNode) prev[w] = v, q.push(w);
    }
    std::vector<NodeId> out{t};
    while (out.back() != s) out.push_back(prev[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == Rational(1));
    CHECK(harmonic(3) == Rational(11, 6));
    // summed backwards as an independent check
    Rational back(0);
    for (int i = 120; i >= 1; --i) back += Rational(1, i);
    CHECK(harmonic(120) == back);
    CHECK(harmonic_value(3) == doctest::Approx(11.0 / 6.0));
}

TEST_CASE("two-node-connectivity") {
    CHECK(is_two_node_connected(complete_graph(3)));
    CHECK_FALSE(is_two_node_connected(path_graph(3)));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + uniform_below(rng, 8);
        const auto g = random_connected(rng, n, 0.25);
        bool oracle = true;
        for (NodeId v = 0; v < n; ++v) oracle = oracle && oracle_components(g, v) == 1;
        CHECK(is_two_node_connected(g) == oracle);
        CHECK(is_two_node_connected(g) == (block_cut_tree(g).num_cut_nodes() == 0));
    }
}

TEST_CASE("block-cut tree") {
    const auto tri = block_cut_tree(complete_graph(3));
    CHECK(tri.tree.num_nodes() == 1);
    CHECK(tri.num_cut_nodes() == 0);

    const auto p = block_cut_tree(path_graph(3));
    CHECK(p.tree.num_nodes() == 3);
    REQUIRE(p.num_cut_nodes() == 1);
    const NodeId b = p.node_map[1];
    CHECK(p.is_cut(b));
    CHECK(p.cut_vertex[b] == 1);
    CHECK(p.tree.degree(b) == 2);
    CHECK(cut_nodes(path_graph(3)) == std::vector<NodeId>{1});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + uniform_below(rng, 12);
        const auto g = random_connected(rng, n, 0.1);
        const auto bct = block_cut_tree(g);
        CHECK(oracle_components(bct.tree, kNoNode) == 1);
        CHECK(bct.tree.num_edges() == bct.tree.num_nodes() - 1);
        for (NodeId v = 0; v < n; ++v) {
            const int split = oracle_components(g, v);
            if (split > 1) {
                REQUIRE(bct.is_cut(bct.node_map[v]));
                CHECK(oracle_components(bct.tree, bct.node_map[v]) == split);
            }
        }
    }
}

TEST_CASE("cactus recognition") {
    CHECK(is_cactus(cycle_graph(4)));
    CHECK_FALSE(is_cactus(complete_graph(4)));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto lg = gen_random_cacap(1 + static_cast<int>(seed % 5), 6, 4, seed);
        CHECK(is_cactus(lg.graph));
    }
}

TEST_CASE("tree paths") {
    const Tree line(path_graph(3));
    CHECK(tree_path(line, 1, 1) == std::vector<NodeId>{1});
    CHECK(tree_path(line, 0, 2) == std::vector<NodeId>{0, 1, 2});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + uniform_below(rng, 30);
        const auto g = random_connected(rng, n, 0.0);
        const Tree t(g, uniform_below(rng, n));
        for (int q = 0; q < 10; ++q) {
            const NodeId u = uniform_below(rng, n), v = uniform_below(rng, n);
            CHECK(tree_path(t, u, v) == bfs_path(g, u, v));
        }
    }
}

TEST_CASE("Tree rejects non-trees") {
    CHECK_THROWS_AS(Tree(cycle_graph(4)), std::invalid_argument);
    UndirGraph two(2);
    CHECK_THROWS_AS(Tree{two}, std::invalid_argument);
}

}
