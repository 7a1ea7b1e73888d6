#include <queue>
#include <random>

#include "augur/instances.hpp"
#include "augur/reductions.hpp"
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

bool reach_all(int n, const std::vector<std::vector<NodeId>>& adj, NodeId skip) {
    const NodeId start = skip == 0 ? 1 : 0;
    std::vector<char> seen(n, 0);
    std::queue<NodeId> q;
    q.push(start);
    seen[start] = 1;
    int count = 1;
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop();
        for (NodeId w : adj[v])
            if (w != skip && !seen[w]) seen[w] = 1, ++count, q.push(w);
    }
    return count == n - (skip == kNoNode ? 0 : 1);
}

// brute force: connected after deleting any single node
bool oracle_2nc(const UndirGraph& g, const std::vector<Link>& extra) {
    const int n = g.num_nodes();
    std::vector<std::vector<NodeId>> adj(n);
    for (const Edge& e : g.edges()) adj[e.u].push_back(e.v), adj[e.v].push_back(e.u);
    for (const Link& l : extra) adj[l.u].push_back(l.v), adj[l.v].push_back(l.u);
    if (!reach_all(n, adj, kNoNode)) return false;
    for (NodeId v = 0; v < n; ++v)
        if (!reach_all(n, adj, v)) return false;
    return true;
}

// terminals connected inside terminals + chosen Steiner nodes, own BFS
bool oracle_connects(const CaInstance& inst, const std::vector<char>& chosen) {
    const auto terms = inst.terminals();
    if (terms.size() <= 1) return true;
    std::vector<char> seen(inst.num_nodes(), 0);
    std::queue<NodeId> q;
    q.push(terms[0]);
    seen[terms[0]] = 1;
    while (!q.empty()) {
        const NodeId v = q.front();
        q.pop();
        for (NodeId w : inst.graph.neighbors(v))
            if (!seen[w] && (inst.is_terminal(w) || chosen[w])) seen[w] = 1, q.push(w);
    }
    for (NodeId t : terms)
        if (!seen[t]) return false;
    return true;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("2-node-connected input is trivial") {
    const auto bt = one_node_cap_to_block_tap(cycle_graph(5), LinkSet({{0, 2}}));
    CHECK(bt.trivial);
    CHECK(bt.links.empty());
    const auto red = one_node_cap_to_ca_steiner(cycle_graph(5), LinkSet({{0, 2}}));
    CHECK(red.trivial);
}

TEST_CASE("path with its end link") {
    const auto bt = one_node_cap_to_block_tap(path_graph(3), LinkSet({{0, 2}}));
    REQUIRE_FALSE(bt.trivial);
    CHECK(bt.bct.tree.num_nodes() == 3);
    CHECK(bt.bct.num_cut_nodes() == 1);
    REQUIRE(bt.links.size() == 1);
    CHECK(bt.links.weights[0] == LinkWeight::one);
    const NodeId b1 = bt.bct.node_map[0], b2 = bt.bct.node_map[2];
    CHECK(bt.links.links[0] == Link(b1, b2));
    CHECK(bt.image_of == std::vector<int>{0});
}

TEST_CASE("star with all leaf-pair links") {
    UndirGraph star(4);
    for (int i = 1; i <= 3; ++i) star.add_edge(0, i);
    const auto red = block_tap_to_ca_steiner(Tree(star), LinkSet({{1, 2}, {1, 3}, {2, 3}}));
    const auto& inst = red.instance;
    CHECK(inst.terminals().size() == 3);
    const auto st = inst.steiner_nodes();
    REQUIRE(st.size() == 3);
    for (NodeId s : st) {
        int terms = 0;
        for (NodeId w : inst.graph.neighbors(s)) terms += inst.is_terminal(w);
        CHECK(terms == 2);
    }
    CHECK(inst.graph.has_edge(st[0], st[1]));
    CHECK(inst.graph.has_edge(st[0], st[2]));
    CHECK(inst.graph.has_edge(st[1], st[2]));
    CHECK(validate_ca_instance(inst).ok());
}

TEST_CASE("path tree with one spanning link") {
    const auto red = block_tap_to_ca_steiner(Tree(path_graph(4)), LinkSet({{0, 3}}));
    CHECK(red.instance.terminals().size() == 2);
    const auto st = red.instance.steiner_nodes();
    REQUIRE(st.size() == 1);
    for (NodeId t : red.instance.terminals()) CHECK(red.instance.graph.has_edge(t, st[0]));
    const auto lifted = lift_solution(st, red.trace);
    REQUIRE(lifted.size() == 1);
    CHECK(lifted.links[0] == Link(0, 3));
    CHECK(lift_solution({}, red.trace).empty());
    CHECK_THROWS_AS(lift_solution(red.instance.terminals(), red.trace), std::out_of_range);
}

TEST_CASE("cactus crossing") {
    const auto diag = cacap_to_ca_steiner(cycle_graph(4), LinkSet({{0, 2}, {1, 3}}));
    CHECK(diag.instance.terminals().size() == 4);
    const auto ds = diag.instance.steiner_nodes();
    REQUIRE(ds.size() == 2);
    CHECK(diag.instance.graph.has_edge(ds[0], ds[1]));

    // chords on disjoint arcs of C6
    const auto par = cacap_to_ca_steiner(cycle_graph(6), LinkSet({{0, 2}, {3, 5}}));
    const auto ps = par.instance.steiner_nodes();
    REQUIRE(ps.size() == 2);
    CHECK_FALSE(par.instance.graph.has_edge(ps[0], ps[1]));

    CHECK_THROWS_AS(cacap_to_ca_steiner(path_graph(4), LinkSet({{0, 3}})), std::invalid_argument);
}

TEST_CASE("validation report") {
    CaInstance bad;
    const NodeId a = bad.add_terminal(), b = bad.add_terminal();
    bad.graph.add_edge(a, b);
    CHECK_FALSE(validate_ca_instance(bad).terminal_adjacency.empty());

    CaInstance three;
    const NodeId s = three.add_steiner();
    for (int i = 0; i < 3; ++i) three.graph.add_edge(s, three.add_terminal());
    CHECK_FALSE(validate_ca_instance(three).steiner_overload.empty());

    CaInstance open;
    const NodeId t = open.add_terminal(), s1 = open.add_steiner(), s2 = open.add_steiner();
    open.graph.add_edge(t, s1);
    open.graph.add_edge(t, s2);
    CHECK_FALSE(validate_ca_instance(open).non_clique.empty());
    open.graph.add_edge(s1, s2);
    CHECK(validate_ca_instance(open).ok());
}

TEST_CASE("augmentation check") {
    CHECK(verify_augmentation(path_graph(4), LinkSet({{0, 3}}), AugmentMode::node));
    CHECK_FALSE(verify_augmentation(path_graph(4), LinkSet{}, AugmentMode::node));
    CHECK_FALSE(verify_augmentation(cycle_graph(4), LinkSet{}, AugmentMode::edge));
    CHECK(verify_augmentation(cycle_graph(4), LinkSet({{0, 2}, {1, 3}}), AugmentMode::edge));
}

TEST_CASE("1-Node-CAP equivalence over link subsets") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto lg = gen_random_one_node_cap(4 + static_cast<int>(seed % 5), 6, seed);
        if (lg.links.size() > 8) continue;
        const auto red = one_node_cap_to_ca_steiner(lg.graph, lg.links);
        REQUIRE_FALSE(red.trivial);
        CHECK(validate_ca_instance(red.instance).ok());
        const int m = static_cast<int>(lg.links.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<Link> pick;
            std::vector<int> idx;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) pick.push_back(lg.links.links[i]), idx.push_back(i);
            std::vector<char> chosen(red.instance.num_nodes(), 0);
            for (NodeId s : forward_image(idx, red.trace)) chosen[s] = 1;
            CHECK(oracle_2nc(lg.graph, pick) == oracle_connects(red.instance, chosen));
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("lifted rounding-free solutions") {
    // the image of all links lifts back to a feasible set
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto lg = gen_random_one_node_cap(6, 6, seed);
        const auto red = one_node_cap_to_ca_steiner(lg.graph, lg.links);
        const auto lifted = lift_solution(red.instance.steiner_nodes(), red.trace);
        CHECK(verify_augmentation(lg.graph, lifted, AugmentMode::node));
    }
}

}
