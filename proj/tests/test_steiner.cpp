#include <queue>
#include <random>

#include "augur/instances.hpp"
#include "augur/steiner.hpp"
#include "doctest.h"

using namespace augur;

namespace {

bool connects(const CaInstance& inst, const std::vector<char>& chosen, const std::vector<NodeId>& terms) {
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

// cheapest Steiner subset by plain enumeration
int subset_oracle(const CaInstance& inst) {
    const auto st = inst.steiner_nodes();
    const auto terms = inst.terminals();
    const int m = static_cast<int>(st.size());
    int best = -1;
    for (int mask = 0; mask < (1 << m); ++mask) {
        const int c = __builtin_popcount(mask);
        if (best >= 0 && c >= best) continue;
        std::vector<char> chosen(inst.num_nodes(), 0);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) chosen[st[i]] = 1;
        if (connects(inst, chosen, terms)) best = c;
    }
    return best;
}

// random CA instance: connected Steiner graph, 0-2 private terminals each
CaInstance random_ca(std::mt19937_64& rng, int steiner, double p) {
    CaInstance inst;
    for (int i = 0; i < steiner; ++i) inst.add_steiner();
    for (int v = 1; v < steiner; ++v) inst.graph.add_edge(v, uniform_below(rng, v));
    std::bernoulli_distribution extra(p);
    for (int u = 0; u < steiner; ++u)
        for (int v = u + 1; v < steiner; ++v)
            if (extra(rng)) inst.graph.add_edge(u, v);
    for (int s = 0; s < steiner; ++s) {
        const int k = uniform_below(rng, 3);
        for (int j = 0; j < k; ++j) inst.graph.add_edge(s, inst.add_terminal());
    }
    return inst;
}

}  // namespace

TEST_SUITE("steiner") {

TEST_CASE("shared Steiner node") {
    CaInstance inst;
    const NodeId a = inst.add_terminal(), s = inst.add_steiner(), b = inst.add_terminal();
    inst.graph.add_edge(a, s);
    inst.graph.add_edge(s, b);
    const auto t = exact_steiner(inst, inst.terminals());
    CHECK(t.cost() == 1);
    CHECK(t.steiner == std::vector<NodeId>{s});
    CHECK(is_valid_steiner_tree(inst, t));
}

TEST_CASE("tree instance is its own optimum") {
    const auto ti = gen_path_family(4);
    const auto t = brute_force_opt(ti.instance);
    CHECK(t.cost() == 4);
    CHECK(t.steiner == ti.instance.steiner_nodes());
    CHECK(exact_steiner(ti.instance, ti.instance.terminals()).cost() == 4);
}

TEST_CASE("redundant Steiner node is skipped") {
    // a - s1 - b with a spare s2 hanging off s1
    CaInstance inst;
    const NodeId a = inst.add_terminal(), b = inst.add_terminal();
    const NodeId s1 = inst.add_steiner(), s2 = inst.add_steiner();
    inst.graph.add_edge(a, s1);
    inst.graph.add_edge(b, s1);
    inst.graph.add_edge(s1, s2);
    const auto t = brute_force_opt(inst);
    CHECK(t.steiner == std::vector<NodeId>{s1});
}

TEST_CASE("exact and brute force against subset enumeration") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = random_ca(rng, 2 + uniform_below(rng, 6), 0.3);
        if (inst.num_nodes() > 14 || inst.terminals().size() < 2 || inst.terminals().size() > 8) continue;
        const int want = subset_oracle(inst);
        const auto bf = brute_force_opt(inst);
        CHECK(bf.cost() == want);
        CHECK(is_valid_steiner_tree(inst, bf));
        CHECK(2 * bf.cost() >= static_cast<int>(inst.terminals().size()));
        CHECK(exact_steiner(inst, inst.terminals()).cost() == want);
    }
}

TEST_CASE("infeasible and oversized inputs throw") {
    CaInstance inst;
    inst.add_terminal();
    inst.add_terminal();
    CHECK_THROWS_AS(exact_steiner(inst, inst.terminals()), InfeasibleError);
    const auto big = gen_path_family(12);
    CHECK_THROWS_AS(exact_steiner(big.instance, big.instance.terminals()), CapExceeded);
}

TEST_CASE("component enumeration counts") {
    CaInstance two;
    const NodeId a = two.add_terminal(), s = two.add_steiner(), b = two.add_terminal();
    two.graph.add_edge(a, s);
    two.graph.add_edge(s, b);
    const auto c2 = enumerate_components(two, 2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].sink != c2[1].sink);

    const auto p = gen_path_family(2);  // 4 terminals
    const auto c4 = enumerate_components(p.instance, 2);
    CHECK(c4.size() <= 12);
    CHECK(c4.size() == 12);  // every pair is connectable here
}

TEST_CASE("path-family components re-solve to the same cost") {
    const auto p = gen_path_family(3);
    const auto comps = enumerate_components(p.instance, 3);
    CHECK_FALSE(comps.empty());
    for (const auto& c : comps) {
        CHECK(c.terminals.size() >= 2);
        CHECK(c.terminals.size() <= 3);
        CHECK(c.has_terminal(c.sink));
        CHECK(exact_steiner(p.instance, c.terminals).cost() == c.cost);
        CHECK(static_cast<int>(c.steiner.size()) == c.cost);
    }
}

}
