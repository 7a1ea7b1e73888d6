#include <algorithm>
#include <random>

#include "augur/instances.hpp"
#include "augur/reductions.hpp"
#include "augur/rounding.hpp"
#include "augur/steiner.hpp"
#include "doctest.h"

using namespace augur;

namespace {

// checks kept after contraction: no terminal pair adjacent, cliqued neighbourhoods
bool contracted_clean(const CaInstance& inst) {
    const auto rep = validate_ca_instance(inst);
    return rep.terminal_adjacency.empty() && rep.non_clique.empty() && rep.structural.empty();
}

}  // namespace

TEST_SUITE("rounding") {

TEST_CASE("contracting a spanning component leaves one terminal") {
    const auto p = gen_path_family(2);
    const auto comps = enumerate_components(p.instance, 4);
    for (const auto& c : comps) {
        if (c.terminals.size() != 4) continue;
        const auto con = contract_component(p.instance, c);
        CHECK(con.instance.terminals().size() == 1);
        CHECK(con.instance.is_terminal(con.super_terminal));
        CHECK(con.removed_steiner == c.steiner);
    }
}

TEST_CASE("two-terminal component in a three-terminal instance") {
    // a - s1 - s2 - c, b on s1
    CaInstance inst;
    const NodeId a = inst.add_terminal(), b = inst.add_terminal(), c = inst.add_terminal();
    const NodeId s1 = inst.add_steiner(), s2 = inst.add_steiner();
    inst.graph.add_edge(a, s1);
    inst.graph.add_edge(b, s1);
    inst.graph.add_edge(s1, s2);
    inst.graph.add_edge(s2, c);
    Component comp;
    comp.terminals = {a, b};
    comp.sink = a;
    comp.steiner = {s1};
    comp.edges = {{a, s1}, {b, s1}};
    comp.cost = 1;
    const auto con = contract_component(inst, comp);
    CHECK(con.instance.terminals().size() == 2);
    CHECK(con.old_to_new[b] == con.super_terminal);
    CHECK(con.old_to_new[s1] == kNoNode);
    // s2 inherits the swallowed node's adjacency
    CHECK(con.instance.graph.has_edge(con.super_terminal, con.old_to_new[s2]));
    CHECK(contracted_clean(con.instance));

    Component bogus = comp;
    bogus.steiner = {a};
    CHECK_THROWS_AS(contract_component(inst, bogus), std::invalid_argument);
}

TEST_CASE("random contractions stay clean") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 25; ++trial) {
        auto inst = gen_random_leaf_adjacent(2 + uniform_below(rng, 8), rng()).instance;
        for (int step = 0; step < 3 && inst.terminals().size() > 1; ++step) {
            const auto comps = enumerate_components(inst, 3);
            REQUIRE_FALSE(comps.empty());
            const auto con = contract_component(inst, comps[uniform_below(rng, static_cast<int>(comps.size()))]);
            CHECK(con.instance.terminals().size() < inst.terminals().size());
            CHECK(contracted_clean(con.instance));
            inst = con.instance;
        }
    }
}

TEST_CASE("single Steiner node") {
    CaInstance inst;
    const NodeId a = inst.add_terminal(), s = inst.add_steiner(), b = inst.add_terminal();
    inst.graph.add_edge(a, s);
    inst.graph.add_edge(s, b);
    const auto r = iterative_rounding(inst, 2, 1);
    CHECK(r.steiner == std::vector<NodeId>{s});
    CHECK(r.log.size() == 1);
    CHECK(r.feasible);
    CHECK_THROWS_AS(iterative_rounding(inst, 1, 1), std::invalid_argument);
}

TEST_CASE("path family with k = 3") {
    const auto p = gen_path_family(3);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto r = iterative_rounding(p.instance, 3, seed);
        CHECK(r.feasible);
        CHECK(r.cost() >= 3);
        CHECK(r.log.size() <= p.instance.terminals().size() - 1);
        // same seed, same run
        CHECK(iterative_rounding(p.instance, 3, seed).steiner == r.steiner);
    }
}

TEST_CASE("1-Node-CAP pipelines lift to 2-node-connected graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto lg = gen_random_one_node_cap(5 + static_cast<int>(seed % 4), 6, seed);
        const auto red = one_node_cap_to_ca_steiner(lg.graph, lg.links);
        REQUIRE_FALSE(red.trivial);
        const auto r = iterative_rounding(red.instance, 4, seed);
        REQUIRE(r.feasible);
        CHECK(r.cost() >= brute_force_opt(red.instance).cost());
        const auto lifted = lift_solution(r.steiner, red.trace);
        CHECK(verify_augmentation(lg.graph, lifted, AugmentMode::node));
    }
}

TEST_CASE("iteration log as JSON lines") {
    const auto p = gen_path_family(2);
    const auto r = iterative_rounding(p.instance, 2, 3);
    const auto text = rounding_log_jsonl(r);
    CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == r.log.size());
    CHECK(text.find("\"component_terminals\"") != std::string::npos);
}

}
