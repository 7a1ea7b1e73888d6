#include <map>
#include <random>

#include "augur/instances.hpp"
#include "augur/io.hpp"
#include "augur/reductions.hpp"
#include "augur/steiner.hpp"
#include "doctest.h"

using namespace augur;

TEST_SUITE("instances") {

TEST_CASE("path family shape") {
    const auto p2 = gen_path_family(2);
    CHECK(p2.instance.steiner_nodes().size() == 2);
    CHECK(p2.instance.terminals().size() == 4);
    for (int t : {2, 3, 9}) {
        const auto p = gen_path_family(t);
        CHECK(validate_ca_instance(p.instance).ok());
        CHECK(is_valid_steiner_tree(p.instance, p.opt));
        CHECK(p.opt.cost() == t);
        for (NodeId r : p.instance.terminals()) CHECK(p.instance.graph.degree(r) == 1);
    }
    CHECK(path_family_length(0.1) == 8);
    CHECK(path_family_length(1.0) == 2);
    CHECK_THROWS_AS(gen_path_family(1), std::invalid_argument);
}

TEST_CASE("five-layer shape") {
    const auto fl = gen_five_layer();
    const auto& g = fl.instance.graph;
    CHECK(fl.instance.steiner_nodes().size() == 235);
    CHECK(fl.instance.terminals().size() == 360);
    CHECK(g.num_edges() == 235 + 360 - 1);
    CHECK(validate_ca_instance(fl.instance).ok());
    CHECK(g.degree(FiveLayer::root) == 9);
    for (int i = 1; i <= 9; ++i) CHECK(g.degree(FiveLayer::x(i)) == 6);  // parent + 5 children
    CHECK(g.degree(FiveLayer::y(1, 1)) == 5);                              // parent + 4 children
    for (NodeId z = FiveLayer::z(1, 1, 1); z <= FiveLayer::z(9, 5, 4); ++z) {
        int terms = 0;
        for (NodeId w : g.neighbors(z)) terms += fl.instance.is_terminal(w);
        CHECK(terms == 2);
    }
    CHECK(FiveLayer::witness_root == FiveLayer::z(2, 2, 2));
}

TEST_CASE("random tree instances") {
    const auto one = gen_random_tree_instance(1, 5);
    CHECK(one.instance.steiner_nodes().size() == 1);
    CHECK(one.instance.terminals().size() == 2);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + uniform_below(rng, 9);
        const auto ti = gen_random_tree_instance(n, rng());
        CHECK(validate_ca_instance(ti.instance).ok());
        CHECK(is_valid_steiner_tree(ti.instance, ti.opt));
        CHECK(ti.opt.cost() == n);
        CHECK(brute_force_opt(ti.instance).cost() == n);
    }
}

TEST_CASE("leaf-adjacent instances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto ti = gen_random_leaf_adjacent(1 + static_cast<int>(seed % 25), seed);
        CHECK(validate_ca_instance(ti.instance).ok());
        CHECK(is_valid_steiner_tree(ti.instance, ti.opt));
        std::map<NodeId, int> terms;
        for (const Edge& e : ti.opt.edges) {
            if (ti.instance.is_terminal(e.u)) ++terms[e.v];
            if (ti.instance.is_terminal(e.v)) ++terms[e.u];
        }
        for (NodeId s : ti.opt.steiner) CHECK(terms[s] >= 1);
    }
}

TEST_CASE("linked generators are feasible") {
    UndirGraph star(4);
    for (int i = 1; i <= 3; ++i) star.add_edge(0, i);
    CHECK(verify_augmentation(star, LinkSet({{1, 2}, {2, 3}, {3, 1}}), AugmentMode::node));
    UndirGraph c4(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK(verify_augmentation(c4, LinkSet({{0, 2}}), AugmentMode::edge) == false);
    CHECK(verify_augmentation(c4, LinkSet({{0, 2}, {1, 3}}), AugmentMode::edge));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto one = gen_random_one_node_cap(3 + static_cast<int>(seed % 8), 8, seed);
        CHECK_FALSE(is_two_node_connected(one.graph));
        CHECK(verify_augmentation(one.graph, one.links, AugmentMode::node));
        const auto cac = gen_random_cacap(1 + static_cast<int>(seed % 4), 5, 6, seed);
        CHECK(is_cactus(cac.graph));
        CHECK(verify_augmentation(cac.graph, cac.links, AugmentMode::edge));
        const auto bt = gen_random_block_tap(3 + static_cast<int>(seed % 8), 6, seed);
        CHECK(bt.graph.num_edges() == bt.graph.num_nodes() - 1);
        CHECK(verify_augmentation(bt.graph, bt.links, AugmentMode::node));
    }
}

TEST_CASE("generators are bit-stable") {
    CHECK(dump_instance(file_from_tree_instance(gen_random_tree_instance(50, 7))) ==
          dump_instance(file_from_tree_instance(gen_random_tree_instance(50, 7))));
    CHECK(dump_instance(file_from_tree_instance(gen_random_tree_instance(50, 7))) !=
          dump_instance(file_from_tree_instance(gen_random_tree_instance(50, 8))));
    CHECK(dump_instance(file_from_linked(InstanceKind::cacap, gen_random_cacap(4, 6, 5, 3))) ==
          dump_instance(file_from_linked(InstanceKind::cacap, gen_random_cacap(4, 6, 5, 3))));
    CHECK(dump_instance(file_from_linked(InstanceKind::one_node_cap, gen_random_one_node_cap(9, 6, 3))) ==
          dump_instance(file_from_linked(InstanceKind::one_node_cap, gen_random_one_node_cap(9, 6, 3))));
}

}
