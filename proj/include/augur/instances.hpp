#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "augur/ca_instance.hpp"
#include "augur/steiner.hpp"

namespace augur {

/// Uniform integer in [0, n) from unit_uniform; stable across platforms.
int uniform_below(std::mt19937_64& rng, int n);

/// CA instance together with a known optimal tree.
struct TreeInstance {
    CaInstance instance;
    SteinerTree opt;
};

/// Steiner path s_1..s_t (ids 0..t-1), terminals r_i^(1), r_i^(2) at ids
/// t + 2(i-1) and t + 2(i-1) + 1. Throws std::invalid_argument for t < 2.
TreeInstance gen_path_family(int t);
/// Path length whose witness average is within eps of H(3).
int path_family_length(double eps);

/// Node ids of the five-layer tree (1-based layer indices).
struct FiveLayer {
    static constexpr NodeId root = 0;
    static constexpr NodeId x(int i) { return i; }
    static constexpr NodeId y(int i, int j) { return 10 + (i - 1) * 5 + (j - 1); }
    static constexpr NodeId z(int i, int j, int k) { return 55 + ((i - 1) * 5 + (j - 1)) * 4 + (k - 1); }
    static constexpr NodeId first_terminal = 235;
    static constexpr NodeId witness_root = 80;  // z(2,2,2)
};

TreeInstance gen_five_layer();

/// Rank per original Steiner id matching the lexicographic index order of
/// the fourth layer; other nodes rank after them.
std::vector<int> five_layer_leaf_rank();

struct TerminalProfile {
    double leaf_two = 0.5;       // leaves get 2 terminals w.p. leaf_two, else 1
    double internal_zero = 0.6;  // internal nodes: 0 / 1 / 2 terminals
    double internal_one = 0.3;
};

/// Uniform Pruefer tree on Steiner ids 0..n-1, terminals appended. The
/// instance graph is the tree itself, so the whole tree is the optimum.
TreeInstance gen_random_tree_instance(int n_steiner, std::uint64_t seed, const TerminalProfile& profile = {});

/// Every Steiner node carries a terminal. Several Pruefer trees are joined
/// through shared terminals (whose Steiner neighbours get a clique edge), so
/// the optimum has internal terminals and the graph is not a tree.
TreeInstance gen_random_leaf_adjacent(int n_steiner, std::uint64_t seed);

struct LinkedGraph {
    UndirGraph graph;
    LinkSet links;
};

/// Random tree with links; always feasible (a leaf cycle is kept until the
/// thinning proves it redundant).
LinkedGraph gen_random_block_tap(int n, int link_count, std::uint64_t seed);

/// Connected, not 2-node-connected graph on n >= 3 nodes with a feasible
/// link set of at most link_count links when possible (minimal feasible sets
/// larger than that are kept as they are).
LinkedGraph gen_random_one_node_cap(int n, int link_count, std::uint64_t seed);

/// Cactus from `cycles` glued cycles of length 3..max_len and a link set
/// that makes it 3-edge-connected.
LinkedGraph gen_random_cacap(int cycles, int max_len, int link_count, std::uint64_t seed);

}  // namespace augur
