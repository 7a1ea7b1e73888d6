#pragma once

#include <string>
#include <vector>

#include "augur/graph.hpp"
#include "augur/steiner.hpp"

namespace augur {

/// Injective map from internal nodes of a rooted regular binary tree to
/// leaves (kNoNode at leaves). The u -> f(u) paths are pairwise edge
/// disjoint and internally node disjoint. Children are taken in id order.
/// Throws std::invalid_argument for unrooted or non-regular trees.
std::vector<NodeId> leaf_map(const Tree& t);

/// Checks the three leaf-map properties; on failure `why` (if given)
/// receives a description.
bool leaf_map_valid(const Tree& t, const std::vector<NodeId>& f, std::string* why = nullptr);

/// Sum over nodes of degree >= 3 of (d(v) - 2), and the leaf count.
struct DegreeExcess {
    int excess = 0;
    int leaves = 0;
};
DegreeExcess degree_excess(const UndirGraph& tree);

struct RestrictedComponent {
    std::vector<NodeId> terminals;  // real terminals, sorted
    std::vector<NodeId> steiner;    // distinct original Steiner nodes, sorted
    std::vector<Edge> edges;        // contracted edges over original ids
    int cost = 0;
    int expanded_leaves = 0;        // leaves of the binary expansion, dummies included
};

struct RestrictedDecomposition {
    int m = 1;
    bool degenerate = false;  // at most 2^m terminals: one component per label
    int opt_cost = 0;
    std::vector<std::vector<RestrictedComponent>> trees;  // Q_0 .. Q_{m-1}
    std::vector<int> costs;
    int best = 0;
    int expanded_nodes = 0;
    /// Per non-root Steiner copy of the expansion: how often it is an
    /// intermediate leaf over all labels.
    std::vector<int> intermediate_hits;

    [[nodiscard]] int total_cost() const;
    [[nodiscard]] int best_cost() const { return costs.at(best); }
};

/// Builds the per-label k-restricted trees (k = 2^m) from a Steiner tree
/// whose leaves are exactly its terminals. Throws std::invalid_argument when
/// a Steiner node is a leaf or a terminal is internal.
RestrictedDecomposition k_restricted_decompose(const SteinerTree& opt, int m);

struct DecompositionAudit {
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Feasibility of every Q_j, the 2^m leaf limit, the single intermediate
/// leaf rule, and the cost bounds min_j <= (1 + 4/m) OPT and
/// sum_j <= (m + 4) OPT.
DecompositionAudit audit_decomposition(const SteinerTree& opt, const RestrictedDecomposition& d);

}  // namespace augur
