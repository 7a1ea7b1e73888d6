#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augur/rational.hpp"
#include "augur/steiner.hpp"

namespace augur {

/// T[S*] with local ids 0..|S*|-1 (ascending original id).
struct StrippedTree {
    UndirGraph tree;
    std::vector<NodeId> original;               // local -> original Steiner id
    std::vector<char> is_final;                 // adjacent to a terminal of t
    std::vector<std::vector<NodeId>> adjacent;  // terminals of t at each node, sorted
    std::vector<NodeId> rep;                    // smallest adjacent terminal or kNoNode

    [[nodiscard]] int size() const { return tree.num_nodes(); }
    /// Throws std::out_of_range for non-members.
    [[nodiscard]] int local(NodeId original_id) const;
};

/// Requires every terminal of t to be a leaf. Throws std::invalid_argument
/// for isolated or internal terminals, or if t is not a tree.
StrippedTree strip_terminals(const SteinerTree& t);

/// Makes every terminal a leaf: a terminal with neighbours s1 < ... < sd in
/// the tree keeps (t, s1) and the others are re-attached to s1, which is an
/// instance edge because terminal neighbourhoods are cliques.
SteinerTree normalize_terminal_leaves(const CaInstance& inst, SteinerTree t);

/// For every Steiner node without a tree-adjacent terminal: add (s, r) for
/// its smallest instance-adjacent terminal r and drop the tree edge at s on
/// the s..r path. Throws std::invalid_argument if some Steiner node of t has
/// no terminal neighbour in the instance.
SteinerTree normalize_leaf_adjacent(const CaInstance& inst, SteinerTree t);

/// One final-component. Node 0 is the root; nodes refer to local ids of the
/// stripped tree. The root of one component is a leaf of an earlier one.
struct FinalComponent {
    std::vector<int> node;                   // component index -> stripped local id
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // component indices, ascending local id

    [[nodiscard]] int size() const { return static_cast<int>(node.size()); }
    [[nodiscard]] bool is_leaf(int i) const { return i != 0 && children[i].empty(); }
};

struct FinalComponentSet {
    int root = -1;  // stripped local id of the global root, -1 for a single node
    std::vector<FinalComponent> components;
};

/// Roots the tree at `root` (default: final leaf with the smallest original
/// id) and cuts it at every final node.
FinalComponentSet decompose_final_components(const StrippedTree& st, std::optional<int> root = std::nullopt);

struct ComponentWitness {
    std::vector<int> l;                  // per component index: component index of l(u)
    std::vector<int> marked;             // child whose path P(u) continues, -1 on finals
    std::vector<std::vector<int>> path;  // P(u) as component indices, u first
    std::vector<Edge> edges;             // over component indices
};

/// `rank` orders the stripped local ids for tie-breaking (smaller first).
ComponentWitness build_witness_component(const FinalComponent& c, const std::vector<int>& rank);

struct WitnessTree {
    StrippedTree stripped;
    FinalComponentSet components;
    std::vector<ComponentWitness> fragments;
    std::vector<Edge> final_edges;     // original Steiner ids
    std::vector<Edge> terminal_edges;  // lifted, original terminal ids
};

struct WitnessOptions {
    std::optional<NodeId> root;  // original id of a final leaf
    /// Optional rank per original Steiner id for the leaf order.
    std::vector<int> leaf_rank;
};

WitnessTree build_witness(const SteinerTree& t, const WitnessOptions& options = {});

struct WVector {
    std::vector<NodeId> node;  // original Steiner ids, ascending
    std::vector<int> w;
    bool final_bonus = false;  // +1 on final nodes applied
};

/// Final-node form: nodes of the stripped tree path of each witness edge,
/// endpoints included, plus one for every final node.
WVector w_vector_final(const StrippedTree& st, const std::vector<Edge>& final_edges);

/// Terminal form: Steiner nodes on the tree path of each witness edge.
WVector w_vector_terminal(const SteinerTree& t, const std::vector<Edge>& terminal_edges);

/// H(0) is taken as 0. Throws std::invalid_argument on an empty vector.
Rational h_average(const WVector& wv);

/// H(n) with H(0) = 0.
Rational harmonic0(int n);

struct InvariantAudit {
    std::string bound_name;
    int components = 0;
    int subtrees = 0;
    std::vector<std::string> failures;
    Rational worst_slack;  // min over subtrees of rhs - lhs
    std::vector<Rational> prefix_averages;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

inline const Rational kWitnessDelta{7, 120};
inline const Rational kWitnessGamma{18917, 10000};

/// Checks, for every final-component: the subtree inequality for every node
/// u != root, the increase relations for nodes with children, greedy-path
/// dominance, and that the running H-average over merged components stays
/// below gamma.
InvariantAudit check_invariant_lemma(const WitnessTree& w, const Rational& gamma = kWitnessGamma,
                                     const Rational& delta = kWitnessDelta);

/// Requires every Steiner node of t to have a terminal neighbour in t.
/// Throws std::invalid_argument otherwise.
std::vector<Edge> tree_following_witness(const SteinerTree& t);

/// H-average (final-node form) of the union of the first i components
/// with their fragments, for i = 1..tau. A single-node tree gives [1].
std::vector<Rational> prefix_averages(const WitnessTree& w);

inline constexpr int kGammaBruteCap = 8;

struct GammaOptimum {
    Rational value;
    std::vector<Edge> witness;  // over terminals
    long long trees = 0;
};

/// Minimum H-average (terminal form) over all spanning trees on R.
/// Throws CapExceeded for |R| > cap.
GammaOptimum brute_force_gamma(const SteinerTree& t, int cap = kGammaBruteCap);

struct GammaReport {
    std::string mode;
    Rational h_average;
    WVector wv;
    Rational bound;
    bool strict = true;  // below bound required strictly
    bool within_bound = false;
    std::vector<Edge> witness;
    std::optional<InvariantAudit> audit;
};

std::string gamma_report_json(const GammaReport& r);
std::string gamma_report_csv(const GammaReport& r);

}  // namespace augur
