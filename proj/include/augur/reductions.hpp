#pragma once

#include <optional>
#include <span>
#include <vector>

#include "augur/ca_instance.hpp"
#include "augur/graph.hpp"

namespace augur {

/// Weighted Block-TAP produced from a 1-Node-CAP instance.
struct BlockTapInstance {
    /// The base graph was already 2-node-connected; nothing else is filled.
    bool trivial = false;
    BlockCutTree bct;
    /// Weight-1 images f_G(L) first (one entry per distinct non-loop image),
    /// then the weight-0 links L_0 between cut nodes sharing a block.
    LinkSet links;
    /// Per original link: index into `links`, or -1 when both endpoints map
    /// to the same block-cut node.
    std::vector<int> image_of;
    /// Per entry of `links`: the representative original link (the
    /// lexicographically smallest preimage), -1 for L_0 entries.
    std::vector<int> representative;
};

/// Back-mapping from a CA instance to the link set it was derived from.
struct ReductionTrace {
    LinkSet original;
    /// Per CA node: index into `original` for Steiner nodes, -1 for terminals.
    std::vector<int> steiner_link;
    /// Per original link: the CA Steiner node that represents it, or kNoNode.
    std::vector<NodeId> link_steiner;
    /// Present for the 1-Node-CAP pipeline.
    std::optional<BlockTapInstance> block_tap;
};

struct CaReduction {
    bool trivial = false;
    CaInstance instance;
    ReductionTrace trace;
};

/// Throws std::invalid_argument for disconnected input.
BlockTapInstance one_node_cap_to_block_tap(const UndirGraph& g, const LinkSet& links);

/// Reduced (L, E_T)-incidence graph: terminals are the leaf edges of `t`,
/// Steiner nodes the weight-1 links. The trace maps Steiner nodes back to
/// indices of `links`. Throws std::logic_error if the output violates a
/// CA property.
CaReduction block_tap_to_ca_steiner(const Tree& t, const LinkSet& links);

/// Full 1-Node-CAP pipeline; the trace refers to the original links.
CaReduction one_node_cap_to_ca_steiner(const UndirGraph& g, const LinkSet& links);

/// Cactus augmentation: terminals are the degree-2 nodes, Steiner nodes the
/// links, two links adjacent when some projections cross (a shared
/// projection endpoint counts across cycles). Throws
/// std::invalid_argument for non-cactus input or loop links.
CaReduction cacap_to_ca_steiner(const UndirGraph& cactus, const LinkSet& links);

/// Projection of a cactus link onto one cycle.
struct Projection {
    int cycle = -1;  // block index in block_cut_tree(cactus)
    NodeId a = kNoNode;
    NodeId b = kNoNode;
};
std::vector<Projection> link_projections(const UndirGraph& cactus, const BlockCutTree& bct, Link link);

/// Maps chosen Steiner nodes back to original links (same cardinality).
/// Throws std::out_of_range for ids without a preimage.
LinkSet lift_solution(std::span<const NodeId> steiner_nodes, const ReductionTrace& trace);

/// Steiner nodes standing for the given original link indices (links with
/// no CA counterpart are skipped).
std::vector<NodeId> forward_image(std::span<const int> link_indices, const ReductionTrace& trace);

enum class AugmentMode {
    node,  // G + L' must be 2-node-connected
    edge,  // G + L' must be 3-edge-connected (cactus augmentation)
};

bool verify_augmentation(const UndirGraph& g, const LinkSet& links, AugmentMode mode);

/// k-edge-connectivity test for a multigraph given by an edge list, k <= 3.
bool is_k_edge_connected(int n, std::span<const Edge> edges, int k);

}  // namespace augur
