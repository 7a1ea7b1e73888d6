#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace augur {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

/// Unordered pair stored with u < v.
struct Edge {
    NodeId u = kNoNode;
    NodeId v = kNoNode;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph over dense ids 0..n-1. Adjacency lists are kept
/// sorted; self-loops are rejected and parallel edges ignored.
class UndirGraph {
public:
    UndirGraph() = default;
    explicit UndirGraph(int n);

    NodeId add_node(std::string label = {});
    /// Returns false when the edge already exists. Throws on self-loops or
    /// out-of-range ids.
    bool add_edge(NodeId u, NodeId v);
    bool remove_edge(NodeId u, NodeId v);

    [[nodiscard]] int num_nodes() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int num_edges() const { return edge_count_; }
    [[nodiscard]] const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(v); }
    [[nodiscard]] int degree(NodeId v) const { return static_cast<int>(adj_.at(v).size()); }
    [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;
    [[nodiscard]] bool contains(NodeId v) const { return v >= 0 && v < num_nodes(); }
    /// All edges in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] const std::string& label(NodeId v) const { return labels_.at(v); }
    void set_label(NodeId v, std::string label) { labels_.at(v) = std::move(label); }

private:
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

/// A spanning tree over the nodes of its graph, optionally rooted.
class Tree {
public:
    /// Throws std::invalid_argument unless `graph` is connected with
    /// |E| = |V| - 1. `root` defaults to node 0 for path queries.
    explicit Tree(UndirGraph graph, std::optional<NodeId> root = std::nullopt);

    [[nodiscard]] const UndirGraph& graph() const { return graph_; }
    [[nodiscard]] int num_nodes() const { return graph_.num_nodes(); }
    [[nodiscard]] std::optional<NodeId> root() const { return root_; }
    /// Parent with respect to the root (or node 0 when unrooted); kNoNode at the root.
    [[nodiscard]] NodeId parent(NodeId v) const { return parent_.at(v); }
    [[nodiscard]] int depth(NodeId v) const { return depth_.at(v); }
    /// Children sorted by id.
    [[nodiscard]] std::vector<NodeId> children(NodeId v) const;

private:
    UndirGraph graph_;
    std::optional<NodeId> root_;
    std::vector<NodeId> parent_;
    std::vector<int> depth_;
};

/// Unique u..v node sequence, endpoints included. Throws std::out_of_range
/// for unknown ids.
std::vector<NodeId> tree_path(const Tree& t, NodeId u, NodeId v);

/// Number of connected components after deleting the nodes flagged in
/// `removed` (may be empty).
int count_components(const UndirGraph& g, std::span<const char> removed = {});
bool is_connected(const UndirGraph& g);

/// Sorted articulation points of g.
std::vector<NodeId> cut_nodes(const UndirGraph& g);

/// Node sets of the biconnected components (blocks) of g; each set sorted,
/// the list sorted lexicographically. Isolated nodes form singleton blocks.
std::vector<std::vector<NodeId>> biconnected_blocks(const UndirGraph& g);

/// Graphs with fewer than three nodes are reported as not 2-node-connected.
bool is_two_node_connected(const UndirGraph& g);

struct BlockCutTree {
    enum class Kind { cut, block };

    UndirGraph tree;
    std::vector<Kind> kind;
    /// Original id for cut nodes, kNoNode for blocks.
    std::vector<NodeId> cut_vertex;
    /// Sorted member set for blocks, empty for cut nodes.
    std::vector<std::vector<NodeId>> members;
    /// f_G: original node -> block-cut node.
    std::vector<NodeId> node_map;

    [[nodiscard]] int num_cut_nodes() const;
    [[nodiscard]] bool is_cut(NodeId x) const { return kind.at(x) == Kind::cut; }
};

/// Cut nodes come first (ascending original id), then blocks in
/// lexicographic order of their member sets. Throws std::invalid_argument on
/// disconnected input.
BlockCutTree block_cut_tree(const UndirGraph& g);

/// Connected and every edge lies on exactly one simple cycle.
bool is_cactus(const UndirGraph& g);

}  // namespace augur
