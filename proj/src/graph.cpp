#include "augur/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace augur {

UndirGraph::UndirGraph(int n) : adj_(n), labels_(n) {
    for (int v = 0; v < n; ++v) labels_[v] = std::to_string(v);
}

NodeId UndirGraph::add_node(std::string label) {
    const NodeId id = num_nodes();
    adj_.emplace_back();
    labels_.push_back(label.empty() ? std::to_string(id) : std::move(label));
    return id;
}

bool UndirGraph::add_edge(NodeId u, NodeId v) {
    if (!contains(u) || !contains(v)) throw std::out_of_range("add_edge: unknown node");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

bool UndirGraph::remove_edge(NodeId u, NodeId v) {
    if (!has_edge(u, v)) return false;
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --edge_count_;
    return true;
}

bool UndirGraph::has_edge(NodeId u, NodeId v) const {
    if (!contains(u) || !contains(v)) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> UndirGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < num_nodes(); ++u)
        for (NodeId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Tree::Tree(UndirGraph graph, std::optional<NodeId> root)
    : graph_(std::move(graph)), root_(root) {
    const int n = graph_.num_nodes();
    if (n == 0) throw std::invalid_argument("Tree: empty graph");
    if (graph_.num_edges() != n - 1) throw std::invalid_argument("Tree: |E| != |V| - 1");
    const NodeId start = root.value_or(0);
    if (!graph_.contains(start)) throw std::out_of_range("Tree: root not in graph");
    parent_.assign(n, kNoNode);
    depth_.assign(n, -1);
    std::deque<NodeId> queue{start};
    depth_[start] = 0;
    int seen = 1;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : graph_.neighbors(v)) {
            if (depth_[w] >= 0) continue;
            depth_[w] = depth_[v] + 1;
            parent_[w] = v;
            ++seen;
            queue.push_back(w);
        }
    }
    if (seen != n) throw std::invalid_argument("Tree: graph is not connected");
}

std::vector<NodeId> Tree::children(NodeId v) const {
    std::vector<NodeId> out;
    for (NodeId w : graph_.neighbors(v))
        if (parent_[w] == v) out.push_back(w);
    return out;
}

std::vector<NodeId> tree_path(const Tree& t, NodeId u, NodeId v) {
    if (!t.graph().contains(u) || !t.graph().contains(v))
        throw std::out_of_range("tree_path: unknown node");
    std::vector<NodeId> front;
    std::vector<NodeId> back;
    while (t.depth(u) > t.depth(v)) {
        front.push_back(u);
        u = t.parent(u);
    }
    while (t.depth(v) > t.depth(u)) {
        back.push_back(v);
        v = t.parent(v);
    }
    while (u != v) {
        front.push_back(u);
        back.push_back(v);
        u = t.parent(u);
        v = t.parent(v);
    }
    front.push_back(u);
    front.insert(front.end(), back.rbegin(), back.rend());
    return front;
}

int count_components(const UndirGraph& g, std::span<const char> removed) {
    const int n = g.num_nodes();
    auto is_removed = [&](NodeId v) { return !removed.empty() && removed[v]; };
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack;
    int components = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s] || is_removed(s)) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(v)) {
                if (seen[w] || is_removed(w)) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return components;
}

bool is_connected(const UndirGraph& g) { return g.num_nodes() > 0 && count_components(g) == 1; }

std::vector<std::vector<NodeId>> biconnected_blocks(const UndirGraph& g) {
    const int n = g.num_nodes();
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<std::vector<NodeId>> blocks;
    std::vector<Edge> edge_stack;
    struct Frame {
        NodeId v;
        NodeId parent;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int timer = 0;

    for (NodeId s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        disc[s] = low[s] = timer++;
        if (g.degree(s) == 0) {
            blocks.push_back({s});
            continue;
        }
        frames.push_back({s, kNoNode, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const NodeId v = f.v;
            const auto& nbrs = g.neighbors(v);
            if (f.next < nbrs.size()) {
                const NodeId w = nbrs[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, v, 0});
                } else if (w != f.parent && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const NodeId p = f.parent;
            frames.pop_back();
            if (p == kNoNode) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<NodeId> block;
                const Edge stop(p, v);
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.u);
                    block.push_back(e.v);
                    if (e == stop) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                blocks.push_back(std::move(block));
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<NodeId> cut_nodes(const UndirGraph& g) {
    std::vector<int> occurrences(g.num_nodes(), 0);
    for (const auto& block : biconnected_blocks(g))
        for (NodeId v : block) ++occurrences[v];
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (occurrences[v] >= 2) out.push_back(v);
    return out;
}

bool is_two_node_connected(const UndirGraph& g) {
    if (g.num_nodes() < 3) return false;
    return is_connected(g) && cut_nodes(g).empty();
}

int BlockCutTree::num_cut_nodes() const {
    return static_cast<int>(std::count(kind.begin(), kind.end(), Kind::cut));
}

BlockCutTree block_cut_tree(const UndirGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("block_cut_tree: graph is not connected");
    const auto blocks = biconnected_blocks(g);
    std::vector<int> occurrences(g.num_nodes(), 0);
    for (const auto& block : blocks)
        for (NodeId v : block) ++occurrences[v];

    BlockCutTree out;
    out.node_map.assign(g.num_nodes(), kNoNode);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (occurrences[v] < 2) continue;
        const NodeId x = out.tree.add_node("c:" + g.label(v));
        out.kind.push_back(BlockCutTree::Kind::cut);
        out.cut_vertex.push_back(v);
        out.members.emplace_back();
        out.node_map[v] = x;
    }
    for (const auto& block : blocks) {
        std::string label = "B{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) label += ',';
            label += g.label(block[i]);
        }
        label += '}';
        const NodeId x = out.tree.add_node(std::move(label));
        out.kind.push_back(BlockCutTree::Kind::block);
        out.cut_vertex.push_back(kNoNode);
        out.members.push_back(block);
        for (NodeId v : block) {
            if (occurrences[v] >= 2)
                out.tree.add_edge(out.node_map[v], x);
            else
                out.node_map[v] = x;
        }
    }
    return out;
}

bool is_cactus(const UndirGraph& g) {
    if (!is_connected(g)) return false;
    if (g.num_nodes() == 1) return true;
    std::vector<char> in_block(g.num_nodes(), 0);
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() < 3) return false;
        for (NodeId v : block) in_block[v] = 1;
        int inner_edges = 0;
        for (NodeId v : block)
            for (NodeId w : g.neighbors(v))
                if (v < w && in_block[w]) ++inner_edges;
        for (NodeId v : block) in_block[v] = 0;
        if (inner_edges != static_cast<int>(block.size())) return false;
    }
    return true;
}

}  // namespace augur
