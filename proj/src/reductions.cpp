#include "augur/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace augur {

BlockTapInstance one_node_cap_to_block_tap(const UndirGraph& g, const LinkSet& links) {
    if (!is_connected(g)) throw std::invalid_argument("one_node_cap_to_block_tap: graph is not connected");
    BlockTapInstance out;
    if (is_two_node_connected(g)) {
        out.trivial = true;
        out.image_of.assign(links.size(), -1);
        return out;
    }
    out.bct = block_cut_tree(g);
    const auto& map = out.bct.node_map;

    // Group original links by image; the representative is the
    // lexicographically smallest preimage.
    std::map<Link, std::vector<int>> by_image;
    for (std::size_t i = 0; i < links.size(); ++i) {
        const Link& l = links.links[i];
        if (!g.contains(l.u) || !g.contains(l.v)) throw std::out_of_range("link endpoint not in graph");
        const NodeId a = map[l.u];
        const NodeId b = map[l.v];
        if (a == b) continue;
        by_image[Link(a, b)].push_back(static_cast<int>(i));
    }
    out.image_of.assign(links.size(), -1);
    for (const auto& [image, preimages] : by_image) {
        const int rep = *std::min_element(preimages.begin(), preimages.end(), [&](int x, int y) {
            return links.links[x] < links.links[y];
        });
        const int idx = static_cast<int>(out.links.size());
        out.links.add(image, LinkWeight::one);
        out.representative.push_back(rep);
        for (int i : preimages) out.image_of[i] = idx;
    }
    for (NodeId x = 0; x < out.bct.tree.num_nodes(); ++x) {
        if (out.bct.is_cut(x)) continue;
        std::vector<NodeId> cuts;
        for (NodeId y : out.bct.tree.neighbors(x)) cuts.push_back(y);
        for (std::size_t i = 0; i < cuts.size(); ++i)
            for (std::size_t j = i + 1; j < cuts.size(); ++j) {
                out.links.add(Link(cuts[i], cuts[j]), LinkWeight::zero);
                out.representative.push_back(-1);
            }
    }
    return out;
}

CaReduction block_tap_to_ca_steiner(const Tree& t, const LinkSet& links) {
    const UndirGraph& tg = t.graph();
    const auto tree_edges = tg.edges();
    std::map<Edge, int> edge_index;
    for (std::size_t i = 0; i < tree_edges.size(); ++i) edge_index[tree_edges[i]] = static_cast<int>(i);

    const int num_links = static_cast<int>(links.size());
    std::vector<std::vector<int>> path_edges(num_links);
    std::vector<std::vector<int>> links_on_edge(tree_edges.size());
    for (int i = 0; i < num_links; ++i) {
        const Link& l = links.links[i];
        if (l.u == l.v) continue;
        const auto path = tree_path(t, l.u, l.v);
        for (std::size_t p = 0; p + 1 < path.size(); ++p) {
            const int e = edge_index.at(Edge(path[p], path[p + 1]));
            path_edges[i].push_back(e);
            links_on_edge[e].push_back(i);
        }
    }

    // Short-cut incidence graph restricted to link nodes: links are adjacent
    // when their tree paths share an edge.
    std::vector<std::vector<char>> shares(num_links, std::vector<char>(num_links, 0));
    for (const auto& on_edge : links_on_edge)
        for (int a : on_edge)
            for (int b : on_edge)
                if (a != b) shares[a][b] = 1;

    CaReduction out;
    CaInstance& inst = out.instance;
    std::vector<NodeId> terminal_of_edge(tree_edges.size(), kNoNode);
    for (std::size_t e = 0; e < tree_edges.size(); ++e) {
        const auto [u, v] = tree_edges[e];
        if (tg.degree(u) == 1 || tg.degree(v) == 1)
            terminal_of_edge[e] = inst.add_terminal("e:" + tg.label(u) + "-" + tg.label(v));
    }
    std::vector<NodeId> steiner_of_link(num_links, kNoNode);
    for (int i = 0; i < num_links; ++i) {
        if (links.weights[i] != LinkWeight::one) continue;
        const Link& l = links.links[i];
        steiner_of_link[i] = inst.add_steiner("l:" + tg.label(l.u) + "-" + tg.label(l.v), i);
    }

    for (int i = 0; i < num_links; ++i) {
        if (steiner_of_link[i] == kNoNode) continue;
        for (int e : path_edges[i])
            if (terminal_of_edge[e] != kNoNode) inst.graph.add_edge(steiner_of_link[i], terminal_of_edge[e]);
        // Weight-1 links reachable through a chain of weight-0 links.
        std::vector<char> seen(num_links, 0);
        std::vector<int> stack{i};
        seen[i] = 1;
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < num_links; ++b) {
                if (!shares[a][b] || seen[b]) continue;
                seen[b] = 1;
                if (links.weights[b] == LinkWeight::zero)
                    stack.push_back(b);
                else if (b != i)
                    inst.graph.add_edge(steiner_of_link[i], steiner_of_link[b]);
            }
        }
    }

    const auto report = validate_ca_instance(inst);
    if (!report.ok()) throw std::logic_error("block_tap_to_ca_steiner produced an invalid instance:\n" + report.summary());

    out.trace.original = links;
    out.trace.steiner_link.assign(inst.num_nodes(), -1);
    out.trace.link_steiner = steiner_of_link;
    for (int i = 0; i < num_links; ++i)
        if (steiner_of_link[i] != kNoNode) out.trace.steiner_link[steiner_of_link[i]] = i;
    return out;
}

CaReduction one_node_cap_to_ca_steiner(const UndirGraph& g, const LinkSet& links) {
    BlockTapInstance bt = one_node_cap_to_block_tap(g, links);
    CaReduction out;
    if (bt.trivial) {
        out.trivial = true;
        out.trace.original = links;
        out.trace.link_steiner.assign(links.size(), kNoNode);
        out.trace.block_tap = std::move(bt);
        return out;
    }
    const Tree t(bt.bct.tree);
    CaReduction stage = block_tap_to_ca_steiner(t, bt.links);
    out.instance = std::move(stage.instance);
    auto& inst = out.instance;
    out.trace.original = links;
    out.trace.steiner_link.assign(inst.num_nodes(), -1);
    out.trace.link_steiner.assign(links.size(), kNoNode);
    for (NodeId v = 0; v < inst.num_nodes(); ++v) {
        const int weighted = stage.trace.steiner_link[v];
        if (weighted < 0) continue;
        const int original = bt.representative[weighted];
        out.trace.steiner_link[v] = original;
        inst.origin_link[v] = original;
        const Link& l = links.links[original];
        inst.graph.set_label(v, "l:" + g.label(l.u) + "-" + g.label(l.v));
    }
    for (std::size_t i = 0; i < links.size(); ++i) {
        const int weighted = bt.image_of[i];
        if (weighted >= 0) out.trace.link_steiner[i] = stage.trace.link_steiner[weighted];
    }
    out.trace.block_tap = std::move(bt);
    return out;
}

namespace {

/// Cyclic order of a cycle block's members.
std::vector<NodeId> cycle_order(const UndirGraph& g, const std::vector<NodeId>& members) {
    auto in_block = [&](NodeId v) { return std::binary_search(members.begin(), members.end(), v); };
    std::vector<NodeId> order{members.front()};
    NodeId prev = kNoNode;
    NodeId cur = members.front();
    while (order.size() < members.size()) {
        NodeId next = kNoNode;
        for (NodeId w : g.neighbors(cur))
            if (w != prev && in_block(w) && (order.size() < 2 || w != order.front())) {
                next = w;
                break;
            }
        if (next == kNoNode) throw std::logic_error("cycle_order: block is not a cycle");
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

/// A shared endpoint counts even when the projections lie on different
/// cycles glued at that node; otherwise links hanging off a common cut node
/// from different cycles would never be adjacent.
bool projections_cross(const Projection& p, const Projection& q, const std::vector<int>& position) {
    if (p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b) return true;
    if (p.cycle != q.cycle) return false;
    int lo = position[p.a];
    int hi = position[p.b];
    if (lo > hi) std::swap(lo, hi);
    auto strictly_inside = [&](NodeId x) { return position[x] > lo && position[x] < hi; };
    return strictly_inside(q.a) != strictly_inside(q.b);
}

}  // namespace

std::vector<Projection> link_projections(const UndirGraph& cactus, const BlockCutTree& bct, Link link) {
    (void)cactus;
    const Tree t(bct.tree);
    const auto path = tree_path(t, bct.node_map[link.u], bct.node_map[link.v]);
    std::vector<Projection> out;
    NodeId last_point = link.u;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const NodeId x = path[i];
        if (bct.is_cut(x)) {
            last_point = bct.cut_vertex[x];
            continue;
        }
        NodeId next_point = link.v;
        if (i + 1 < path.size()) next_point = bct.cut_vertex[path[i + 1]];
        // Block indices are offset by the cut nodes that precede them.
        out.push_back({x - bct.num_cut_nodes(), last_point, next_point});
    }
    return out;
}

CaReduction cacap_to_ca_steiner(const UndirGraph& cactus, const LinkSet& links) {
    if (!is_cactus(cactus)) throw std::invalid_argument("cacap_to_ca_steiner: input is not a cactus");
    const BlockCutTree bct = block_cut_tree(cactus);
    const int num_blocks = bct.tree.num_nodes() - bct.num_cut_nodes();
    std::vector<std::vector<int>> position(num_blocks, std::vector<int>(cactus.num_nodes(), -1));
    for (int b = 0; b < num_blocks; ++b) {
        const auto order = cycle_order(cactus, bct.members[b + bct.num_cut_nodes()]);
        for (std::size_t i = 0; i < order.size(); ++i) position[b][order[i]] = static_cast<int>(i);
    }

    CaReduction out;
    CaInstance& inst = out.instance;
    std::vector<NodeId> terminal_of(cactus.num_nodes(), kNoNode);
    for (NodeId v = 0; v < cactus.num_nodes(); ++v)
        if (cactus.degree(v) == 2) terminal_of[v] = inst.add_terminal(cactus.label(v));

    const int num_links = static_cast<int>(links.size());
    std::vector<std::vector<Projection>> proj(num_links);
    std::vector<NodeId> steiner(num_links, kNoNode);
    for (int i = 0; i < num_links; ++i) {
        const Link& l = links.links[i];
        if (!cactus.contains(l.u) || !cactus.contains(l.v)) throw std::out_of_range("link endpoint not in cactus");
        if (l.u == l.v) throw std::invalid_argument("cacap_to_ca_steiner: loop link");
        proj[i] = link_projections(cactus, bct, l);
        steiner[i] = inst.add_steiner("l:" + cactus.label(l.u) + "-" + cactus.label(l.v), i);
        for (NodeId end : {l.u, l.v})
            if (terminal_of[end] != kNoNode) inst.graph.add_edge(steiner[i], terminal_of[end]);
    }
    for (int i = 0; i < num_links; ++i)
        for (int j = i + 1; j < num_links; ++j) {
            bool cross = false;
            for (const auto& p : proj[i]) {
                for (const auto& q : proj[j])
                    if (projections_cross(p, q, position[p.cycle])) {
                        cross = true;
                        break;
                    }
                if (cross) break;
            }
            if (cross) inst.graph.add_edge(steiner[i], steiner[j]);
        }

    out.trace.original = links;
    out.trace.steiner_link.assign(inst.num_nodes(), -1);
    out.trace.link_steiner = steiner;
    for (int i = 0; i < num_links; ++i) out.trace.steiner_link[steiner[i]] = i;
    return out;
}

LinkSet lift_solution(std::span<const NodeId> steiner_nodes, const ReductionTrace& trace) {
    LinkSet out;
    for (NodeId v : steiner_nodes) {
        if (v < 0 || v >= static_cast<int>(trace.steiner_link.size()) || trace.steiner_link[v] < 0)
            throw std::out_of_range("lift_solution: node " + std::to_string(v) + " has no preimage link");
        const int idx = trace.steiner_link[v];
        out.add(trace.original.links[idx], trace.original.weights[idx]);
    }
    return out;
}

std::vector<NodeId> forward_image(std::span<const int> link_indices, const ReductionTrace& trace) {
    std::vector<NodeId> out;
    for (int i : link_indices) {
        const NodeId v = trace.link_steiner.at(i);
        if (v != kNoNode) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

/// Connected and free of bridges, ignoring edge `skip` (multigraph aware).
bool bridgeless_without(int n, std::span<const Edge> edges, int skip) {
    std::vector<std::vector<std::pair<NodeId, int>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        adj[edges[i].u].push_back({edges[i].v, static_cast<int>(i)});
        adj[edges[i].v].push_back({edges[i].u, static_cast<int>(i)});
    }
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    struct Frame {
        NodeId v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> frames{{0, -1, 0}};
    disc[0] = low[0] = 0;
    int timer = 1;
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next < adj[f.v].size()) {
            const auto [w, id] = adj[f.v][f.next++];
            if (id == f.parent_edge) continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                frames.push_back({w, id, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
            continue;
        }
        const Frame done = f;
        frames.pop_back();
        if (frames.empty()) break;
        const NodeId p = frames.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) return false;
    }
    return std::all_of(disc.begin(), disc.end(), [](int d) { return d >= 0; });
}

}  // namespace

bool is_k_edge_connected(int n, std::span<const Edge> edges, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("is_k_edge_connected: k must be 1..3");
    if (n <= 1) return true;
    if (k == 1) {
        UndirGraph g(n);
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return is_connected(g);
    }
    if (!bridgeless_without(n, edges, -1)) return false;
    if (k == 2) return true;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!bridgeless_without(n, edges, static_cast<int>(i))) return false;
    return true;
}

bool verify_augmentation(const UndirGraph& g, const LinkSet& links, AugmentMode mode) {
    if (mode == AugmentMode::node) {
        UndirGraph h = g;
        for (const Link& l : links.links)
            if (l.u != l.v) h.add_edge(l.u, l.v);
        return is_two_node_connected(h);
    }
    std::vector<Edge> edges = g.edges();
    for (const Link& l : links.links)
        if (l.u != l.v) edges.push_back(l);
    return is_k_edge_connected(g.num_nodes(), edges, 3);
}

}  // namespace augur
