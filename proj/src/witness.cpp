#include "augur/witness.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "augur/harmonic.hpp"
#include "json.hpp"

namespace augur {

namespace {

/// Adjacency of a SteinerTree over its own node list.
struct LocalTree {
    std::vector<NodeId> nodes;  // sorted original ids
    std::vector<std::vector<int>> adj;

    explicit LocalTree(const SteinerTree& t) {
        nodes = t.nodes();
        adj.resize(nodes.size());
        for (const Edge& e : t.edges) {
            const int a = index(e.u), b = index(e.v);
            if (a < 0 || b < 0) throw std::invalid_argument("Steiner tree edge uses an undeclared node");
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
    }
    [[nodiscard]] int index(NodeId v) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
        return it != nodes.end() && *it == v ? static_cast<int>(it - nodes.begin()) : -1;
    }
    [[nodiscard]] bool is_tree() const {
        std::size_t m = 0;
        for (const auto& a : adj) m += a.size();
        if (nodes.empty()) return true;
        if (m / 2 + 1 != nodes.size()) return false;
        std::vector<char> seen(nodes.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == nodes.size();
    }
    /// Parent pointers and depths after rooting at r.
    void root_at(int r, std::vector<int>& parent, std::vector<int>& depth) const {
        parent.assign(nodes.size(), -1);
        depth.assign(nodes.size(), 0);
        std::vector<int> stack{r};
        std::vector<char> seen(nodes.size(), 0);
        seen[r] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    stack.push_back(v);
                }
        }
    }
};

std::vector<int> walk_path(int a, int b, const std::vector<int>& parent, const std::vector<int>& depth) {
    std::vector<int> left, right;
    while (depth[a] > depth[b]) left.push_back(a), a = parent[a];
    while (depth[b] > depth[a]) right.push_back(b), b = parent[b];
    while (a != b) {
        left.push_back(a), a = parent[a];
        right.push_back(b), b = parent[b];
    }
    left.push_back(a);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

/// Sum of H(w) over a multiset of w values given as a histogram.
Rational harmonic_sum(const std::map<int, long long>& hist) {
    Rational s(0);
    for (const auto& [w, c] : hist)
        if (w > 0) s += harmonic(w) * Rational(static_cast<long>(c));
    return s;
}

}  // namespace

Rational harmonic0(int n) { return n == 0 ? Rational(0) : harmonic(n); }

int StrippedTree::local(NodeId original_id) const {
    auto it = std::lower_bound(original.begin(), original.end(), original_id);
    if (it == original.end() || *it != original_id)
        throw std::out_of_range("node " + std::to_string(original_id) + " is not a Steiner node of the tree");
    return static_cast<int>(it - original.begin());
}

StrippedTree strip_terminals(const SteinerTree& t) {
    const LocalTree lt(t);
    if (!lt.is_tree()) throw std::invalid_argument("strip_terminals: edge set is not a tree");
    StrippedTree st;
    st.original = t.steiner;
    std::sort(st.original.begin(), st.original.end());
    const int n = static_cast<int>(st.original.size());
    st.tree = UndirGraph(n);
    for (int i = 0; i < n; ++i) st.tree.set_label(i, std::to_string(st.original[i]));
    st.is_final.assign(n, 0);
    st.adjacent.assign(n, {});
    st.rep.assign(n, kNoNode);
    auto is_terminal = [&](NodeId v) { return std::binary_search(t.terminals.begin(), t.terminals.end(), v); };
    for (NodeId r : t.terminals) {
        const int d = static_cast<int>(lt.adj[lt.index(r)].size());
        if (d == 0 && lt.nodes.size() > 1)
            throw std::invalid_argument("strip_terminals: terminal " + std::to_string(r) + " is isolated");
        if (d > 1) throw std::invalid_argument("strip_terminals: terminal " + std::to_string(r) + " is not a leaf");
    }
    for (const Edge& e : t.edges) {
        const bool tu = is_terminal(e.u), tv = is_terminal(e.v);
        if (tu && tv) throw std::invalid_argument("strip_terminals: terminal-terminal edge");
        if (!tu && !tv) {
            st.tree.add_edge(st.local(e.u), st.local(e.v));
        } else {
            const int s = st.local(tu ? e.v : e.u);
            st.adjacent[s].push_back(tu ? e.u : e.v);
        }
    }
    for (int i = 0; i < n; ++i) {
        auto& a = st.adjacent[i];
        std::sort(a.begin(), a.end());
        st.is_final[i] = a.empty() ? 0 : 1;
        if (!a.empty()) st.rep[i] = a.front();
    }
    return st;
}

SteinerTree normalize_terminal_leaves(const CaInstance& inst, SteinerTree t) {
    std::set<Edge> edges(t.edges.begin(), t.edges.end());
    for (NodeId r : t.terminals) {
        std::vector<NodeId> around;
        for (const Edge& e : edges)
            if (e.u == r || e.v == r) around.push_back(e.u == r ? e.v : e.u);
        std::sort(around.begin(), around.end());
        for (std::size_t i = 1; i < around.size(); ++i) {
            if (!inst.graph.has_edge(around[0], around[i]))
                throw std::logic_error("normalize_terminal_leaves: neighbourhood of terminal " +
                                       std::to_string(r) + " is not a clique");
            edges.erase(Edge(r, around[i]));
            edges.insert(Edge(around[0], around[i]));
        }
    }
    t.edges.assign(edges.begin(), edges.end());
    return t;
}

SteinerTree normalize_leaf_adjacent(const CaInstance& inst, SteinerTree t) {
    for (NodeId s : t.steiner) {
        const LocalTree lt(t);
        const int si = lt.index(s);
        bool has = false;
        for (int v : lt.adj[si])
            if (inst.is_terminal(lt.nodes[v])) has = true;
        if (has) continue;
        NodeId r = kNoNode;
        for (NodeId v : inst.graph.neighbors(s))
            if (inst.is_terminal(v) && lt.index(v) >= 0) {
                r = v;
                break;
            }
        if (r == kNoNode)
            throw std::invalid_argument("normalize_leaf_adjacent: Steiner node " + std::to_string(s) +
                                        " has no adjacent terminal");
        std::vector<int> parent, depth;
        lt.root_at(lt.index(r), parent, depth);
        const NodeId x = lt.nodes[parent[si]];
        auto it = std::find(t.edges.begin(), t.edges.end(), Edge(s, x));
        t.edges.erase(it);
        t.edges.push_back(Edge(s, r));
        std::sort(t.edges.begin(), t.edges.end());
    }
    return t;
}

FinalComponentSet decompose_final_components(const StrippedTree& st, std::optional<int> root) {
    FinalComponentSet out;
    const int n = st.size();
    if (n == 0) return out;
    for (int v = 0; v < n; ++v)
        if (st.tree.degree(v) <= 1 && !st.is_final[v])
            throw std::invalid_argument("decompose_final_components: leaf " + std::to_string(st.original[v]) +
                                        " is not final");
    if (n == 1) {
        out.root = 0;
        return out;
    }
    int r = -1;
    if (root) {
        r = *root;
        if (!st.tree.contains(r) || st.tree.degree(r) != 1 || !st.is_final[r])
            throw std::invalid_argument("decompose_final_components: root must be a final leaf");
    } else {
        for (int v = 0; v < n && r < 0; ++v)
            if (st.tree.degree(v) == 1) r = v;
    }
    out.root = r;
    const Tree rooted(st.tree, r);

    std::deque<std::pair<int, int>> queue;  // (component root, its child)
    for (int c : rooted.children(r)) queue.emplace_back(r, c);
    while (!queue.empty()) {
        const auto [f, x] = queue.front();
        queue.pop_front();
        FinalComponent comp;
        comp.node.push_back(f);
        comp.parent.push_back(-1);
        comp.children.emplace_back();
        std::function<void(int, int)> grow = [&](int v, int up) {
            const int id = comp.size();
            comp.node.push_back(v);
            comp.parent.push_back(up);
            comp.children.emplace_back();
            comp.children[up].push_back(id);
            const auto kids = rooted.children(v);
            if (st.is_final[v]) {
                for (int c : kids) queue.emplace_back(v, c);
                return;
            }
            for (int c : kids) grow(c, id);
        };
        grow(x, 0);
        out.components.push_back(std::move(comp));
    }
    return out;
}

ComponentWitness build_witness_component(const FinalComponent& c, const std::vector<int>& rank) {
    const int n = c.size();
    if (n < 2 || c.children[0].size() != 1)
        throw std::invalid_argument("build_witness_component: root must have exactly one child");
    for (int i = 1; i < n; ++i)
        if (c.parent[i] < 0 || c.parent[i] >= i) throw std::invalid_argument("build_witness_component: bad parent order");
    ComponentWitness w;
    w.l.assign(n, -1);
    w.marked.assign(n, -1);
    w.path.assign(n, {});
    std::vector<Rational> pw(n);
    auto leaf_rank = [&](int i) { return rank.at(c.node[i]); };
    // parents precede children, so a reverse scan is a post-order
    for (int u = n - 1; u >= 1; --u) {
        if (c.is_leaf(u)) {
            pw[u] = Rational(1, 3);
            w.l[u] = u;
            w.path[u] = {u};
            continue;
        }
        int best = -1;
        for (int ch : c.children[u]) {
            if (best < 0 || pw[ch] < pw[best] || (pw[ch] == pw[best] && leaf_rank(w.l[ch]) < leaf_rank(w.l[best])))
                best = ch;
        }
        w.marked[u] = best;
        w.l[u] = w.l[best];
        pw[u] = Rational(1, static_cast<long>(c.children[u].size() + 1)) + pw[best];
        w.path[u] = {u};
        w.path[u].insert(w.path[u].end(), w.path[best].begin(), w.path[best].end());
    }
    w.l[0] = 0;
    w.path[0] = {0};
    std::set<Edge> edges;
    for (int u = 1; u < n; ++u)
        if (w.l[u] != w.l[c.parent[u]]) edges.insert(Edge(w.l[u], w.l[c.parent[u]]));
    w.edges.assign(edges.begin(), edges.end());
    return w;
}

WitnessTree build_witness(const SteinerTree& t, const WitnessOptions& options) {
    WitnessTree out;
    out.stripped = strip_terminals(t);
    const StrippedTree& st = out.stripped;
    std::vector<int> rank(st.size());
    for (int i = 0; i < st.size(); ++i)
        rank[i] = options.leaf_rank.empty() ? i : options.leaf_rank.at(st.original[i]);
    std::optional<int> root;
    if (options.root) root = st.local(*options.root);
    out.components = decompose_final_components(st, root);

    std::set<Edge> finals;
    for (const auto& comp : out.components.components) {
        out.fragments.push_back(build_witness_component(comp, rank));
        for (const Edge& e : out.fragments.back().edges)
            finals.insert(Edge(st.original[comp.node[e.u]], st.original[comp.node[e.v]]));
    }
    out.final_edges.assign(finals.begin(), finals.end());

    std::set<Edge> lifted;
    for (const Edge& e : out.final_edges) lifted.insert(Edge(st.rep[st.local(e.u)], st.rep[st.local(e.v)]));
    for (int i = 0; i < st.size(); ++i)
        for (std::size_t j = 1; j < st.adjacent[i].size(); ++j) lifted.insert(Edge(st.rep[i], st.adjacent[i][j]));
    out.terminal_edges.assign(lifted.begin(), lifted.end());
    return out;
}

WVector w_vector_final(const StrippedTree& st, const std::vector<Edge>& final_edges) {
    WVector wv;
    wv.node = st.original;
    wv.w.assign(st.size(), 0);
    wv.final_bonus = true;
    if (st.size() == 0) return wv;
    const Tree tr(st.tree);
    for (const Edge& e : final_edges) {
        const int a = st.local(e.u), b = st.local(e.v);
        if (!st.is_final[a] || !st.is_final[b]) throw std::invalid_argument("w_vector: witness edge on a non-final node");
        for (NodeId v : tree_path(tr, a, b)) ++wv.w[v];
    }
    for (int i = 0; i < st.size(); ++i)
        if (st.is_final[i]) ++wv.w[i];
    return wv;
}

WVector w_vector_terminal(const SteinerTree& t, const std::vector<Edge>& terminal_edges) {
    const LocalTree lt(t);
    if (!lt.is_tree()) throw std::invalid_argument("w_vector: edge set is not a tree");
    WVector wv;
    wv.node = t.steiner;
    std::sort(wv.node.begin(), wv.node.end());
    wv.w.assign(wv.node.size(), 0);
    if (lt.nodes.empty()) return wv;
    std::vector<int> parent, depth;
    lt.root_at(0, parent, depth);
    auto is_terminal = [&](NodeId v) { return std::binary_search(t.terminals.begin(), t.terminals.end(), v); };
    for (const Edge& e : terminal_edges) {
        const int a = lt.index(e.u), b = lt.index(e.v);
        if (a < 0 || b < 0 || !is_terminal(e.u) || !is_terminal(e.v))
            throw std::invalid_argument("w_vector: witness edge endpoint is not a terminal of the tree");
        for (int x : walk_path(a, b, parent, depth)) {
            const NodeId v = lt.nodes[x];
            if (is_terminal(v)) continue;
            ++wv.w[std::lower_bound(wv.node.begin(), wv.node.end(), v) - wv.node.begin()];
        }
    }
    return wv;
}

Rational h_average(const WVector& wv) {
    if (wv.w.empty()) throw std::invalid_argument("h_average: no Steiner nodes");
    std::map<int, long long> hist;
    for (int x : wv.w) ++hist[x];
    Rational avg = harmonic_sum(hist) / Rational(static_cast<long>(wv.w.size()));
    avg.canonicalize();
    return avg;
}

std::vector<Rational> prefix_averages(const WitnessTree& w) {
    const StrippedTree& st = w.stripped;
    std::vector<Rational> out;
    if (st.size() == 0) return out;
    if (w.components.components.empty()) {
        out.push_back(harmonic0(st.is_final[0] ? 1 : 0));
        return out;
    }
    std::vector<int> count(st.size(), 0);
    std::vector<char> in(st.size(), 0);
    int members = 0;
    for (std::size_t i = 0; i < w.components.components.size(); ++i) {
        const FinalComponent& c = w.components.components[i];
        std::vector<int> depth(c.size(), 0);
        for (int v = 1; v < c.size(); ++v) depth[v] = depth[c.parent[v]] + 1;
        for (int v : c.node)
            if (!in[v]) {
                in[v] = 1;
                ++members;
            }
        for (const Edge& e : w.fragments[i].edges)
            for (int x : walk_path(e.u, e.v, c.parent, depth)) ++count[c.node[x]];
        std::map<int, long long> hist;
        for (int v = 0; v < st.size(); ++v)
            if (in[v]) ++hist[count[v] + (st.is_final[v] ? 1 : 0)];
        Rational avg = harmonic_sum(hist) / Rational(members);
        avg.canonicalize();
        out.push_back(avg);
    }
    return out;
}

InvariantAudit check_invariant_lemma(const WitnessTree& w, const Rational& gamma, const Rational& delta) {
    InvariantAudit audit;
    audit.bound_name = to_string(gamma);
    bool have_slack = false;
    auto fail = [&](std::size_t ci, int u, const std::string& what) {
        if (audit.failures.size() < 50)
            audit.failures.push_back("component " + std::to_string(ci) + " node " + std::to_string(u) + ": " + what);
    };
    const StrippedTree& st = w.stripped;
    for (std::size_t ci = 0; ci < w.components.components.size(); ++ci) {
        const FinalComponent& c = w.components.components[ci];
        const ComponentWitness& cw = w.fragments[ci];
        const int n = c.size();
        ++audit.components;
        for (int v = 0; v < n; ++v) {
            const bool final_node = st.is_final[c.node[v]] != 0;
            if ((v == 0 || c.is_leaf(v)) != final_node) fail(ci, v, "final nodes are not exactly root and leaves");
        }
        std::vector<int> depth(n, 0), tin(n), tout(n);
        for (int v = 1; v < n; ++v) depth[v] = depth[c.parent[v]] + 1;
        {
            int clock = 0;
            std::function<void(int)> dfs = [&](int v) {
                tin[v] = clock++;
                for (int ch : c.children[v]) dfs(ch);
                tout[v] = clock;
            };
            dfs(0);
        }
        auto inside = [&](int x, int u) { return tin[u] <= tin[x] && tin[x] < tout[u]; };
        std::vector<Rational> inv_d(n);
        for (int v = 0; v < n; ++v)
            inv_d[v] = Rational(1, c.is_leaf(v) ? 3 : static_cast<long>(c.children[v].size() + 1));
        std::vector<std::vector<int>> edge_path;
        for (const Edge& e : cw.edges) edge_path.push_back(walk_path(e.u, e.v, c.parent, depth));
        std::vector<Rational> path_weight(n, Rational(0));
        for (int u = 1; u < n; ++u)
            for (int x : cw.path[u]) path_weight[u] += inv_d[x];

        std::vector<std::vector<int>> wu(n);
        for (int u = 1; u < n; ++u) {
            auto& cnt = wu[u];
            cnt.assign(n, 0);
            for (std::size_t k = 0; k < cw.edges.size(); ++k)
                if (inside(cw.edges[k].u, u) && inside(cw.edges[k].v, u))
                    for (int x : edge_path[k]) ++cnt[x];
            // e_u enters Q_u along P(u)
            int a = c.parent[u];
            while (a != 0 && cw.l[a] == cw.l[u]) a = c.parent[a];
            if (cw.l[a] == cw.l[u]) fail(ci, u, "no ancestor with a different l");
            for (int x : cw.path[u]) ++cnt[x];
            std::map<int, long long> hist;
            long long size = 0;
            for (int x = 0; x < n; ++x)
                if (inside(x, u)) {
                    if (c.is_leaf(x)) ++cnt[x];
                    ++hist[cnt[x]];
                    ++size;
                }
            const Rational lhs = harmonic_sum(hist) + path_weight[u] + delta;
            const Rational rhs = gamma * Rational(static_cast<long>(size));
            const Rational slack = rhs - lhs;
            if (!have_slack || slack < audit.worst_slack) {
                audit.worst_slack = slack;
                have_slack = true;
            }
            if (!(slack > 0)) fail(ci, u, "subtree inequality fails, lhs " + to_string(lhs) + " rhs " + to_string(rhs));
            ++audit.subtrees;
        }
        // parents precede children, so wu[child] is ready; check the increase relations
        for (int u = 1; u < n; ++u) {
            if (c.is_leaf(u)) continue;
            const int p = static_cast<int>(c.children[u].size());
            const int u1 = cw.marked[u];
            if (wu[u][u] != p) fail(ci, u, "w^u(u) != p");
            for (int ch : c.children[u]) {
                if (ch == u1) continue;
                if (path_weight[ch] < path_weight[u1]) fail(ci, u, "greedy path not minimal");
                for (int x = 0; x < n; ++x)
                    if (inside(x, ch) && wu[u][x] != wu[ch][x]) fail(ci, u, "unmarked subtree value changed");
            }
            std::vector<char> on_path(n, 0);
            for (int x : cw.path[u1]) on_path[x] = 1;
            for (int x = 0; x < n; ++x) {
                if (!inside(x, u1)) continue;
                if (!on_path[x]) {
                    if (wu[u][x] != wu[u1][x]) fail(ci, u, "marked subtree value changed off the path");
                    continue;
                }
                const int d = c.is_leaf(x) ? 3 : static_cast<int>(c.children[x].size() + 1);
                Rational cap(0);
                for (int j = 2; j <= p; ++j) cap += Rational(1, d + j - 2);
                if (harmonic0(wu[u][x]) - harmonic0(wu[u1][x]) > cap) fail(ci, u, "increase on P(u1) too large");
            }
        }
    }
    audit.prefix_averages = prefix_averages(w);
    for (std::size_t i = 0; i < audit.prefix_averages.size(); ++i)
        if (!(audit.prefix_averages[i] < gamma))
            fail(i, -1, "prefix H-average " + to_string(audit.prefix_averages[i]) + " not below bound");
    if (!have_slack) audit.worst_slack = Rational(0);
    return audit;
}

std::vector<Edge> tree_following_witness(const SteinerTree& t) {
    const LocalTree lt(t);
    if (!lt.is_tree()) throw std::invalid_argument("tree_following_witness: edge set is not a tree");
    auto is_terminal = [&](NodeId v) { return std::binary_search(t.terminals.begin(), t.terminals.end(), v); };
    std::map<NodeId, std::vector<NodeId>> around;  // Steiner -> adjacent terminals
    for (NodeId s : t.steiner) around[s];
    for (const Edge& e : t.edges) {
        if (is_terminal(e.u) && !is_terminal(e.v)) around[e.v].push_back(e.u);
        if (is_terminal(e.v) && !is_terminal(e.u)) around[e.u].push_back(e.v);
    }
    for (auto& [s, a] : around) {
        if (a.empty())
            throw std::invalid_argument("tree_following_witness: Steiner node " + std::to_string(s) +
                                        " has no adjacent terminal");
        std::sort(a.begin(), a.end());
    }
    std::set<Edge> out;
    for (const Edge& e : t.edges)
        if (!is_terminal(e.u) && !is_terminal(e.v)) out.insert(Edge(around[e.u].front(), around[e.v].front()));
    for (const auto& [s, a] : around)
        for (std::size_t j = 1; j < a.size(); ++j) out.insert(Edge(a.front(), a[j]));
    return {out.begin(), out.end()};
}

GammaOptimum brute_force_gamma(const SteinerTree& t, int cap) {
    const int q = static_cast<int>(t.terminals.size());
    if (q > cap) throw CapExceeded("brute_force_gamma: " + std::to_string(q) + " terminals exceed cap " + std::to_string(cap));
    if (q == 0 || t.steiner.empty()) throw std::invalid_argument("brute_force_gamma: need terminals and Steiner nodes");
    const LocalTree lt(t);
    if (!lt.is_tree()) throw std::invalid_argument("brute_force_gamma: edge set is not a tree");
    std::vector<NodeId> steiner = t.steiner;
    std::sort(steiner.begin(), steiner.end());
    const int ns = static_cast<int>(steiner.size());
    std::vector<int> parent, depth;
    lt.root_at(0, parent, depth);
    // Steiner indices on the path between each terminal pair
    std::vector<std::vector<std::vector<int>>> through(q, std::vector<std::vector<int>>(q));
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            for (int x : walk_path(lt.index(t.terminals[a]), lt.index(t.terminals[b]), parent, depth)) {
                auto it = std::lower_bound(steiner.begin(), steiner.end(), lt.nodes[x]);
                if (it != steiner.end() && *it == lt.nodes[x]) through[a][b].push_back(static_cast<int>(it - steiner.begin()));
            }
            through[b][a] = through[a][b];
        }
    // H(k) scaled by lcm(1..q) is integral
    long long scale = 1;
    for (int i = 2; i <= std::max(q, 1); ++i) scale = std::lcm(scale, static_cast<long long>(i));
    std::vector<long long> hs(q + 1, 0);
    for (int k = 1; k <= q; ++k) hs[k] = hs[k - 1] + scale / k;

    GammaOptimum best;
    long long best_sum = -1;
    std::vector<Edge> best_edges;
    std::vector<int> seq(std::max(q - 2, 0), 0);
    std::vector<int> cnt(ns);
    std::vector<std::pair<int, int>> tree_edges;
    for (;;) {
        tree_edges.clear();
        if (q == 2) {
            tree_edges.emplace_back(0, 1);
        } else if (q > 2) {
            std::vector<int> degree(q, 1);
            for (int x : seq) ++degree[x];
            for (int x : seq) {
                int leaf = 0;
                while (degree[leaf] != 1) ++leaf;
                tree_edges.emplace_back(leaf, x);
                --degree[leaf];
                --degree[x];
            }
            int u = -1, v = -1;
            for (int i = 0; i < q; ++i)
                if (degree[i] == 1) (u < 0 ? u : v) = i;
            tree_edges.emplace_back(u, v);
        }
        std::fill(cnt.begin(), cnt.end(), 0);
        for (auto [a, b] : tree_edges)
            for (int s : through[a][b]) ++cnt[s];
        long long sum = 0;
        for (int c : cnt) sum += hs[c];
        ++best.trees;
        if (best_sum < 0 || sum <= best_sum) {
            std::vector<Edge> edges;
            for (auto [a, b] : tree_edges) edges.emplace_back(t.terminals[a], t.terminals[b]);
            std::sort(edges.begin(), edges.end());
            if (best_sum < 0 || sum < best_sum || edges < best_edges) {
                best_sum = sum;
                best_edges = std::move(edges);
            }
        }
        // next Pruefer sequence
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == q - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    best.value = Rational(static_cast<long>(best_sum), static_cast<long>(scale) * ns);
    best.value.canonicalize();
    best.witness = best_edges;
    return best;
}

std::string gamma_report_json(const GammaReport& r) {
    nlohmann::json j;
    j["mode"] = r.mode;
    j["h_average"] = to_string(r.h_average);
    j["h_average_value"] = to_double(r.h_average);
    j["bound"] = to_string(r.bound);
    j["bound_value"] = to_double(r.bound);
    j["strict"] = r.strict;
    j["within_bound"] = r.within_bound;
    auto& nodes = j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < r.wv.node.size(); ++i)
        nodes.push_back({{"node", r.wv.node[i]}, {"w", r.wv.w[i]}, {"h", to_string(harmonic0(r.wv.w[i]))}});
    j["final_bonus"] = r.wv.final_bonus;
    auto& we = j["witness"] = nlohmann::json::array();
    for (const Edge& e : r.witness) we.push_back({e.u, e.v});
    if (r.audit) {
        const auto& a = *r.audit;
        std::vector<std::string> prefix;
        for (const auto& p : a.prefix_averages) prefix.push_back(to_string(p));
        j["audit"] = {{"ok", a.ok()},
                      {"bound", a.bound_name},
                      {"components", a.components},
                      {"subtrees", a.subtrees},
                      {"worst_slack", to_string(a.worst_slack)},
                      {"failures", a.failures},
                      {"prefix_averages", prefix}};
    }
    return j.dump(2);
}

std::string gamma_report_csv(const GammaReport& r) {
    std::string out = "node,w,H\n";
    for (std::size_t i = 0; i < r.wv.node.size(); ++i)
        out += std::to_string(r.wv.node[i]) + "," + std::to_string(r.wv.w[i]) + "," +
               to_string(harmonic0(r.wv.w[i])) + "\n";
    return out;
}

}  // namespace augur
