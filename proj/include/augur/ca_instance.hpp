#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augur/graph.hpp"

namespace augur {

enum class Role : unsigned char { terminal, steiner, plain };

/// Candidate link over a base graph; endpoints normalized so u < v.
using Link = Edge;

enum class LinkWeight : unsigned char { zero, one };

struct LinkSet {
    std::vector<Link> links;
    std::vector<LinkWeight> weights;

    LinkSet() = default;
    explicit LinkSet(std::vector<Link> unit_links)
        : links(std::move(unit_links)), weights(links.size(), LinkWeight::one) {}

    void add(Link l, LinkWeight w = LinkWeight::one) {
        links.push_back(l);
        weights.push_back(w);
    }
    [[nodiscard]] std::size_t size() const { return links.size(); }
    [[nodiscard]] bool empty() const { return links.empty(); }
};

/// Node Steiner tree instance; terminals and Steiner nodes partition the
/// nodes. `origin_link[v]` records, for Steiner nodes produced by a
/// reduction, the index of the original link they stand for.
struct CaInstance {
    UndirGraph graph;
    std::vector<Role> role;
    std::vector<std::optional<int>> origin_link;

    [[nodiscard]] int num_nodes() const { return graph.num_nodes(); }
    [[nodiscard]] bool is_terminal(NodeId v) const { return role.at(v) == Role::terminal; }
    [[nodiscard]] bool is_steiner(NodeId v) const { return role.at(v) == Role::steiner; }
    [[nodiscard]] std::vector<NodeId> terminals() const;
    [[nodiscard]] std::vector<NodeId> steiner_nodes() const;

    NodeId add_terminal(std::string label = {});
    NodeId add_steiner(std::string label = {}, std::optional<int> link = std::nullopt);
};

struct ValidationReport {
    std::vector<std::string> terminal_adjacency;   // property 1
    std::vector<std::string> steiner_overload;     // property 2
    std::vector<std::string> non_clique;           // property 3
    std::vector<std::string> structural;           // role/size mismatches

    [[nodiscard]] bool ok() const {
        return terminal_adjacency.empty() && steiner_overload.empty() && non_clique.empty() &&
               structural.empty();
    }
    [[nodiscard]] std::string summary() const;
};

/// Checks the three CA-Node-Steiner-Tree properties: no terminal-terminal
/// edge, at most two terminals per Steiner node, cliqued terminal
/// neighborhoods.
ValidationReport validate_ca_instance(const CaInstance& inst);

/// True iff every terminal lies in one connected component of the subgraph
/// induced by the terminals and the Steiner nodes flagged in `chosen`.
bool terminals_connected(const CaInstance& inst, const std::vector<char>& chosen);

}  // namespace augur
