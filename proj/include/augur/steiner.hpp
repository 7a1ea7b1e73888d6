#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "augur/ca_instance.hpp"

namespace augur {

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::length_error {
    using std::length_error::length_error;
};

inline constexpr int kExactSteinerCap = 10;
inline constexpr int kComponentCap = 12;
inline constexpr int kBruteForceCap = 20;

struct SteinerTree {
    std::vector<NodeId> terminals;  // sorted
    std::vector<NodeId> steiner;    // sorted S*
    std::vector<Edge> edges;        // tree over terminals + steiner

    [[nodiscard]] int cost() const { return static_cast<int>(steiner.size()); }
    [[nodiscard]] std::vector<NodeId> nodes() const;
};

/// Directed component: a minimum Steiner tree on `terminals`, oriented
/// towards `sink`.
struct Component {
    std::vector<NodeId> terminals;  // sorted, includes the sink
    NodeId sink = kNoNode;
    std::vector<NodeId> steiner;
    std::vector<Edge> edges;
    int cost = 0;

    [[nodiscard]] bool has_terminal(NodeId t) const;
};

/// Minimum-|S*| tree connecting `terminals` (other terminals are not used
/// as relay nodes). Throws InfeasibleError or CapExceeded.
SteinerTree exact_steiner(const CaInstance& inst, std::span<const NodeId> terminals, int cap = kExactSteinerCap);

/// One component per (terminal subset of size 2..k, sink) with a
/// connectable subset, ordered by subset bitmask over the sorted terminal
/// list, then by sink id.
std::vector<Component> enumerate_components(const CaInstance& inst, int k, int cap = kComponentCap);

/// Global optimum by enumerating Steiner subsets by increasing size.
SteinerTree brute_force_opt(const CaInstance& inst, int cap = kBruteForceCap);

/// BFS spanning tree of the subgraph induced by `nodes` (ids sorted).
/// Throws InfeasibleError if the induced subgraph is disconnected.
SteinerTree spanning_steiner_tree(const CaInstance& inst, std::vector<NodeId> nodes);

/// Structural check: is `t` a tree in `inst` over its declared node set that
/// contains every terminal listed?
bool is_valid_steiner_tree(const CaInstance& inst, const SteinerTree& t);

}  // namespace augur
