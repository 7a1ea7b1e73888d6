#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "augur/lp.hpp"

namespace augur {

struct Contraction {
    CaInstance instance;
    /// Old id -> new id; merged nodes map to the super-terminal, nodes of
    /// the component's Steiner set map to kNoNode.
    std::vector<NodeId> old_to_new;
    NodeId super_terminal = kNoNode;
    std::vector<NodeId> removed_steiner;  // old ids, sorted
};

/// Merges the component's terminals and Steiner nodes (plus every terminal
/// adjacent to one of those Steiner nodes) into one terminal placed at the
/// sink's position. Remaining nodes keep their relative order. The merged
/// terminal's Steiner neighbourhood is made a clique.
Contraction contract_component(const CaInstance& inst, const Component& c);

struct RoundingStep {
    int iter = 0;
    double objective = 0;
    double sum_x = 0;
    std::vector<NodeId> component_terminals;  // ids in the contracted instance of that round
    int component_cost = 0;
};

struct RoundingResult {
    std::vector<NodeId> steiner;  // original ids, sorted, deduplicated
    std::vector<RoundingStep> log;
    bool feasible = false;

    [[nodiscard]] int cost() const { return static_cast<int>(steiner.size()); }
};

/// Repeatedly solves the k-DCR LP on the current instance, samples one
/// component from x / sum x and contracts it, until one terminal is left.
/// Throws InfeasibleError when some terminal cannot be connected.
RoundingResult iterative_rounding(const CaInstance& inst, int k, std::uint64_t seed, const LpOptions& options = {});

/// One JSON object per line.
std::string rounding_log_jsonl(const RoundingResult& r);

}  // namespace augur
