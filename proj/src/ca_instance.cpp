#include "augur/ca_instance.hpp"

#include <sstream>

namespace augur {

std::vector<NodeId> CaInstance::terminals() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < num_nodes(); ++v)
        if (role[v] == Role::terminal) out.push_back(v);
    return out;
}

std::vector<NodeId> CaInstance::steiner_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < num_nodes(); ++v)
        if (role[v] == Role::steiner) out.push_back(v);
    return out;
}

NodeId CaInstance::add_terminal(std::string label) {
    const NodeId v = graph.add_node(std::move(label));
    role.push_back(Role::terminal);
    origin_link.emplace_back();
    return v;
}

NodeId CaInstance::add_steiner(std::string label, std::optional<int> link) {
    const NodeId v = graph.add_node(std::move(label));
    role.push_back(Role::steiner);
    origin_link.push_back(link);
    return v;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    auto dump = [&](const char* name, const std::vector<std::string>& items) {
        for (const auto& item : items) os << name << ": " << item << '\n';
    };
    dump("structural", structural);
    dump("property-1", terminal_adjacency);
    dump("property-2", steiner_overload);
    dump("property-3", non_clique);
    return os.str();
}

ValidationReport validate_ca_instance(const CaInstance& inst) {
    ValidationReport report;
    const auto& g = inst.graph;
    if (static_cast<int>(inst.role.size()) != g.num_nodes() ||
        static_cast<int>(inst.origin_link.size()) != g.num_nodes()) {
        report.structural.push_back("role/origin tables do not match node count");
        return report;
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (inst.role[v] == Role::plain) {
            report.structural.push_back("node " + g.label(v) + " is neither terminal nor steiner");
            continue;
        }
        if (inst.is_terminal(v)) {
            const auto& nbrs = g.neighbors(v);
            for (NodeId w : nbrs)
                if (inst.is_terminal(w) && v < w)
                    report.terminal_adjacency.push_back(g.label(v) + " -- " + g.label(w));
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    if (!g.has_edge(nbrs[i], nbrs[j]))
                        report.non_clique.push_back("N(" + g.label(v) + ") misses " +
                                                    g.label(nbrs[i]) + " -- " + g.label(nbrs[j]));
        } else {
            int adjacent_terminals = 0;
            for (NodeId w : g.neighbors(v))
                if (inst.is_terminal(w)) ++adjacent_terminals;
            if (adjacent_terminals > 2)
                report.steiner_overload.push_back(g.label(v) + " touches " +
                                                  std::to_string(adjacent_terminals) + " terminals");
        }
    }
    return report;
}

bool terminals_connected(const CaInstance& inst, const std::vector<char>& chosen) {
    const auto& g = inst.graph;
    const auto terms = inst.terminals();
    if (terms.size() <= 1) return true;
    std::vector<char> seen(g.num_nodes(), 0);
    std::vector<NodeId> stack{terms.front()};
    seen[terms.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (seen[w]) continue;
            if (inst.is_steiner(w) && !chosen[w]) continue;
            seen[w] = 1;
            if (inst.is_terminal(w)) ++reached;
            stack.push_back(w);
        }
    }
    return reached == terms.size();
}

}  // namespace augur
