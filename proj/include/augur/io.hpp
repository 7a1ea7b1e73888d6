#pragma once

#include <optional>
#include <string>

#include "augur/ca_instance.hpp"
#include "augur/instances.hpp"
#include "augur/steiner.hpp"
#include "json.hpp"

namespace augur {

inline constexpr int kFormatVersion = 1;

enum class InstanceKind { ca, block_tap, one_node_cap, cacap };

std::string kind_name(InstanceKind k);
InstanceKind parse_kind(const std::string& s);

struct InstanceFile {
    InstanceKind kind = InstanceKind::ca;
    UndirGraph graph;
    std::vector<Role> roles;  // all plain for non-CA kinds
    LinkSet links;            // unit weight
    nlohmann::json metadata = nlohmann::json::object();

    /// Known optimum stored under metadata.optimum, if any.
    [[nodiscard]] std::optional<SteinerTree> optimum() const;
    /// Throws std::invalid_argument unless kind == ca.
    [[nodiscard]] CaInstance ca() const;
};

InstanceFile file_from_ca(const CaInstance& inst, nlohmann::json metadata = nlohmann::json::object());
InstanceFile file_from_tree_instance(const TreeInstance& ti, nlohmann::json metadata = nlohmann::json::object());
InstanceFile file_from_linked(InstanceKind kind, const LinkedGraph& lg, nlohmann::json metadata = nlohmann::json::object());

nlohmann::json instance_to_json(const InstanceFile& f);
/// Schema checks: version, dense ids, known roles, edges in range, terminal
/// list consistent with roles. Throws std::invalid_argument.
InstanceFile instance_from_json(const nlohmann::json& j);

std::string dump_instance(const InstanceFile& f);
InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& f, const std::string& path);

}  // namespace augur
