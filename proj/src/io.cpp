#include "augur/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace augur {

namespace {

const char* role_name(Role r) {
    switch (r) {
        case Role::terminal: return "terminal";
        case Role::steiner: return "steiner";
        case Role::plain: return "plain";
    }
    return "plain";
}

Role parse_role(const std::string& s) {
    if (s == "terminal") return Role::terminal;
    if (s == "steiner") return Role::steiner;
    if (s == "plain") return Role::plain;
    throw std::invalid_argument("unknown role '" + s + "'");
}

nlohmann::json edge_list(const std::vector<Edge>& edges) {
    auto a = nlohmann::json::array();
    for (const Edge& e : edges) a.push_back({e.u, e.v});
    return a;
}

Edge parse_pair(const nlohmann::json& p, int n, const char* what) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw std::invalid_argument(std::string(what) + " entries must be [id, id]");
    const int a = p[0].get<int>(), b = p[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument(std::string(what) + " endpoint out of range");
    if (a == b) throw std::invalid_argument(std::string(what) + " is a loop");
    return {a, b};
}

}  // namespace

std::string kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::ca: return "ca";
        case InstanceKind::block_tap: return "block-tap";
        case InstanceKind::one_node_cap: return "one-node-cap";
        case InstanceKind::cacap: return "cacap";
    }
    return "ca";
}

InstanceKind parse_kind(const std::string& s) {
    for (auto k : {InstanceKind::ca, InstanceKind::block_tap, InstanceKind::one_node_cap, InstanceKind::cacap})
        if (kind_name(k) == s) return k;
    throw std::invalid_argument("unknown instance kind '" + s + "'");
}

std::optional<SteinerTree> InstanceFile::optimum() const {
    if (!metadata.contains("optimum")) return std::nullopt;
    const auto& o = metadata["optimum"];
    SteinerTree t;
    t.steiner = o.at("steiner").get<std::vector<NodeId>>();
    for (const auto& p : o.at("edges")) t.edges.push_back(parse_pair(p, graph.num_nodes(), "optimum edge"));
    for (NodeId v = 0; v < graph.num_nodes(); ++v)
        if (roles[v] == Role::terminal) t.terminals.push_back(v);
    std::sort(t.steiner.begin(), t.steiner.end());
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

CaInstance InstanceFile::ca() const {
    if (kind != InstanceKind::ca) throw std::invalid_argument("instance is not of kind ca");
    CaInstance inst;
    inst.graph = graph;
    inst.role = roles;
    inst.origin_link.assign(graph.num_nodes(), std::nullopt);
    return inst;
}

InstanceFile file_from_ca(const CaInstance& inst, nlohmann::json metadata) {
    InstanceFile f;
    f.kind = InstanceKind::ca;
    f.graph = inst.graph;
    f.roles = inst.role;
    f.metadata = std::move(metadata);
    return f;
}

InstanceFile file_from_tree_instance(const TreeInstance& ti, nlohmann::json metadata) {
    metadata["optimum"] = {{"steiner", ti.opt.steiner}, {"edges", edge_list(ti.opt.edges)}};
    return file_from_ca(ti.instance, std::move(metadata));
}

InstanceFile file_from_linked(InstanceKind kind, const LinkedGraph& lg, nlohmann::json metadata) {
    InstanceFile f;
    f.kind = kind;
    f.graph = lg.graph;
    f.roles.assign(lg.graph.num_nodes(), Role::plain);
    f.links = lg.links;
    f.metadata = std::move(metadata);
    return f;
}

nlohmann::json instance_to_json(const InstanceFile& f) {
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = kind_name(f.kind);
    auto& nodes = j["nodes"] = nlohmann::json::array();
    std::vector<NodeId> terminals;
    for (NodeId v = 0; v < f.graph.num_nodes(); ++v) {
        nodes.push_back({{"id", v}, {"label", f.graph.label(v)}, {"role", role_name(f.roles[v])}});
        if (f.roles[v] == Role::terminal) terminals.push_back(v);
    }
    j["edges"] = edge_list(f.graph.edges());
    j["links"] = edge_list(f.links.links);
    j["terminals"] = terminals;
    j["metadata"] = f.metadata;
    return j;
}

InstanceFile instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    if (!j.contains("format_version") || j["format_version"] != kFormatVersion)
        throw std::invalid_argument("unsupported format_version");
    InstanceFile f;
    f.kind = parse_kind(j.at("kind").get<std::string>());
    const auto& nodes = j.at("nodes");
    if (!nodes.is_array()) throw std::invalid_argument("nodes must be an array");
    const int n = static_cast<int>(nodes.size());
    f.graph = UndirGraph(n);
    f.roles.assign(n, Role::plain);
    std::vector<char> seen(n, 0);
    for (const auto& node : nodes) {
        const int id = node.at("id").get<int>();
        if (id < 0 || id >= n || seen[id]) throw std::invalid_argument("node ids must be dense and unique");
        seen[id] = 1;
        f.graph.set_label(id, node.value("label", std::to_string(id)));
        f.roles[id] = parse_role(node.value("role", "plain"));
    }
    for (const auto& p : j.value("edges", nlohmann::json::array())) {
        const Edge e = parse_pair(p, n, "edge");
        f.graph.add_edge(e.u, e.v);
    }
    for (const auto& p : j.value("links", nlohmann::json::array())) f.links.add(parse_pair(p, n, "link"));
    std::vector<NodeId> declared = j.value("terminals", std::vector<NodeId>{});
    std::sort(declared.begin(), declared.end());
    std::vector<NodeId> by_role;
    for (NodeId v = 0; v < n; ++v)
        if (f.roles[v] == Role::terminal) by_role.push_back(v);
    if (declared != by_role) throw std::invalid_argument("terminal list does not match node roles");
    if (f.kind == InstanceKind::ca) {
        for (Role r : f.roles)
            if (r == Role::plain) throw std::invalid_argument("ca instances need terminal/steiner roles");
    }
    f.metadata = j.value("metadata", nlohmann::json::object());
    return f;
}

std::string dump_instance(const InstanceFile& f) { return instance_to_json(f).dump(2) + "\n"; }

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return instance_from_json(j);
}

void save_instance(const InstanceFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_instance(f);
}

}  // namespace augur
