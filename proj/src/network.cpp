#include "mtfr/network.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mtfr {

const char* to_string(Side side) {
    return side == Side::Power ? "power" : "comm";
}

const char* to_string(Kind kind) {
    return kind == Kind::Source ? "source" : "relay";
}

const char* to_string(Mode mode) {
    return mode == Mode::Unidirectional ? "unidirectional" : "bidirectional";
}

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::Schema: return "SCHEMA";
    case ErrorCode::Invariant: return "INVARIANT";
    case ErrorCode::NotStar: return "NOT_STAR";
    case ErrorCode::NotUnidirectional: return "NOT_UNIDIRECTIONAL";
    case ErrorCode::NotBidirectional: return "NOT_BIDIRECTIONAL";
    case ErrorCode::InvalidRemoval: return "INVALID_REMOVAL";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::TruncatedInput: return "TRUNCATED_INPUT";
    case ErrorCode::EmptyResult: return "EMPTY_RESULT";
    case ErrorCode::Io: return "IO";
    }
    return "UNKNOWN";
}

const char* to_string(ValidationCode code) {
    switch (code) {
    case ValidationCode::DuplicateId: return "DUPLICATE_ID";
    case ValidationCode::UnknownNode: return "UNKNOWN_NODE";
    case ValidationCode::SelfLoop: return "SELF_LOOP";
    case ValidationCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ValidationCode::CrossSideIntra: return "CROSS_SIDE_INTRA";
    case ValidationCode::SameSideDep: return "SAME_SIDE_DEP";
    case ValidationCode::DepEndpointNotRelay: return "DEP_ENDPOINT_NOT_RELAY";
    case ValidationCode::AsymmetricDep: return "ASYMMETRIC_DEP";
    }
    return "UNKNOWN";
}

namespace {

void sort_unique(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::string edge_str(const Edge& e, char sep = '-') {
    return e.first + sep + e.second;
}

} // namespace

NetworkSpec NetworkSpec::from_parts(Mode mode, std::vector<NodeRef> nodes,
                                    std::vector<Edge> intra_edges,
                                    std::vector<Edge> dep_edges) {
    NetworkSpec spec;
    spec.mode = mode;
    spec.nodes = std::move(nodes);
    std::sort(spec.nodes.begin(), spec.nodes.end(),
              [](const NodeRef& a, const NodeRef& b) { return a.id < b.id; });
    for (auto& e : intra_edges) {
        if (e.second < e.first) std::swap(e.first, e.second);
    }
    std::sort(intra_edges.begin(), intra_edges.end());
    spec.intra_edges = std::move(intra_edges);
    if (mode == Mode::Bidirectional) {
        std::vector<Edge> closed = dep_edges;
        for (const auto& [a, b] : dep_edges) closed.emplace_back(b, a);
        sort_unique(closed);
        spec.dep_edges = std::move(closed);
    } else {
        std::sort(dep_edges.begin(), dep_edges.end());
        spec.dep_edges = std::move(dep_edges);
    }
    return spec;
}

const NodeRef* NetworkSpec::find(const std::string& id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                               [](const NodeRef& n, const std::string& s) { return n.id < s; });
    if (it != nodes.end() && it->id == id) return &*it;
    return nullptr;
}

std::vector<std::string> NetworkSpec::relay_ids() const {
    std::vector<std::string> out;
    for (const auto& n : nodes)
        if (n.kind == Kind::Relay) out.push_back(n.id);
    return out;
}

std::vector<std::string> NetworkSpec::source_ids(Side side) const {
    std::vector<std::string> out;
    for (const auto& n : nodes)
        if (n.kind == Kind::Source && n.side == side) out.push_back(n.id);
    return out;
}

size_t NetworkSpec::relay_count() const {
    size_t c = 0;
    for (const auto& n : nodes)
        if (n.kind == Kind::Relay) ++c;
    return c;
}

std::vector<Edge> NetworkSpec::dependency_pairs() const {
    // Meaningful for symmetric arc sets: every antiparallel pair is reported
    // once, power-side id first.
    std::vector<Edge> pairs;
    for (const auto& [a, b] : dep_edges) {
        const NodeRef* na = find(a);
        if (na && na->side == Side::Power)
            pairs.emplace_back(a, b);
    }
    sort_unique(pairs);
    return pairs;
}

ValidationReport validate(const NetworkSpec& spec) {
    ValidationReport report;
    std::set<std::string> seen;
    for (const auto& n : spec.nodes) {
        if (!seen.insert(n.id).second)
            report.push_back({ValidationCode::DuplicateId,
                              "duplicate node id " + n.id});
    }

    auto lookup = [&](const std::string& id) -> const NodeRef* {
        return spec.find(id);
    };

    std::set<Edge> intra_seen;
    for (const auto& e : spec.intra_edges) {
        const std::string name = edge_str(e);
        if (e.first == e.second) {
            report.push_back({ValidationCode::SelfLoop, "self-loop intra edge " + name});
            continue;
        }
        if (!intra_seen.insert(e).second)
            report.push_back({ValidationCode::DuplicateEdge, "duplicate intra edge " + name});
        const NodeRef* a = lookup(e.first);
        const NodeRef* b = lookup(e.second);
        if (!a) report.push_back({ValidationCode::UnknownNode, "intra edge " + name + " references unknown node " + e.first});
        if (!b) report.push_back({ValidationCode::UnknownNode, "intra edge " + name + " references unknown node " + e.second});
        if (a && b && a->side != b->side)
            report.push_back({ValidationCode::CrossSideIntra, "intra edge " + name + " crosses sides"});
    }

    std::set<Edge> dep_seen;
    for (const auto& e : spec.dep_edges) {
        const std::string name = edge_str(e, '>');
        if (e.first == e.second) {
            report.push_back({ValidationCode::SelfLoop, "self-loop dependency edge " + name});
            continue;
        }
        if (!dep_seen.insert(e).second)
            report.push_back({ValidationCode::DuplicateEdge, "duplicate dependency edge " + name});
        const NodeRef* a = lookup(e.first);
        const NodeRef* b = lookup(e.second);
        if (!a) report.push_back({ValidationCode::UnknownNode, "dependency edge " + name + " references unknown node " + e.first});
        if (!b) report.push_back({ValidationCode::UnknownNode, "dependency edge " + name + " references unknown node " + e.second});
        if (a && b && a->side == b->side)
            report.push_back({ValidationCode::SameSideDep, "dependency edge " + name + " stays inside one side"});
        if (a && a->kind != Kind::Relay)
            report.push_back({ValidationCode::DepEndpointNotRelay, "dependency edge " + name + " uses SOURCE node " + e.first});
        if (b && b->kind != Kind::Relay)
            report.push_back({ValidationCode::DepEndpointNotRelay, "dependency edge " + name + " uses SOURCE node " + e.second});
    }

    if (spec.mode == Mode::Bidirectional) {
        for (const auto& e : spec.dep_edges) {
            if (!dep_seen.count({e.second, e.first}))
                report.push_back({ValidationCode::AsymmetricDep,
                                  "dependency edge " + edge_str(e, '>') + " has no reverse arc"});
        }
    }
    return report;
}

namespace {

using json = nlohmann::ordered_json;

Side parse_side(const std::string& s) {
    if (s == "power") return Side::Power;
    if (s == "comm") return Side::Comm;
    throw Error(ErrorCode::Schema, "bad side value \"" + s + "\"");
}

Kind parse_kind(const std::string& s) {
    if (s == "source") return Kind::Source;
    if (s == "relay") return Kind::Relay;
    throw Error(ErrorCode::Schema, "bad kind value \"" + s + "\"");
}

Mode parse_mode(const std::string& s) {
    if (s == "unidirectional") return Mode::Unidirectional;
    if (s == "bidirectional") return Mode::Bidirectional;
    throw Error(ErrorCode::Schema, "bad mode value \"" + s + "\"");
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw Error(ErrorCode::Schema, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& v, const char* what) {
    if (!v.is_string())
        throw Error(ErrorCode::Schema, std::string(what) + " must be a string");
    return v.get<std::string>();
}

std::vector<Edge> parse_edge_list(const json& arr, const char* what) {
    if (!arr.is_array())
        throw Error(ErrorCode::Schema, std::string(what) + " must be an array");
    std::vector<Edge> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw Error(ErrorCode::Schema, std::string(what) + " entries must be [id, id] pairs");
        out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return out;
}

} // namespace

NetworkSpec parse_network(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Syntax, e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorCode::Schema, "top-level value must be an object");

    const Mode mode = parse_mode(require_string(require(doc, "mode"), "mode"));

    const json& jnodes = require(doc, "nodes");
    if (!jnodes.is_array())
        throw Error(ErrorCode::Schema, "nodes must be an array");
    std::vector<NodeRef> nodes;
    for (const auto& jn : jnodes) {
        if (!jn.is_object())
            throw Error(ErrorCode::Schema, "node entries must be objects");
        NodeRef n;
        n.id = require_string(require(jn, "id"), "node id");
        n.side = parse_side(require_string(require(jn, "side"), "node side"));
        n.kind = parse_kind(require_string(require(jn, "kind"), "node kind"));
        nodes.push_back(std::move(n));
    }

    std::vector<Edge> intra = parse_edge_list(require(doc, "intra_edges"), "intra_edges");
    std::vector<Edge> dep = parse_edge_list(require(doc, "dep_edges"), "dep_edges");

    // Duplicate detection happens on the raw entries; symmetrization below
    // would otherwise mask duplicates in bidirectional documents.
    {
        std::set<Edge> raw;
        for (auto e : intra) {
            if (e.second < e.first) std::swap(e.first, e.second);
            if (!raw.insert(e).second)
                throw Error(ErrorCode::Invariant, "duplicate intra edge " + edge_str(e));
        }
        raw.clear();
        for (const auto& e : dep) {
            if (!raw.insert(e).second)
                throw Error(ErrorCode::Invariant, "duplicate dependency edge " + edge_str(e, '>'));
        }
    }

    NetworkSpec spec = NetworkSpec::from_parts(mode, std::move(nodes),
                                               std::move(intra), std::move(dep));
    ValidationReport report = validate(spec);
    if (!report.empty())
        throw Error(ErrorCode::Invariant, report.front().message);
    return spec;
}

std::string serialize_network(const NetworkSpec& spec) {
    json doc;
    doc["mode"] = to_string(spec.mode);
    doc["nodes"] = json::array();
    for (const auto& n : spec.nodes) {
        doc["nodes"].push_back({{"id", n.id},
                                {"side", to_string(n.side)},
                                {"kind", to_string(n.kind)}});
    }
    doc["intra_edges"] = json::array();
    for (const auto& e : spec.intra_edges)
        doc["intra_edges"].push_back({e.first, e.second});
    doc["dep_edges"] = json::array();
    if (spec.mode == Mode::Bidirectional) {
        for (const auto& e : spec.dependency_pairs())
            doc["dep_edges"].push_back({e.first, e.second});
    } else {
        for (const auto& e : spec.dep_edges)
            doc["dep_edges"].push_back({e.first, e.second});
    }
    return doc.dump(2) + "\n";
}

NetworkSpec load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

void save_network(const NetworkSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    out << serialize_network(spec);
    if (!out)
        throw Error(ErrorCode::Io, "write to " + path + " failed");
}

bool is_star_mode(const NetworkSpec& spec) {
    for (Side side : {Side::Power, Side::Comm}) {
        std::vector<std::string> sources = spec.source_ids(side);
        if (sources.size() != 1) return false;
        const std::string& hub = sources.front();
        for (const auto& n : spec.nodes) {
            if (n.side != side || n.kind != Kind::Relay) continue;
            size_t edges = 0;
            bool to_hub = false;
            for (const auto& e : spec.intra_edges) {
                if (e.first != n.id && e.second != n.id) continue;
                ++edges;
                const std::string& other = e.first == n.id ? e.second : e.first;
                if (other == hub) to_hub = true;
            }
            if (edges != 1 || !to_hub) return false;
        }
    }
    return true;
}

DepDigraph project_dependency_digraph(const NetworkSpec& spec) {
    if (!is_star_mode(spec))
        throw Error(ErrorCode::NotStar, "network is not in star mode");
    DepDigraph g;
    for (const auto& n : spec.nodes) {
        if (n.kind != Kind::Relay) continue;
        g.nodes.push_back(n.id);
        g.side_of[n.id] = n.side;
    }
    g.arcs = spec.dep_edges;
    return g;
}

} // namespace mtfr
