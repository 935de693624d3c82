#ifndef MTFR_NETWORK_HPP
#define MTFR_NETWORK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mtfr/errors.hpp"

namespace mtfr {

enum class Side { Power, Comm };
enum class Kind { Source, Relay };
enum class Mode { Unidirectional, Bidirectional };

const char* to_string(Side side);
const char* to_string(Kind kind);
const char* to_string(Mode mode);

/// A power-grid or communication node. SOURCE on the power side is a
/// generator, SOURCE on the comm side is a control center; RELAY is a
/// substation or a router.
struct NodeRef {
    std::string id;
    Side side = Side::Power;
    Kind kind = Kind::Relay;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

using Edge = std::pair<std::string, std::string>;

/// Full interdependent topology. Intra edges are undirected and stay inside
/// one side; dependency edges are directed arcs between RELAY nodes on
/// opposite sides. Bidirectional networks store both directions of every
/// dependency pair so that both modes share one digraph representation.
///
/// Instances are kept in canonical form: nodes sorted by id, intra edges
/// stored with the lexicographically smaller endpoint first, edge lists
/// sorted and duplicate-free. Construction goes through from_parts() or
/// parse_network(); after that the value is immutable in practice and safe
/// to share across threads.
struct NetworkSpec {
    Mode mode = Mode::Unidirectional;
    std::vector<NodeRef> nodes;
    std::vector<Edge> intra_edges;
    std::vector<Edge> dep_edges;

    /// Canonicalizes: sorts everything, and in bidirectional mode closes
    /// dep_edges under arc reversal. Does not validate.
    static NetworkSpec from_parts(Mode mode, std::vector<NodeRef> nodes,
                                  std::vector<Edge> intra_edges,
                                  std::vector<Edge> dep_edges);

    const NodeRef* find(const std::string& id) const;
    std::vector<std::string> relay_ids() const;
    std::vector<std::string> source_ids(Side side) const;
    size_t relay_count() const;

    /// Dependency pairs with the power-side id first, each pair listed once.
    std::vector<Edge> dependency_pairs() const;

    friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

/// Bipartite dependency digraph of a star-mode network: nodes are the RELAY
/// ids, arcs are exactly the dependency edges.
struct DepDigraph {
    std::vector<std::string> nodes; // sorted by id
    std::vector<Edge> arcs;         // sorted
    std::map<std::string, Side> side_of;

    friend bool operator==(const DepDigraph&, const DepDigraph&) = default;
};

enum class ValidationCode {
    DuplicateId,
    UnknownNode,
    SelfLoop,
    DuplicateEdge,
    CrossSideIntra,
    SameSideDep,
    DepEndpointNotRelay,
    AsymmetricDep,
};

const char* to_string(ValidationCode code);

struct ValidationIssue {
    ValidationCode code;
    std::string message; // names the offending node or edge
};

using ValidationReport = std::vector<ValidationIssue>;

/// Parses a UTF-8 topology document (see README for the JSON schema).
/// In bidirectional documents dependency pairs may be listed once; the
/// parser symmetrizes them. Throws Error with code Syntax, Schema or
/// Invariant.
NetworkSpec parse_network(const std::string& text);

/// Canonical serialization: nodes and edges ordered lexicographically by id,
/// bidirectional dependency pairs written once with the power-side id first.
/// serialize(parse(d)) parses back equal to parse(d).
std::string serialize_network(const NetworkSpec& spec);

NetworkSpec load_network(const std::string& path);
void save_network(const NetworkSpec& spec, const std::string& path);

/// Lists every invariant violation; an empty report means the spec is valid.
ValidationReport validate(const NetworkSpec& spec);

/// True iff each side has exactly one SOURCE and every RELAY's intra edges
/// consist of exactly one edge to that source.
bool is_star_mode(const NetworkSpec& spec);

/// Projects a star-mode network onto its dependency digraph.
/// Throws Error(NotStar) if is_star_mode(spec) is false.
DepDigraph project_dependency_digraph(const NetworkSpec& spec);

} // namespace mtfr

#endif
