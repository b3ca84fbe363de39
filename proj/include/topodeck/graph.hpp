#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topodeck {

using VertexId = std::string;
using EdgeId = std::string;

/// One end of an edge: either attached to a vertex or an open end.
/// An open end is not a point of the space; it marks a missing endpoint,
/// as in the half-open interval [0,1).
struct EndSlot {
    std::optional<VertexId> vertex;

    bool open() const { return !vertex.has_value(); }
    bool attached_to(const VertexId& v) const { return vertex.has_value() && *vertex == v; }

    static EndSlot attached(VertexId v) { return EndSlot{std::move(v)}; }
    static EndSlot open_end() { return EndSlot{std::nullopt}; }

    bool operator==(const EndSlot&) const = default;
};

struct Edge {
    EdgeId id;
    std::array<EndSlot, 2> ends;

    bool is_loop() const {
        return !ends[0].open() && !ends[1].open() && *ends[0].vertex == *ends[1].vertex;
    }
    bool is_open_arc() const { return ends[0].open() && ends[1].open(); }
    bool is_half_open() const { return ends[0].open() != ends[1].open(); }
    int open_slots() const { return (ends[0].open() ? 1 : 0) + (ends[1].open() ? 1 : 0); }
    /// Number of this edge's slots attached to v (2 for a loop at v).
    int slots_at(const VertexId& v) const {
        return (ends[0].attached_to(v) ? 1 : 0) + (ends[1].attached_to(v) ? 1 : 0);
    }
};

/// Finite multigraph with loops, open edge ends and a count of vertexless
/// circle components; the combinatorial model of a graph-like space with
/// finitely many edges.
///
/// `circles` is signed so that malformed inputs (e.g. a negative count read
/// from a file) can be represented and then rejected by validate().
struct TopoGraph {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    std::int64_t circles = 0;

    bool has_vertex(const VertexId& v) const;
    bool has_edge(const EdgeId& e) const;
    const Edge* find_edge(const EdgeId& e) const;

    /// Count of attached slots at v; a loop contributes 2. Open slots never
    /// contribute: an open end is not a point of the space.
    int degree(const VertexId& v) const;
    int loop_count(const VertexId& v) const;
    /// Open far-ends of edges attached at v (half-open edges hanging off v).
    int open_far_count(const VertexId& v) const;
};

enum class ViolationKind {
    DanglingReference,
    DuplicateVertexId,
    DuplicateEdgeId,
    NegativeCircles,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Checks all TopoGraph invariants; returns the first violation found, in a
/// fixed deterministic order, or nullopt if the graph is well formed.
std::optional<Violation> validate(const TopoGraph& g);

/// Throws std::invalid_argument naming the violation if validate(g) fails.
void require_valid(const TopoGraph& g, const char* op);

/// Connected components. Each circle is its own component, as is each open
/// arc and each isolated vertex. Deterministic order: components containing
/// vertices or edges come first, sorted by their smallest member id; circle
/// components last.
std::vector<TopoGraph> components(const TopoGraph& g);

/// True iff the graph has exactly one component.
bool is_connected(const TopoGraph& g);

/// True iff no edge has an open slot. For graph-like spaces with finitely
/// many edges this is exactly compactness (such spaces are locally compact,
/// and an open end is a missing limit).
bool is_compact(const TopoGraph& g);

/// True iff the space has at least k points. Any edge or circle carries a
/// continuum of points; otherwise the points are the isolated vertices.
bool has_at_least_points(const TopoGraph& g, std::size_t k);

/// Replaces edge e by two edges sharing a fresh degree-2 vertex; each new
/// edge keeps one of e's original end slots. Homeomorphism-safe.
/// Throws std::invalid_argument on an unknown edge id.
TopoGraph subdivide(const TopoGraph& g, const EdgeId& e);

/// Smallest "<prefix><k>" (k = 0, 1, ...) not used by any vertex or edge id.
std::string fresh_id(const TopoGraph& g, const std::string& prefix);

/// The n smallest unused "<prefix><k>" ids, in increasing k order.
std::vector<std::string> fresh_ids(const TopoGraph& g, const std::string& prefix, std::size_t n);

}  // namespace topodeck
