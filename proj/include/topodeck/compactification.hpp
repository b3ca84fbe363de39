#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "topodeck/graph.hpp"
#include "topodeck/surgery.hpp"

namespace topodeck {

/// Value of the end invariant E(x): the largest N such that a punctured
/// compact neighbourhood of x admits an N-point compactification. Lives in
/// N ∪ {infinity} for type fidelity; the infinite value is representable but
/// never produced for finite graphs (every point has a compact neighbourhood
/// with finitely many ends).
struct EStarValue {
    bool infinite = false;
    unsigned value = 0;

    static EStarValue finite(unsigned n) { return {false, n}; }
    static EStarValue infinity() { return {true, 0}; }

    std::string to_string() const { return infinite ? "infinity" : std::to_string(value); }
    bool operator==(const EStarValue&) const = default;
};

/// Number of ends: one per open slot, so a half-open edge contributes 1 and
/// an open arc contributes 2. Equals the remainder size of the maximal
/// finite (Freudenthal) compactification; 0 for compact graphs.
unsigned end_count(const TopoGraph& g);

/// The closed star of p: a compact neighbourhood consisting of the point,
/// materialized as a vertex, with each incident slot truncated at a fresh
/// midpoint vertex.
struct ClosedStar {
    TopoGraph star;
    VertexId center;
};
ClosedStar closed_star(const TopoGraph& g, const PointClass& p);

/// E(p) computed from the definition: the end count of the punctured closed
/// star. The choice of compact neighbourhood does not matter. Also checked
/// against the closed form (estar_closed_form) before returning.
EStarValue estar(const TopoGraph& g, const PointClass& p);

/// Graph closed form for E: a vertex scores its attached-slot count (a loop
/// counts twice), edge-interior and circle points score 2, an isolated
/// vertex scores 0.
unsigned estar_closed_form(const TopoGraph& g, const PointClass& p);

/// True iff E at the collapsed point equals E(p) + E(q), i.e. the additivity
/// law for the two-point quotient. Requires compact g and p != q.
bool estar_additivity_check(const TopoGraph& g, const PointClass& p, const PointClass& q);

/// The maximal finite compactification: one fresh degree-1 vertex per open
/// slot. The remainder has exactly end_count(g) points. Throws
/// std::domain_error on compact input.
TopoGraph freudenthal(const TopoGraph& g);

struct AlexandroffResult {
    TopoGraph graph;
    VertexId infinity_vertex;
};

/// The 1-point compactification: every open slot is attached to one fresh
/// vertex. Satisfies estar(result, infinity_vertex) == end_count(g). Throws
/// std::domain_error on compact input.
AlexandroffResult alexandroff(const TopoGraph& g);

/// An open slot named by its edge and end index (0 or 1).
using SlotRef = std::pair<EdgeId, int>;

/// All open slots of g, sorted by (edge id, end index).
std::vector<SlotRef> open_slots(const TopoGraph& g);

/// The N-point compactification given by a partition of the open slots into
/// N nonempty blocks: one fresh vertex per block. Throws std::domain_error
/// on compact input and std::invalid_argument if the blocks are not a
/// partition of the open slots (empty block, duplicate, or non-covering).
TopoGraph finite_compactification(const TopoGraph& g,
                                  const std::vector<std::vector<SlotRef>>& blocks);

/// Largest N admitting an N-point compactification: end_count(g) for
/// non-compact g, 0 for compact g (the empty-remainder convention).
unsigned max_nstar(const TopoGraph& g);

/// One half-open tail of an N-star decomposition: an edge of the witness
/// whose open piece (everything past its base vertex) belongs to a part.
struct TailSegment {
    EdgeId tail_edge;
    VertexId base;
    auto operator<=>(const TailSegment&) const = default;
};

/// Magill decomposition {K, G_1..G_N}: a compact core K plus N disjoint
/// nonempty open parts, each a union of half-open tails, with K ∪ G_i
/// non-compact for every i and K ∪ ⋃G_i the whole space.
struct NStarWitness {
    TopoGraph core;
    std::vector<std::vector<TailSegment>> parts;
};

/// Constructs the witness for an N-point compactification, 1 <= N <=
/// end_count(g): subdivides each open-ended edge once, keeps everything up
/// to the subdivision points as K, and groups the tails (sorted by slot id)
/// into N contiguous, evenly sized parts. Throws std::out_of_range for N
/// outside [1, end_count] and std::domain_error for compact g.
NStarWitness nstar_witness(const TopoGraph& g, unsigned n);

/// Structural check of the three N-star conditions against the host g.
/// Returns nullopt if valid, else a reason.
std::optional<std::string> validate_nstar(const TopoGraph& g, const NStarWitness& w);

/// Number of pieces of the punctured closed star that limit onto p, i.e.
/// components containing a slot that was attached to p before deletion.
unsigned splitting_number(const TopoGraph& g, const PointClass& p);

/// Number of pieces of the graph-deleted closed star that meet the star
/// component of p. Computed without puncturing: the star minus the center
/// vertex and its incident edges, counting components that were adjacent to
/// the center.
unsigned separating_number(const TopoGraph& g, const PointClass& p);

}  // namespace topodeck
