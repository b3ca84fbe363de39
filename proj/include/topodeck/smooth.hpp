#pragma once

#include "topodeck/graph.hpp"

namespace topodeck {

/// Topological normal form: suppresses every degree-2 vertex, to fixpoint.
///
/// A degree-2 vertex is topologically invisible (its neighbourhood is an open
/// interval), so suppression preserves the homeomorphism type:
///   (a) a vertex with its two attached slots on two distinct edges is
///       deleted and the edges are spliced into one, keeping the far slots
///       (which may themselves be attached or open);
///   (b) a vertex whose only slots are the two ends of a single loop is
///       deleted together with the loop, and the circle count is bumped.
/// Vertices of degree 0, 1 or >= 3 are never touched. The result is unique
/// up to isomorphism regardless of suppression order; this implementation
/// always suppresses the lexicographically smallest suppressible vertex, so
/// the output is also deterministic as a labeled graph.
TopoGraph smooth(const TopoGraph& g);

/// True iff g has no suppressible degree-2 vertex.
bool is_smooth(const TopoGraph& g);

}  // namespace topodeck
