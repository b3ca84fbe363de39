#pragma once

#include "topodeck/graph.hpp"

namespace topodeck {

/// A smoothed, canonically labeled representative together with a
/// deterministic certificate. Two graphs receive equal certificates iff they
/// are isomorphic after smoothing, iff the spaces they model are
/// homeomorphic; the certificate is the computable surrogate for the
/// homeomorphism class.
///
/// Certificate grammar (version TG1, one line, bit-stable across runs):
///   TG1;n=<vertex count>;E=<a-b,...>;c=<circles>
/// where a,b are canonical vertex indices or '*' for an open end, each pair
/// is sorted (numbers first), and the edge list is sorted.
struct CanonicalForm {
    TopoGraph graph;
    std::string certificate;
};

/// Smooths g, then canonically relabels it via iterative color refinement on
/// (degree, loop count, open far-end count) with backtracking over ties.
CanonicalForm canon(const TopoGraph& g);

/// Shorthand for canon(g).certificate.
std::string certificate(const TopoGraph& g);

/// True iff canon(g).certificate == canon(h).certificate.
bool is_homeomorphic(const TopoGraph& g, const TopoGraph& h);

}  // namespace topodeck
