#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "topodeck/canon.hpp"
#include "topodeck/graph.hpp"

namespace topodeck {

/// A deletable point up to ambient homeomorphism: a vertex, an interior
/// point of a named edge, or a point on a circle component. All interior
/// points of one edge give homeomorphic cards, so one class per edge
/// suffices; likewise every circle point is equivalent, so the circle class
/// carries no index.
struct PointClass {
    enum class Kind { Vertex, EdgeInterior, Circle };
    Kind kind = Kind::Circle;
    std::string id;  // vertex or edge id; empty for Circle

    static PointClass vertex(VertexId v) { return {Kind::Vertex, std::move(v)}; }
    static PointClass edge_interior(EdgeId e) { return {Kind::EdgeInterior, std::move(e)}; }
    static PointClass circle() { return {Kind::Circle, {}}; }

    /// "vertex:<id>", "edge:<id>" or "circle".
    std::string to_string() const;
    /// Inverse of to_string(); nullopt on malformed input.
    static std::optional<PointClass> parse(std::string_view s);

    auto operator<=>(const PointClass&) const = default;
};

/// True iff p refers to an existing vertex/edge (Circle needs circles >= 1).
bool point_class_valid(const TopoGraph& g, const PointClass& p);

/// All point classes of g in deterministic order: vertices sorted, then
/// edges sorted, then the circle class if circles >= 1.
std::vector<PointClass> point_classes(const TopoGraph& g);

/// X minus one point of class p:
///   vertex v:   delete v; slots attached at v become open (a loop at v
///               becomes an open arc);
///   edge e:     split e into two edges, each keeping one original end slot
///               plus a fresh open slot;
///   circle:     one circle fewer, one open arc more.
/// Untouched vertices and edges keep their ids. Throws std::invalid_argument
/// on an invalid point class.
TopoGraph remove_point(const TopoGraph& g, const PointClass& p);

/// The deck D(X): the set of homeomorphism classes of all one-point-deleted
/// subspaces. cards is the image of labeled_cards, deduplicated — a set, not
/// a multiset.
struct Deck {
    std::set<std::string> cards;
    std::map<PointClass, std::string> labeled_cards;
};

/// Computes the deck of a compact graph with at least 3 points. Throws
/// std::domain_error on non-compact input or fewer than 3 points.
Deck deck(const TopoGraph& g);

struct CollapseResult {
    TopoGraph graph;
    VertexId merged;
};

/// The quotient identifying one point of class p with one of class q:
/// materializes each as a vertex (subdividing an edge, or converting a
/// circle into a loop on a fresh vertex — both homeomorphism-safe), then
/// merges the two vertices into one fresh vertex carrying all their slots.
/// Throws std::invalid_argument if p == q or either class is invalid.
CollapseResult collapse(const TopoGraph& g, const PointClass& p, const PointClass& q);

}  // namespace topodeck
