#include "topodeck/surgery.hpp"

#include <algorithm>
#include <stdexcept>

namespace topodeck {

std::string PointClass::to_string() const {
    switch (kind) {
        case Kind::Vertex: return "vertex:" + id;
        case Kind::EdgeInterior: return "edge:" + id;
        case Kind::Circle: return "circle";
    }
    return "?";
}

std::optional<PointClass> PointClass::parse(std::string_view s) {
    if (s == "circle") return circle();
    if (s.rfind("vertex:", 0) == 0 && s.size() > 7) return vertex(std::string(s.substr(7)));
    if (s.rfind("edge:", 0) == 0 && s.size() > 5) return edge_interior(std::string(s.substr(5)));
    return std::nullopt;
}

bool point_class_valid(const TopoGraph& g, const PointClass& p) {
    switch (p.kind) {
        case PointClass::Kind::Vertex: return g.has_vertex(p.id);
        case PointClass::Kind::EdgeInterior: return g.has_edge(p.id);
        case PointClass::Kind::Circle: return g.circles >= 1;
    }
    return false;
}

std::vector<PointClass> point_classes(const TopoGraph& g) {
    std::vector<PointClass> out;
    std::vector<VertexId> vs = g.vertices;
    std::sort(vs.begin(), vs.end());
    for (VertexId& v : vs) out.push_back(PointClass::vertex(std::move(v)));
    std::vector<EdgeId> es;
    for (const Edge& e : g.edges) es.push_back(e.id);
    std::sort(es.begin(), es.end());
    for (EdgeId& e : es) out.push_back(PointClass::edge_interior(std::move(e)));
    if (g.circles >= 1) out.push_back(PointClass::circle());
    return out;
}

namespace {

void require_point(const TopoGraph& g, const PointClass& p, const char* op) {
    if (!point_class_valid(g, p))
        throw std::invalid_argument(std::string(op) + ": invalid point class '" + p.to_string() +
                                    "'");
}

}  // namespace

TopoGraph remove_point(const TopoGraph& g, const PointClass& p) {
    require_valid(g, "remove_point");
    require_point(g, p, "remove_point");

    TopoGraph out = g;
    switch (p.kind) {
        case PointClass::Kind::Vertex: {
            out.vertices.erase(std::find(out.vertices.begin(), out.vertices.end(), p.id));
            for (Edge& e : out.edges)
                for (EndSlot& s : e.ends)
                    if (s.attached_to(p.id)) s = EndSlot::open_end();
            break;
        }
        case PointClass::Kind::EdgeInterior: {
            auto it = std::find_if(out.edges.begin(), out.edges.end(),
                                   [&](const Edge& e) { return e.id == p.id; });
            Edge old = *it;
            out.edges.erase(it);
            auto ids = fresh_ids(g, "r", 2);
            out.edges.push_back(Edge{ids[0], {old.ends[0], EndSlot::open_end()}});
            out.edges.push_back(Edge{ids[1], {old.ends[1], EndSlot::open_end()}});
            break;
        }
        case PointClass::Kind::Circle: {
            out.circles -= 1;
            out.edges.push_back(Edge{fresh_id(g, "r"), {EndSlot::open_end(), EndSlot::open_end()}});
            break;
        }
    }
    return out;
}

Deck deck(const TopoGraph& g) {
    require_valid(g, "deck");
    if (!is_compact(g)) throw std::domain_error("deck: non-compact input");
    if (!has_at_least_points(g, 3)) throw std::domain_error("deck: input has fewer than 3 points");

    Deck d;
    for (const PointClass& p : point_classes(g)) {
        std::string cert = canon(remove_point(g, p)).certificate;
        d.cards.insert(cert);
        d.labeled_cards.emplace(p, std::move(cert));
    }
    return d;
}

namespace {

// Ensures p is a vertex of the graph, subdividing an edge or marking a
// circle if needed. Returns the vertex carrying the point.
VertexId materialize(TopoGraph& g, const PointClass& p) {
    switch (p.kind) {
        case PointClass::Kind::Vertex: return p.id;
        case PointClass::Kind::EdgeInterior: {
            TopoGraph sub = subdivide(g, p.id);
            // The one vertex subdivide() added.
            for (const VertexId& v : sub.vertices)
                if (!g.has_vertex(v)) {
                    g = std::move(sub);
                    return v;
                }
            throw std::logic_error("materialize: subdivision added no vertex");
        }
        case PointClass::Kind::Circle: {
            VertexId v = fresh_id(g, "w");
            EdgeId loop = fresh_id(g, "s");
            g.circles -= 1;
            g.vertices.push_back(v);
            g.edges.push_back(Edge{loop, {EndSlot::attached(v), EndSlot::attached(v)}});
            return v;
        }
    }
    throw std::logic_error("materialize: bad kind");
}

}  // namespace

CollapseResult collapse(const TopoGraph& g, const PointClass& p, const PointClass& q) {
    require_valid(g, "collapse");
    if (p == q) throw std::invalid_argument("collapse: point classes must differ");
    require_point(g, p, "collapse");
    require_point(g, q, "collapse");

    TopoGraph work = g;
    VertexId a = materialize(work, p);
    VertexId b = materialize(work, q);

    VertexId merged = fresh_id(work, "w");
    for (Edge& e : work.edges)
        for (EndSlot& s : e.ends)
            if (s.attached_to(a) || s.attached_to(b)) s = EndSlot::attached(merged);
    std::erase(work.vertices, a);
    std::erase(work.vertices, b);
    work.vertices.push_back(merged);
    return CollapseResult{std::move(work), std::move(merged)};
}

}  // namespace topodeck
