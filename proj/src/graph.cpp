#include "topodeck/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace topodeck {

bool TopoGraph::has_vertex(const VertexId& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool TopoGraph::has_edge(const EdgeId& e) const { return find_edge(e) != nullptr; }

const Edge* TopoGraph::find_edge(const EdgeId& e) const {
    for (const Edge& edge : edges)
        if (edge.id == e) return &edge;
    return nullptr;
}

int TopoGraph::degree(const VertexId& v) const {
    int d = 0;
    for (const Edge& e : edges) d += e.slots_at(v);
    return d;
}

int TopoGraph::loop_count(const VertexId& v) const {
    int n = 0;
    for (const Edge& e : edges)
        if (e.is_loop() && e.ends[0].attached_to(v)) ++n;
    return n;
}

int TopoGraph::open_far_count(const VertexId& v) const {
    int n = 0;
    for (const Edge& e : edges) {
        if (e.ends[0].attached_to(v) && e.ends[1].open()) ++n;
        if (e.ends[1].attached_to(v) && e.ends[0].open()) ++n;
    }
    return n;
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::DanglingReference: return "dangling-reference";
        case ViolationKind::DuplicateVertexId: return "duplicate-vertex-id";
        case ViolationKind::DuplicateEdgeId: return "duplicate-edge-id";
        case ViolationKind::NegativeCircles: return "negative-circles";
    }
    return "unknown";
}

std::optional<Violation> validate(const TopoGraph& g) {
    std::set<VertexId> vs;
    for (const VertexId& v : g.vertices) {
        if (!vs.insert(v).second)
            return Violation{ViolationKind::DuplicateVertexId, "vertex '" + v + "' declared twice"};
    }
    std::set<EdgeId> es;
    for (const Edge& e : g.edges) {
        if (!es.insert(e.id).second)
            return Violation{ViolationKind::DuplicateEdgeId, "edge '" + e.id + "' declared twice"};
        for (const EndSlot& s : e.ends) {
            if (!s.open() && vs.count(*s.vertex) == 0)
                return Violation{ViolationKind::DanglingReference,
                                 "edge '" + e.id + "' references missing vertex '" + *s.vertex + "'"};
        }
    }
    if (g.circles < 0)
        return Violation{ViolationKind::NegativeCircles,
                         "circles = " + std::to_string(g.circles)};
    return std::nullopt;
}

void require_valid(const TopoGraph& g, const char* op) {
    if (auto v = validate(g))
        throw std::invalid_argument(std::string(op) + ": invalid graph (" + to_string(v->kind) +
                                    ": " + v->detail + ")");
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<TopoGraph> components(const TopoGraph& g) {
    // Nodes of the union-find: vertices, then edges.
    std::map<VertexId, int> vidx;
    for (const VertexId& v : g.vertices) vidx.emplace(v, static_cast<int>(vidx.size()));
    const int nv = static_cast<int>(g.vertices.size());
    UnionFind uf(g.vertices.size() + g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        for (const EndSlot& s : g.edges[i].ends)
            if (!s.open()) uf.unite(nv + static_cast<int>(i), vidx.at(*s.vertex));
    }

    std::map<int, TopoGraph> by_root;
    for (const VertexId& v : g.vertices)
        by_root[uf.find(vidx.at(v))].vertices.push_back(v);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        by_root[uf.find(nv + static_cast<int>(i))].edges.push_back(g.edges[i]);

    // Order by smallest member id; a vertexless open arc is keyed by its edge id.
    std::vector<std::pair<std::string, TopoGraph>> keyed;
    for (auto& [root, comp] : by_root) {
        std::string key;
        for (const VertexId& v : comp.vertices)
            if (key.empty() || v < key) key = v;
        for (const Edge& e : comp.edges)
            if (key.empty() || e.id < key) key = e.id;
        keyed.emplace_back(key, std::move(comp));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<TopoGraph> out;
    out.reserve(keyed.size() + static_cast<std::size_t>(std::max<std::int64_t>(g.circles, 0)));
    for (auto& [key, comp] : keyed) out.push_back(std::move(comp));
    for (std::int64_t i = 0; i < g.circles; ++i) {
        TopoGraph circle;
        circle.circles = 1;
        out.push_back(std::move(circle));
    }
    return out;
}

bool is_connected(const TopoGraph& g) { return components(g).size() == 1; }

bool is_compact(const TopoGraph& g) {
    for (const Edge& e : g.edges)
        if (e.open_slots() > 0) return false;
    return true;
}

bool has_at_least_points(const TopoGraph& g, std::size_t k) {
    if (!g.edges.empty() || g.circles > 0) return true;
    return g.vertices.size() >= k;
}

TopoGraph subdivide(const TopoGraph& g, const EdgeId& e) {
    const Edge* edge = g.find_edge(e);
    if (!edge) throw std::invalid_argument("subdivide: unknown edge id '" + e + "'");

    TopoGraph out = g;
    VertexId mid = fresh_id(g, "w");
    auto halves = fresh_ids(g, "s", 2);
    out.vertices.push_back(mid);
    Edge half1{halves[0], {edge->ends[0], EndSlot::attached(mid)}};
    Edge half2{halves[1], {EndSlot::attached(mid), edge->ends[1]}};
    out.edges.erase(std::find_if(out.edges.begin(), out.edges.end(),
                                 [&](const Edge& x) { return x.id == e; }));
    out.edges.push_back(half1);
    out.edges.push_back(half2);
    return out;
}

std::vector<std::string> fresh_ids(const TopoGraph& g, const std::string& prefix, std::size_t n) {
    std::set<std::string> taken;
    for (const VertexId& v : g.vertices) taken.insert(v);
    for (const Edge& e : g.edges) taken.insert(e.id);
    std::vector<std::string> out;
    for (int k = 0; out.size() < n; ++k) {
        std::string candidate = prefix + std::to_string(k);
        if (taken.count(candidate) == 0) out.push_back(candidate);
    }
    return out;
}

std::string fresh_id(const TopoGraph& g, const std::string& prefix) {
    return fresh_ids(g, prefix, 1)[0];
}

}  // namespace topodeck
