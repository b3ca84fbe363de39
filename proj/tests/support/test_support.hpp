#pragma once

// Shared fixtures for the test suites: tiny named spaces, an independent
// brute-force isomorphism oracle, and seeded random generators. Everything
// here stays independent of the canonical-labeling path it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "topodeck/graph.hpp"

namespace tsup {

using topodeck::Edge;
using topodeck::EndSlot;
using topodeck::TopoGraph;
using topodeck::VertexId;

inline TopoGraph make(std::vector<VertexId> vs,
                      std::vector<std::tuple<std::string, std::string, std::string>> es,
                      std::int64_t circles = 0) {
    TopoGraph g;
    g.vertices = std::move(vs);
    for (auto& [id, a, b] : es) {
        Edge e;
        e.id = id;
        e.ends[0] = a == "*" ? EndSlot::open_end() : EndSlot::attached(a);
        e.ends[1] = b == "*" ? EndSlot::open_end() : EndSlot::attached(b);
        g.edges.push_back(std::move(e));
    }
    g.circles = circles;
    return g;
}

// The unit interval: one closed edge.
inline TopoGraph interval() { return make({"a", "b"}, {{"e0", "a", "b"}}); }

// The circle as a bare component count.
inline TopoGraph circle() { return make({}, {}, 1); }

// Triangle: homeomorphic to the circle.
inline TopoGraph k3() {
    return make({"a", "b", "c"}, {{"e0", "a", "b"}, {"e1", "b", "c"}, {"e2", "c", "a"}});
}

// One vertex carrying two loops.
inline TopoGraph figure_eight() { return make({"v"}, {{"e0", "v", "v"}, {"e1", "v", "v"}}); }

// The half-open interval [0,1).
inline TopoGraph ray() { return make({"a"}, {{"e0", "a", "*"}}); }

// The open interval, i.e. the real line.
inline TopoGraph open_arc() { return make({}, {{"e0", "*", "*"}}); }

// ---------------------------------------------------------------------------
// Brute-force isomorphism: decides by searching vertex bijections, entirely
// independent of color refinement. Invariant mismatches (counts, degree and
// loop profiles) end the search early; no bijection could repair them.

struct IsoProfile {
    std::size_t n, m;
    std::int64_t circles;
    std::vector<std::pair<int, int>> degrees_loops;  // sorted (degree, loops)
    int open_arcs, half_open;

    bool operator==(const IsoProfile&) const = default;
};

inline IsoProfile iso_profile(const TopoGraph& g) {
    IsoProfile p;
    p.n = g.vertices.size();
    p.m = g.edges.size();
    p.circles = g.circles;
    for (const VertexId& v : g.vertices)
        p.degrees_loops.emplace_back(g.degree(v), g.loop_count(v));
    std::sort(p.degrees_loops.begin(), p.degrees_loops.end());
    p.open_arcs = 0;
    p.half_open = 0;
    for (const Edge& e : g.edges) {
        if (e.is_open_arc()) ++p.open_arcs;
        if (e.is_half_open()) ++p.half_open;
    }
    return p;
}

// Edge multiset over vertex indices; open end = -1, pair sorted, list sorted.
inline std::vector<std::pair<int, int>> edge_multiset(const TopoGraph& g,
                                                      const std::map<VertexId, int>& index) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges) {
        int a = e.ends[0].open() ? -1 : index.at(*e.ends[0].vertex);
        int b = e.ends[1].open() ? -1 : index.at(*e.ends[1].vertex);
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool brute_force_isomorphic(const TopoGraph& g, const TopoGraph& h) {
    if (iso_profile(g) != iso_profile(h)) return false;

    std::map<VertexId, int> gi, hi;
    for (const VertexId& v : g.vertices) gi.emplace(v, static_cast<int>(gi.size()));
    for (const VertexId& v : h.vertices) hi.emplace(v, static_cast<int>(hi.size()));
    auto target = edge_multiset(h, hi);

    std::vector<int> perm(g.vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::map<VertexId, int> mapped;
        for (const auto& [v, i] : gi) mapped[v] = perm[static_cast<std::size_t>(i)];
        if (edge_multiset(g, mapped) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Seeded generators.

// Renames every vertex and edge id injectively and shuffles member order.
inline TopoGraph relabel(const TopoGraph& g, std::mt19937& rng) {
    std::vector<std::string> fresh;
    for (std::size_t i = 0; i < g.vertices.size() + g.edges.size(); ++i)
        fresh.push_back("n" + std::to_string(i));
    std::shuffle(fresh.begin(), fresh.end(), rng);

    std::map<VertexId, std::string> vmap;
    std::size_t next = 0;
    for (const VertexId& v : g.vertices) vmap[v] = fresh[next++];

    TopoGraph out;
    for (const VertexId& v : g.vertices) out.vertices.push_back(vmap[v]);
    for (const Edge& e : g.edges) {
        Edge ne;
        ne.id = fresh[next++];
        for (int i = 0; i < 2; ++i)
            ne.ends[i] = e.ends[i].open() ? EndSlot::open_end()
                                          : EndSlot::attached(vmap[*e.ends[i].vertex]);
        out.edges.push_back(std::move(ne));
    }
    out.circles = g.circles;
    std::shuffle(out.vertices.begin(), out.vertices.end(), rng);
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    return out;
}

// Random valid graph; open slots only when allow_open.
inline TopoGraph random_graph(std::mt19937& rng, int max_vertices, int max_edges,
                              bool allow_open) {
    std::uniform_int_distribution<int> nv_dist(allow_open ? 0 : 1, max_vertices);
    int nv = nv_dist(rng);
    TopoGraph g;
    for (int i = 0; i < nv; ++i) g.vertices.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<int> ne_dist(0, max_edges);
    int ne = ne_dist(rng);
    std::uniform_int_distribution<int> end_dist(0, allow_open ? nv : nv - 1);
    for (int i = 0; i < ne; ++i) {
        if (nv == 0 && !allow_open) break;
        Edge e;
        e.id = "e" + std::to_string(i);
        for (int s = 0; s < 2; ++s) {
            int pick = end_dist(rng);
            e.ends[s] = (pick == nv) ? EndSlot::open_end()
                                     : EndSlot::attached("v" + std::to_string(pick));
        }
        g.edges.push_back(std::move(e));
    }
    g.circles = std::uniform_int_distribution<int>(0, 2)(rng);
    return g;
}

}  // namespace tsup
