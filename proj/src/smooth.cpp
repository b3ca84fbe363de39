#include "topodeck/smooth.hpp"

#include <algorithm>
#include <stdexcept>

namespace topodeck {

namespace {

// Indices into g.edges of the edges carrying v's attached slots, one entry
// per slot (a loop lists its edge twice).
std::vector<std::size_t> slot_edges(const TopoGraph& g, const VertexId& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        int k = g.edges[i].slots_at(v);
        for (int j = 0; j < k; ++j) out.push_back(i);
    }
    return out;
}

// Suppresses v in place. Caller guarantees degree(v) == 2.
void suppress(TopoGraph& g, const VertexId& v) {
    auto slots = slot_edges(g, v);
    if (slots.size() != 2) throw std::logic_error("suppress: vertex is not degree 2");

    if (slots[0] == slots[1]) {
        // Rule (b): lone loop vertex becomes a circle.
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(slots[0]));
        g.circles += 1;
    } else {
        // Rule (a): splice the two incident edges, keeping the far slots.
        const Edge& e1 = g.edges[slots[0]];
        const Edge& e2 = g.edges[slots[1]];
        EndSlot far1 = e1.ends[0].attached_to(v) ? e1.ends[1] : e1.ends[0];
        EndSlot far2 = e2.ends[0].attached_to(v) ? e2.ends[1] : e2.ends[0];
        Edge spliced{fresh_id(g, "s"), {far1, far2}};
        // Erase higher index first.
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(slots[1]));
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(slots[0]));
        g.edges.push_back(std::move(spliced));
    }
    g.vertices.erase(std::find(g.vertices.begin(), g.vertices.end(), v));
}

std::optional<VertexId> first_suppressible(const TopoGraph& g) {
    std::optional<VertexId> best;
    for (const VertexId& v : g.vertices) {
        if (g.degree(v) != 2) continue;
        if (!best || v < *best) best = v;
    }
    return best;
}

}  // namespace

bool is_smooth(const TopoGraph& g) { return !first_suppressible(g).has_value(); }

TopoGraph smooth(const TopoGraph& g) {
    require_valid(g, "smooth");
    TopoGraph out = g;
    while (auto v = first_suppressible(out)) suppress(out, *v);
    return out;
}

}  // namespace topodeck
