#include "topodeck/compactification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "topodeck/canon.hpp"

namespace topodeck {

unsigned end_count(const TopoGraph& g) {
    unsigned n = 0;
    for (const Edge& e : g.edges) n += static_cast<unsigned>(e.open_slots());
    return n;
}

namespace {

void require_point(const TopoGraph& g, const PointClass& p, const char* op) {
    if (!point_class_valid(g, p))
        throw std::invalid_argument(std::string(op) + ": invalid point class '" + p.to_string() +
                                    "'");
}

// Star of an existing vertex: the vertex plus one stub edge per attached
// slot, each truncated at a fresh midpoint.
ClosedStar star_of_vertex(const TopoGraph& g, const VertexId& v) {
    ClosedStar out;
    out.center = v;
    out.star.vertices.push_back(v);
    int k = 0;
    for (const Edge& e : g.edges) {
        for (int i = 0; i < e.slots_at(v); ++i) {
            VertexId mid = fresh_id(out.star, "m");
            EdgeId stub = "st" + std::to_string(k++);
            out.star.vertices.push_back(mid);
            out.star.edges.push_back(Edge{stub, {EndSlot::attached(v), EndSlot::attached(mid)}});
        }
    }
    return out;
}

// Star of an edge-interior or circle point: both have a neighbourhood
// homeomorphic to an open interval, so the star is a path of two stubs.
ClosedStar star_of_interval_point() {
    ClosedStar out;
    out.center = "x";
    out.star.vertices = {"x", "m0", "m1"};
    out.star.edges.push_back(Edge{"st0", {EndSlot::attached("x"), EndSlot::attached("m0")}});
    out.star.edges.push_back(Edge{"st1", {EndSlot::attached("x"), EndSlot::attached("m1")}});
    return out;
}

}  // namespace

ClosedStar closed_star(const TopoGraph& g, const PointClass& p) {
    require_valid(g, "closed_star");
    require_point(g, p, "closed_star");
    if (p.kind == PointClass::Kind::Vertex) return star_of_vertex(g, p.id);
    return star_of_interval_point();
}

unsigned estar_closed_form(const TopoGraph& g, const PointClass& p) {
    require_point(g, p, "estar_closed_form");
    if (p.kind == PointClass::Kind::Vertex) return static_cast<unsigned>(g.degree(p.id));
    return 2;
}

EStarValue estar(const TopoGraph& g, const PointClass& p) {
    require_valid(g, "estar");
    require_point(g, p, "estar");
    ClosedStar cs = closed_star(g, p);
    unsigned definitional = end_count(remove_point(cs.star, PointClass::vertex(cs.center)));
    if (definitional != estar_closed_form(g, p))
        throw std::logic_error("estar: definitional value disagrees with the closed form");
    return EStarValue::finite(definitional);
}

bool estar_additivity_check(const TopoGraph& g, const PointClass& p, const PointClass& q) {
    require_valid(g, "estar_additivity_check");
    if (p == q) throw std::invalid_argument("estar_additivity_check: point classes must differ");
    if (!is_compact(g)) throw std::domain_error("estar_additivity_check: non-compact input");
    EStarValue ep = estar(g, p);
    EStarValue eq = estar(g, q);
    CollapseResult c = collapse(g, p, q);
    EStarValue merged = estar(c.graph, PointClass::vertex(c.merged));
    return merged == EStarValue::finite(ep.value + eq.value);
}

TopoGraph freudenthal(const TopoGraph& g) {
    require_valid(g, "freudenthal");
    if (is_compact(g)) throw std::domain_error("freudenthal: compact input");
    TopoGraph out = g;
    auto ids = fresh_ids(g, "f", end_count(g));
    std::size_t next = 0;
    for (Edge& e : out.edges)
        for (EndSlot& s : e.ends)
            if (s.open()) {
                out.vertices.push_back(ids[next]);
                s = EndSlot::attached(ids[next]);
                ++next;
            }
    return out;
}

AlexandroffResult alexandroff(const TopoGraph& g) {
    require_valid(g, "alexandroff");
    if (is_compact(g)) throw std::domain_error("alexandroff: compact input");
    TopoGraph out = g;
    VertexId inf = fresh_id(g, "inf");
    out.vertices.push_back(inf);
    for (Edge& e : out.edges)
        for (EndSlot& s : e.ends)
            if (s.open()) s = EndSlot::attached(inf);
    return AlexandroffResult{std::move(out), std::move(inf)};
}

std::vector<SlotRef> open_slots(const TopoGraph& g) {
    std::vector<SlotRef> out;
    for (const Edge& e : g.edges)
        for (int i = 0; i < 2; ++i)
            if (e.ends[i].open()) out.emplace_back(e.id, i);
    std::sort(out.begin(), out.end());
    return out;
}

TopoGraph finite_compactification(const TopoGraph& g,
                                  const std::vector<std::vector<SlotRef>>& blocks) {
    require_valid(g, "finite_compactification");
    if (is_compact(g)) throw std::domain_error("finite_compactification: compact input");

    std::vector<SlotRef> all = open_slots(g);
    std::set<SlotRef> expected(all.begin(), all.end());
    std::set<SlotRef> seen;
    for (const auto& block : blocks) {
        if (block.empty())
            throw std::invalid_argument("finite_compactification: empty partition block");
        for (const SlotRef& s : block) {
            if (expected.count(s) == 0)
                throw std::invalid_argument("finite_compactification: '" + s.first + "' end " +
                                            std::to_string(s.second) + " is not an open slot");
            if (!seen.insert(s).second)
                throw std::invalid_argument("finite_compactification: slot listed twice");
        }
    }
    if (seen != expected)
        throw std::invalid_argument("finite_compactification: partition does not cover all open slots");

    TopoGraph out = g;
    auto ids = fresh_ids(g, "f", blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        out.vertices.push_back(ids[b]);
        for (const SlotRef& s : blocks[b]) {
            for (Edge& e : out.edges)
                if (e.id == s.first) e.ends[s.second] = EndSlot::attached(ids[b]);
        }
    }
    return out;
}

unsigned max_nstar(const TopoGraph& g) {
    require_valid(g, "max_nstar");
    return is_compact(g) ? 0 : end_count(g);
}

NStarWitness nstar_witness(const TopoGraph& g, unsigned n) {
    require_valid(g, "nstar_witness");
    if (is_compact(g)) throw std::domain_error("nstar_witness: compact input");
    unsigned ends = end_count(g);
    if (n < 1 || n > ends)
        throw std::out_of_range("nstar_witness: N must be within [1, " + std::to_string(ends) +
                                "]");

    // Truncate every open-ended edge at one fresh midpoint; each open slot
    // leaves a half-open tail based at that midpoint.
    NStarWitness w;
    w.core = g;
    std::vector<TailSegment> tails;

    std::vector<EdgeId> open_edges;
    for (const Edge& e : g.edges)
        if (e.open_slots() > 0) open_edges.push_back(e.id);
    std::sort(open_edges.begin(), open_edges.end());

    auto mid_ids = fresh_ids(g, "nm", open_edges.size());
    auto tail_ids = fresh_ids(g, "nt", ends);
    std::size_t next_mid = 0, next_tail = 0;
    for (const EdgeId& id : open_edges) {
        auto it = std::find_if(w.core.edges.begin(), w.core.edges.end(),
                               [&](const Edge& e) { return e.id == id; });
        VertexId mid = mid_ids[next_mid++];
        w.core.vertices.push_back(mid);
        if (it->is_open_arc()) {
            w.core.edges.erase(it);
        } else {
            for (EndSlot& s : it->ends)
                if (s.open()) s = EndSlot::attached(mid);
        }
        const Edge* orig = g.find_edge(id);
        for (int i = 0; i < orig->open_slots(); ++i)
            tails.push_back(TailSegment{tail_ids[next_tail++], mid});
    }

    // Contiguous, evenly sized blocks over the tails in slot order.
    std::size_t t = tails.size(), idx = 0;
    for (unsigned b = 0; b < n; ++b) {
        std::size_t size = t / n + (b < t % n ? 1 : 0);
        std::vector<TailSegment> part;
        for (std::size_t i = 0; i < size; ++i) part.push_back(tails[idx++]);
        w.parts.push_back(std::move(part));
    }
    return w;
}

namespace {

TopoGraph attach_tails(const TopoGraph& core, const std::vector<TailSegment>& tails) {
    TopoGraph out = core;
    for (const TailSegment& t : tails)
        out.edges.push_back(Edge{t.tail_edge, {EndSlot::attached(t.base), EndSlot::open_end()}});
    return out;
}

}  // namespace

std::optional<std::string> validate_nstar(const TopoGraph& g, const NStarWitness& w) {
    if (validate(w.core)) return "core is not a valid graph";
    if (!is_compact(w.core)) return "core is not compact";

    std::set<EdgeId> tail_ids;
    std::vector<TailSegment> all_tails;
    for (const auto& part : w.parts) {
        if (part.empty()) return "empty part";
        for (const TailSegment& t : part) {
            if (!tail_ids.insert(t.tail_edge).second) return "tail listed in two parts";
            if (w.core.has_edge(t.tail_edge)) return "tail id collides with a core edge";
            if (!w.core.has_vertex(t.base)) return "tail base is not a core vertex";
            all_tails.push_back(t);
        }
    }

    // K ∪ G_i must be non-compact for every part.
    for (const auto& part : w.parts)
        if (is_compact(attach_tails(w.core, part))) return "core plus part is compact";

    // K ∪ ⋃G_i must reassemble the whole space.
    TopoGraph whole = attach_tails(w.core, all_tails);
    if (validate(whole)) return "core plus tails is not a valid graph";
    if (certificate(whole) != certificate(g)) return "parts and core do not reassemble the space";
    return std::nullopt;
}

unsigned splitting_number(const TopoGraph& g, const PointClass& p) {
    require_valid(g, "splitting_number");
    require_point(g, p, "splitting_number");
    ClosedStar cs = closed_star(g, p);
    TopoGraph punctured = remove_point(cs.star, PointClass::vertex(cs.center));
    unsigned n = 0;
    for (const TopoGraph& comp : components(punctured)) {
        bool limits_to_center = false;  // carries a slot opened by the deletion
        for (const Edge& e : comp.edges)
            if (e.open_slots() > 0) limits_to_center = true;
        if (limits_to_center) ++n;
    }
    return n;
}

unsigned separating_number(const TopoGraph& g, const PointClass& p) {
    require_valid(g, "separating_number");
    require_point(g, p, "separating_number");
    ClosedStar cs = closed_star(g, p);

    // Graph-theoretic deletion: drop the center and its incident edges.
    TopoGraph rest;
    std::set<VertexId> adjacent;
    for (const VertexId& v : cs.star.vertices)
        if (v != cs.center) rest.vertices.push_back(v);
    for (const Edge& e : cs.star.edges) {
        if (e.slots_at(cs.center) > 0) {
            for (const EndSlot& s : e.ends)
                if (!s.open() && *s.vertex != cs.center) adjacent.insert(*s.vertex);
        } else {
            rest.edges.push_back(e);
        }
    }

    unsigned n = 0;
    for (const TopoGraph& comp : components(rest)) {
        bool meets_center_component = false;
        for (const VertexId& v : comp.vertices)
            if (adjacent.count(v)) meets_center_component = true;
        if (meets_center_component) ++n;
    }
    return n;
}

}  // namespace topodeck
