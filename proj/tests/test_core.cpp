#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "topodeck/canon.hpp"
#include "topodeck/harness.hpp"
#include "topodeck/io.hpp"
#include "topodeck/smooth.hpp"

using namespace topodeck;
using namespace tsup;

namespace {

// Independent re-statement of the suppression rules with a randomized pick
// order, used to confirm confluence of the library's fixed order.
TopoGraph random_order_smooth(TopoGraph g, std::mt19937& rng) {
    while (true) {
        std::vector<VertexId> candidates;
        for (const VertexId& v : g.vertices)
            if (g.degree(v) == 2) candidates.push_back(v);
        if (candidates.empty()) return g;
        VertexId v = candidates[std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng)];

        std::vector<std::size_t> incident;
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            for (int k = 0; k < g.edges[i].slots_at(v); ++k) incident.push_back(i);
        if (incident[0] == incident[1]) {
            g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(incident[0]));
            g.circles += 1;
        } else {
            const Edge& e1 = g.edges[incident[0]];
            const Edge& e2 = g.edges[incident[1]];
            EndSlot far1 = e1.ends[0].attached_to(v) ? e1.ends[1] : e1.ends[0];
            EndSlot far2 = e2.ends[0].attached_to(v) ? e2.ends[1] : e2.ends[0];
            Edge spliced{fresh_id(g, "q"), {far1, far2}};
            g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(incident[1]));
            g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(incident[0]));
            g.edges.push_back(std::move(spliced));
        }
        std::erase(g.vertices, v);
    }
}

}  // namespace

TEST_CASE("validate accepts a well-formed arc") {
    CHECK_FALSE(validate(interval()).has_value());
}

TEST_CASE("validate reports a dangling edge reference") {
    TopoGraph g = make({"a"}, {{"e0", "a", "b"}});
    auto v = validate(g);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::DanglingReference);
}

TEST_CASE("validate reports negative circles from an input file") {
    TopoGraph g = parse_graph_text("c -1\n");
    auto v = validate(g);
    REQUIRE(v.has_value());
    CHECK(v->kind == ViolationKind::NegativeCircles);
}

TEST_CASE("validate reports duplicate identifiers") {
    auto v1 = validate(make({"a", "a"}, {}));
    REQUIRE(v1.has_value());
    CHECK(v1->kind == ViolationKind::DuplicateVertexId);
    auto v2 = validate(make({"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}));
    REQUIRE(v2.has_value());
    CHECK(v2->kind == ViolationKind::DuplicateEdgeId);
}

TEST_CASE("smooth splices a path into a single arc") {
    TopoGraph path = make({"a", "b", "c"}, {{"e0", "a", "b"}, {"e1", "b", "c"}});
    TopoGraph s = smooth(path);
    CHECK(s.vertices.size() == 2);
    CHECK(s.edges.size() == 1);
    CHECK_FALSE(s.has_vertex("b"));
    CHECK(certificate(s) == certificate(interval()));
}

TEST_CASE("smooth collapses the triangle to one circle") {
    // By hand: splice away two of the degree-2 corners (rule a twice), leaving
    // a lone loop vertex, which rule (b) turns into a circle component.
    TopoGraph s = smooth(k3());
    CHECK(s.vertices.empty());
    CHECK(s.edges.empty());
    CHECK(s.circles == 1);
}

TEST_CASE("smooth keeps a degree-1 vertex with a half-open edge") {
    TopoGraph s = smooth(ray());
    CHECK(s.vertices == std::vector<VertexId>{"a"});
    CHECK(s.edges.size() == 1);
}

TEST_CASE("smooth is idempotent") {
    std::mt19937 rng(7001);
    for (int i = 0; i < 200; ++i) {
        TopoGraph g = random_graph(rng, 5, 6, true);
        TopoGraph once = smooth(g);
        CHECK(emit_graph_text(smooth(once)) == emit_graph_text(once));
    }
}

TEST_CASE("smooth is confluent across suppression orders") {
    std::mt19937 rng(7002);
    for (int i = 0; i < 200; ++i) {
        TopoGraph g = random_graph(rng, 6, 7, true);
        TopoGraph theirs = random_order_smooth(g, rng);
        CHECK(is_smooth(theirs));
        CHECK(certificate(theirs) == certificate(smooth(g)));
    }
}

TEST_CASE("canonical certificates of the basic spaces") {
    // Frozen: the TG1 format is part of the external interface.
    CHECK(certificate(interval()) == "TG1;n=2;E=0-1;c=0");
    CHECK(certificate(circle()) == "TG1;n=0;E=;c=1");
    CHECK(certificate(ray()) == "TG1;n=1;E=0-*;c=0");
    CHECK(certificate(open_arc()) == "TG1;n=0;E=*-*;c=0");
    CHECK(certificate(figure_eight()) == "TG1;n=1;E=0-0,0-0;c=0");
}

TEST_CASE("canon identifies the triangle with the circle") {
    CHECK(certificate(k3()) == certificate(circle()));
}

TEST_CASE("canon identifies a path with a single edge") {
    TopoGraph path = make({"a", "b", "c"}, {{"e0", "a", "b"}, {"e1", "b", "c"}});
    CHECK(certificate(path) == certificate(interval()));
}

TEST_CASE("canon ignores identifier choices") {
    TopoGraph renamed = make({"left", "right"}, {{"bridge", "right", "left"}});
    CHECK(certificate(renamed) == certificate(interval()));
}

TEST_CASE("canon is label-invariant on random graphs") {
    std::mt19937 rng(7003);
    for (int i = 0; i < 150; ++i) {
        TopoGraph g = random_graph(rng, 6, 7, true);
        CHECK(certificate(g) == certificate(relabel(g, rng)));
    }
}

TEST_CASE("canon is subdivision-invariant") {
    std::mt19937 rng(7004);
    for (int i = 0; i < 100; ++i) {
        TopoGraph g = random_graph(rng, 5, 6, true);
        std::string cert = certificate(g);
        for (const Edge& e : g.edges) CHECK(certificate(subdivide(g, e.id)) == cert);
    }
}

TEST_CASE("canon is idempotent on its own representative") {
    std::mt19937 rng(7005);
    for (int i = 0; i < 100; ++i) {
        CanonicalForm cf = canon(random_graph(rng, 6, 6, true));
        CHECK(canon(cf.graph).certificate == cf.certificate);
    }
}

TEST_CASE("is_homeomorphic on the worked examples") {
    CHECK(is_homeomorphic(k3(), circle()));
    CHECK_FALSE(is_homeomorphic(interval(), circle()));
    TopoGraph fig8 = figure_eight();
    CHECK(is_homeomorphic(fig8, subdivide(fig8, "e0")));
}

TEST_CASE("subdivide an edge, a loop and an open arc") {
    TopoGraph p = subdivide(interval(), "e0");
    CHECK(p.vertices.size() == 3);
    CHECK(p.edges.size() == 2);

    TopoGraph loop = make({"v"}, {{"e0", "v", "v"}});
    TopoGraph bigon = subdivide(loop, "e0");
    CHECK(bigon.vertices.size() == 2);
    CHECK(bigon.edges.size() == 2);
    for (const Edge& e : bigon.edges) CHECK_FALSE(e.is_loop());

    TopoGraph halves = subdivide(open_arc(), "e0");
    CHECK(halves.vertices.size() == 1);
    REQUIRE(halves.edges.size() == 2);
    for (const Edge& e : halves.edges) CHECK(e.is_half_open());

    CHECK_THROWS_AS((void)subdivide(interval(), "nope"), std::invalid_argument);
}

TEST_CASE("components, connectivity and compactness") {
    TopoGraph g = interval();
    g.circles = 1;
    CHECK(components(g).size() == 2);
    CHECK(is_compact(g));
    CHECK_FALSE(is_connected(g));

    CHECK_FALSE(is_compact(ray()));
    CHECK(is_connected(k3()));
    CHECK(is_compact(k3()));

    TopoGraph empty;
    CHECK(components(empty).empty());
    CHECK_FALSE(is_connected(empty));
}

TEST_CASE("certificate equality matches brute-force isomorphism at small scale") {
    auto universe = enumerate_canonical({3, false, 3});
    REQUIRE(universe.size() > 10);
    for (std::size_t i = 0; i < universe.size(); ++i) {
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            CHECK_FALSE(brute_force_isomorphic(universe[i].graph, universe[j].graph));
        }
    }
    // Positive direction through relabeled copies.
    std::mt19937 rng(7006);
    for (const CanonicalForm& cf : universe) {
        TopoGraph twin = relabel(cf.graph, rng);
        CHECK(certificate(twin) == cf.certificate);
        CHECK(brute_force_isomorphic(cf.graph, twin));
    }
}
