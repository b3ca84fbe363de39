#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/test_support.hpp"
#include "topodeck/compactification.hpp"
#include "topodeck/harness.hpp"
#include "topodeck/smooth.hpp"
#include "topodeck/surgery.hpp"

using namespace topodeck;
using namespace tsup;

TEST_CASE("point class strings round-trip") {
    for (const char* s : {"vertex:a", "edge:e0", "circle"}) {
        auto p = PointClass::parse(s);
        REQUIRE(p.has_value());
        CHECK(p->to_string() == s);
    }
    CHECK_FALSE(PointClass::parse("nonsense").has_value());
    CHECK_FALSE(PointClass::parse("vertex:").has_value());
}

TEST_CASE("removing an endpoint of the interval leaves a half-open arc") {
    TopoGraph card = remove_point(interval(), PointClass::vertex("a"));
    CHECK(card.vertices == std::vector<VertexId>{"b"});
    REQUIRE(card.edges.size() == 1);
    CHECK(card.edges[0].is_half_open());
    CHECK(certificate(card) == certificate(ray()));
}

TEST_CASE("removing an interior point of the interval leaves two half-open arcs") {
    TopoGraph card = remove_point(interval(), PointClass::edge_interior("e0"));
    CHECK(card.vertices.size() == 2);
    REQUIRE(card.edges.size() == 2);
    for (const Edge& e : card.edges) CHECK(e.is_half_open());
    CHECK(certificate(card) == "TG1;n=2;E=0-*,1-*;c=0");
}

TEST_CASE("removing a circle point leaves the open arc") {
    TopoGraph card = remove_point(circle(), PointClass::circle());
    CHECK(card.circles == 0);
    CHECK(certificate(card) == certificate(open_arc()));
}

TEST_CASE("removing the basepoint of a loop leaves the open arc") {
    TopoGraph loop = make({"v"}, {{"e0", "v", "v"}});
    TopoGraph card = remove_point(loop, PointClass::vertex("v"));
    REQUIRE(card.edges.size() == 1);
    CHECK(card.edges[0].is_open_arc());
    CHECK(certificate(card) == certificate(open_arc()));
}

TEST_CASE("removing a loop-interior point leaves two half-open arcs at the basepoint") {
    TopoGraph loop = make({"v"}, {{"e0", "v", "v"}});
    TopoGraph card = remove_point(loop, PointClass::edge_interior("e0"));
    REQUIRE(card.edges.size() == 2);
    for (const Edge& e : card.edges) {
        CHECK(e.is_half_open());
        CHECK(e.slots_at("v") == 1);
    }
    // The basepoint has degree 2 afterwards, so the card smooths to the line.
    CHECK(certificate(card) == certificate(open_arc()));
}

TEST_CASE("removing an interior point of an open arc leaves two open arcs") {
    TopoGraph card = remove_point(open_arc(), PointClass::edge_interior("e0"));
    REQUIRE(card.edges.size() == 2);
    for (const Edge& e : card.edges) CHECK(e.is_open_arc());
}

TEST_CASE("remove_point rejects invalid classes") {
    CHECK_THROWS_AS((void)remove_point(interval(), PointClass::vertex("zz")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)remove_point(interval(), PointClass::circle()), std::invalid_argument);
}

TEST_CASE("deck of the interval has exactly the two half-open cards") {
    Deck d = deck(interval());
    CHECK(d.cards ==
          std::set<std::string>{certificate(ray()), "TG1;n=2;E=0-*,1-*;c=0"});
    REQUIRE(d.labeled_cards.size() == 3);
    CHECK(d.labeled_cards.at(PointClass::vertex("a")) == certificate(ray()));
    CHECK(d.labeled_cards.at(PointClass::vertex("b")) == certificate(ray()));
    CHECK(d.labeled_cards.at(PointClass::edge_interior("e0")) == "TG1;n=2;E=0-*,1-*;c=0");
}

TEST_CASE("deck of the circle is the single open arc, and the triangle agrees") {
    Deck d = deck(circle());
    CHECK(d.cards == std::set<std::string>{certificate(open_arc())});
    CHECK(deck(k3()).cards == d.cards);
}

TEST_CASE("deck rejects non-compact hosts and tiny hosts") {
    CHECK_THROWS_WITH_AS((void)deck(ray()), "deck: non-compact input", std::domain_error);
    CHECK_THROWS_AS((void)deck(make({"a", "b"}, {})), std::domain_error);
    CHECK_NOTHROW((void)deck(make({"a", "b", "c"}, {})));  // three isolated points
}

TEST_CASE("the deck is a homeomorphism invariant") {
    std::mt19937 rng(8001);
    auto universe = enumerate_canonical({3, false, 3});
    for (const CanonicalForm& cf : universe) {
        TopoGraph twin = relabel(cf.graph, rng);
        if (!twin.edges.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, twin.edges.size() - 1);
            twin = subdivide(twin, twin.edges[pick(rng)].id);
        }
        CHECK(deck(twin).cards == deck(cf.graph).cards);
    }
}

TEST_CASE("cards of compact hosts are compact only at isolated points") {
    for (const CanonicalForm& cf : enumerate_canonical({3, false, 3})) {
        for (const PointClass& p : point_classes(cf.graph)) {
            bool isolated =
                p.kind == PointClass::Kind::Vertex && cf.graph.degree(p.id) == 0;
            CHECK(is_compact(remove_point(cf.graph, p)) == isolated);
        }
    }
}

TEST_CASE("removing a point grows the component count by at most degree minus one") {
    for (const CanonicalForm& cf : enumerate_canonical({5, false, 3})) {
        const TopoGraph& g = cf.graph;
        auto before = static_cast<std::ptrdiff_t>(components(g).size());
        for (const PointClass& p : point_classes(g)) {
            std::ptrdiff_t degree =
                p.kind == PointClass::Kind::Vertex ? g.degree(p.id) : 2;
            auto after = static_cast<std::ptrdiff_t>(components(remove_point(g, p)).size());
            CHECK(after - before <= degree - 1);
        }
    }
}

TEST_CASE("collapsing the interval endpoints gives the circle") {
    CollapseResult r = collapse(interval(), PointClass::vertex("a"), PointClass::vertex("b"));
    CHECK(r.graph.vertices == std::vector<VertexId>{r.merged});
    REQUIRE(r.graph.edges.size() == 1);
    CHECK(r.graph.edges[0].is_loop());
    CHECK(certificate(r.graph) == certificate(circle()));
}

TEST_CASE("collapsing interior points of two disjoint edges gives a degree-4 center") {
    TopoGraph g = make({"a", "b", "c", "d"}, {{"e0", "a", "b"}, {"e1", "c", "d"}});
    CollapseResult r =
        collapse(g, PointClass::edge_interior("e0"), PointClass::edge_interior("e1"));
    CHECK(r.graph.degree(r.merged) == 4);
    CHECK(r.graph.edges.size() == 4);
    for (const char* v : {"a", "b", "c", "d"}) CHECK(r.graph.degree(v) == 1);
}

TEST_CASE("collapsing adjacent chain vertices gives a loop with a pendant") {
    TopoGraph chain = make({"a", "x", "y", "b"},
                           {{"e0", "a", "x"}, {"e1", "x", "y"}, {"e2", "y", "b"}});
    CollapseResult r = collapse(chain, PointClass::vertex("a"), PointClass::vertex("x"));
    TopoGraph lollipop = make({"u", "w"}, {{"l", "u", "u"}, {"p", "u", "w"}});
    CHECK(certificate(r.graph) == certificate(lollipop));
}

TEST_CASE("collapse rejects equal or invalid point classes") {
    CHECK_THROWS_AS((void)collapse(interval(), PointClass::vertex("a"), PointClass::vertex("a")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)collapse(interval(), PointClass::vertex("a"), PointClass::circle()),
                    std::invalid_argument);
}

TEST_CASE("collapse then remove the merged point equals removing both points") {
    auto universe = enumerate_canonical({3, false, 3});
    for (const CanonicalForm& cf : universe) {
        auto classes = point_classes(cf.graph);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (std::size_t j = 0; j < classes.size(); ++j) {
                if (i == j) continue;
                CollapseResult c = collapse(cf.graph, classes[i], classes[j]);
                TopoGraph via_quotient = remove_point(c.graph, PointClass::vertex(c.merged));
                TopoGraph via_two_steps =
                    remove_point(remove_point(cf.graph, classes[i]), classes[j]);
                CHECK(certificate(via_quotient) == certificate(via_two_steps));
            }
        }
    }
}
