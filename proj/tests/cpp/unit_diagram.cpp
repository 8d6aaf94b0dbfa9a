#include "doctest.h"

#include "rinv/bracket.hpp"
#include "rinv/diagram.hpp"
#include "rinv/topology.hpp"

using namespace rinv;

TEST_CASE("parsing the node list format") {
    Diagram d = parse_diagram("X 1 2 2 1\n");
    REQUIRE(d.nodes.size() == 1);
    CHECK(d.nodes[0].kind == NodeKind::Crossing);
    CHECK(d.nodes[0].ends == std::array<int, 4>{1, 2, 2, 1});
    CHECK(d.free_loops == 0);

    Diagram g = parse_diagram("# a graph vertex with two petals\nV 1 1 2 2\n\nO 2\nO 1\n");
    REQUIRE(g.nodes.size() == 1);
    CHECK(g.nodes[0].kind == NodeKind::Vertex);
    CHECK(g.free_loops == 3);

    Diagram empty = parse_diagram("  \n# nothing\n");
    CHECK(empty.nodes.empty());
    CHECK(empty.free_loops == 0);

    // Inline comments after node data.
    Diagram c = parse_diagram("X 1 2 2 1  # a curl\n");
    CHECK(c.nodes.size() == 1);
}

TEST_CASE("parse errors carry the line number") {
    CHECK_THROWS_AS(parse_diagram("Y 1 2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X 1 2 3 4 5\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X 0 1 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X a b c d\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("O\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("O -1\n"), ParseError);
    // Labels must be used exactly twice across the whole diagram.
    CHECK_THROWS_AS(parse_diagram("X 1 2 3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("X 1 1 2 2\nX 2 3 3 2\n"), ParseError);

    try {
        parse_diagram("X 1 2 2 1\nQ 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("rendering inverts parsing") {
    for (const char* text : {
             "O 0\n",
             "O 3\n",
             "X 1 2 2 1\n",
             "V 1 1 2 2\nO 1\n",
             "X 1 2 3 4\nX 4 3 2 1\n",
             "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n",
         }) {
        Diagram d = parse_diagram(text);
        CHECK(render_diagram(d) == text);
        CHECK(parse_diagram(render_diagram(d)) == d);
    }
    CHECK(render_diagram(Diagram{}) == "O 0\n");
}

TEST_CASE("validation") {
    Diagram d;
    d.free_loops = -1;
    CHECK(!validate(d).empty());
    CHECK_THROWS_AS(require_valid(d, "test"), ValidationError);

    Diagram once;
    once.nodes.push_back(Node{NodeKind::Crossing, {1, 2, 3, 4}});
    CHECK(validate(once).size() == 4);  // each label used once
    CHECK_THROWS_AS(label_ports(once), ValidationError);

    Diagram ok = parse_diagram("X 1 2 3 4\nX 4 3 2 1\n");
    CHECK(validate(ok).empty());
}

TEST_CASE("mirror flips every crossing") {
    Diagram d = parse_diagram("X 1 2 2 1\n");
    Diagram m = mirror(d);
    CHECK(m.nodes[0].ends == std::array<int, 4>{2, 2, 1, 1});
    // Mirroring swaps the bracket variable with its inverse.
    CHECK(kauffman_bracket(m) == kauffman_bracket(d).invert_variable());

    Diagram g = parse_diagram("V 1 1 2 2\n");
    CHECK(mirror(g) == g);  // vertices are untouched
}

TEST_CASE("disjoint union shifts labels") {
    Diagram a = parse_diagram("X 1 2 2 1\nO 1\n");
    Diagram b = parse_diagram("V 1 1 2 2\n");
    Diagram u = disjoint_union(a, b);
    REQUIRE(u.nodes.size() == 2);
    CHECK(u.nodes[1].ends == std::array<int, 4>{3, 3, 4, 4});
    CHECK(u.free_loops == 1);
    CHECK(validate(u).empty());
    CHECK(component_count(u) == component_count(a) + component_count(b));
}

TEST_CASE("component counting") {
    CHECK(component_count(parse_diagram("O 0\n")) == 0);
    CHECK(component_count(parse_diagram("O 1\n")) == 1);
    CHECK(component_count(parse_diagram("X 1 2 2 1\n")) == 1);
    CHECK(component_count(parse_diagram("X 1 2 3 4\nX 4 3 2 1\n")) == 2);
    CHECK(component_count(parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n")) == 1);
    CHECK(component_count(parse_diagram("V 1 1 2 2\n")) == 1);
    CHECK(component_count(parse_diagram("V 1 2 2 3\nV 4 1 3 4\n")) == 1);
    CHECK(component_count(parse_diagram("X 1 1 2 2\nO 2\n")) == 3);
}

TEST_CASE("label ports") {
    Diagram d = parse_diagram("X 1 2 3 4\nX 4 3 2 1\n");
    auto ports = label_ports(d);
    REQUIRE(ports.size() == 5);
    CHECK(ports[1][0] == Port{0, 0});
    CHECK(ports[1][1] == Port{1, 3});
    CHECK(ports[4][0] == Port{0, 3});
    CHECK(ports[4][1] == Port{1, 0});
}

TEST_CASE("canonical labels") {
    Diagram d = parse_diagram("X 7 9 9 7\n");
    CHECK(render_diagram(canonical_labels(d)) == "X 1 2 2 1\n");
    Diagram t = parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
    CHECK(canonical_labels(canonical_labels(t)) == canonical_labels(t));
}

TEST_CASE("strand removal") {
    // Removing one strand of this two-component link leaves a bare circle.
    Diagram hopf = parse_diagram("X 1 2 3 4\nX 4 3 2 1\n");
    CHECK(render_diagram(remove_edges(hopf, {1})) == "O 1\n");
    CHECK(render_diagram(remove_edges(hopf, {3})) == "O 1\n");  // same strand
    CHECK(render_diagram(remove_edges(hopf, {1, 2})) == "O 0\n");

    // Removing a petal of the barbell leaves a vertex with degree 3: invalid.
    Diagram barbell = parse_diagram("V 1 2 2 3\nV 4 1 3 4\n");
    CHECK_THROWS_AS(remove_edges(barbell, {1}), ValidationError);
    // Removing the bar cycle (labels 1 and 3 are one cycle through both
    // vertices) leaves each vertex holding only its petal.
    Diagram petals = remove_edges(barbell, {1, 3});
    CHECK(render_diagram(petals) == "O 2\n");

    CHECK_THROWS_AS(remove_edges(barbell, {9}), ValidationError);

    // A strand that passes under a crossing drags the whole strand along.
    Diagram tre = parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
    CHECK(render_diagram(remove_edges(tre, {1})) == "O 0\n");
}

TEST_CASE("faces and genus") {
    CHECK(total_genus(parse_diagram("O 2\n")) == 0);
    CHECK(total_genus(parse_diagram("X 1 2 2 1\n")) == 0);
    CHECK(total_genus(parse_diagram("X 1 2 3 4\nX 4 3 2 1\n")) == 0);
    CHECK(total_genus(parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n")) == 0);
    CHECK(total_genus(parse_diagram("V 1 1 2 2\n")) == 0);
    CHECK(total_genus(parse_diagram("V 1 2 2 3\nV 4 1 3 4\n")) == 0);

    // Same edge pairing as the two-crossing clasp but wired parallel:
    // combinatorially fine, yet not drawable in the plane.
    Diagram torus = parse_diagram("X 1 2 3 4\nX 3 4 1 2\n");
    CHECK(total_genus(torus) == 1);

    // The clasp itself has four faces: two bigons and two outer corners.
    Faces f = compute_faces(parse_diagram("X 1 2 3 4\nX 4 3 2 1\n"));
    CHECK(f.orbits.size() == 4);
    for (const auto& orbit : f.orbits) CHECK(orbit.size() == 2);

    // Euler count for the one-crossing curl: 1 - 2 + 3 = 2.
    CHECK(compute_faces(parse_diagram("X 1 2 2 1\n")).orbits.size() == 3);
}
