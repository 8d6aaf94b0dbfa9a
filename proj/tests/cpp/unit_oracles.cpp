#include "doctest.h"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rinv/diagram.hpp"
#include "rinv/invariant.hpp"
#include "rinv/laurent.hpp"
#include "rinv/moves.hpp"
#include "rinv/oracles.hpp"
#include "rinv/rational.hpp"
#include "rinv/topology.hpp"

using namespace rinv;

namespace {

std::vector<std::pair<int, int>> cofacial_pairs(const Diagram& d) {
    std::vector<std::pair<int, int>> pairs;
    Faces f = compute_faces(d);
    for (const auto& orbit : f.orbits)
        for (size_t i = 0; i < orbit.size(); ++i)
            for (size_t j = 0; j < orbit.size(); ++j)
                if (i != j)
                    pairs.emplace_back(4 * orbit[i].node + orbit[i].slot,
                                       4 * orbit[j].node + orbit[j].slot);
    return pairs;
}

bool is_power_of_three(long long v) {
    if (v < 1) return false;
    while (v % 3 == 0) v /= 3;
    return v == 1;
}

}  // namespace

TEST_CASE("arc colorings of small links") {
    CHECK(three_colorings(Diagram{}) == 1);
    CHECK(three_colorings(parse_diagram("O 1\n")) == 3);
    CHECK(three_colorings(parse_diagram("O 2\n")) == 9);
    CHECK(three_colorings(parse_diagram("X 1 2 2 1\n")) == 3);
    CHECK(three_colorings(parse_diagram("X 1 1 2 2\n")) == 3);
    // The two-component clasp admits only constant colorings.
    CHECK(three_colorings(parse_diagram("X 1 2 3 4\nX 4 3 2 1\n")) == 3);
    // The three-crossing knot is famously colorable: 9 = 3 constant + 6 proper.
    CHECK(three_colorings(parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n")) == 9);

    CHECK_THROWS_AS(three_colorings(parse_diagram("V 1 1 2 2\n")), DomainError);
}

TEST_CASE("coloring count is multiplicative and a power of three") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Diagram a = random_diagram(seed, 5, 0);
        CHECK(is_power_of_three(three_colorings(a)));
        Diagram b = random_diagram(seed + 31, 4, 0);
        CHECK(three_colorings(disjoint_union(a, b)) ==
              three_colorings(a) * three_colorings(b));
    }
}

TEST_CASE("coloring count matches the invariant at one") {
    // For a link diagram, the value at 1 counts the arc colorings.
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Diagram d = random_diagram(seed + 7, 6, 0);
        InvariantReport rep = analyze(d);
        REQUIRE(!rep.at1.infinite);
        CHECK(rep.at1.value == Rat(three_colorings(d)));
    }
}

TEST_CASE("orientation walk consistency for one-component diagrams") {
    CHECK(writhe_check_knot(parse_diagram("O 1\n")));
    CHECK(writhe_check_knot(parse_diagram("X 1 2 2 1\n")));
    CHECK(writhe_check_knot(parse_diagram("X 1 1 2 2\n")));
    CHECK(writhe_check_knot(parse_diagram("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n")));

    CHECK_THROWS_AS(writhe_check_knot(parse_diagram("X 1 2 3 4\nX 4 3 2 1\n")),
                    DomainError);
    CHECK_THROWS_AS(writhe_check_knot(parse_diagram("V 1 1 2 2\n")), DomainError);

    int knots = 0;
    for (uint64_t seed = 1; seed <= 200 && knots < 12; ++seed) {
        Diagram d = random_diagram(seed, 6, 0);
        if (component_count(d) != 1) continue;
        ++knots;
        CHECK(writhe_check_knot(d));
    }
    CHECK(knots >= 5);
}

TEST_CASE("bracket skein identity in random contexts") {
    int contexts = 0;
    for (uint64_t seed = 1; seed <= 14; ++seed) {
        Diagram d = random_diagram(seed, 5, 0);
        auto pairs = cofacial_pairs(d);
        int used = 0;
        for (auto [he, hf] : pairs) {
            if (used >= 3) break;
            ++used;
            ++contexts;
            SkeinReport rep =
                skein_relation_check(d, he, hf, SkeinKind::QuadraticBracket);
            CAPTURE(render_diagram(d));
            CAPTURE(he);
            CAPTURE(hf);
            CAPTURE(rep.detail);
            CHECK(rep.ok);
        }
    }
    CHECK(contexts >= 20);

    Diagram hopf = parse_diagram("X 1 2 3 4\nX 4 3 2 1\n");
    auto pairs = cofacial_pairs(hopf);
    REQUIRE(!pairs.empty());
    SkeinReport rep = skein_relation_check(hopf, pairs[0].first, pairs[0].second,
                                           SkeinKind::QuadraticBracket);
    CAPTURE(rep.detail);
    CHECK(rep.ok);

    CHECK_THROWS_AS(skein_relation_check(parse_diagram("V 1 1 2 2\n"), 0, 1,
                                         SkeinKind::QuadraticBracket),
                    DomainError);
}

TEST_CASE("invariant skein identity in graph contexts") {
    for (const char* text : {"V 1 1 2 2\n", "V 1 2 2 3\nV 4 1 3 4\n"}) {
        Diagram d = parse_diagram(text);
        auto pairs = cofacial_pairs(d);
        REQUIRE(!pairs.empty());
        int used = 0;
        for (auto [he, hf] : pairs) {
            if (used >= 4) break;
            ++used;
            SkeinReport rep = skein_relation_check(d, he, hf, SkeinKind::CubicR);
            CAPTURE(text);
            CAPTURE(he);
            CAPTURE(hf);
            CAPTURE(rep.detail);
            CHECK(rep.ok);
        }
    }
    // Mixed contexts with crossings and a vertex.
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Diagram d = random_diagram(seed + 3, 4, 1);
        auto pairs = cofacial_pairs(d);
        if (pairs.empty()) continue;
        SkeinReport rep = skein_relation_check(d, pairs[0].first, pairs[0].second,
                                               SkeinKind::CubicR);
        CAPTURE(render_diagram(d));
        CAPTURE(rep.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("constituent links of the barbell") {
    // Two vertices joined by a bar, a petal on each: the petals and the bar
    // cycle can be kept or dropped; five selections are feasible and every
    // one of them is an unlink.
    Diagram barbell = parse_diagram("V 1 2 2 3\nV 4 1 3 4\n");
    ConstituentScan scan = constituent_links(barbell);
    CHECK(scan.entries.size() == 5);
    CHECK(!scan.any_linked);
    for (const auto& e : scan.entries) CHECK(e.unlink_value);

    // Component counts of the five constituents: 0, 1, 1, 1, 2.
    std::multiset<long> sizes;
    for (const auto& e : scan.entries) sizes.insert(component_count(e.link));
    CHECK(sizes == std::multiset<long>{0, 1, 1, 1, 2});
}

TEST_CASE("constituent links of the bouquet") {
    ConstituentScan scan = constituent_links(parse_diagram("V 1 1 2 2\n"));
    CHECK(scan.entries.size() == 3);  // empty, one petal, other petal
    CHECK(!scan.any_linked);
}

TEST_CASE("clasped petals yield a linked constituent") {
    // Clasp the two petals of the barbell: each petal alone still unknots,
    // but the pair forms the two-crossing clasp link, which the scan must
    // flag as linked.
    Diagram barbell = parse_diagram("V 1 2 2 3\nV 4 1 3 4\n");
    auto ports = label_ports(barbell);
    int he = 4 * ports[2][0].node + ports[2][0].slot;
    int hf = -1;
    Faces f = compute_faces(barbell);
    for (const Port& p : f.orbits[static_cast<size_t>(
             f.orbit_of[static_cast<size_t>(he)])]) {
        int lab = barbell.nodes[static_cast<size_t>(p.node)]
                      .ends[static_cast<size_t>(p.slot)];
        if (lab == 4) hf = 4 * p.node + p.slot;
    }
    if (hf < 0) {
        // The petals do not share a face in this embedding; reach the other
        // petal through the occurrence list of its own face instead.
        for (const auto& orbit : f.orbits) {
            bool has2 = false, has4 = false;
            int cand2 = -1, cand4 = -1;
            for (const Port& p : orbit) {
                int lab = barbell.nodes[static_cast<size_t>(p.node)]
                              .ends[static_cast<size_t>(p.slot)];
                if (lab == 2) has2 = true, cand2 = 4 * p.node + p.slot;
                if (lab == 4) has4 = true, cand4 = 4 * p.node + p.slot;
            }
            if (has2 && has4) {
                he = cand2;
                hf = cand4;
                break;
            }
        }
    }
    REQUIRE(hf >= 0);
    Diagram linked = insert_clasp(barbell, he, hf, 0);
    REQUIRE(total_genus(linked) == 0);

    ConstituentScan scan = constituent_links(linked);
    CHECK(scan.any_linked);
    int nontrivial = 0;
    for (const auto& e : scan.entries)
        if (!e.unlink_value) {
            ++nontrivial;
            CHECK(e.r.to_string("L") == "L^3+2*L^2");
            CHECK(component_count(e.link) == 2);
        }
    CHECK(nontrivial == 1);

    CHECK_THROWS_AS(constituent_links(parse_diagram(
                        "V 1 2 3 4\nV 5 6 7 8\nV 9 10 11 12\nV 12 11 10 9\n"
                        "V 8 7 6 5\nV 4 3 2 1\nO 5\n")),
                    DomainError);
}

TEST_CASE("constituent scan of a plain link lists its sublinks") {
    Diagram hopf = parse_diagram("X 1 2 3 4\nX 4 3 2 1\n");
    ConstituentScan scan = constituent_links(hopf);
    // Two strand classes, no vertices: all four subsets qualify.
    CHECK(scan.entries.size() == 4);
    CHECK(scan.any_linked);  // the full selection is the clasp link itself
    int nontrivial = 0;
    for (const auto& e : scan.entries)
        if (!e.unlink_value) ++nontrivial;
    CHECK(nontrivial == 1);
}
