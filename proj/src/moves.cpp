#include "rinv/moves.hpp"

#include <algorithm>
#include <sstream>

#include "rinv/portgraph.hpp"
#include "rinv/rng.hpp"
#include "rinv/topology.hpp"

namespace rinv {

namespace {

const char* kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Add: return "R1Add";
        case MoveKind::R1Remove: return "R1Remove";
        case MoveKind::R2Add: return "R2Add";
        case MoveKind::R2Remove: return "R2Remove";
        case MoveKind::R3: return "R3";
        case MoveKind::VertexRotate: return "VertexRotate";
        case MoveKind::LegSwap: return "LegSwap";
        case MoveKind::CapRemove: return "CapRemove";
        case MoveKind::MirrorAll: return "MirrorAll";
    }
    return "?";
}

[[noreturn]] void bad_move(const MoveSpec& m, const std::string& why) {
    throw MoveError(std::string(kind_name(m.kind)) + ": " + why);
}

Port half_edge_port(int id) { return Port{id / 4, id % 4}; }

void check_node(const Diagram& d, int idx, NodeKind want, const MoveSpec& m) {
    if (idx < 0 || idx >= static_cast<int>(d.nodes.size()))
        bad_move(m, "node index out of range");
    if (d.nodes[static_cast<size_t>(idx)].kind != want)
        bad_move(m, want == NodeKind::Crossing ? "node is not a crossing"
                                               : "node is not a vertex");
}

void check_half_edge(const Diagram& d, int id, const MoveSpec& m) {
    if (id < 0 || id >= 4 * static_cast<int>(d.nodes.size()))
        bad_move(m, "half-edge id out of range");
}

// Two half-edge occurrences lie on the boundary of one face.
bool co_facial(const Diagram& d, int he, int hf) {
    Faces f = compute_faces(d);
    return f.orbit_of[static_cast<size_t>(he)] == f.orbit_of[static_cast<size_t>(hf)];
}

int rot4(int s, int v) { return (s + v) & 3; }

// --- two-strand insertion templates -------------------------------------
//
// All templates take the two strands by an oriented occurrence: the
// half-edge (n, s) denotes the edge plugged in there, traversed away from
// that port.  p1 is that port, p2 the mate; pieces keep p1's end on the
// original edge record.  When both occurrences belong to one edge the
// middle piece is shared and the templates special-case it; a -1 marker
// consumes a free loop instead where the operation allows it.

struct StrandRef {
    bool loop = false;
    Port p1, p2;
    bool same_edge_with(const StrandRef& o) const {
        return !loop && !o.loop && p1 == o.p2 && p2 == o.p1;
    }
};

StrandRef resolve_strand(const PortGraph& pg, int he) {
    StrandRef r;
    if (he < 0) {
        r.loop = true;
        return r;
    }
    r.p1 = half_edge_port(he);
    r.p2 = pg.mate(r.p1);
    return r;
}

}  // namespace

std::string move_to_string(const MoveSpec& m) {
    std::ostringstream out;
    out << kind_name(m.kind) << '(' << m.a << ',' << m.b << ',' << m.c << ','
        << m.d << ')';
    return out.str();
}

namespace {

Diagram do_r1_add(const Diagram& d, const MoveSpec& m) {
    const int rot = m.b & 3;
    PortGraph pg = to_ports(d);
    const int c = pg.add_node(NodeKind::Crossing);
    auto at = [&](int s) { return Port{c, rot4(s, rot)}; };
    if (m.a == 0) {
        if (pg.free_loops < 1) bad_move(m, "no free loop to curl");
        --pg.free_loops;
        pg.add_edge(at(0), at(3));
    } else {
        auto ports = label_ports(d);
        if (m.a < 1 || m.a >= static_cast<int>(ports.size()) ||
            ports[static_cast<size_t>(m.a)][0].node < 0)
            bad_move(m, "no such edge label");
        Port p2 = ports[static_cast<size_t>(m.a)][1];
        pg.replug(p2, at(0));
        pg.add_edge(at(3), p2);
    }
    pg.add_edge(at(1), at(2));
    return from_ports(pg);
}

Diagram do_r1_remove(const Diagram& d, const MoveSpec& m) {
    check_node(d, m.a, NodeKind::Crossing, m);
    const auto& ends = d.nodes[static_cast<size_t>(m.a)].ends;
    const int i = m.b & 3;
    if (ends[static_cast<size_t>(i)] != ends[static_cast<size_t>((i + 1) & 3)])
        bad_move(m, "slots do not hold a curl cap");
    PortGraph pg = to_ports(d);
    dissolve_nodes(pg, {m.a}, {{{i, (i + 2) & 3}, {(i + 1) & 3, (i + 3) & 3}}});
    return from_ports(pg);
}

// Poke: pushes strand e across strand f, creating the bigon face
// {(C, v+1), (D, v)} that R2Remove recognizes; e passes C then D, f passes
// D then C, as co-facial strands run in opposite directions.  The four cut
// ends attach in the reverse of their order around the shared face.
Diagram do_r2_add(const Diagram& d, const MoveSpec& m) {
    const int v = m.c & 1;
    PortGraph pg = to_ports(d);
    if (m.a >= 0) check_half_edge(d, m.a, m);
    if (m.b >= 0) check_half_edge(d, m.b, m);
    if (m.a >= 0 && m.b >= 0) {
        if (m.a == m.b) bad_move(m, "occurrences must differ");
        if (!co_facial(d, m.a, m.b)) bad_move(m, "occurrences are not co-facial");
    }
    int loops_needed = (m.a < 0 ? 1 : 0) + (m.b < 0 ? 1 : 0);
    if (pg.free_loops < loops_needed) bad_move(m, "not enough free loops");
    pg.free_loops -= loops_needed;

    StrandRef e = resolve_strand(pg, m.a);
    StrandRef f = resolve_strand(pg, m.b);
    const int C = pg.add_node(NodeKind::Crossing);
    const int D = pg.add_node(NodeKind::Crossing);
    auto pc = [&](int s) { return Port{C, rot4(s, v)}; };
    auto pd = [&](int s) { return Port{D, rot4(s, v)}; };

    pg.add_edge(pc(0), pd(0));  // bigon side carried by strand e
    pg.add_edge(pd(3), pc(1));  // bigon side carried by strand f
    if (e.same_edge_with(f)) {
        pg.replug(e.p2, pc(2));        // p1 piece enters C
        pg.add_edge(pd(2), pd(1));     // shared middle piece
        pg.add_edge(pc(3), e.p2);      // far piece exits C
    } else {
        if (e.loop) {
            pg.add_edge(pd(2), pc(2));
        } else {
            pg.replug(e.p2, pc(2));
            pg.add_edge(pd(2), e.p2);
        }
        if (f.loop) {
            pg.add_edge(pc(3), pd(1));
        } else {
            pg.replug(f.p2, pd(1));
            pg.add_edge(pc(3), f.p2);
        }
    }
    return from_ports(pg);
}

Diagram do_r2_remove(const Diagram& d, const MoveSpec& m) {
    check_node(d, m.a, NodeKind::Crossing, m);
    check_node(d, m.c, NodeKind::Crossing, m);
    if (m.a == m.c) bad_move(m, "need two distinct crossings");
    const int s = m.b & 3, t = m.d & 3;
    if (((s ^ t) & 1) == 0) bad_move(m, "strands are clasped, not stacked");
    PortGraph pg = to_ports(d);
    if (pg.mate(Port{m.a, s}) != Port{m.c, (t + 3) & 3} ||
        pg.mate(Port{m.c, t}) != Port{m.a, (s + 3) & 3})
        bad_move(m, "slots do not bound a bigon");
    dissolve_nodes(pg, {m.a, m.c},
                   {{{0, 2}, {1, 3}}, {{0, 2}, {1, 3}}});
    return from_ports(pg);
}

Diagram do_r3(const Diagram& d, const MoveSpec& m) {
    check_node(d, m.a, NodeKind::Crossing, m);
    PortGraph pg = to_ports(d);
    const int n1 = m.a;
    const int out1 = m.b & 3, in1 = (out1 + 3) & 3;
    Port m1 = pg.mate(Port{n1, out1});
    const int n2 = m1.node, in2 = m1.slot, out2 = (in2 + 1) & 3;
    if (n2 == n1) bad_move(m, "triangle side loops back");
    check_node(d, n2, NodeKind::Crossing, m);
    Port m2 = pg.mate(Port{n2, out2});
    const int n3 = m2.node, in3 = m2.slot, out3 = (in3 + 1) & 3;
    if (n3 == n1 || n3 == n2) bad_move(m, "face is not a triangle");
    check_node(d, n3, NodeKind::Crossing, m);
    if (pg.mate(Port{n3, out3}) != Port{n1, in1})
        bad_move(m, "face is not a triangle");
    if (((out1 ^ in2) & 1) != 0)
        bad_move(m, "sliding strand is not uniformly over or under");
    const int u = (out1 & 1) == 0 ? 0 : 1;  // anchor: slider under => lane (0,2)

    // External edge ends, named for the strand they continue.
    Port xp1{n1, (in1 + 2) & 3}, xs1{n1, (out1 + 2) & 3};
    Port xs2{n2, (in2 + 2) & 3}, xq2{n2, (out2 + 2) & 3};
    Port xq3{n3, (in3 + 2) & 3}, xp3{n3, (out3 + 2) & 3};

    // Drop the triangle's three sides.
    pg.erase_edge_at(Port{n1, out1});
    pg.erase_edge_at(Port{n2, out2});
    pg.erase_edge_at(Port{n3, out3});

    const int P = pg.add_node(NodeKind::Crossing);  // slider x strand through n1
    const int Q = pg.add_node(NodeKind::Crossing);  // slider x strand through n2
    auto pp = [&](int s) { return Port{P, rot4(s, u)}; };
    auto pq = [&](int s) { return Port{Q, rot4(s, u)}; };

    pg.replug(xs2, pp(0));
    pg.replug(xp3, pp(3));
    pg.replug(xs1, pq(2));
    pg.replug(xq3, pq(3));
    pg.replug(xp1, Port{n3, out3});
    pg.replug(xq2, Port{n3, in3});

    pg.add_edge(Port{n3, (out3 + 2) & 3}, pp(1));  // strand past n1, re-routed
    pg.add_edge(Port{n3, (in3 + 2) & 3}, pq(1));   // strand past n2, re-routed
    pg.add_edge(pp(2), pq(0));                     // slider between new crossings

    dissolve_nodes(pg, {n1, n2}, {{}, {}});
    return from_ports(pg);
}

Diagram do_vertex_rotate(const Diagram& d, const MoveSpec& m) {
    check_node(d, m.a, NodeKind::Vertex, m);
    Diagram r = d;
    auto& e = r.nodes[static_cast<size_t>(m.a)].ends;
    e = {e[1], e[2], e[3], e[0]};
    return canonical_labels(r);
}

Diagram do_leg_swap(const Diagram& d, const MoveSpec& m) {
    check_node(d, m.a, NodeKind::Vertex, m);
    const int i = m.b & 3, sense = m.c & 1;
    PortGraph pg = to_ports(d);
    Port leg_x{m.a, i}, leg_y{m.a, (i + 1) & 3};
    const int c = pg.add_node(NodeKind::Crossing);
    auto pc = [&](int s) { return Port{c, rot4(s, sense)}; };
    pg.replug(leg_x, pc(0));
    pg.replug(leg_y, pc(1));
    pg.add_edge(leg_y, pc(2));
    pg.add_edge(leg_x, pc(3));
    return from_ports(pg);
}

Diagram do_cap_remove(const Diagram& d, const MoveSpec& m) {
    check_node(d, m.a, NodeKind::Vertex, m);
    const auto& ends = d.nodes[static_cast<size_t>(m.a)].ends;
    const int i = m.b & 3;
    if (ends[static_cast<size_t>(i)] != ends[static_cast<size_t>((i + 1) & 3)])
        bad_move(m, "slots do not hold a simple loop");
    PortGraph pg = to_ports(d);
    pg.erase_edge_at(Port{m.a, i});
    dissolve_nodes(pg, {m.a}, {{{(i + 2) & 3, (i + 3) & 3}}});
    return from_ports(pg);
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSpec& m) {
    require_valid(d, "apply_move input");
    switch (m.kind) {
        case MoveKind::R1Add: return do_r1_add(d, m);
        case MoveKind::R1Remove: return do_r1_remove(d, m);
        case MoveKind::R2Add: return do_r2_add(d, m);
        case MoveKind::R2Remove: return do_r2_remove(d, m);
        case MoveKind::R3: return do_r3(d, m);
        case MoveKind::VertexRotate: return do_vertex_rotate(d, m);
        case MoveKind::LegSwap: return do_leg_swap(d, m);
        case MoveKind::CapRemove: return do_cap_remove(d, m);
        case MoveKind::MirrorAll: return canonical_labels(mirror(d));
    }
    throw MoveError("unknown move kind");
}

Diagram insert_twist_chain(const Diagram& d, int he, int hf, int k, int variant) {
    MoveSpec fake{MoveKind::R2Add, he, hf, variant, 0};
    if (k < 0) bad_move(fake, "negative twist count");
    if (k == 0) return d;
    if (he < 0 || hf < 0)
        bad_move(fake, "twists need two real strands, not free loops");
    check_half_edge(d, he, fake);
    check_half_edge(d, hf, fake);
    if (he == hf) bad_move(fake, "occurrences must differ");
    if (!co_facial(d, he, hf)) bad_move(fake, "occurrences are not co-facial");

    // One crossing splices the strands (p1 continues toward q1); repeating
    // k times yields the k-fold twist.  Build iteratively: after each
    // insertion the freshly cut far pieces are co-facial across a new face
    // corner of the inserted crossing, so the next crossing stacks onto
    // half-edges of the previous one.
    Diagram cur = d;
    int cur_he = he, cur_hf = hf;
    const int v = variant & 1;
    for (int step = 0; step < k; ++step) {
        PortGraph pg = to_ports(cur);
        StrandRef e = resolve_strand(pg, cur_he);
        StrandRef f = resolve_strand(pg, cur_hf);
        const int c = pg.add_node(NodeKind::Crossing);
        auto pc = [&](int s) { return Port{c, rot4(s, v)}; };
        // Around the face, the four cut ends appear in the order (e.p1
        // piece, e.p2 piece, f.p1 piece, f.p2 piece); the crossing fills the
        // hole, so its own boundary must present them reversed.
        if (e.same_edge_with(f)) {
            pg.replug(e.p2, pc(0));
            pg.add_edge(pc(1), e.p2);
            pg.add_edge(pc(3), pc(2));  // shared middle piece
        } else {
            pg.replug(e.p2, pc(0));
            pg.replug(f.p2, pc(2));
            pg.add_edge(pc(1), f.p2);
            pg.add_edge(pc(3), e.p2);
        }
        // The next crossing stacks across the corner between slots 0 and 1
        // of this one: the far piece leaving slot 1 and the strand arriving
        // at slot 0, seen from its other end, share that corner's face.
        // Reusing the same chirality each step extends sigma^k to
        // sigma^(k+1); a double twist equals the clasp of the same variant.
        const Port back = pg.mate(pc(0));
        cur = from_ports(pg);
        cur_he = 4 * c + rot4(1, v);
        cur_hf = 4 * back.node + back.slot;
    }
    return cur;
}

Diagram insert_clasp(const Diagram& d, int he, int hf, int variant) {
    MoveSpec fake{MoveKind::R2Add, he, hf, variant, 0};
    const int v = variant & 1;
    PortGraph pg = to_ports(d);
    if (he >= 0) check_half_edge(d, he, fake);
    if (hf >= 0) check_half_edge(d, hf, fake);
    if (he >= 0 && hf >= 0) {
        if (he == hf) bad_move(fake, "occurrences must differ");
        if (!co_facial(d, he, hf)) bad_move(fake, "occurrences are not co-facial");
    }
    int loops_needed = (he < 0 ? 1 : 0) + (hf < 0 ? 1 : 0);
    if (pg.free_loops < loops_needed) bad_move(fake, "not enough free loops");
    pg.free_loops -= loops_needed;

    StrandRef e = resolve_strand(pg, he);
    StrandRef f = resolve_strand(pg, hf);
    const int c1 = pg.add_node(NodeKind::Crossing);
    const int c2 = pg.add_node(NodeKind::Crossing);
    auto p1 = [&](int s) { return Port{c1, rot4(s, v)}; };
    auto p2 = [&](int s) { return Port{c2, rot4(s, v)}; };

    // Cut ends appear around the shared face as (e.p1, e.p2, f.p1, f.p2)
    // pieces; the two-crossing hook presents them reversed on its boundary.
    // Each strand runs under one crossing and over the other, so the hook
    // cannot be undone by sliding the strands apart.
    pg.add_edge(p1(0), p2(1));  // first strand's arc between the crossings
    pg.add_edge(p2(0), p1(1));  // second strand's arc
    if (e.same_edge_with(f)) {
        pg.replug(e.p2, p1(2));
        pg.add_edge(p2(3), p2(2));  // shared middle piece
        pg.add_edge(p1(3), e.p2);
    } else {
        if (e.loop) {
            pg.add_edge(p1(2), p2(3));
        } else {
            pg.replug(e.p2, p1(2));
            pg.add_edge(p2(3), e.p2);
        }
        if (f.loop) {
            pg.add_edge(p2(2), p1(3));
        } else {
            pg.replug(f.p2, p2(2));
            pg.add_edge(p1(3), f.p2);
        }
    }
    return from_ports(pg);
}

Diagram insert_fused_vertex(const Diagram& d, int he, int hf) {
    MoveSpec fake{MoveKind::LegSwap, he, hf, 0, 0};
    PortGraph pg = to_ports(d);
    if (he >= 0) check_half_edge(d, he, fake);
    if (hf >= 0) check_half_edge(d, hf, fake);
    if (he >= 0 && hf >= 0) {
        if (he == hf) bad_move(fake, "occurrences must differ");
        if (!co_facial(d, he, hf)) bad_move(fake, "occurrences are not co-facial");
    }
    int loops_needed = (he < 0 ? 1 : 0) + (hf < 0 ? 1 : 0);
    if (pg.free_loops < loops_needed) bad_move(fake, "not enough free loops");
    pg.free_loops -= loops_needed;

    StrandRef e = resolve_strand(pg, he);
    StrandRef f = resolve_strand(pg, hf);
    const int w = pg.add_node(NodeKind::Vertex);
    // Reversed boundary order again: each strand ends up on two adjacent
    // legs of the vertex (e on 0,3 and f on 2,1), which is the only planar
    // way to fuse two strands that bound a common face.
    if (e.same_edge_with(f)) {
        pg.replug(e.p2, Port{w, 0});
        pg.add_edge(Port{w, 1}, e.p2);
        pg.add_edge(Port{w, 3}, Port{w, 2});  // petal
    } else {
        if (e.loop) {
            pg.add_edge(Port{w, 0}, Port{w, 3});
        } else {
            pg.replug(e.p2, Port{w, 0});
            pg.add_edge(Port{w, 3}, e.p2);
        }
        if (f.loop) {
            pg.add_edge(Port{w, 2}, Port{w, 1});
        } else {
            pg.replug(f.p2, Port{w, 2});
            pg.add_edge(Port{w, 1}, f.p2);
        }
    }
    return from_ports(pg);
}

Diagram insert_cap_vertex(const Diagram& d, int edge_label, int rot) {
    MoveSpec fake{MoveKind::CapRemove, edge_label, rot, 0, 0};
    PortGraph pg = to_ports(d);
    const int w = pg.add_node(NodeKind::Vertex);
    auto pw = [&](int s) { return Port{w, rot4(s, rot)}; };
    if (edge_label == 0) {
        if (pg.free_loops < 1) bad_move(fake, "no free loop to attach to");
        --pg.free_loops;
        pg.add_edge(pw(2), pw(3));
    } else {
        auto ports = label_ports(d);
        if (edge_label < 1 || edge_label >= static_cast<int>(ports.size()) ||
            ports[static_cast<size_t>(edge_label)][0].node < 0)
            bad_move(fake, "no such edge label");
        Port far = ports[static_cast<size_t>(edge_label)][1];
        pg.replug(far, pw(2));
        pg.add_edge(pw(3), far);
    }
    pg.add_edge(pw(0), pw(1));
    return from_ports(pg);
}

std::vector<MoveSpec> applicable_moves(const Diagram& d, const MoveLimits& lim) {
    std::vector<MoveSpec> out;
    const int crossings = static_cast<int>(d.crossing_count());
    const int nodes = static_cast<int>(d.nodes.size());

    if (crossings + 1 <= lim.max_crossings) {
        auto ports = label_ports(d);
        for (size_t lab = 1; lab < ports.size(); ++lab) {
            if (ports[lab][0].node < 0) continue;
            for (int rot = 0; rot < 4; ++rot)
                out.push_back({MoveKind::R1Add, static_cast<int>(lab), rot, 0, 0});
        }
        if (d.free_loops > 0)
            for (int rot = 0; rot < 4; ++rot)
                out.push_back({MoveKind::R1Add, 0, rot, 0, 0});
    }

    for (int i = 0; i < nodes; ++i) {
        const Node& n = d.nodes[static_cast<size_t>(i)];
        if (n.kind != NodeKind::Crossing) continue;
        for (int s = 0; s < 4; ++s)
            if (n.ends[static_cast<size_t>(s)] == n.ends[static_cast<size_t>((s + 1) & 3)])
                out.push_back({MoveKind::R1Remove, i, s, 0, 0});
    }

    if (crossings + 2 <= lim.max_crossings && nodes > 0) {
        Faces faces = compute_faces(d);
        for (const auto& orbit : faces.orbits) {
            for (size_t i = 0; i < orbit.size(); ++i) {
                for (size_t j = 0; j < orbit.size(); ++j) {
                    if (i == j) continue;
                    int he = 4 * orbit[i].node + orbit[i].slot;
                    int hf = 4 * orbit[j].node + orbit[j].slot;
                    for (int v = 0; v < 2; ++v)
                        out.push_back({MoveKind::R2Add, he, hf, v, 0});
                }
            }
        }
        if (d.free_loops > 0) {
            for (int h = 0; h < 4 * nodes; ++h) {
                for (int v = 0; v < 2; ++v) {
                    out.push_back({MoveKind::R2Add, -1, h, v, 0});
                    out.push_back({MoveKind::R2Add, h, -1, v, 0});
                }
            }
        }
    }
    if (crossings + 2 <= lim.max_crossings && d.free_loops >= 2)
        for (int v = 0; v < 2; ++v)
            out.push_back({MoveKind::R2Add, -1, -1, v, 0});

    {
        PortGraph pg = nodes > 0 ? to_ports(d) : PortGraph{};
        for (int i = 0; i < nodes; ++i) {
            if (d.nodes[static_cast<size_t>(i)].kind != NodeKind::Crossing) continue;
            for (int s = 0; s < 4; ++s) {
                Port ms = pg.mate(Port{i, s});
                int j = ms.node, t = (ms.slot + 1) & 3;
                if (j <= i) continue;
                if (d.nodes[static_cast<size_t>(j)].kind != NodeKind::Crossing) continue;
                if (((s ^ t) & 1) == 0) continue;
                if (pg.mate(Port{j, t}) != Port{i, (s + 3) & 3}) continue;
                out.push_back({MoveKind::R2Remove, i, s, j, t});
            }
        }
        // Triangle slides.
        for (int i = 0; i < nodes && nodes >= 3; ++i) {
            if (d.nodes[static_cast<size_t>(i)].kind != NodeKind::Crossing) continue;
            for (int s = 0; s < 4; ++s) {
                Port m1 = pg.mate(Port{i, s});
                int n2 = m1.node, out2 = (m1.slot + 1) & 3;
                if (n2 == i ||
                    d.nodes[static_cast<size_t>(n2)].kind != NodeKind::Crossing)
                    continue;
                if (((s ^ m1.slot) & 1) != 0) continue;  // non-uniform slider
                Port m2 = pg.mate(Port{n2, out2});
                int n3 = m2.node, out3 = (m2.slot + 1) & 3;
                if (n3 == i || n3 == n2 ||
                    d.nodes[static_cast<size_t>(n3)].kind != NodeKind::Crossing)
                    continue;
                if (pg.mate(Port{n3, out3}) != Port{i, (s + 3) & 3}) continue;
                out.push_back({MoveKind::R3, i, s, 0, 0});
            }
        }
    }

    for (int i = 0; i < nodes; ++i) {
        const Node& n = d.nodes[static_cast<size_t>(i)];
        if (n.kind != NodeKind::Vertex) continue;
        out.push_back({MoveKind::VertexRotate, i, 0, 0, 0});
        if (crossings + 1 <= lim.max_crossings)
            for (int s = 0; s < 4; ++s)
                for (int sense = 0; sense < 2; ++sense)
                    out.push_back({MoveKind::LegSwap, i, s, sense, 0});
        for (int s = 0; s < 4; ++s)
            if (n.ends[static_cast<size_t>(s)] == n.ends[static_cast<size_t>((s + 1) & 3)])
                out.push_back({MoveKind::CapRemove, i, s, 0, 0});
    }

    out.push_back({MoveKind::MirrorAll, 0, 0, 0, 0});
    return out;
}

Diagram random_diagram(uint64_t seed, int max_crossings, int max_vertices) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x51ed2701u);
    Diagram d;
    d.free_loops = 1 + static_cast<long>(rng.below(2));
    const int steps = 4 + static_cast<int>(rng.below(9));

    for (int step = 0; step < steps; ++step) {
        const int crossings = static_cast<int>(d.crossing_count());
        const int vertices = static_cast<int>(d.vertex_count());
        const int nodes = static_cast<int>(d.nodes.size());

        // Collect co-facial occurrence pairs once per step.
        std::vector<std::pair<int, int>> pairs;
        if (nodes > 0) {
            Faces faces = compute_faces(d);
            for (const auto& orbit : faces.orbits)
                for (size_t i = 0; i < orbit.size(); ++i)
                    for (size_t j = 0; j < orbit.size(); ++j)
                        if (i != j)
                            pairs.emplace_back(4 * orbit[i].node + orbit[i].slot,
                                               4 * orbit[j].node + orbit[j].slot);
        }
        std::vector<int> labels;
        {
            auto ports = label_ports(d);
            for (size_t lab = 1; lab < ports.size(); ++lab)
                if (ports[lab][0].node >= 0) labels.push_back(static_cast<int>(lab));
        }

        enum Op { Curl, Poke, Clasp, Twist, CapV, TransV, Loop };
        std::vector<Op> menu;
        auto offer = [&](Op op, int weight) {
            for (int k = 0; k < weight; ++k) menu.push_back(op);
        };
        const bool has_loop = d.free_loops > 0;
        if (crossings + 1 <= max_crossings && (has_loop || !labels.empty()))
            offer(Curl, 2);
        if (crossings + 2 <= max_crossings &&
            (!pairs.empty() || (has_loop && nodes > 0) || d.free_loops >= 2)) {
            offer(Poke, 2);
            offer(Clasp, 3);
        }
        if (crossings + 1 <= max_crossings && !pairs.empty()) offer(Twist, 3);
        if (vertices + 1 <= max_vertices && (has_loop || !labels.empty()))
            offer(CapV, 2);
        if (vertices + 1 <= max_vertices &&
            (!pairs.empty() || (has_loop && nodes > 0) || d.free_loops >= 2))
            offer(TransV, 2);
        if (d.free_loops < 3) offer(Loop, 1);
        if (menu.empty()) break;

        Op op = menu[rng.below(menu.size())];
        auto pick_label_or_loop = [&]() -> int {
            if (has_loop && (labels.empty() || rng.below(4) == 0)) return 0;
            return labels[rng.below(labels.size())];
        };
        // Occurrence pair for two-strand ops; marker -1 consumes a loop.
        auto pick_pair = [&](bool allow_loops) -> std::pair<int, int> {
            bool use_loop_e = allow_loops && has_loop &&
                              (pairs.empty() || rng.below(5) == 0);
            if (use_loop_e) {
                if (d.free_loops >= 2 && (nodes == 0 || rng.below(3) == 0))
                    return {-1, -1};
                if (nodes > 0) {
                    int h = static_cast<int>(rng.below(static_cast<uint64_t>(4 * nodes)));
                    return rng.coin() ? std::make_pair(-1, h) : std::make_pair(h, -1);
                }
                return {-1, -1};
            }
            return pairs[rng.below(pairs.size())];
        };

        switch (op) {
            case Curl:
                d = apply_move(d, {MoveKind::R1Add, pick_label_or_loop(),
                                   static_cast<int>(rng.below(4)), 0, 0});
                break;
            case Poke: {
                auto [he, hf] = pick_pair(true);
                d = apply_move(d, {MoveKind::R2Add, he, hf,
                                   static_cast<int>(rng.below(2)), 0});
                break;
            }
            case Clasp: {
                auto [he, hf] = pick_pair(true);
                d = insert_clasp(d, he, hf, static_cast<int>(rng.below(2)));
                break;
            }
            case Twist: {
                auto [he, hf] = pick_pair(false);
                d = insert_twist_chain(d, he, hf, 1, static_cast<int>(rng.below(2)));
                break;
            }
            case CapV:
                d = insert_cap_vertex(d, pick_label_or_loop(),
                                      static_cast<int>(rng.below(4)));
                break;
            case TransV: {
                auto [he, hf] = pick_pair(true);
                d = insert_fused_vertex(d, he, hf);
                break;
            }
            case Loop:
                ++d.free_loops;
                break;
        }
    }
    require_valid(d, "random_diagram produced an invalid diagram");
    if (total_genus(d) != 0)
        throw std::logic_error("random_diagram produced a non-planar diagram");
    return d;
}

}  // namespace rinv
