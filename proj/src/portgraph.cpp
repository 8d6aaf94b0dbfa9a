#include "rinv/portgraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rinv {

int PortGraph::edge_at(const Port& p) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first == p || edges[i].second == p) return static_cast<int>(i);
    return -1;
}

Port PortGraph::mate(const Port& p) const {
    int i = edge_at(p);
    if (i < 0) throw std::logic_error("port graph: no edge at requested port");
    const auto& e = edges[static_cast<size_t>(i)];
    return e.first == p ? e.second : e.first;
}

void PortGraph::replug(const Port& from, const Port& to) {
    int i = edge_at(from);
    if (i < 0) throw std::logic_error("port graph: replug of an empty port");
    auto& e = edges[static_cast<size_t>(i)];
    if (e.first == from)
        e.first = to;
    else
        e.second = to;
}

void PortGraph::erase_edge_at(const Port& p) {
    int i = edge_at(p);
    if (i < 0) throw std::logic_error("port graph: erasing a missing edge");
    edges.erase(edges.begin() + i);
}

PortGraph to_ports(const Diagram& d) {
    PortGraph pg;
    pg.free_loops = d.free_loops;
    pg.kinds.reserve(d.nodes.size());
    for (const auto& n : d.nodes) pg.kinds.push_back(n.kind);
    auto ports = label_ports(d);
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node < 0) continue;
        pg.add_edge(ports[lab][0], ports[lab][1]);
    }
    return pg;
}

Diagram from_ports(const PortGraph& pg) {
    const int n = static_cast<int>(pg.kinds.size());
    // Map each port to its edge index, checking single use.
    std::vector<std::array<int, 4>> edge_of(static_cast<size_t>(n), {-1, -1, -1, -1});
    auto claim = [&](const Port& p, int e) {
        if (p.node < 0 || p.node >= n || p.slot < 0 || p.slot > 3)
            throw std::logic_error("port graph: port out of range");
        int& cell = edge_of[static_cast<size_t>(p.node)][static_cast<size_t>(p.slot)];
        if (cell != -1) throw std::logic_error("port graph: port used twice");
        cell = e;
    };
    for (size_t e = 0; e < pg.edges.size(); ++e) {
        claim(pg.edges[e].first, static_cast<int>(e));
        claim(pg.edges[e].second, static_cast<int>(e));
    }
    std::vector<int> label(pg.edges.size(), 0);
    int next = 1;
    Diagram d;
    d.free_loops = pg.free_loops;
    d.nodes.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        d.nodes[static_cast<size_t>(i)].kind = pg.kinds[static_cast<size_t>(i)];
        for (int s = 0; s < 4; ++s) {
            int e = edge_of[static_cast<size_t>(i)][static_cast<size_t>(s)];
            if (e < 0) throw std::logic_error("port graph: empty port");
            if (label[static_cast<size_t>(e)] == 0) label[static_cast<size_t>(e)] = next++;
            d.nodes[static_cast<size_t>(i)].ends[static_cast<size_t>(s)] =
                label[static_cast<size_t>(e)];
        }
    }
    return d;
}

void dissolve_nodes(PortGraph& pg, const std::vector<int>& dead,
                    const std::vector<std::vector<std::pair<int, int>>>& pass) {
    const int n = static_cast<int>(pg.kinds.size());
    std::vector<bool> is_dead(static_cast<size_t>(n), false);
    // through[node][slot] = internally connected slot, or -1.
    std::vector<std::array<int, 4>> through(static_cast<size_t>(n), {-1, -1, -1, -1});
    for (size_t k = 0; k < dead.size(); ++k) {
        int node = dead[k];
        is_dead[static_cast<size_t>(node)] = true;
        for (auto [a, b] : pass[k]) {
            through[static_cast<size_t>(node)][static_cast<size_t>(a)] = b;
            through[static_cast<size_t>(node)][static_cast<size_t>(b)] = a;
        }
    }

    auto port_dead = [&](const Port& p) { return is_dead[static_cast<size_t>(p.node)]; };

    std::vector<bool> visited(pg.edges.size(), false);
    std::vector<std::pair<Port, Port>> new_edges;
    long loops = 0;

    // Follow a strand from a live endpoint across dead nodes.
    auto walk = [&](int start_edge, const Port& live_end) {
        visited[static_cast<size_t>(start_edge)] = true;
        const auto& e0 = pg.edges[static_cast<size_t>(start_edge)];
        Port cur = (e0.first == live_end) ? e0.second : e0.first;
        while (port_dead(cur)) {
            int mate_slot = through[static_cast<size_t>(cur.node)][static_cast<size_t>(cur.slot)];
            if (mate_slot < 0)
                throw std::logic_error("dissolve: edge enters a dead slot with no route");
            Port hop{cur.node, mate_slot};
            int ei = pg.edge_at(hop);
            if (ei < 0) throw std::logic_error("dissolve: routed slot carries no edge");
            if (visited[static_cast<size_t>(ei)])
                throw std::logic_error("dissolve: strand revisits an edge");
            visited[static_cast<size_t>(ei)] = true;
            const auto& e = pg.edges[static_cast<size_t>(ei)];
            cur = (e.first == hop) ? e.second : e.first;
        }
        new_edges.emplace_back(live_end, cur);
    };

    for (size_t i = 0; i < pg.edges.size(); ++i) {
        if (visited[i]) continue;
        const auto& e = pg.edges[i];
        bool d1 = port_dead(e.first), d2 = port_dead(e.second);
        if (!d1) {
            walk(static_cast<int>(i), e.first);
        } else if (!d2) {
            walk(static_cast<int>(i), e.second);
        }
        // Both-dead edges are picked up either by a walk from elsewhere or
        // by the loop sweep below.
    }
    // Remaining unvisited edges sit on closed chains through dead nodes.
    for (size_t i = 0; i < pg.edges.size(); ++i) {
        if (visited[i]) continue;
        ++loops;
        visited[i] = true;
        Port start = pg.edges[i].first;
        Port cur = pg.edges[i].second;
        while (cur != start) {
            int mate_slot = through[static_cast<size_t>(cur.node)][static_cast<size_t>(cur.slot)];
            if (mate_slot < 0) throw std::logic_error("dissolve: broken loop route");
            Port hop{cur.node, mate_slot};
            if (hop == start) break;
            int ei = pg.edge_at(hop);
            if (ei < 0 || visited[static_cast<size_t>(ei)])
                throw std::logic_error("dissolve: malformed loop chain");
            visited[static_cast<size_t>(ei)] = true;
            const auto& e2 = pg.edges[static_cast<size_t>(ei)];
            cur = (e2.first == hop) ? e2.second : e2.first;
        }
    }

    // Sanity: slots of dead nodes without a route must have carried no edge;
    // that was enforced implicitly (such an edge would have thrown above).
    // Compact node indices.
    std::vector<int> remap(static_cast<size_t>(n), -1);
    std::vector<NodeKind> kept;
    for (int i = 0; i < n; ++i) {
        if (is_dead[static_cast<size_t>(i)]) continue;
        remap[static_cast<size_t>(i)] = static_cast<int>(kept.size());
        kept.push_back(pg.kinds[static_cast<size_t>(i)]);
    }
    for (auto& e : new_edges) {
        e.first.node = remap[static_cast<size_t>(e.first.node)];
        e.second.node = remap[static_cast<size_t>(e.second.node)];
    }
    pg.kinds = std::move(kept);
    pg.edges = std::move(new_edges);
    pg.free_loops += loops;
}

}  // namespace rinv
