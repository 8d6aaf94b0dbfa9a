#include "rinv/topology.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rinv {

Faces compute_faces(const Diagram& d) {
    const int n = static_cast<int>(d.nodes.size());
    Faces f;
    f.orbit_of.assign(static_cast<size_t>(4 * n), -1);
    if (n == 0) return f;

    auto ports = label_ports(d);
    // mate of each half-edge (the other end of the edge in that slot).
    std::vector<Port> mate(static_cast<size_t>(4 * n));
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node < 0) continue;
        const Port &a = ports[lab][0], &b = ports[lab][1];
        mate[static_cast<size_t>(4 * a.node + a.slot)] = b;
        mate[static_cast<size_t>(4 * b.node + b.slot)] = a;
    }
    for (int h = 0; h < 4 * n; ++h) {
        if (f.orbit_of[static_cast<size_t>(h)] >= 0) continue;
        const int id = static_cast<int>(f.orbits.size());
        f.orbits.emplace_back();
        int cur = h;
        while (f.orbit_of[static_cast<size_t>(cur)] < 0) {
            f.orbit_of[static_cast<size_t>(cur)] = id;
            f.orbits.back().push_back(Port{cur / 4, cur % 4});
            Port m = mate[static_cast<size_t>(cur)];
            cur = 4 * m.node + (m.slot + 1) % 4;
        }
        if (cur != h) throw std::logic_error("face permutation is not a bijection");
    }
    return f;
}

std::vector<long> component_genus(const Diagram& d) {
    const int n = static_cast<int>(d.nodes.size());
    if (n == 0) return {};
    // Union nodes connected by an edge.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto ports = label_ports(d);
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node < 0) continue;
        parent[static_cast<size_t>(find(ports[lab][0].node))] =
            find(ports[lab][1].node);
    }

    std::map<int, long> verts, edges, faces_per;
    for (int i = 0; i < n; ++i) ++verts[find(i)];
    for (size_t lab = 1; lab < ports.size(); ++lab) {
        if (ports[lab][0].node < 0) continue;
        ++edges[find(ports[lab][0].node)];
    }
    Faces f = compute_faces(d);
    for (const auto& orbit : f.orbits) ++faces_per[find(orbit.front().node)];

    std::vector<long> out;
    for (const auto& [root, v] : verts) {
        long chi = v - edges[root] + faces_per[root];
        if ((2 - chi) % 2 != 0)
            throw std::logic_error("odd Euler defect in rotation system");
        out.push_back((2 - chi) / 2);
    }
    return out;
}

long total_genus(const Diagram& d) {
    long g = 0;
    for (long c : component_genus(d)) g += c;
    return g;
}

}  // namespace rinv
