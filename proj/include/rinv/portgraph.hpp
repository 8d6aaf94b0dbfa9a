#pragma once

#include <utility>
#include <vector>

#include "rinv/diagram.hpp"

namespace rinv {

// Working representation for surgery on diagrams: nodes keep only their
// kind, and every edge is an explicit unordered pair of ports.  All moves
// and vertex resolutions are small edits on this structure; converting
// back assigns canonical labels.
struct PortGraph {
    std::vector<NodeKind> kinds;
    std::vector<std::pair<Port, Port>> edges;
    long free_loops = 0;

    int add_node(NodeKind kind) {
        kinds.push_back(kind);
        return static_cast<int>(kinds.size()) - 1;
    }
    void add_edge(Port a, Port b) { edges.emplace_back(a, b); }

    // Index into `edges` of the edge with an end at p, or -1.
    int edge_at(const Port& p) const;

    // The opposite end of the edge at p.  Throws std::logic_error when no
    // edge ends there (that is an internal invariant violation, not input).
    Port mate(const Port& p) const;

    // Moves the end of the edge currently at `from` so it plugs into `to`.
    void replug(const Port& from, const Port& to);

    // Removes the edge with an end at p.
    void erase_edge_at(const Port& p);
};

PortGraph to_ports(const Diagram& d);

// Requires every port of every node to carry exactly one edge end; labels
// are assigned 1..E in first-use order (nodes scanned in order, slots 0..3).
Diagram from_ports(const PortGraph& pg);

// Removes the nodes listed in `dead` after routing strands through them:
// pass[k] lists slot pairs of dead[k] that connect internally.  Slots of a
// dead node not covered by a pair must carry no edge when called.  Chains
// of edges that close up entirely through dead nodes become free loops.
// Surviving nodes are compacted in order.
void dissolve_nodes(PortGraph& pg, const std::vector<int>& dead,
                    const std::vector<std::vector<std::pair<int, int>>>& pass);

}  // namespace rinv
