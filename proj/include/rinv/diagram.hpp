#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rinv {

// Diagrams of links and embedded 4-valent graphs, given combinatorially:
// each node (a crossing or a graph vertex) lists the labels of the four
// edge ends around it in counterclockwise order.  Every edge label appears
// exactly twice in the whole diagram.  At a crossing, the strand through
// slots 0 and 2 passes under the strand through slots 1 and 3.  Closed
// curves that touch no node are carried as a count of free loops.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class NodeKind : uint8_t { Crossing, Vertex };

struct Node {
    NodeKind kind = NodeKind::Crossing;
    std::array<int, 4> ends{};  // edge labels, counterclockwise from slot 0

    bool operator==(const Node& o) const {
        return kind == o.kind && ends == o.ends;
    }
};

struct Diagram {
    std::vector<Node> nodes;
    long free_loops = 0;

    bool operator==(const Diagram& o) const {
        return nodes == o.nodes && free_loops == o.free_loops;
    }
    bool operator!=(const Diagram& o) const { return !(*this == o); }

    size_t crossing_count() const;
    size_t vertex_count() const;
    bool has_vertices() const { return vertex_count() > 0; }
};

// A specific end of an edge: slot `slot` of node `node`.
struct Port {
    int node = -1;
    int slot = 0;

    bool operator==(const Port& o) const { return node == o.node && slot == o.slot; }
    bool operator!=(const Port& o) const { return !(*this == o); }
    bool operator<(const Port& o) const {
        return node != o.node ? node < o.node : slot < o.slot;
    }
};

// Text format, one node per line:
//   X a b c d   -- crossing, ends counterclockwise from slot 0
//   V a b c d   -- graph vertex, same slot convention
//   O k         -- k additional free loops (k >= 0)
// '#' starts a comment; blank lines are ignored; node order is line order.
// Throws ParseError with a 1-based line number on malformed input.
Diagram parse_diagram(const std::string& text);

// Inverse of parse_diagram up to comments/whitespace: one line per node in
// order, plus a final "O k" line when free loops are present.
std::string render_diagram(const Diagram& d);

// Checks structural well-formedness: four ends per node, positive labels,
// every label used exactly twice, free_loops >= 0.  Returns a list of
// human-readable problems (empty means valid).  Planarity is deliberately
// not checked here; genus is available separately as a diagnostic.
std::vector<std::string> validate(const Diagram& d);

// Throws ValidationError listing the problems unless validate() is clean.
void require_valid(const Diagram& d, const std::string& context);

// The mirror image: reverses every over/under choice by rotating each
// crossing's end list one slot (vertices are left alone).
Diagram mirror(const Diagram& d);

// Side-by-side union; labels of `b` are shifted above those of `a`.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

// Largest label in use (0 when there are no edges).
int max_label(const Diagram& d);

// Where each label's two ends sit.  Index by label; entries for unused
// labels have node = -1.  Throws ValidationError if a label is not used
// exactly twice.
std::vector<std::array<Port, 2>> label_ports(const Diagram& d);

// Deletes the given graph edges (labels refer to full strands: each runs
// from one vertex slot to another, possibly passing under or over any
// number of crossings on the way; passing a label of any edge on a strand
// deletes the whole strand).  Crossings met by a deleted strand dissolve
// into the surviving strand; vertices must end up with degree 0 (deleted)
// or 2 (smoothed into an arc), otherwise ValidationError.
Diagram remove_edges(const Diagram& d, const std::vector<int>& labels);

// Relabels edges canonically (1..E in first-use order, nodes scanned in
// order, slots 0..3) without changing structure.
Diagram canonical_labels(const Diagram& d);

// Number of connected pieces: for a graph diagram, the components of the
// underlying graph (free loops each count once); for a link diagram, the
// number of circles obtained by walking straight through every crossing,
// plus the free loops.
long component_count(const Diagram& d);

}  // namespace rinv
