#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rinv/diagram.hpp"

namespace rinv {

struct MoveError : std::runtime_error {
    explicit MoveError(const std::string& msg) : std::runtime_error(msg) {}
};

// Diagram moves that preserve the invariant.  Location encoding:
//   R1Add       a = edge label to curl (0 = consume a free loop), b = rotation
//               0..3 choosing the curl's chirality and side.
//   R1Remove    a = crossing index, b = slot i where ends[i] == ends[i+1]
//               forms the curl's cap.
//   R2Add       a, b = half-edge ids 4*node+slot of two distinct occurrences
//               in one face orbit (-1 = consume a free loop instead; both
//               may be -1 when two free loops are available); c = 0 or 1
//               choosing which strand passes over.
//   R2Remove    a = crossing index C, b = slot s, c = crossing index D,
//               d = slot t, where the face orbit {(C,s),(D,t)} is a bigon
//               whose strands have uniform over/under (s, t of opposite
//               parity).
//   R3          a = crossing index, b = slot holding the edge along which a
//               strand slides past the opposite crossing; the face orbit
//               from (a, b) must be a triangle over three distinct
//               crossings and the sliding strand must be uniformly over or
//               uniformly under.
//   VertexRotate a = vertex index (ends rotate one slot).
//   LegSwap     a = vertex index, b = slot i (legs at i, i+1 cross),
//               c = 0 or 1 choosing which leg passes over.
//   CapRemove   a = vertex index, b = slot i where ends[i] == ends[i+1] is a
//               simple loop; removes the loop and the vertex, joining the
//               two remaining legs.
//   MirrorAll   no location; mirrors every crossing.
enum class MoveKind : uint8_t {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    VertexRotate,
    LegSwap,
    CapRemove,
    MirrorAll,
};

struct MoveSpec {
    MoveKind kind = MoveKind::MirrorAll;
    int a = 0, b = 0, c = 0, d = 0;
};

std::string move_to_string(const MoveSpec& m);

// Applies the move, throwing MoveError when the location is not valid for
// this diagram.  The result carries canonical labels.
Diagram apply_move(const Diagram& d, const MoveSpec& m);

// Bounds for enumeration: moves that would grow past these are omitted.
struct MoveLimits {
    int max_crossings = 12;
    int max_vertices = 4;
};

// Every move applicable to d within the limits, in a deterministic order.
std::vector<MoveSpec> applicable_moves(const Diagram& d, const MoveLimits& lim);

// Deterministic pseudo-random planar diagram with at most the given number
// of crossings and vertices, built from seeded insertions (curls, pokes,
// clasps, twists, vertex attachments, extra circles).  Same seed, same
// diagram, on every platform.
Diagram random_diagram(uint64_t seed, int max_crossings, int max_vertices);

// The two-strand tangle insertions used by the generator and the skein
// checks.  Both occurrences must lie in one face orbit (or be -1 for a free
// loop where noted).  insert_twist_chain splices k crossings forming the
// k-fold twist sigma^k between the two strands; variant selects the
// chirality, and k = 0 returns the diagram unchanged.  Free loops are not
// valid twist targets (a closed curve cannot cross another strand an odd
// number of times in the plane), so half-edge ids must be nonnegative here.
Diagram insert_twist_chain(const Diagram& d, int he, int hf, int k, int variant);

// Clasp: the two-crossing same-sign insertion (sigma^2).  Accepts -1 loop
// markers like R2Add.  variant 0/1 picks the chirality.
Diagram insert_clasp(const Diagram& d, int he, int hf, int variant);

// Fuses two co-facial strands at a new 4-valent graph vertex; each strand
// takes two adjacent legs (strands sharing a face meet tangentially).
Diagram insert_fused_vertex(const Diagram& d, int he, int hf);

// Hangs a new vertex with a simple loop (cap) onto an edge or a free loop
// (label 0); rot = 0..3 picks which slots the cap occupies.
Diagram insert_cap_vertex(const Diagram& d, int edge_label, int rot);

}  // namespace rinv
