#pragma once

#include <vector>

#include "rinv/diagram.hpp"

namespace rinv {

// A rotation-system view of a diagram.  Every node slot (n, s) is a
// half-edge; the face permutation sends (n, s) to rot(mate(n, s)) where
// mate crosses the edge plugged in at (n, s) and rot advances one slot
// counterclockwise.  Orbits of this permutation are the faces of the
// surface the rotation system describes; a diagram drawn in the plane has
// every connected piece of genus zero.  All co-facial constructions (the
// two-strand insertions and the triangle slide) use this same convention.
struct Faces {
    std::vector<std::vector<Port>> orbits;
    // orbit_of[4*node + slot] = index into orbits.
    std::vector<int> orbit_of;
};

Faces compute_faces(const Diagram& d);

// Genus of each connected piece that contains at least one node (free
// loops are genus-0 and not listed), via V - E + F = 2 - 2g per piece.
std::vector<long> component_genus(const Diagram& d);

// Sum of component_genus; 0 means the diagram is realizable in the plane.
long total_genus(const Diagram& d);

}  // namespace rinv
