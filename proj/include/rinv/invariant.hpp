#pragma once

#include <vector>

#include "rinv/diagram.hpp"
#include "rinv/laurent.hpp"
#include "rinv/rational.hpp"

namespace rinv {

// One term of the vertex expansion: a link diagram obtained by replacing
// every graph vertex with either of the two planar smoothings or either of
// the two crossings, together with the number of smoothing choices made.
struct ResolutionTerm {
    int smooth_count = 0;
    Diagram link;
};

// All 4^V resolutions of the diagram's vertices, in a fixed order: vertices
// are scanned in node order and each contributes a base-4 digit (0 = the
// smoothing joining slots (0,1),(2,3); 1 = the smoothing joining (1,2),(3,0);
// 2 = a crossing with the same slot assignment; 3 = a crossing with the ends
// rotated one slot).  Digit 0 of the counter belongs to the first vertex.
std::vector<ResolutionTerm> expand_vertices(const Diagram& d);

// The link invariant: with B the Kauffman bracket, the product
// Q(A) = B(A) * B(1/A) is symmetric with all exponents divisible by 4, so
// it is a symmetric polynomial in mu = A^4 and rewrites as a polynomial in
// lambda = mu + 1/mu.  That polynomial is returned.  Requires a vertex-free
// diagram.
Laurent r_link(const Diagram& d);

// The graph invariant: each vertex expands to
//   (lambda * smoothing_I + lambda * smoothing_II + crossing + crossing')
//   / ((lambda + 1)(lambda + 2)),
// so the value is sum_over_resolutions lambda^smooth_count * r_link,
// divided by ((lambda+1)(lambda+2))^V and reduced to canonical form.
// Works on plain link diagrams too (V = 0).
LambdaRational r_graph(const Diagram& d);

struct InvariantReport {
    LambdaRational r;
    SpecialValue at2, at1, at_minus1;
};

// r_graph plus its exact values at lambda = 2, 1, -1.  The value at 2 is
// always finite since the denominator factors are 3^a * 4^b there.
InvariantReport analyze(const Diagram& d);

}  // namespace rinv
