#pragma once

// Independent cross-checks for the invariant pipeline.  Everything here is
// computed by a different route than the main evaluator so the two can
// validate each other: colorings by brute-force constraint counting, the
// writhe check through an orientation walk, the skein checks by building
// the related diagrams explicitly and comparing both sides.

#include <string>
#include <vector>

#include "rinv/diagram.hpp"
#include "rinv/laurent.hpp"
#include "rinv/rational.hpp"

namespace rinv {

// Number of colorings of the diagram's arcs with colors {0,1,2} such that
// at every crossing the over-arc color o and the two under-arc colors u, u'
// satisfy o + u + u' = 0 (mod 3).  Arcs are maximal over-strands: edge
// labels merged where a strand passes over a crossing.  Constant colorings
// always qualify, so the result is at least 3 for a nonempty link and is
// always a power of 3.  Throws DomainError on graph vertices or if the
// diagram has too many arcs to enumerate.
long long three_colorings(const Diagram& d);

// Consistency check for a one-component link diagram: orients the strand,
// accumulates the writhe w, forms f = (-A^3)^(-w) * <d>, and verifies that
//   (a) the orientation walk passes every crossing exactly twice,
//   (b) f has all exponents divisible by four (true for any knot), and
//   (c) f(A) * f(1/A) equals <d>(A) * <d>(1/A).
// Throws DomainError if the diagram is not a one-component link.
bool writhe_check_knot(const Diagram& d);

enum class SkeinKind {
    QuadraticBracket,  // <C(ss)> = (A - A^-3) <C(s)> + A^-2 <C(1)>
    CubicR,            // R(C(ss)) = (1-L) R(C(s)) + (L-1) R(C(1)) + R(C(s^-1))
};

struct SkeinReport {
    bool ok = false;
    std::string detail;  // empty when ok, otherwise what differed
};

// Verifies the skein identity in the tangle context defined by two
// co-facial half-edge occurrences (he, hf) of d, for both handedness
// variants of the inserted twist.  QuadraticBracket works on links only;
// CubicR accepts embedded graphs.
SkeinReport skein_relation_check(const Diagram& d, int he, int hf, SkeinKind kind);

// The clasp variant that stacks two copies of the given twist variant;
// exposed so tests can build matched sigma / sigma^2 families.
int clasp_variant_for(int twist_variant);

struct Constituent {
    std::vector<int> strand_classes;  // which strand classes were kept
    Diagram link;                     // the induced link diagram
    LambdaRational r;                 // its invariant
    bool unlink_value;                // r == (L+2)^components
};

struct ConstituentScan {
    std::vector<Constituent> entries;  // includes the empty selection
    bool any_linked = false;           // some constituent has a non-unlink value
};

// Enumerates the constituent links of an embedded graph diagram: strand
// classes are edge labels merged through crossings; a subset of classes
// qualifies if removing the others leaves every vertex with degree 0 or 2,
// so vertices dissolve and a link remains.  Throws DomainError if there
// are more than 8 strand classes.
ConstituentScan constituent_links(const Diagram& d);

}  // namespace rinv
