#pragma once

#include <cstdint>

#include "rinv/diagram.hpp"
#include "rinv/laurent.hpp"

namespace rinv {

// Largest number of crossings the exact state enumeration will accept.
inline constexpr int kMaxBracketCrossings = 24;

// Kauffman bracket of a link diagram (no graph vertices), normalized so the
// empty diagram gives 1 and a single circle gives d = -A^2 - A^-2.  Each
// crossing is resolved two ways: the A-smoothing joins slot pairs (0,1) and
// (2,3), the B-smoothing joins (0,3) and (1,2); a state with a A-choices,
// b B-choices and c resulting circles contributes A^(a-b) d^c.
// Throws DomainError on vertices or more than kMaxBracketCrossings.
Laurent kauffman_bracket(const Diagram& d);

// Number of circles in one complete smoothing; bit i of `state` set means
// the B-smoothing at crossing i (crossings indexed in node order).  Free
// loops are included in the count.
long state_loop_count(const Diagram& d, uint64_t state);

}  // namespace rinv
