#pragma once

#include "narayana/dyck.hpp"

namespace narayana {

// Unique writing of a nonempty path as U . inner . D . tail, where the shown
// Down step is the first return to ground level.
struct FirstReturnSplit {
  DyckPath inner;
  DyckPath tail;
};

FirstReturnSplit first_return_split(const DyckPath& p);

DyckPath assemble_first_return(const DyckPath& inner, const DyckPath& tail);

// The involution phi(U P1 D P2) = U phi(P2) D phi(P1), phi(eps) = eps.
// Exchanges the return count with the initial-ascent length and sends j
// peaks to n+1-j peaks. Implemented with an explicit work stack, so inputs
// far beyond the enumeration bound are fine.
DyckPath phi(const DyckPath& p);

}  // namespace narayana
