#pragma once

#include "narayana/counting.hpp"
#include "narayana/dyck.hpp"

namespace narayana {

// Exhaustive (returns, peaks) census over all Dyck paths of semilength n,
// keyed (i, n, j). Entries absent mean zero; the total over all cells is
// catalan(n) for n >= 1. The semilength-0 census is empty: the lone path
// epsilon has no (i, j) cell with i, j >= 1.
//
// census_serial is the reference implementation; census_parallel is the
// OpenMP kernel and must produce the identical table (counts are merged
// commutatively). census() dispatches to the parallel kernel.
CountTable census_serial(int n, int bound = kDefaultSemilengthBound);
CountTable census_parallel(int n, int bound = kDefaultSemilengthBound);
CountTable census(int n, int bound = kDefaultSemilengthBound);

}  // namespace narayana
