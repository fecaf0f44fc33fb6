#pragma once

#include "narayana/dyck.hpp"

#include <string>

namespace narayana {

// Static SVG with three panels: the path, its image under phi, and the
// parallelogram polyomino of the image with the lattice-pair endpoints
// marked (skipped in the degenerate j = n case). Rejects the empty path.
std::string figure_svg(const DyckPath& p);

}  // namespace narayana
