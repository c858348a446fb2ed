#pragma once

#include <string>

#include "looplink/diagram.hpp"

// Diagram export. Gate order and chord connectivity are the contract; the
// pixel geometry is presentational.

namespace looplink {

// GraphViz text: one node per gate in sorted boundary order, one directed
// edge per partition arc.
std::string to_dot(const Diagram& d);

// A disk with the gates at equal angles along the boundary arc in sorted
// order and one oriented chord per partition.
std::string to_svg(const Diagram& d);

}  // namespace looplink
