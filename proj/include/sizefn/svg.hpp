#pragma once

#include "sizefn/persistence.hpp"

#include <string>

namespace sizefn {

// Standalone SVG plot of a diagram: the half-plane above the diagonal,
// the diagonal itself, proper cornerpoints as disks sized by multiplicity,
// and one vertical line per cornerpoint at infinity. Read-only over the
// diagram.
std::string diagram_to_svg(const SizeFunctionDiagram& d);

} // namespace sizefn
