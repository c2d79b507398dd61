#pragma once

#include "sizefn/size_pair.hpp"

#include <vector>

namespace sizefn {

// Proper cornerpoint of a size function: born at x, dead at y (x < y), with
// integer multiplicity.
struct CornerPoint {
    double x;
    double y;
    int multiplicity;
};

// Size function of a discrete size pair, as its cornerpoint data:
// one at-infinity value per connected component (the component's minimum)
// plus finitely many proper cornerpoints. Both lists are sorted.
struct SizeFunctionDiagram {
    std::vector<double> at_infinity;
    std::vector<CornerPoint> proper;

    int proper_point_count() const {
        int c = 0;
        for (const auto& p : proper) c += p.multiplicity;
        return c;
    }
};

// 0-dimensional sublevel-set persistence by union-find over the vertices in
// filtration order (value, then vertex index). Merges follow the elder rule;
// pairs with equal birth and death are dropped. Exact value comparisons: no
// tolerance is applied here, snap_values beforehand if needed.
SizeFunctionDiagram compute_diagram(const DiscreteSizePair& p);

// ell(x, y): number of connected components of {phi <= y} that contain a
// vertex with phi <= x. Requires x < y. Reads the answer off a diagram via
// the representation of the size function by cornerpoints: proper points
// count when px <= x and y < py, at-infinity values k count when k <= x.
int ell_query(const SizeFunctionDiagram& d, double x, double y);

// Same quantity straight from the definition: build the sublevel graph at y
// and count components meeting {phi <= x}. Independent of compute_diagram;
// used as the oracle in tests.
int ell_bruteforce(const DiscreteSizePair& p, double x, double y);

// Multiplicity of (x, y), x < y, as the limiting alternating sum
//   ell(x+e, y-e) - ell(x-e, y-e) - ell(x+e, y+e) + ell(x-e, y+e)
// evaluated at an e small enough to be inside the stable regime (below half
// the smallest gap between relevant values and below (y-x)/2).
int multiplicity(const DiscreteSizePair& p, double x, double y);

// Multiplicity of the vertical line at k: ell(k+e, Y) - ell(k-e, Y) for Y
// above every vertex value; counts components whose minimum equals k.
int multiplicity_at_infinity(const DiscreteSizePair& p, double k);

} // namespace sizefn
