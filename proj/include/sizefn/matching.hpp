#pragma once

#include "sizefn/extended_real.hpp"
#include "sizefn/persistence.hpp"

#include <vector>

namespace sizefn {

enum class PointRole { proper, at_infinity, diagonal };

// Point of the extended half-plane x < y, where y may be +infinity and
// diagonal points (x, x) stand for the retired state.
struct DiagramPoint {
    double x;
    ExtendedReal y;

    static DiagramPoint proper(double x, double y);
    static DiagramPoint at_infinity(double k);
    static DiagramPoint diagonal(double x);

    bool is_at_infinity() const { return y.is_infinite(); }
    bool is_diagonal() const { return !y.is_infinite() && x == y.value(); }
    PointRole role() const {
        if (is_at_infinity()) return PointRole::at_infinity;
        return is_diagonal() ? PointRole::diagonal : PointRole::proper;
    }
};

// min{ max{|x-x'|, |y-y'|}, max{(y-x)/2, (y'-x')/2} } under the infinity
// conventions of ExtendedReal. Matching an at-infinity point against a
// finite one always costs infinity.
ExtendedReal point_distance(const DiagramPoint& a, const DiagramPoint& b);

// Distance from a point to the diagonal: (y-x)/2, infinite for at-infinity
// points, zero on the diagonal itself.
ExtendedReal diagonal_gap(const DiagramPoint& a);

// Diagram as a point list: one at-infinity point per component, proper
// cornerpoints expanded by multiplicity.
std::vector<DiagramPoint> diagram_points(const SizeFunctionDiagram& d);

struct MatchedPair {
    DiagramPoint from;
    DiagramPoint to;
    ExtendedReal cost;
};

struct MatchingResult {
    ExtendedReal distance;
    std::vector<MatchedPair> pairs;
};

// Bottleneck matching between two point lists. At-infinity points pair with
// each other in sorted order; finite points are matched by binary search on
// the candidate costs, deciding feasibility of each threshold through a
// bipartite perfect-matching reduction where every point may also retire to
// the diagonal. The optimum is attained at one of the candidates. Distance
// is infinite iff the at-infinity counts differ.
MatchingResult compute_matching(const std::vector<DiagramPoint>& a,
                                const std::vector<DiagramPoint>& b);
MatchingResult compute_matching(const SizeFunctionDiagram& a, const SizeFunctionDiagram& b);

ExtendedReal matching_distance(const std::vector<DiagramPoint>& a,
                               const std::vector<DiagramPoint>& b);
ExtendedReal matching_distance(const SizeFunctionDiagram& a, const SizeFunctionDiagram& b);

// Exhaustive minimum over all ways to match or retire every point, straight
// from the definition, with no role-based shortcuts. Oracle for tests; lists
// are capped at 8 points each.
ExtendedReal matching_distance_bruteforce(const std::vector<DiagramPoint>& a,
                                          const std::vector<DiagramPoint>& b);
ExtendedReal matching_distance_bruteforce(const SizeFunctionDiagram& a,
                                          const SizeFunctionDiagram& b);

} // namespace sizefn
