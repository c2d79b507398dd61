#pragma once

#include "sizefn/seminorm.hpp"
#include "sizefn/size_pair.hpp"

#include <utility>
#include <vector>

namespace sizefn {

// Discrete monotone alignment between two sample grids: steps from (0,0) to
// (n-1,m-1), each advancing i, j, or both by 1. Stand-in for a (possibly
// orientation-reversing) homeomorphism between the intervals; reversed means
// b's samples are traversed right-to-left.
struct MonotonePath {
    enum class Orientation { forward, reversed };
    Orientation orientation = Orientation::forward;
    std::vector<std::pair<int, int>> steps;
};

// Rejects paths that do not run monotonically from (0,0) to (n-1,m-1).
void validate_path(const MonotonePath& h, int n, int m);

// Seminorm of the aligned difference list {a.values[i] - b.values[j]} along
// the path (with b reversed first when the orientation says so).
double path_cost(const IntervalSamples& a, const IntervalSamples& b, const MonotonePath& h,
                 SeminormId s);

struct Estimate {
    double value = 0.0;
    SeminormId seminorm = SeminormId::sup;
    MonotonePath witness;
    int n = 0, m = 0;
    bool coarse = false;

    // value == path_cost(witness) by construction, recomputable by callers
};

struct EstimateOptions {
    // Subsample the candidate floor values of the range search (the result
    // stays a valid upper bound, it may just miss the grid optimum).
    bool coarse = false;
};

// Upper estimate of the pseudodistance for interval pairs: the minimum
// path_cost over all monotone paths and both orientations.
//
// sup: bottleneck path value, found by binary search on the candidate set
// {|a_i - b_j|} with monotone-reachability feasibility checks.
//
// range: exact over the grid by sweeping candidate floor values L taken from
// {a_i - b_j}; for each L a min-max DP over the cells with difference >= L
// gives the best attainable ceiling U*(L), and the answer is min U*(L) - L.
// U*(L) is a step function, non-increasing as L descends, so the sweep jumps
// between its breakpoints by galloping instead of probing every candidate.
Estimate estimate_upper(const IntervalSamples& a, const IntervalSamples& b, SeminormId s,
                        EstimateOptions opts = {});

} // namespace sizefn
