#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sizefn {

// A discretized size pair: a finite graph with a real value at each vertex.
// Vertices are indexed 0..n-1; edges are stored normalized (u < v), sorted,
// without duplicates or self-loops.
struct DiscreteSizePair {
    std::vector<double> values;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return static_cast<int>(values.size()); }
};

// Samples of a function on an interval: strictly increasing parameters with
// one value each. Adjacent samples are considered connected.
struct IntervalSamples {
    std::vector<double> params;
    std::vector<double> values;
};

enum class Connectivity { strong, four };

// Path graph on the samples; rejects non-increasing params, length < 2,
// mismatched lengths, or non-finite entries.
DiscreteSizePair from_interval_samples(const IntervalSamples& samples);

// Arbitrary graph; normalizes edges (swaps to u < v, drops self-loops and
// duplicates), rejects vertex ids out of range and non-finite values.
DiscreteSizePair from_graph(const std::vector<double>& values,
                            const std::vector<std::pair<int, int>>& edges);

// Product pair on vertex pairs (u, v) with value phi(u) - phi(v), indexed
// u * n + v. Strong connectivity joins (u,v)~(u',v') when u,u' are equal or
// adjacent and v,v' are equal or adjacent (not both equal); four-connectivity
// drops the diagonal moves.
DiscreteSizePair product_pair(const DiscreteSizePair& p,
                              Connectivity connectivity = Connectivity::strong);

// Rounds every value to the nearest multiple of tol (tol > 0). Intended for
// noisy inputs where nearly-equal values should merge; off by default at
// every call site.
DiscreteSizePair snap_values(const DiscreteSizePair& p, double tol);
IntervalSamples snap_values(const IntervalSamples& s, double tol);

// Connected component labels (0-based, in order of first vertex) and count.
std::vector<int> component_labels(const DiscreteSizePair& p);
int component_count(const DiscreteSizePair& p);

} // namespace sizefn
