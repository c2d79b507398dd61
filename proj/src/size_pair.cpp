#include "sizefn/size_pair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sizefn {

static void check_values_finite(const std::vector<double>& values) {
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("vertex values must be finite");
}

DiscreteSizePair from_interval_samples(const IntervalSamples& samples) {
    if (samples.params.size() != samples.values.size())
        throw std::invalid_argument("params and values must have equal length");
    if (samples.params.size() < 2)
        throw std::invalid_argument("need at least two samples");
    for (double t : samples.params)
        if (!std::isfinite(t))
            throw std::invalid_argument("sample parameters must be finite");
    for (std::size_t i = 1; i < samples.params.size(); ++i)
        if (!(samples.params[i - 1] < samples.params[i]))
            throw std::invalid_argument("sample parameters must be strictly increasing");
    check_values_finite(samples.values);

    DiscreteSizePair p;
    p.values = samples.values;
    p.edges.reserve(samples.values.size() - 1);
    for (int i = 0; i + 1 < static_cast<int>(samples.values.size()); ++i)
        p.edges.emplace_back(i, i + 1);
    return p;
}

DiscreteSizePair from_graph(const std::vector<double>& values,
                            const std::vector<std::pair<int, int>>& edges) {
    if (values.empty())
        throw std::invalid_argument("graph needs at least one vertex");
    check_values_finite(values);

    const int n = static_cast<int>(values.size());
    DiscreteSizePair p;
    p.values = values;
    p.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range");
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        p.edges.emplace_back(u, v);
    }
    std::sort(p.edges.begin(), p.edges.end());
    p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
    return p;
}

DiscreteSizePair product_pair(const DiscreteSizePair& p, Connectivity connectivity) {
    const int n = p.vertex_count();
    DiscreteSizePair q;
    q.values.resize(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            q.values[static_cast<std::size_t>(u) * n + v] = p.values[u] - p.values[v];

    auto id = [n](int u, int v) { return u * n + v; };

    // Moves along one factor keep the other fixed; strong connectivity adds
    // the two diagonal moves across each cell.
    for (auto [u, u2] : p.edges) {
        for (int v = 0; v < n; ++v)
            q.edges.emplace_back(id(u, v), id(u2, v));
    }
    for (auto [v, v2] : p.edges) {
        for (int u = 0; u < n; ++u)
            q.edges.emplace_back(id(u, v), id(u, v2));
    }
    if (connectivity == Connectivity::strong) {
        for (auto [u, u2] : p.edges)
            for (auto [v, v2] : p.edges) {
                q.edges.emplace_back(id(u, v), id(u2, v2));
                q.edges.emplace_back(id(u, v2), id(u2, v));
            }
    }
    for (auto& e : q.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(q.edges.begin(), q.edges.end());
    q.edges.erase(std::unique(q.edges.begin(), q.edges.end()), q.edges.end());
    return q;
}

static void snap_in_place(std::vector<double>& values, double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("snap tolerance must be positive");
    for (double& v : values) v = std::round(v / tol) * tol;
}

DiscreteSizePair snap_values(const DiscreteSizePair& p, double tol) {
    DiscreteSizePair q = p;
    snap_in_place(q.values, tol);
    return q;
}

IntervalSamples snap_values(const IntervalSamples& s, double tol) {
    IntervalSamples t = s;
    snap_in_place(t.values, tol);
    return t;
}

std::vector<int> component_labels(const DiscreteSizePair& p) {
    const int n = p.vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : p.edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) parent[ru] = rv;
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (label[r] < 0) label[r] = next++;
        label[i] = label[r];
    }
    return label;
}

int component_count(const DiscreteSizePair& p) {
    const auto labels = component_labels(p);
    int c = 0;
    for (int l : labels) c = std::max(c, l + 1);
    return c;
}

} // namespace sizefn
