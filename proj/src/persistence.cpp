#include "sizefn/persistence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sizefn {

static std::vector<std::vector<int>> adjacency(const DiscreteSizePair& p) {
    std::vector<std::vector<int>> adj(p.vertex_count());
    for (auto [u, v] : p.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

SizeFunctionDiagram compute_diagram(const DiscreteSizePair& p) {
    const int n = p.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&p](int a, int b) {
        if (p.values[a] != p.values[b]) return p.values[a] < p.values[b];
        return a < b;
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    const auto adj = adjacency(p);

    std::vector<int> parent(n), birth(n);
    std::vector<char> inserted(n, 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    std::map<std::pair<double, double>, int> pairs;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        inserted[v] = 1;
        parent[v] = v;
        birth[v] = v;
        for (int u : adj[v]) {
            if (!inserted[u]) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) continue;
            // elder rule: the component with the later birth dies here
            if (rank[birth[ru]] > rank[birth[rv]]) std::swap(ru, rv);
            const double b = p.values[birth[rv]];
            const double d = p.values[v];
            if (b != d) ++pairs[{b, d}];
            parent[rv] = ru;
        }
    }

    SizeFunctionDiagram diag;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) diag.at_infinity.push_back(p.values[birth[v]]);
    std::sort(diag.at_infinity.begin(), diag.at_infinity.end());
    diag.proper.reserve(pairs.size());
    for (const auto& [xy, m] : pairs)
        diag.proper.push_back({xy.first, xy.second, m});
    return diag;
}

static void check_query(double x, double y) {
    if (!(x < y)) throw std::invalid_argument("size function query requires x < y");
}

int ell_query(const SizeFunctionDiagram& d, double x, double y) {
    check_query(x, y);
    int c = 0;
    for (double k : d.at_infinity)
        if (k <= x) ++c;
    for (const auto& pt : d.proper)
        if (pt.x <= x && y < pt.y) c += pt.multiplicity;
    return c;
}

int ell_bruteforce(const DiscreteSizePair& p, double x, double y) {
    check_query(x, y);
    const int n = p.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (auto [u, v] : p.edges)
        if (p.values[u] <= y && p.values[v] <= y) {
            int ru = find(u), rv = find(v);
            if (ru != rv) parent[ru] = rv;
        }
    std::vector<char> counted(n, 0);
    int c = 0;
    for (int v = 0; v < n; ++v) {
        if (!(p.values[v] <= x)) continue;
        int r = find(v);
        if (!counted[r]) {
            counted[r] = 1;
            ++c;
        }
    }
    return c;
}

// Smallest gap between consecutive distinct entries of vals; fallback when
// there are fewer than two distinct values.
static double min_gap(std::vector<double> vals, double fallback) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    double g = fallback;
    bool found = false;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        const double d = vals[i] - vals[i - 1];
        if (!found || d < g) g = d;
        found = true;
    }
    return g;
}

int multiplicity(const DiscreteSizePair& p, double x, double y) {
    check_query(x, y);
    std::vector<double> vals = p.values;
    vals.push_back(x);
    vals.push_back(y);
    const double g = min_gap(std::move(vals), 1.0);
    // Any e below both the smallest gap and (y-x)/2 lands in the stable
    // regime where the alternating sum is constant; halve for safety.
    const double e = std::min(g, (y - x) / 2.0) / 2.0;
    return ell_bruteforce(p, x + e, y - e) - ell_bruteforce(p, x - e, y - e) -
           ell_bruteforce(p, x + e, y + e) + ell_bruteforce(p, x - e, y + e);
}

int multiplicity_at_infinity(const DiscreteSizePair& p, double k) {
    std::vector<double> vals = p.values;
    const double vmax = *std::max_element(vals.begin(), vals.end());
    vals.push_back(k);
    const double e = min_gap(std::move(vals), 1.0) / 2.0;
    const double big = std::max(vmax, k + e) + 1.0;
    return ell_bruteforce(p, k + e, big) - ell_bruteforce(p, k - e, big);
}

} // namespace sizefn
