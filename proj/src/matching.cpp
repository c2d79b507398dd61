#include "sizefn/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace sizefn {

DiagramPoint DiagramPoint::proper(double x, double y) {
    if (!(x < y) || std::isinf(y))
        throw std::invalid_argument("proper cornerpoint requires finite x < y");
    return {x, ExtendedReal(y)};
}

DiagramPoint DiagramPoint::at_infinity(double k) {
    if (std::isinf(k)) throw std::invalid_argument("at-infinity cornerpoint requires finite x");
    return {k, ExtendedReal::infinity()};
}

DiagramPoint DiagramPoint::diagonal(double x) {
    if (std::isinf(x)) throw std::invalid_argument("diagonal point requires finite x");
    return {x, ExtendedReal(x)};
}

ExtendedReal point_distance(const DiagramPoint& a, const DiagramPoint& b) {
    const ExtendedReal direct =
        max(abs_diff(ExtendedReal(a.x), ExtendedReal(b.x)), abs_diff(a.y, b.y));
    const ExtendedReal via_diagonal = max(diagonal_gap(a), diagonal_gap(b));
    return min(direct, via_diagonal);
}

ExtendedReal diagonal_gap(const DiagramPoint& a) {
    return half(abs_diff(a.y, ExtendedReal(a.x)));
}

std::vector<DiagramPoint> diagram_points(const SizeFunctionDiagram& d) {
    std::vector<DiagramPoint> pts;
    for (double k : d.at_infinity) pts.push_back(DiagramPoint::at_infinity(k));
    for (const auto& c : d.proper)
        for (int i = 0; i < c.multiplicity; ++i) pts.push_back(DiagramPoint::proper(c.x, c.y));
    return pts;
}

namespace {

struct SplitPoints {
    std::vector<DiagramPoint> finite;
    std::vector<double> infinity; // sorted
};

SplitPoints split(const std::vector<DiagramPoint>& pts) {
    SplitPoints s;
    for (const auto& p : pts)
        if (p.is_at_infinity())
            s.infinity.push_back(p.x);
        else
            s.finite.push_back(p);
    std::sort(s.infinity.begin(), s.infinity.end());
    return s;
}

bool try_augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_r,
                 std::vector<char>& seen) {
    for (int v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        if (match_r[v] < 0 || try_augment(match_r[v], adj, match_r, seen)) {
            match_r[v] = u;
            return true;
        }
    }
    return false;
}

// Perfect-matching feasibility at threshold t. Left side: the points of p
// followed by one diagonal slot per point of q; right side symmetrically.
// p[i]--q[j] needs point_distance <= t, retiring a point needs its gap <= t,
// and diagonal slots always pair with each other.
struct FiniteMatcher {
    const std::vector<DiagramPoint>& p;
    const std::vector<DiagramPoint>& q;
    std::vector<std::vector<double>> dist; // p x q
    std::vector<double> gap_p, gap_q;

    FiniteMatcher(const std::vector<DiagramPoint>& p_, const std::vector<DiagramPoint>& q_)
        : p(p_), q(q_) {
        dist.resize(p.size(), std::vector<double>(q.size()));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j)
                dist[i][j] = point_distance(p[i], q[j]).value();
        gap_p.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) gap_p[i] = diagonal_gap(p[i]).value();
        gap_q.resize(q.size());
        for (std::size_t j = 0; j < q.size(); ++j) gap_q[j] = diagonal_gap(q[j]).value();
    }

    std::vector<double> candidates() const {
        std::vector<double> c;
        c.push_back(0.0);
        for (const auto& row : dist) c.insert(c.end(), row.begin(), row.end());
        c.insert(c.end(), gap_p.begin(), gap_p.end());
        c.insert(c.end(), gap_q.begin(), gap_q.end());
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        return c;
    }

    // match_r[j]: left index matched to right slot j, -1 if none
    bool feasible(double t, std::vector<int>* out_match = nullptr) const {
        const int np = static_cast<int>(p.size());
        const int nq = static_cast<int>(q.size());
        const int left = np + nq, right = nq + np;
        std::vector<std::vector<int>> adj(left);
        for (int i = 0; i < np; ++i) {
            for (int j = 0; j < nq; ++j)
                if (dist[i][j] <= t) adj[i].push_back(j);
            if (gap_p[i] <= t) adj[i].push_back(nq + i);
        }
        for (int j = 0; j < nq; ++j) {
            if (gap_q[j] <= t) adj[np + j].push_back(j);
            for (int i = 0; i < np; ++i) adj[np + j].push_back(nq + i);
        }
        std::vector<int> match_r(right, -1);
        int matched = 0;
        for (int u = 0; u < left; ++u) {
            std::vector<char> seen(right, 0);
            if (try_augment(u, adj, match_r, seen)) ++matched;
        }
        if (matched != left) return false;
        if (out_match) *out_match = match_r;
        return true;
    }
};

} // namespace

MatchingResult compute_matching(const std::vector<DiagramPoint>& a,
                                const std::vector<DiagramPoint>& b) {
    const SplitPoints sa = split(a);
    const SplitPoints sb = split(b);

    MatchingResult res;
    res.distance = ExtendedReal(0.0);

    if (sa.infinity.size() != sb.infinity.size()) res.distance = ExtendedReal::infinity();
    const std::size_t common = std::min(sa.infinity.size(), sb.infinity.size());
    for (std::size_t i = 0; i < common; ++i) {
        const double c = std::abs(sa.infinity[i] - sb.infinity[i]);
        res.distance = max(res.distance, ExtendedReal(c));
        res.pairs.push_back({DiagramPoint::at_infinity(sa.infinity[i]),
                             DiagramPoint::at_infinity(sb.infinity[i]), ExtendedReal(c)});
    }
    for (std::size_t i = common; i < sa.infinity.size(); ++i)
        res.pairs.push_back({DiagramPoint::at_infinity(sa.infinity[i]),
                             DiagramPoint::diagonal(sa.infinity[i]), ExtendedReal::infinity()});
    for (std::size_t i = common; i < sb.infinity.size(); ++i)
        res.pairs.push_back({DiagramPoint::diagonal(sb.infinity[i]),
                             DiagramPoint::at_infinity(sb.infinity[i]), ExtendedReal::infinity()});

    FiniteMatcher fm(sa.finite, sb.finite);
    const std::vector<double> cand = fm.candidates();
    // smallest feasible candidate; the largest one is always feasible
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (fm.feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<int> match_r;
    if (!fm.feasible(cand[lo], &match_r))
        throw std::logic_error("bottleneck search lost feasibility");

    const int np = static_cast<int>(sa.finite.size());
    const int nq = static_cast<int>(sb.finite.size());
    double t_used = 0.0;
    for (int j = 0; j < nq; ++j) {
        const int u = match_r[j];
        if (u < np) {
            const double c = fm.dist[u][j];
            t_used = std::max(t_used, c);
            res.pairs.push_back({sa.finite[u], sb.finite[j], ExtendedReal(c)});
        } else {
            const double c = fm.gap_q[j];
            t_used = std::max(t_used, c);
            const double m = (sb.finite[j].x + sb.finite[j].y.value()) / 2.0;
            res.pairs.push_back({DiagramPoint::diagonal(m), sb.finite[j], ExtendedReal(c)});
        }
    }
    for (int i = 0; i < np; ++i) {
        const int u = match_r[nq + i];
        if (u < np) {
            const double c = fm.gap_p[u];
            t_used = std::max(t_used, c);
            const double m = (sa.finite[u].x + sa.finite[u].y.value()) / 2.0;
            res.pairs.push_back({sa.finite[u], DiagramPoint::diagonal(m), ExtendedReal(c)});
        }
    }
    res.distance = max(res.distance, ExtendedReal(t_used));
    return res;
}

MatchingResult compute_matching(const SizeFunctionDiagram& a, const SizeFunctionDiagram& b) {
    return compute_matching(diagram_points(a), diagram_points(b));
}

ExtendedReal matching_distance(const std::vector<DiagramPoint>& a,
                               const std::vector<DiagramPoint>& b) {
    return compute_matching(a, b).distance;
}

ExtendedReal matching_distance(const SizeFunctionDiagram& a, const SizeFunctionDiagram& b) {
    return compute_matching(a, b).distance;
}

namespace {

struct BruteState {
    const std::vector<DiagramPoint>& a;
    const std::vector<DiagramPoint>& b;
    std::vector<char> used_b;
    ExtendedReal best = ExtendedReal::infinity();

    BruteState(const std::vector<DiagramPoint>& a_, const std::vector<DiagramPoint>& b_)
        : a(a_), b(b_), used_b(b_.size(), 0) {}

    void search(std::size_t i, ExtendedReal running) {
        if (!(running < best)) return;
        if (i == a.size()) {
            ExtendedReal total = running;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used_b[j]) total = max(total, diagonal_gap(b[j]));
            best = min(best, total);
            return;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used_b[j]) continue;
            used_b[j] = 1;
            search(i + 1, max(running, point_distance(a[i], b[j])));
            used_b[j] = 0;
        }
        search(i + 1, max(running, diagonal_gap(a[i])));
    }
};

} // namespace

ExtendedReal matching_distance_bruteforce(const std::vector<DiagramPoint>& a,
                                          const std::vector<DiagramPoint>& b) {
    if (a.size() > 8 || b.size() > 8)
        throw std::invalid_argument("bruteforce matching is capped at 8 points per side");
    BruteState st(a, b);
    st.search(0, ExtendedReal(0.0));
    return st.best;
}

ExtendedReal matching_distance_bruteforce(const SizeFunctionDiagram& a,
                                          const SizeFunctionDiagram& b) {
    return matching_distance_bruteforce(diagram_points(a), diagram_points(b));
}

} // namespace sizefn
