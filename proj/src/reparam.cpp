#include "sizefn/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace sizefn {

void validate_path(const MonotonePath& h, int n, int m) {
    if (h.steps.empty()) throw std::invalid_argument("alignment path is empty");
    if (h.steps.front() != std::pair<int, int>{0, 0})
        throw std::invalid_argument("alignment path must start at (0,0)");
    if (h.steps.back() != std::pair<int, int>{n - 1, m - 1})
        throw std::invalid_argument("alignment path must end at (n-1,m-1)");
    for (std::size_t k = 1; k < h.steps.size(); ++k) {
        const int di = h.steps[k].first - h.steps[k - 1].first;
        const int dj = h.steps[k].second - h.steps[k - 1].second;
        if (di < 0 || dj < 0 || di > 1 || dj > 1 || (di == 0 && dj == 0))
            throw std::invalid_argument("alignment path steps must advance i, j, or both by 1");
    }
}

static void validate_samples(const IntervalSamples& ss) {
    if (ss.params.size() != ss.values.size() || ss.values.size() < 2)
        throw std::invalid_argument("interval samples need matching params/values, length >= 2");
    for (std::size_t i = 1; i < ss.params.size(); ++i)
        if (!(ss.params[i - 1] < ss.params[i]))
            throw std::invalid_argument("sample parameters must be strictly increasing");
}

static std::vector<double> aligned_diffs(const IntervalSamples& a, const IntervalSamples& b,
                                         const MonotonePath& h) {
    const int n = static_cast<int>(a.values.size());
    const int m = static_cast<int>(b.values.size());
    validate_path(h, n, m);
    std::vector<double> diffs;
    diffs.reserve(h.steps.size());
    const bool rev = h.orientation == MonotonePath::Orientation::reversed;
    for (auto [i, j] : h.steps)
        diffs.push_back(a.values[i] - b.values[rev ? m - 1 - j : j]);
    return diffs;
}

double path_cost(const IntervalSamples& a, const IntervalSamples& b, const MonotonePath& h,
                 SeminormId s) {
    validate_samples(a);
    validate_samples(b);
    return evaluate(s, aligned_diffs(a, b, h));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Difference matrix for one orientation: D[i][j] = a_i - b_j (b reversed
// when requested).
std::vector<std::vector<double>> diff_matrix(const std::vector<double>& a,
                                             const std::vector<double>& b, bool reversed) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    std::vector<std::vector<double>> D(n, std::vector<double>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) D[i][j] = a[i] - b[reversed ? m - 1 - j : j];
    return D;
}

// Walk back from (n-1,m-1) through cells marked reachable, preferring the
// diagonal predecessor. reach(0,0) must hold.
std::vector<std::pair<int, int>> backtrack(const std::vector<std::vector<char>>& reach) {
    const int n = static_cast<int>(reach.size());
    const int m = static_cast<int>(reach[0].size());
    std::vector<std::pair<int, int>> rev_steps;
    int i = n - 1, j = m - 1;
    rev_steps.emplace_back(i, j);
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && reach[i - 1][j - 1]) {
            --i;
            --j;
        } else if (i > 0 && reach[i - 1][j]) {
            --i;
        } else if (j > 0 && reach[i][j - 1]) {
            --j;
        } else {
            throw std::logic_error("witness backtrack left the reachable set");
        }
        rev_steps.emplace_back(i, j);
    }
    std::reverse(rev_steps.begin(), rev_steps.end());
    return rev_steps;
}

// Reachability of (n-1,m-1) from (0,0) through cells where allowed(i,j).
template <class Allowed>
bool reachable(int n, int m, Allowed&& allowed, std::vector<std::vector<char>>* out = nullptr) {
    std::vector<std::vector<char>> R(n, std::vector<char>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (!allowed(i, j)) continue;
            if (i == 0 && j == 0)
                R[i][j] = 1;
            else
                R[i][j] = (i > 0 && R[i - 1][j]) || (j > 0 && R[i][j - 1]) ||
                          (i > 0 && j > 0 && R[i - 1][j - 1]);
        }
    const bool ok = R[n - 1][m - 1];
    if (out) *out = std::move(R);
    return ok;
}

struct OrientedEstimate {
    double value = kInf;
    std::vector<std::pair<int, int>> steps;
};

OrientedEstimate sup_search(const std::vector<std::vector<double>>& D) {
    const int n = static_cast<int>(D.size());
    const int m = static_cast<int>(D[0].size());
    std::vector<double> cand;
    cand.reserve(static_cast<std::size_t>(n) * m);
    for (const auto& row : D)
        for (double v : row) cand.push_back(std::abs(v));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::size_t lo = 0, hi = cand.size() - 1; // the largest candidate admits every cell
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const double t = cand[mid];
        if (reachable(n, m, [&](int i, int j) { return std::abs(D[i][j]) <= t; }))
            hi = mid;
        else
            lo = mid + 1;
    }
    const double t = cand[lo];
    std::vector<std::vector<char>> R;
    reachable(n, m, [&](int i, int j) { return std::abs(D[i][j]) <= t; }, &R);
    OrientedEstimate est;
    est.steps = backtrack(R);
    est.value = 0.0;
    for (auto [i, j] : est.steps) est.value = std::max(est.value, std::abs(D[i][j]));
    return est;
}

// Min-max DP over cells with D >= floor: least attainable ceiling of a
// monotone path, +inf when no path survives.
double best_ceiling(const std::vector<std::vector<double>>& D, double floor) {
    const int n = static_cast<int>(D.size());
    const int m = static_cast<int>(D[0].size());
    std::vector<std::vector<double>> f(n, std::vector<double>(m, kInf));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (D[i][j] < floor) continue;
            double from = kInf;
            if (i == 0 && j == 0)
                from = -kInf;
            else {
                if (i > 0) from = std::min(from, f[i - 1][j]);
                if (j > 0) from = std::min(from, f[i][j - 1]);
                if (i > 0 && j > 0) from = std::min(from, f[i - 1][j - 1]);
            }
            f[i][j] = std::max(D[i][j], from);
        }
    return f[n - 1][m - 1];
}

OrientedEstimate range_search(const std::vector<std::vector<double>>& D, bool coarse) {
    const int n = static_cast<int>(D.size());
    const int m = static_cast<int>(D[0].size());

    // Candidate floors: distinct cell values not above both corner cells
    // (the path always contains the corners), sorted descending.
    const double corner_cap = std::min(D[0][0], D[n - 1][m - 1]);
    std::vector<double> floors;
    for (const auto& row : D)
        for (double v : row)
            if (v <= corner_cap) floors.push_back(v);
    std::sort(floors.begin(), floors.end(), std::greater<double>());
    floors.erase(std::unique(floors.begin(), floors.end()), floors.end());

    if (coarse && floors.size() > 1024) {
        std::vector<double> sub;
        const std::size_t stride = (floors.size() + 1023) / 1024;
        for (std::size_t idx = 0; idx < floors.size(); idx += stride) sub.push_back(floors[idx]);
        if (sub.back() != floors.back()) sub.push_back(floors.back());
        floors = std::move(sub);
    }

    const double unconstrained = best_ceiling(D, -kInf);
    std::map<std::size_t, double> memo;
    auto ceiling_at = [&](std::size_t idx) {
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
        const double u = best_ceiling(D, floors[idx]);
        memo.emplace(idx, u);
        return u;
    };

    double best = kInf, best_floor = 0.0, best_ceil = 0.0;
    std::size_t idx = 0;
    const std::size_t K = floors.size();
    while (idx < K) {
        const double u = ceiling_at(idx);
        if (u < kInf && u - floors[idx] < best) {
            best = u - floors[idx];
            best_floor = floors[idx];
            best_ceil = u;
        }
        if (u <= unconstrained) break; // the ceiling cannot drop further
        // Gallop to the next breakpoint: the first index whose ceiling is
        // strictly below u (the ceiling is non-increasing along floors).
        std::size_t last_same = idx, step = 1;
        while (idx + step < K && ceiling_at(idx + step) >= u) {
            last_same = idx + step;
            step <<= 1;
        }
        if (idx + step >= K && ceiling_at(K - 1) >= u) break; // constant to the end
        std::size_t lo = last_same, hi = std::min(idx + step, K - 1);
        while (lo + 1 < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (ceiling_at(mid) >= u)
                lo = mid;
            else
                hi = mid;
        }
        idx = hi;
    }

    OrientedEstimate est;
    if (best == kInf) return est; // cannot happen: the lowest floor admits all cells
    std::vector<std::vector<char>> R;
    reachable(
        n, m, [&](int i, int j) { return D[i][j] >= best_floor && D[i][j] <= best_ceil; }, &R);
    est.steps = backtrack(R);
    double mx = -kInf, mn = kInf;
    for (auto [i, j] : est.steps) {
        mx = std::max(mx, D[i][j]);
        mn = std::min(mn, D[i][j]);
    }
    est.value = mx - mn;
    return est;
}

} // namespace

Estimate estimate_upper(const IntervalSamples& a, const IntervalSamples& b, SeminormId s,
                        EstimateOptions opts) {
    validate_samples(a);
    validate_samples(b);
    const int n = static_cast<int>(a.values.size());
    const int m = static_cast<int>(b.values.size());

    Estimate result;
    result.seminorm = s;
    result.n = n;
    result.m = m;
    result.coarse = opts.coarse;
    result.value = kInf;

    for (const bool reversed : {false, true}) {
        const auto D = diff_matrix(a.values, b.values, reversed);
        const OrientedEstimate est =
            s == SeminormId::sup ? sup_search(D) : range_search(D, opts.coarse);
        if (est.value < result.value) {
            result.value = est.value;
            result.witness.orientation = reversed ? MonotonePath::Orientation::reversed
                                                  : MonotonePath::Orientation::forward;
            result.witness.steps = est.steps;
        }
    }
    return result;
}

} // namespace sizefn
