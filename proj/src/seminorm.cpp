#include "sizefn/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sizefn {

SeminormId parse_seminorm(const std::string& name) {
    if (name == "sup") return SeminormId::sup;
    if (name == "range") return SeminormId::range;
    throw std::invalid_argument("unknown seminorm '" + name + "' (expected sup or range)");
}

std::string seminorm_name(SeminormId s) {
    return s == SeminormId::sup ? "sup" : "range";
}

double evaluate(SeminormId s, const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("seminorm of an empty value list");
    if (s == SeminormId::sup) {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

AxiomReport check_axioms(SeminormId s, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_real_distribution<double> comp(-5.0, 5.0);
    std::uniform_real_distribution<double> scalar(-3.0, 3.0);

    AxiomReport rep;
    rep.trials = trials;
    auto fail = [&rep](bool& flag, const std::string& what) {
        flag = false;
        if (rep.counterexample.empty()) rep.counterexample = what;
    };
    // slack for reassociated float arithmetic (the axioms are exact in reals)
    const double tol = 1e-12;

    for (int t = 0; t < trials; ++t) {
        const int n = len(rng);
        std::vector<double> u(n), v(n);
        for (double& x : u) x = comp(rng);
        for (double& x : v) x = comp(rng);

        const double su = evaluate(s, u);
        const double sv = evaluate(s, v);
        if (!(su >= 0.0)) fail(rep.nonnegative, "negative seminorm value");

        const double lam = scalar(rng);
        std::vector<double> lu(n);
        for (int i = 0; i < n; ++i) lu[i] = lam * u[i];
        if (std::abs(evaluate(s, lu) - std::abs(lam) * su) > tol * (1.0 + std::abs(lam)))
            fail(rep.homogeneous, "homogeneity off at lambda");

        std::vector<double> uv(n);
        for (int i = 0; i < n; ++i) uv[i] = u[i] + v[i];
        if (evaluate(s, uv) > su + sv + tol) fail(rep.triangle, "triangle inequality violated");

        std::vector<double> perm = u;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (evaluate(s, perm) != su) fail(rep.permutation_invariant, "permutation changed value");
    }
    return rep;
}

} // namespace sizefn
