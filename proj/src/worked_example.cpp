#include "sizefn/worked_example.hpp"

#include "sizefn/matching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sizefn {

double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    double sign = 1.0;
    if (r >= 1.0) {
        sign = -1.0;
        r -= 1.0;
    }
    if (r > 0.5) r = 1.0 - r;
    double s;
    if (r == 0.0)
        s = 0.0;
    else if (r == 0.5)
        s = 1.0;
    else
        s = std::sin(M_PI * r);
    const double v = sign * s;
    return v == 0.0 ? 0.0 : v;
}

// Grid of fractions of pi: uniform samples merged with the critical
// parameters, deduplicated exactly.
static std::vector<double> fraction_grid(int samples) {
    if (samples < 5) throw std::invalid_argument("worked example needs samples >= 5");
    std::vector<double> fr;
    fr.reserve(samples + 5);
    for (int k = 0; k < samples; ++k)
        fr.push_back(static_cast<double>(k) / (samples - 1));
    for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) fr.push_back(c);
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    return fr;
}

template <class F>
static IntervalSamples sample(int samples, F&& f) {
    IntervalSamples ss;
    for (double x : fraction_grid(samples)) {
        ss.params.push_back(M_PI * x);
        ss.values.push_back(f(x));
    }
    return ss;
}

IntervalSamples sample_sin(int samples) {
    return sample(samples, [](double x) { return sin_pi(x); });
}

IntervalSamples sample_two_sin_two(int samples) {
    return sample(samples, [](double x) { return 2.0 * sin_pi(2.0 * x); });
}

IntervalSamples sample_sin_two(int samples) {
    return sample(samples, [](double x) { return sin_pi(2.0 * x); });
}

IntervalSamples sample_zero(int samples) {
    return sample(samples, [](double) { return 0.0; });
}

WorkedExampleReport run_worked_example(int samples, bool coarse) {
    WorkedExampleReport rep;
    rep.samples = samples;
    rep.coarse = coarse;

    const IntervalSamples a = sample_sin(samples);
    const IntervalSamples b = sample_two_sin_two(samples);
    const DiscreteSizePair pa = from_interval_samples(a);
    const DiscreteSizePair pb = from_interval_samples(b);

    rep.base_left = compute_diagram(pa);
    rep.base_right = compute_diagram(pb);
    rep.base_matching = matching_distance(rep.base_left, rep.base_right);
    rep.sup_estimate = estimate_upper(a, b, SeminormId::sup, {coarse}).value;

    rep.product_left = compute_diagram(product_pair(pa));
    rep.product_right = compute_diagram(product_pair(pb));
    rep.product_matching = matching_distance(rep.product_left, rep.product_right);
    rep.range_estimate = estimate_upper(a, b, SeminormId::range, {coarse}).value;

    const IntervalSamples zero = sample_zero(samples);
    const IntervalSamples sin2 = sample_sin_two(samples);
    rep.sin2_vs_zero_range = estimate_upper(sin2, zero, SeminormId::range, {coarse}).value;
    rep.sin2_vs_zero_sup = estimate_upper(sin2, zero, SeminormId::sup, {coarse}).value;
    rep.sin_vs_zero_range = estimate_upper(a, zero, SeminormId::range, {coarse}).value;
    rep.sin_vs_zero_sup = estimate_upper(a, zero, SeminormId::sup, {coarse}).value;
    return rep;
}

} // namespace sizefn
