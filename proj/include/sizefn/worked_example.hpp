#pragma once

#include "sizefn/extended_real.hpp"
#include "sizefn/persistence.hpp"
#include "sizefn/reparam.hpp"
#include "sizefn/size_pair.hpp"

namespace sizefn {

// sin(pi * x) with the quarter-period symmetries applied exactly, so that
// sample grids containing the critical parameters {0, 1/4, 1/2, 3/4, 1}
// (as fractions of pi) get the values 0, +-1 bit-exactly. The worked
// example's headline numbers are exact equalities and would otherwise drift
// by ~1e-16.
double sin_pi(double x);

// Samplers on [0, pi]: a uniform grid of `samples` points merged with the
// critical parameters above. samples >= 5.
IntervalSamples sample_sin(int samples);          // sin t
IntervalSamples sample_two_sin_two(int samples);  // 2 sin 2t
IntervalSamples sample_sin_two(int samples);      // sin 2t
IntervalSamples sample_zero(int samples);         // 0

// One-shot run of the built-in worked example comparing (I, sin t) with
// (I, 2 sin 2t): matching distance of the base diagrams (= 2), of the
// product-pair diagrams (= 3), and the two upper estimates closing the
// sandwiches; plus the comparisons of sin 2t and sin t against the zero
// function (range/sup upper estimates {2,1} and {1,1}).
struct WorkedExampleReport {
    int samples = 0;
    bool coarse = false;

    ExtendedReal base_matching;     // lower bound for the natural pseudodistance
    double sup_estimate = 0.0;      // upper estimate for it
    ExtendedReal product_matching;  // lower bound for the range pseudodistance
    double range_estimate = 0.0;    // upper estimate for it

    SizeFunctionDiagram base_left, base_right;
    SizeFunctionDiagram product_left, product_right;

    double sin2_vs_zero_range = 0.0;
    double sin2_vs_zero_sup = 0.0;
    double sin_vs_zero_range = 0.0;
    double sin_vs_zero_sup = 0.0;
};

WorkedExampleReport run_worked_example(int samples, bool coarse = false);

} // namespace sizefn
