#include <doctest.h>

#include <sizefn/reparam.hpp>
#include <sizefn/worked_example.hpp>

#include "test_helpers.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace sizefn;

namespace {

IntervalSamples make_samples(const std::vector<double>& v) {
    IntervalSamples s;
    s.values = v;
    s.params.resize(v.size());
    std::iota(s.params.begin(), s.params.end(), 0.0);
    return s;
}

MonotonePath diagonal_path(int n) {
    MonotonePath h;
    for (int i = 0; i < n; ++i) h.steps.push_back({i, i});
    return h;
}

}  // namespace

TEST_CASE("path validation") {
    MonotonePath ok = diagonal_path(3);
    CHECK_NOTHROW(validate_path(ok, 3, 3));
    CHECK_THROWS_AS(validate_path(ok, 4, 3), std::invalid_argument);  // wrong end
    MonotonePath empty;
    CHECK_THROWS_AS(validate_path(empty, 2, 2), std::invalid_argument);
    MonotonePath bad_start;
    bad_start.steps = {{1, 0}, {1, 1}};
    CHECK_THROWS_AS(validate_path(bad_start, 2, 2), std::invalid_argument);
    MonotonePath jump;
    jump.steps = {{0, 0}, {2, 1}, {2, 2}};
    CHECK_THROWS_AS(validate_path(jump, 3, 3), std::invalid_argument);
    MonotonePath backwards;
    backwards.steps = {{0, 0}, {1, 1}, {0, 1}, {1, 1}};
    CHECK_THROWS_AS(validate_path(backwards, 2, 2), std::invalid_argument);
}

TEST_CASE("path cost on hand-checked alignments") {
    IntervalSamples a = make_samples({0.0, 1.0, 0.5});
    MonotonePath diag = diagonal_path(3);
    CHECK(path_cost(a, a, diag, SeminormId::sup) == 0.0);
    CHECK(path_cost(a, a, diag, SeminormId::range) == 0.0);

    IntervalSamples b = make_samples({5.0, 9.0});
    IntervalSamples c = make_samples({0.0, 1.0});
    MonotonePath two = diagonal_path(2);
    CHECK(path_cost(c, b, two, SeminormId::sup) == 8.0);  // diffs -5, -8
    CHECK(path_cost(c, b, two, SeminormId::range) == 3.0);
    MonotonePath rev = two;
    rev.orientation = MonotonePath::Orientation::reversed;
    CHECK(path_cost(c, b, rev, SeminormId::sup) == 9.0);  // diffs -9, -4
    CHECK(path_cost(c, b, rev, SeminormId::range) == 5.0);

    CHECK_THROWS_AS(path_cost(c, b, diagonal_path(3), SeminormId::sup),
                    std::invalid_argument);
}

TEST_CASE("estimate equals exhaustive minimum over all alignments") {
    std::mt19937_64 rng(90210);
    std::uniform_int_distribution<int> len(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> av = testutil::random_dyadic_values(rng, len(rng));
        std::vector<double> bv = testutil::random_dyadic_values(rng, len(rng));
        IntervalSamples a = make_samples(av);
        IntervalSamples b = make_samples(bv);
        for (SeminormId s : {SeminormId::sup, SeminormId::range}) {
            Estimate e = estimate_upper(a, b, s);
            const double oracle = testutil::oracle_estimate(av, bv, s);
            CAPTURE(trial);
            CHECK(e.value == oracle);
            CHECK(path_cost(a, b, e.witness, s) == e.value);
        }
    }
}

TEST_CASE("estimate is symmetric and bounds every explicit alignment") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> len(2, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = len(rng), m = len(rng);
        IntervalSamples a = make_samples(testutil::random_dyadic_values(rng, n));
        IntervalSamples b = make_samples(testutil::random_dyadic_values(rng, m));
        for (SeminormId s : {SeminormId::sup, SeminormId::range}) {
            Estimate ab = estimate_upper(a, b, s);
            Estimate ba = estimate_upper(b, a, s);
            CHECK(ab.value == ba.value);
            MonotonePath h = testutil::random_path(rng, n, m);
            CHECK(ab.value <= path_cost(a, b, h, s));
        }
        Estimate sup = estimate_upper(a, b, SeminormId::sup);
        Estimate range = estimate_upper(a, b, SeminormId::range);
        CHECK(range.value <= 2.0 * sup.value);
    }
}

TEST_CASE("worked grids reach the sharp alignment costs") {
    for (int samples : {5, 33, 129}) {
        IntervalSamples a = sample_sin(samples);
        IntervalSamples b = sample_two_sin_two(samples);
        Estimate sup = estimate_upper(a, b, SeminormId::sup);
        Estimate range = estimate_upper(a, b, SeminormId::range);
        CAPTURE(samples);
        CHECK(sup.value == 2.0);
        CHECK(range.value == 3.0);
        CHECK(path_cost(a, b, sup.witness, SeminormId::sup) == 2.0);
        CHECK(path_cost(a, b, range.witness, SeminormId::range) == 3.0);
    }
}

TEST_CASE("alignment with the zero function is grid independent") {
    // Every monotone path visits every row, so against the zero function the
    // aligned differences exhaust the sample values: sup gives max |v| and
    // range gives max - min regardless of the alignment chosen.
    for (int samples : {9, 65}) {
        IntervalSamples zero = sample_zero(samples);
        Estimate s2r = estimate_upper(sample_sin_two(samples), zero, SeminormId::range);
        Estimate s2s = estimate_upper(sample_sin_two(samples), zero, SeminormId::sup);
        Estimate s1r = estimate_upper(sample_sin(samples), zero, SeminormId::range);
        Estimate s1s = estimate_upper(sample_sin(samples), zero, SeminormId::sup);
        CHECK(s2r.value == 2.0);
        CHECK(s2s.value == 1.0);
        CHECK(s1r.value == 1.0);
        CHECK(s1s.value == 1.0);
    }
}

TEST_CASE("refining the grid never worsens the estimate") {
    double prev_sup = std::numeric_limits<double>::infinity();
    double prev_range = std::numeric_limits<double>::infinity();
    for (int samples : {5, 17, 65, 129}) {
        IntervalSamples a = sample_sin(samples);
        IntervalSamples b = sample_two_sin_two(samples);
        const double s = estimate_upper(a, b, SeminormId::sup).value;
        const double r = estimate_upper(a, b, SeminormId::range).value;
        CHECK(s <= prev_sup + 1e-9);
        CHECK(r <= prev_range + 1e-9);
        prev_sup = s;
        prev_range = r;
    }
}

TEST_CASE("coarse mode stays a valid upper bound") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> len(4, 24);
    EstimateOptions coarse;
    coarse.coarse = true;
    for (int trial = 0; trial < 30; ++trial) {
        IntervalSamples a = make_samples(testutil::random_dyadic_values(rng, len(rng)));
        IntervalSamples b = make_samples(testutil::random_dyadic_values(rng, len(rng)));
        Estimate exact = estimate_upper(a, b, SeminormId::range);
        Estimate rough = estimate_upper(a, b, SeminormId::range, coarse);
        CHECK(rough.coarse);
        CHECK(rough.value >= exact.value);
        CHECK(path_cost(a, b, rough.witness, SeminormId::range) == rough.value);
    }
    Estimate wide = estimate_upper(sample_sin(129), sample_two_sin_two(129),
                                   SeminormId::range, coarse);
    CHECK(wide.value >= 3.0);
    CHECK(wide.value <= 3.05);
}
