#include <doctest.h>

#include <sizefn/persistence.hpp>
#include <sizefn/size_pair.hpp>
#include <sizefn/worked_example.hpp>

#include "test_helpers.hpp"

#include <random>

using namespace sizefn;

namespace {

// Query grid around the distinct vertex values: midpoints between consecutive
// values plus the values themselves, bracketed by sentinels outside the range.
std::vector<double> query_levels(const DiscreteSizePair& p) {
    std::vector<double> vals = p.values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<double> out;
    out.push_back(vals.front() - 1.0);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out.push_back(vals[i]);
        if (i + 1 < vals.size()) out.push_back(0.5 * (vals[i] + vals[i + 1]));
    }
    out.push_back(vals.back() + 1.0);
    return out;
}

}  // namespace

TEST_CASE("diagram of the sine arch") {
    DiscreteSizePair p = from_interval_samples(sample_sin(5));
    SizeFunctionDiagram d = compute_diagram(p);
    REQUIRE(d.at_infinity.size() == 1);
    CHECK(d.at_infinity[0] == 0.0);
    REQUIRE(d.proper.size() == 1);
    CHECK(d.proper[0].x == 0.0);
    CHECK(d.proper[0].y == 1.0);
    CHECK(d.proper[0].multiplicity == 1);
}

TEST_CASE("diagram of the doubled double-frequency sine") {
    DiscreteSizePair p = from_interval_samples(sample_two_sin_two(5));
    SizeFunctionDiagram d = compute_diagram(p);
    REQUIRE(d.at_infinity.size() == 1);
    CHECK(d.at_infinity[0] == -2.0);
    REQUIRE(d.proper.size() == 1);
    CHECK(d.proper[0].x == 0.0);
    CHECK(d.proper[0].y == 2.0);
    CHECK(d.proper[0].multiplicity == 1);
}

TEST_CASE("diagram of the difference field on the square grid") {
    // 5x5 grid of t_i - 2 sin 2t_j values under strong connectivity: one global
    // minimum at -4, a doubled cornerpoint at (-2, 0), and a corner cell that is
    // a strict local minimum at level 0 dying at 2.
    DiscreteSizePair f = from_interval_samples(sample_two_sin_two(5));
    DiscreteSizePair prod = product_pair(f, Connectivity::strong);
    SizeFunctionDiagram d = compute_diagram(prod);
    REQUIRE(d.at_infinity.size() == 1);
    CHECK(d.at_infinity[0] == -4.0);
    REQUIRE(d.proper.size() == 2);
    CHECK(d.proper[0].x == -2.0);
    CHECK(d.proper[0].y == 0.0);
    CHECK(d.proper[0].multiplicity == 2);
    CHECK(d.proper[1].x == 0.0);
    CHECK(d.proper[1].y == 2.0);
    CHECK(d.proper[1].multiplicity == 1);

    DiscreteSizePair g = from_interval_samples(sample_sin(5));
    SizeFunctionDiagram ds = compute_diagram(product_pair(g, Connectivity::strong));
    REQUIRE(ds.at_infinity.size() == 1);
    CHECK(ds.at_infinity[0] == -1.0);
    REQUIRE(ds.proper.size() == 1);
    CHECK(ds.proper[0].x == -1.0);
    CHECK(ds.proper[0].y == 0.0);
    CHECK(ds.proper[0].multiplicity == 1);
}

TEST_CASE("difference-field diagrams are stable under refinement") {
    for (int samples : {9, 33, 65}) {
        DiscreteSizePair f = from_interval_samples(sample_two_sin_two(samples));
        SizeFunctionDiagram d = compute_diagram(product_pair(f, Connectivity::strong));
        CHECK(d.at_infinity == std::vector<double>{-4.0});
        REQUIRE(d.proper.size() == 2);
        CHECK(d.proper[0].x == -2.0);
        CHECK(d.proper[0].y == 0.0);
        CHECK(d.proper[0].multiplicity == 2);
        CHECK(d.proper[1].x == 0.0);
        CHECK(d.proper[1].y == 2.0);
        CHECK(d.proper[1].multiplicity == 1);
    }
}

TEST_CASE("degenerate graphs") {
    SizeFunctionDiagram one = compute_diagram(from_graph({5.0}, {}));
    CHECK(one.at_infinity == std::vector<double>{5.0});
    CHECK(one.proper.empty());

    // Two isolated vertices: one line at infinity per component.
    SizeFunctionDiagram two = compute_diagram(from_graph({3.0, 1.0}, {}));
    CHECK(two.at_infinity == std::vector<double>{1.0, 3.0});
    CHECK(two.proper.empty());

    // A flat edge produces no proper cornerpoint (zero persistence).
    SizeFunctionDiagram flat = compute_diagram(from_graph({2.0, 2.0}, {{0, 1}}));
    CHECK(flat.at_infinity == std::vector<double>{2.0});
    CHECK(flat.proper.empty());
}

TEST_CASE("counting function from the diagram") {
    SizeFunctionDiagram d = compute_diagram(from_interval_samples(sample_sin(5)));
    CHECK(ell_query(d, 0.5, 0.9) == 2);   // both arms born, not yet merged
    CHECK(ell_query(d, 0.5, 1.1) == 1);   // merged above the max
    CHECK(ell_query(d, -0.5, 0.5) == 0);  // below the minimum
    CHECK(ell_query(d, 0.0, 0.5) == 2);   // birth level is inclusive
    CHECK(ell_query(d, 0.5, 1.0) == 1);   // death level already merged
    CHECK_THROWS_AS(ell_query(d, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ell_query(d, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("direct sublevel count matches on simple pairs") {
    DiscreteSizePair p = from_interval_samples(sample_sin(5));
    CHECK(ell_bruteforce(p, 0.5, 0.9) == 2);
    CHECK(ell_bruteforce(p, 0.5, 1.1) == 1);
    CHECK(ell_bruteforce(p, -0.5, 0.5) == 0);
    DiscreteSizePair single = from_graph({5.0}, {});
    CHECK(ell_bruteforce(single, 5.0, 6.0) == 1);
    CHECK(ell_bruteforce(single, 4.0, 6.0) == 0);
    CHECK_THROWS_AS(ell_bruteforce(single, 6.0, 5.0), std::invalid_argument);
}

TEST_CASE("diagram queries agree with direct sublevel counting") {
    std::mt19937_64 rng(411);
    for (int trial = 0; trial < 60; ++trial) {
        DiscreteSizePair p = testutil::random_graph(rng);
        SizeFunctionDiagram d = compute_diagram(p);
        std::vector<double> levels = query_levels(p);
        for (double x : levels)
            for (double y : levels) {
                if (!(x < y)) continue;
                CAPTURE(trial);
                CAPTURE(x);
                CAPTURE(y);
                CHECK(ell_query(d, x, y) == ell_bruteforce(p, x, y));
            }
    }
}

TEST_CASE("direct counting is monotone along both axes") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        DiscreteSizePair p = testutil::random_graph(rng, 9);
        std::vector<double> levels = query_levels(p);
        for (std::size_t i = 0; i + 1 < levels.size(); ++i)
            for (std::size_t j = i + 1; j < levels.size(); ++j) {
                const double x = levels[i], y = levels[j];
                if (!(x < y)) continue;
                if (i > 0 && levels[i - 1] < y)
                    CHECK(ell_bruteforce(p, levels[i - 1], y) <= ell_bruteforce(p, x, y));
                if (j + 1 < levels.size())
                    CHECK(ell_bruteforce(p, x, levels[j + 1]) <= ell_bruteforce(p, x, y));
            }
    }
}

TEST_CASE("pointwise multiplicity recovers diagram entries") {
    DiscreteSizePair arch = from_interval_samples(sample_sin(5));
    CHECK(multiplicity(arch, 0.0, 1.0) == 1);
    CHECK(multiplicity(arch, 0.3, 0.7) == 0);
    CHECK(multiplicity_at_infinity(arch, 0.0) == 1);
    CHECK(multiplicity_at_infinity(arch, 0.5) == 0);
    CHECK_THROWS_AS(multiplicity(arch, 1.0, 1.0), std::invalid_argument);

    DiscreteSizePair f = from_interval_samples(sample_two_sin_two(5));
    DiscreteSizePair prod = product_pair(f, Connectivity::strong);
    CHECK(multiplicity(prod, -2.0, 0.0) == 2);
    CHECK(multiplicity(prod, 0.0, 2.0) == 1);
    CHECK(multiplicity(prod, -2.0, 2.0) == 0);
    CHECK(multiplicity_at_infinity(prod, -4.0) == 1);
    CHECK(multiplicity_at_infinity(prod, -2.0) == 0);
}

TEST_CASE("multiplicity probes agree with the computed diagram everywhere") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        DiscreteSizePair p = testutil::random_graph(rng, 9);
        SizeFunctionDiagram d = compute_diagram(p);
        for (const CornerPoint& c : d.proper) {
            CAPTURE(trial);
            CHECK(multiplicity(p, c.x, c.y) == c.multiplicity);
        }
        // at_infinity may repeat a value when components share their minimum;
        // the probe reports the full multiplicity, so sum over distinct k.
        std::vector<double> ks = d.at_infinity;
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        int inf_total = 0;
        for (double k : ks) inf_total += multiplicity_at_infinity(p, k);
        CHECK(inf_total == static_cast<int>(d.at_infinity.size()));
        CHECK(static_cast<int>(d.at_infinity.size()) == component_count(p));
        // Off-diagram probes at value-grid corners vanish.
        std::vector<double> vals = p.values;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (double x : vals)
            for (double y : vals) {
                if (!(x < y)) continue;
                bool on_diagram = false;
                for (const CornerPoint& c : d.proper)
                    if (c.x == x && c.y == y) on_diagram = true;
                if (!on_diagram) CHECK(multiplicity(p, x, y) == 0);
            }
    }
}
