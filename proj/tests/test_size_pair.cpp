#include <doctest.h>

#include <sizefn/size_pair.hpp>

#include "test_helpers.hpp"

#include <cmath>
#include <random>

using namespace sizefn;

TEST_CASE("interval samples become a path graph") {
    IntervalSamples s;
    s.params = {0.0, 1.0, 2.0};
    s.values = {0.0, 1.0, 0.0};
    DiscreteSizePair p = from_interval_samples(s);
    CHECK(p.vertex_count() == 3);
    CHECK(p.values == std::vector<double>{0.0, 1.0, 0.0});
    REQUIRE(p.edges.size() == 2);
    CHECK(p.edges[0] == std::pair<int, int>{0, 1});
    CHECK(p.edges[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("interval samples validation") {
    IntervalSamples s;
    s.params = {0.0, 1.0};
    s.values = {0.0};
    CHECK_THROWS_AS(from_interval_samples(s), std::invalid_argument);  // length mismatch
    s.values = {0.0, 1.0};
    s.params = {1.0, 1.0};
    CHECK_THROWS_AS(from_interval_samples(s), std::invalid_argument);  // not increasing
    s.params = {0.0};
    s.values = {0.0};
    CHECK_THROWS_AS(from_interval_samples(s), std::invalid_argument);  // too short
    s.params = {0.0, 1.0};
    s.values = {0.0, std::nan("")};
    CHECK_THROWS_AS(from_interval_samples(s), std::invalid_argument);  // non-finite
}

TEST_CASE("graph construction normalizes edges") {
    DiscreteSizePair p = from_graph({1.0, 2.0, 3.0}, {{2, 0}, {0, 2}, {1, 1}, {0, 1}});
    REQUIRE(p.edges.size() == 2);  // self-loop dropped, duplicate merged
    CHECK(p.edges[0] == std::pair<int, int>{0, 1});
    CHECK(p.edges[1] == std::pair<int, int>{0, 2});
    CHECK_THROWS_AS(from_graph({1.0}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_graph({}, {}), std::invalid_argument);
    DiscreteSizePair singleton = from_graph({4.5}, {});
    CHECK(singleton.vertex_count() == 1);
    CHECK(singleton.edges.empty());
}

TEST_CASE("product of a single edge") {
    DiscreteSizePair p = from_graph({0.0, 1.0}, {{0, 1}});
    DiscreteSizePair q = product_pair(p, Connectivity::strong);
    REQUIRE(q.vertex_count() == 4);
    // Vertex (u, v) sits at index u*n + v and carries values[u] - values[v].
    CHECK(q.values == std::vector<double>{0.0, -1.0, 1.0, 0.0});
    CHECK(component_count(q) == 1);
}

TEST_CASE("strong product has diagonal moves that 4-connectivity lacks") {
    DiscreteSizePair p = from_graph({0.0, 1.0}, {{0, 1}});
    DiscreteSizePair strong = product_pair(p, Connectivity::strong);
    DiscreteSizePair four = product_pair(p, Connectivity::four);
    CHECK(four.edges.size() == 4);
    CHECK(strong.edges.size() == 6);
    for (auto e : four.edges)
        CHECK(std::find(strong.edges.begin(), strong.edges.end(), e) != strong.edges.end());
}

TEST_CASE("product value antisymmetry and connectivity") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        DiscreteSizePair p = testutil::random_graph(rng, 7);
        DiscreteSizePair q = product_pair(p, Connectivity::strong);
        const int n = p.vertex_count();
        REQUIRE(q.vertex_count() == n * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                CHECK(q.values[u * n + v] == p.values[u] - p.values[v]);
                CHECK(q.values[u * n + v] == -q.values[v * n + u]);
            }
        for (int u = 0; u < n; ++u) CHECK(q.values[u * n + u] == 0.0);
        if (component_count(p) == 1) CHECK(component_count(q) == 1);
    }
}

TEST_CASE("product value spread doubles the factor spread") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> vals = testutil::random_dyadic_values(rng, 5);
        DiscreteSizePair p = from_graph(vals, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        DiscreteSizePair q = product_pair(p, Connectivity::strong);
        auto [pmin, pmax] = std::minmax_element(vals.begin(), vals.end());
        auto [qmin, qmax] = std::minmax_element(q.values.begin(), q.values.end());
        // Dyadic inputs keep the subtraction exact.
        CHECK(*qmax == *pmax - *pmin);
        CHECK(*qmin == *pmin - *pmax);
    }
}

TEST_CASE("value snapping rounds to the tolerance grid") {
    DiscreteSizePair p = from_graph({0.1001, 0.0999, -0.2502}, {{0, 1}});
    DiscreteSizePair s = snap_values(p, 0.001);
    CHECK(s.values[0] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(s.values[1] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(s.values[0] == s.values[1]);  // collapses the near-tie exactly
    CHECK_THROWS_AS(snap_values(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(snap_values(p, -1.0), std::invalid_argument);

    IntervalSamples iv;
    iv.params = {0.0, 1.0};
    iv.values = {0.30001, 0.29999};
    IntervalSamples snapped = snap_values(iv, 0.01);
    CHECK(snapped.values[0] == snapped.values[1]);
    CHECK(snapped.params == iv.params);
}

TEST_CASE("component labels follow first-seen order") {
    DiscreteSizePair p = from_graph({5.0, 1.0, 2.0, 7.0}, {{0, 2}});
    std::vector<int> labels = component_labels(p);
    CHECK(labels == std::vector<int>{0, 1, 0, 2});
    CHECK(component_count(p) == 3);
}
