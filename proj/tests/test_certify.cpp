#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "tdiff/certify.hpp"

using namespace tdiff;

TEST_CASE("impact estimator") {
    // all degrees equal to delta/beta: every term vanishes
    Graph ring(5, false);
    for (int i = 0; i < 5; ++i) ring.setEdge(i, (i + 1) % 5, 1.0);  // degrees 2
    CHECK(impactEstimator(ring, TargetSet({0, 1, 2}, 5), 0.1, 0.2) == doctest::Approx(0.0));

    // single node with d = 2*delta/beta -> 1/2
    Graph path(3, false);
    path.setEdge(0, 1, 1.0);
    path.setEdge(1, 2, 1.0);
    CHECK(impactEstimator(path, TargetSet({1}, 3), 0.1, 0.1) == doctest::Approx(0.5));

    // K4, |S| = 2, delta/beta = 2 <= 3
    Graph k4(4, false);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.setEdge(i, j, 1.0);
    CHECK(impactEstimator(k4, TargetSet({0, 1}, 4), 0.06, 0.12) ==
          doctest::Approx(2.0 / 3.0));

    Graph iso(3, false);
    iso.setEdge(0, 1, 1.0);
    CHECK_THROWS(impactEstimator(iso, TargetSet({2}, 3), 0.1, 0.1));
}

TEST_CASE("budget certificate") {
    // equal degrees in S -> zero variance
    Graph k4(4, false);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.setEdge(i, j, 1.0);
    CHECK(certifyBudget(k4, TargetSet({0, 1, 2}, 4)).epsilonMin == doctest::Approx(0.0));

    // n = 4, S with degrees {1, 3}: population variance 1, bound sqrt(2/4)
    Graph star(4, false);
    star.setEdge(0, 1, 1.0);
    star.setEdge(0, 2, 1.0);
    star.setEdge(0, 3, 1.0);
    CertBound b = certifyBudget(star, TargetSet({0, 1}, 4));
    CHECK(b.epsilonMin == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(std::abs(b.epsilonMin - 0.7071) < 1e-4);

    // path P3, S = V with degrees (1,2,1)
    Graph p3(3, false);
    p3.setEdge(0, 1, 1.0);
    p3.setEdge(1, 2, 1.0);
    CHECK(certifyBudget(p3, TargetSet({0, 1, 2}, 3)).epsilonMin ==
          doctest::Approx(std::sqrt(2.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("certificate invariances and bounds") {
    Graph g = oracle::randomConnectedGraph(10, 0.4, 17);
    TargetSet s({1, 4, 5, 8}, 10);
    double base = certifyBudget(g, s).epsilonMin;

    // relabeling: swap nodes 0 <-> 9 everywhere
    std::vector<int> perm(10);
    for (int i = 0; i < 10; ++i) perm[i] = i;
    std::swap(perm[0], perm[9]);
    Graph h(10, false);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            if (g.weight(i, j) != 0.0) h.setEdge(perm[i], perm[j], 1.0);
    std::vector<int> mem;
    for (int i : s.members()) mem.push_back(perm[i]);
    CHECK(certifyBudget(h, TargetSet(mem, 10)).epsilonMin == doctest::Approx(base));

    // variance of values in a bounded range is at most (range/2)^2
    auto d = degreeVector(g);
    double lo = 1e18, hi = -1e18;
    for (int i : s.members()) {
        lo = std::min(lo, d[i]);
        hi = std::max(hi, d[i]);
    }
    CHECK(base <= std::sqrt(s.size() / 10.0) * (hi - lo) / 2.0 + 1e-12);

    CHECK(certifyBudget(g, s, 0.5, 0.1).applicable ==
          (0.1 / 0.5 <= *std::min_element(d.begin(), d.end())));
}
