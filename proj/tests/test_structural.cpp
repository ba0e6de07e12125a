#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tdiff/structural.hpp"

using namespace tdiff;

TEST_CASE("identity perturbation gives zero everywhere") {
    Graph g = oracle::randomConnectedGraph(8, 0.4, 1);
    CHECK(degreeSequenceDeviation(g, g).measured == 0.0);
    CHECK(degreeSequenceDeviation(g, g).bound == 0.0);
    CHECK(averageDegreeDeviation(g, g).measured == 0.0);
    CHECK(triangleDeviation(g, g).measured == 0.0);
}

TEST_CASE("single edge added on 4 nodes") {
    Graph g(4, false);
    g.setEdge(0, 1, 1.0);
    Graph gt = g;
    gt.setEdge(2, 3, 1.0);

    BoundCheck deg = degreeSequenceDeviation(g, gt);
    CHECK(deg.measured == doctest::Approx(std::sqrt(2.0)));
    CHECK(deg.bound == doctest::Approx(2.0).epsilon(1e-8));  // sqrt(4) * 1
    CHECK(deg.holds());

    BoundCheck avg = averageDegreeDeviation(g, gt);
    CHECK(avg.measured == doctest::Approx(0.5));
    CHECK(avg.bound == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(avg.holds());
}

TEST_CASE("triangle counting and the K4 example") {
    Graph k4(4, false);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.setEdge(i, j, 1.0);
    CHECK(triangleCount(k4) == 4);

    Graph k4minus = k4;
    k4minus.setEdge(0, 1, 0.0);
    CHECK(triangleCount(k4minus) == 2);

    BoundCheck t = triangleDeviation(k4minus, k4);
    CHECK(t.measured == 2.0);
    CHECK(t.bound == doctest::Approx(5.0).epsilon(1e-8));  // ||Delta|| = 1, m = 5
    CHECK(t.holds());

    // triangle-free graphs on both sides
    Graph p4(4, false);
    p4.setEdge(0, 1, 1.0);
    p4.setEdge(1, 2, 1.0);
    p4.setEdge(2, 3, 1.0);
    Graph p4b = p4;
    p4b.setEdge(0, 3, 1.0);  // 4-cycle, still triangle-free
    CHECK(triangleDeviation(p4, p4b).measured == 0.0);

    Graph w(3, true);
    w.setEdge(0, 1, 0.5);
    CHECK_THROWS(triangleDeviation(w, w));
}

TEST_CASE("degree and average-degree bounds hold on random perturbations") {
    int violations = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = oracle::randomConnectedGraph(20, 0.25, seed);
        SymMat d = oracle::randomPerturbation(20, 0.4, seed + 1000);
        SymMat at = g.matrix();
        at += d;
        Graph gt(at, true);
        Graph gw(g.matrix(), true);
        if (!degreeSequenceDeviation(gw, gt).holds()) ++violations;
        if (!averageDegreeDeviation(gw, gt).holds()) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("first-order triangle bound in the small-perturbation regime") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 60 && checked < 20; ++seed) {
        Graph g = oracle::randomConnectedGraph(25, 0.5, seed);
        double lam = oracle::lambdaMax(g.matrix());

        // binary perturbation: toggle a single edge, keep ||Delta|| small
        std::mt19937_64 rng = makeStream(seed, 8);
        Graph gt = g;
        int i = static_cast<int>(rng() % 25), j = static_cast<int>(rng() % 25);
        if (i == j) continue;
        gt.setEdge(i, j, g.weight(i, j) == 0.0 ? 1.0 : 0.0);

        SymMat d = gt.matrix() - g.matrix();
        if (spectralNorm(d, 200, 1e-12, seed) > 0.1 * lam) continue;
        ++checked;
        CHECK(triangleDeviation(g, gt).holds());
    }
}
