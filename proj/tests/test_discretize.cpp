#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tdiff/discretize.hpp"

using namespace tdiff;

namespace {

AttackResult fractionalResult(const Graph& g, const SymMat& delta) {
    AttackResult res;
    SymMat at = g.matrix();
    at += delta;
    res.gTilde = Graph(at, g.weighted());
    res.delta = Perturbation(delta);
    return res;
}

}  // namespace

TEST_CASE("empty candidate set returns the input graph") {
    Graph g = oracle::randomConnectedGraph(6, 0.5, 1);
    AttackResult res = fractionalResult(g, SymMat(6));
    Graph out = roundUnweighted(g, res, 1.0, {});
    CHECK(out.matrix().v == g.matrix().v);
}

TEST_CASE("single candidate add within budget") {
    Graph g(4, false);
    g.setEdge(0, 1, 1.0);
    SymMat delta(4);
    delta.set_sym(2, 3, 0.9);
    Graph out = roundUnweighted(g, fractionalResult(g, delta), 1.5, {});
    CHECK(out.weight(2, 3) == 1.0);
    CHECK(out.weight(0, 1) == 1.0);
}

TEST_CASE("two disjoint adds fit a 1.2 budget") {
    Graph g(4, false);
    SymMat delta(4);
    delta.set_sym(0, 1, 0.8);
    delta.set_sym(2, 3, 0.6);
    Graph out = roundUnweighted(g, fractionalResult(g, delta), 1.2, {});
    CHECK(out.weight(0, 1) == 1.0);
    CHECK(out.weight(2, 3) == 1.0);
    // oracle: the binary perturbation of two disjoint unit edges has norm 1
    SymMat bin = out.matrix() - g.matrix();
    CHECK(std::abs(oracle::denseEig(bin).values.back()) == doctest::Approx(1.0));
}

TEST_CASE("budget-violating toggle is reverted and rounding stops") {
    // two overlapping adds at one node: second toggle pushes the norm to
    // sqrt(2) > 1.2, so only the higher-scoring edge survives
    Graph g(3, false);
    SymMat delta(3);
    delta.set_sym(0, 1, 0.9);
    delta.set_sym(0, 2, 0.8);
    Graph out = roundUnweighted(g, fractionalResult(g, delta), 1.2, {});
    CHECK(out.weight(0, 1) == 1.0);
    CHECK(out.weight(0, 2) == 0.0);
}

TEST_CASE("score ordering with lexicographic tie-break") {
    Graph g(4, false);
    SymMat delta(4);
    // equal scores; only one can fit after the first (shared node 0)
    delta.set_sym(0, 2, 0.5);
    delta.set_sym(0, 1, 0.5);
    Graph out = roundUnweighted(g, fractionalResult(g, delta), 1.2, {});
    CHECK(out.weight(0, 1) == 1.0);  // (0,1) precedes (0,2)
    CHECK(out.weight(0, 2) == 0.0);
}

TEST_CASE("rounded outputs are binary, symmetric and feasible") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = oracle::randomConnectedGraph(12, 0.35, seed);
        SymMat delta = oracle::randomPerturbation(12, 0.7, seed + 50);
        double eps = 1.6;
        Graph out = roundUnweighted(g, fractionalResult(g, delta), eps, {});
        for (int i = 0; i < 12; ++i) {
            CHECK(out.weight(i, i) == 0.0);
            for (int j = 0; j < 12; ++j) {
                CHECK((out.weight(i, j) == 0.0 || out.weight(i, j) == 1.0));
                CHECK(out.weight(i, j) == out.weight(j, i));
            }
        }
        auto before = fullSpectrum(g.matrix());
        auto after = fullSpectrum(out.matrix());
        for (int i = 0; i < 12; ++i)
            CHECK(std::abs(after[i] - before[i]) <= eps + 1e-6);
    }
}

TEST_CASE("weighted rescaling") {
    Graph g(3, true);
    g.setEdge(0, 1, 3.0);
    g.setEdge(1, 2, 10.0);  // C = 10

    // zero perturbation reproduces the graph bit-for-bit
    Graph same = rescaleWeighted(g, fractionalResult(g, SymMat(3)), false);
    CHECK(same.matrix().v == g.matrix().v);

    // 3/10 + 0.07 = 0.37 on the normalized scale -> weight 3.7 -> integer 4
    SymMat delta(3);
    delta.set_sym(0, 1, 0.07);
    Graph rounded = rescaleWeighted(g, fractionalResult(g, delta), true);
    CHECK(rounded.weight(0, 1) == 4.0);
    Graph exact = rescaleWeighted(g, fractionalResult(g, delta), false);
    CHECK(exact.weight(0, 1) == doctest::Approx(3.7));

    // negative intermediate entries clip to zero
    SymMat neg(3);
    neg.set_sym(0, 2, -0.002);
    Graph clipped = rescaleWeighted(g, fractionalResult(g, neg), false);
    CHECK(clipped.weight(0, 2) == 0.0);
}
