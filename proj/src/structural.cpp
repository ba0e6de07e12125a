#include "tdiff/structural.hpp"

#include <cmath>
#include <stdexcept>

namespace tdiff {

namespace {

double deltaNorm(const Graph& g, const Graph& gTilde, const PowerConfig& cfg) {
    if (g.n() != gTilde.n()) throw std::invalid_argument("graph size mismatch");
    SymMat d = gTilde.matrix() - g.matrix();
    return spectralNorm(d, cfg.k, cfg.tol, cfg.seed);
}

}  // namespace

BoundCheck degreeSequenceDeviation(const Graph& g, const Graph& gTilde,
                                   const PowerConfig& cfg) {
    auto d = degreeVector(g);
    auto dt = degreeVector(gTilde);
    double dev = 0.0;
    for (int i = 0; i < g.n(); ++i) dev += (dt[i] - d[i]) * (dt[i] - d[i]);
    return {std::sqrt(dev), std::sqrt(static_cast<double>(g.n())) * deltaNorm(g, gTilde, cfg)};
}

BoundCheck averageDegreeDeviation(const Graph& g, const Graph& gTilde,
                                  const PowerConfig& cfg) {
    auto d = degreeVector(g);
    auto dt = degreeVector(gTilde);
    double m = 0.0, mt = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        m += d[i];
        mt += dt[i];
    }
    return {std::abs(mt - m) / g.n(), deltaNorm(g, gTilde, cfg)};
}

long long triangleCount(const Graph& g) {
    const SymMat& a = g.matrix();
    long long t = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            if (a(i, j) == 0.0) continue;
            for (int k = j + 1; k < g.n(); ++k)
                if (a(i, k) != 0.0 && a(j, k) != 0.0) ++t;
        }
    return t;
}

BoundCheck triangleDeviation(const Graph& g, const Graph& gTilde, const PowerConfig& cfg) {
    if (g.weighted() || gTilde.weighted())
        throw std::invalid_argument("triangle bound applies to unweighted graphs");
    double dev = static_cast<double>(std::llabs(triangleCount(g) - triangleCount(gTilde)));
    return {dev, deltaNorm(g, gTilde, cfg) * g.edgeCount()};
}

}  // namespace tdiff
