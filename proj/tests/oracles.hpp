// Test-only oracles, independent of the implementation paths they check:
// dense eigendecomposition, central finite differences under paired
// symmetric bumps, an exact SIS Markov chain on tiny graphs, and random
// graph helpers.
#pragma once

#include <lapacke.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "tdiff/graph.hpp"
#include "tdiff/rng.hpp"

namespace oracle {

using tdiff::Graph;
using tdiff::SymMat;
using tdiff::TargetSet;

struct DenseEig {
    std::vector<double> values;                // ascending, as LAPACK returns them
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

inline DenseEig denseEig(const SymMat& m) {
    const int n = m.n;
    std::vector<double> a = m.v;
    std::vector<double> w(n);
    LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    DenseEig out;
    out.values = w;
    out.vectors.resize(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) out.vectors[k][i] = a[static_cast<std::size_t>(i) * n + k];
    return out;
}

// Principal eigenvector with nonnegative sum.
inline std::vector<double> principalVector(const SymMat& m) {
    DenseEig e = denseEig(m);
    std::vector<double> v = e.vectors.back();
    double s = 0.0;
    for (double x : v) s += x;
    if (s < 0.0)
        for (double& x : v) x = -x;
    return v;
}

inline double lambdaMax(const SymMat& m) { return denseEig(m).values.back(); }

// Central finite difference under a symmetric pair bump h*(E_ij + E_ji).
// Against a symmetrized full-matrix-convention gradient G this equals
// 2*G(i,j).
inline SymMat fdPairGradient(const std::function<double(const SymMat&)>& f, const SymMat& a,
                             double h = 1e-5) {
    SymMat g(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j) {
            SymMat plus = a, minus = a;
            plus.set_sym(i, j, a(i, j) + h);
            minus.set_sym(i, j, a(i, j) - h);
            double d = (f(plus) - f(minus)) / (2.0 * h);
            g.set_sym(i, j, d);
        }
    return g;
}

// Exact expected infected fraction at the horizon for the synchronous SIS
// chain on n <= 12 nodes, 2^n state distribution propagation.
inline double exactSISFraction(const Graph& g, double beta, double delta, int steps,
                               int initial = -1) {
    const int n = g.n();
    const int states = 1 << n;
    std::vector<double> dist(states, 0.0);
    if (initial >= 0) {
        dist[1 << initial] = 1.0;
    } else {
        for (int i = 0; i < n; ++i) dist[1 << i] += 1.0 / n;
    }

    std::vector<double> next(states);
    for (int step = 0; step < steps; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int s = 0; s < states; ++s) {
            if (dist[s] == 0.0) continue;
            // per-node infection probability in the next step
            std::vector<double> p(n);
            for (int i = 0; i < n; ++i) {
                if (s & (1 << i)) {
                    p[i] = 1.0 - delta;
                } else {
                    double escape = 1.0;
                    for (int j = 0; j < n; ++j)
                        if ((s & (1 << j)) && g.weight(i, j) != 0.0)
                            escape *= 1.0 - std::min(1.0, beta * g.weight(i, j));
                    p[i] = 1.0 - escape;
                }
            }
            for (int t = 0; t < states; ++t) {
                double prob = dist[s];
                for (int i = 0; i < n && prob > 0.0; ++i)
                    prob *= (t & (1 << i)) ? p[i] : 1.0 - p[i];
                next[t] += prob;
            }
        }
        std::swap(dist, next);
    }

    double mean = 0.0;
    for (int s = 0; s < states; ++s) mean += dist[s] * __builtin_popcount(s) / double(n);
    return mean;
}

// Connected Erdos-Renyi-ish random graph (resamples until connected).
inline Graph randomConnectedGraph(int n, double p, std::uint64_t seed, bool weighted = false) {
    std::mt19937_64 rng = tdiff::makeStream(seed, 0xc0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Graph g(n, weighted);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (u(rng) < p) g.setEdge(i, j, weighted ? 0.25 + u(rng) : 1.0);
        if (g.connected()) return g;
    }
    throw std::runtime_error("randomConnectedGraph: no connected sample");
}

// Random symmetric zero-diagonal perturbation with entries in [-s, s].
inline SymMat randomPerturbation(int n, double s, std::uint64_t seed) {
    std::mt19937_64 rng = tdiff::makeStream(seed, 0xd1);
    std::uniform_real_distribution<double> u(-s, s);
    SymMat d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.set_sym(i, j, u(rng));
    return d;
}

}  // namespace oracle
