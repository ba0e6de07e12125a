#pragma once

#include "tdiff/graph.hpp"
#include "tdiff/spectral.hpp"

namespace tdiff {

struct BoundCheck {
    double measured = 0.0;
    double bound = 0.0;
    bool holds() const { return measured <= bound + 1e-9; }
};

/// ||d~ - d||_2 vs sqrt(n) * ||Delta||_2.
BoundCheck degreeSequenceDeviation(const Graph& g, const Graph& gTilde,
                                   const PowerConfig& cfg = {});

/// |mean(d~) - mean(d)| vs ||Delta||_2.
BoundCheck averageDegreeDeviation(const Graph& g, const Graph& gTilde,
                                  const PowerConfig& cfg = {});

/// |T - T~| vs ||Delta||_2 * m; first-order bound, violations possible for
/// large perturbations.
BoundCheck triangleDeviation(const Graph& g, const Graph& gTilde,
                             const PowerConfig& cfg = {});

long long triangleCount(const Graph& g);

}  // namespace tdiff
