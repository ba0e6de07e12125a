#pragma once

#include "tdiff/graph.hpp"

namespace tdiff {

struct CertBound {
    double epsilonMin = 0.0;
    bool applicable = false;  // delta/beta <= d_min over the whole graph
    double tau = 0.0;         // user-supplied estimation-error parameter
    bool weightedDegrees = false;
};

/// Degree-based steady-state impact estimate for the target subgraph:
/// sum over S of (1 - delta/(beta * d_i)).
double impactEstimator(const Graph& g, const TargetSet& s, double beta, double delta);

/// Lower bound on the attack budget below which no degree-increasing attack
/// can move the estimated impact on S by more than 2*tau:
/// sqrt(|S|/n) times the population std-dev of degrees within S.
CertBound certifyBudget(const Graph& g, const TargetSet& s, double beta = 0.0,
                        double delta = 0.0, double tau = 0.0);

}  // namespace tdiff
