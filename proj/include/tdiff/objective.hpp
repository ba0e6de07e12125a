#pragma once

#include <cstdint>

#include "tdiff/graph.hpp"
#include "tdiff/spectral.hpp"

namespace tdiff {

struct ObjectiveWeights {
    double a1 = 1.0 / 3.0;  // lambda_1(A~_S)
    double a2 = 1.0 / 3.0;  // eigenvector centrality sigma(S)
    double a3 = 1.0 / 3.0;  // normalized cut phi(S)
};

struct TermResult {
    double value = 0.0;
    SymMat gradient;       // symmetric, zero diagonal (full-matrix convention, symmetrized)
    bool degenerate = false;  // edgeless A~_S / disconnected graph warning
};

struct ObjectiveReport {
    double lambda1S = 0.0;
    double sigmaS = 0.0;
    double phiS = 0.0;
    double total = 0.0;
    SymMat gradient;
};

/// lambda_1 of the induced subgraph; gradient is the outer product of the
/// dominant eigenvector of A~_S, embedded at global indices.
TermResult gradLambda1S(const Graph& gTilde, const TargetSet& s, const PowerConfig& cfg);

/// sigma(S) = sum over S of the unit principal eigenvector of the full
/// matrix, Perron-normalized to nonnegative sum. Gradient by reverse
/// accumulation through the unrolled power iteration.
TermResult gradSigmaS(const Graph& gTilde, const TargetSet& s, const PowerConfig& cfg);

/// Normalized cut with its closed-form gradient.
TermResult gradPhiS(const Graph& gTilde, const TargetSet& s);

ObjectiveReport evaluate(const Graph& gTilde, const TargetSet& s, const ObjectiveWeights& w,
                         const PowerConfig& cfg);

}  // namespace tdiff
