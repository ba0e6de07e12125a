#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tdiff/graph.hpp"

namespace tdiff {

struct SISParams {
    double beta = 0.06;   // transmission probability per contact per step
    double delta = 0.24;  // recovery probability per step
    int steps = 30;
    int trials = 2000;
    std::uint64_t seed = 1;
};

struct SimulationResult {
    double fracS = 0.0;
    double fracSPrime = 0.0;
    double fracAll = 0.0;
    std::vector<std::pair<int, int>> perTrial;  // (infected in S, infected in S')
    double stderrS = 0.0;
    double stderrSPrime = 0.0;
};

struct WalkResult {
    std::vector<double> rank;
    double massS = 0.0;
    double massSPrime = 0.0;
};

/// Discrete-time SIS: synchronous update from the start-of-step state.
/// A susceptible node i gets infected with probability
/// 1 - prod over infected neighbors j of (1 - min(1, beta*w_ij)); every
/// infected node independently recovers with probability delta. Initial
/// infected node is `initial` if set, else uniform over V per trial.
/// Trials run on independent RNG streams, so the parallel and serial paths
/// produce identical perTrial sequences.
SimulationResult simulateSIS(const Graph& g, const TargetSet& s, const SISParams& p,
                             std::optional<int> initial = std::nullopt);
SimulationResult simulateSISSerial(const Graph& g, const TargetSet& s, const SISParams& p,
                                   std::optional<int> initial = std::nullopt);

/// Random walk with restart to a fixed start node. Lazy iteration (same
/// fixed point) so periodic chains still converge.
WalkResult randomWalkRestart(const Graph& g, const TargetSet& s, double c, int start,
                             double tol = 1e-12);

/// PageRank: uniform teleport instead of a fixed restart node.
WalkResult pageRank(const Graph& g, const TargetSet& s, double c, double tol = 1e-12);

}  // namespace tdiff
