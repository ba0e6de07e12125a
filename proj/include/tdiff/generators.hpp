#pragma once

#include <cstdint>

#include "tdiff/graph.hpp"

namespace tdiff {

/// Preferential attachment starting from a clique of size attach+1; each new
/// node links to `attach` distinct existing nodes with probability
/// proportional to degree. Output is always connected.
Graph barabasiAlbert(int n, int attach, std::uint64_t seed);

/// Ring lattice with k neighbors per node (k even), each clockwise edge
/// rewired with probability p. Regenerated with a fresh sub-seed (up to 10
/// times) if rewiring disconnects the graph.
Graph wattsStrogatz(int n, int k, double p, std::uint64_t seed);

/// The node whose degree sits at the given percentile of the degree
/// sequence (nearest rank, smallest id on ties), plus its neighbors.
TargetSet percentileTarget(const Graph& g, double percentile, std::uint64_t seed);

}  // namespace tdiff
