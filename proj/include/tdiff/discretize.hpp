#pragma once

#include "tdiff/optimizer.hpp"

namespace tdiff {

/// Greedy rounding of a fractional attack output back to a binary graph.
/// Candidate entries are toggled in descending |A~_ij - A_ij| order
/// (lexicographic (i,j) tie-break); the first toggle that pushes the
/// spectral norm of the cumulative binary perturbation past epsilon is
/// reverted and the process stops.
Graph roundUnweighted(const Graph& g, const AttackResult& result, double epsilon,
                      const PowerConfig& cfg);

/// Undo the max-weight normalization for weighted graphs: entries scaled by
/// C = max A_ij, clipped at zero, optionally rounded to integers.
Graph rescaleWeighted(const Graph& g, const AttackResult& result, bool integerWeights);

}  // namespace tdiff
