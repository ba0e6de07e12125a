#pragma once

#include "tdiff/optimizer.hpp"

namespace tdiff {

enum class BaselineKind { Deg, Gel };

struct BaselineConfig {
    double epsilon = 0.0;
    double weightedStep = -1.0;  // < 0: use the mean positive edge weight of g
    int powerK = kDefaultPowerK;
    double powerTol = kDefaultPowerTol;
    std::uint64_t seed = 1;
    int maxMoves = 100000;
};

/// `deg` / `gel` comparison attacks: alternate an S-side densifying move
/// with an S'-side sparsifying move, scoring pairs by degree sum (deg) or
/// principal-eigenvector product (gel), reverting the first move that
/// breaks the spectral budget.
AttackResult baselineAttack(const Graph& g, const TargetSet& s, BaselineKind kind,
                            const BaselineConfig& cfg);

}  // namespace tdiff
