#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tdiff/objective.hpp"

namespace tdiff {

using StepSchedule = std::function<double(int)>;  // 1-based step index -> eta_i

enum class ScheduleKind { Constant, InverseSqrt };

StepSchedule makeStepSchedule(ScheduleKind kind, double eta0);

struct AttackConfig {
    double epsilon = 0.0;          // spectral-norm budget; set directly or via gamma
    double gamma = -1.0;           // if >= 0, epsilon = gamma * lambda_1(A)
    int steps = 500;
    StepSchedule schedule = makeStepSchedule(ScheduleKind::Constant, 0.1);
    ObjectiveWeights weights;
    int powerK = kDefaultPowerK;
    double powerTol = kDefaultPowerTol;
    std::uint64_t seed = 1;
};

enum class Termination { LocalOptimum, BudgetExhausted, MaxSteps };

std::string to_string(Termination t);

struct AttackResult {
    Graph gTilde;                  // fractional weights allowed pre-rounding
    Perturbation delta;
    double budgetUsed = 0.0;
    int iterations = 0;
    std::vector<double> objectiveTrace;
    Termination terminationReason = Termination::MaxSteps;
};

/// Gradient ascent on the attacker objective with a one-step look-ahead
/// budget check: a step is taken only while the running sum of per-step
/// spectral norms stays within epsilon, so the cumulative perturbation is
/// always feasible by the triangle inequality.
AttackResult attack(const Graph& g, const TargetSet& s, const AttackConfig& cfg);

}  // namespace tdiff
