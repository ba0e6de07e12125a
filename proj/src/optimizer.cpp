#include "tdiff/optimizer.hpp"

#include <cmath>

namespace tdiff {

StepSchedule makeStepSchedule(ScheduleKind kind, double eta0) {
    if (eta0 <= 0.0) throw std::invalid_argument("step size must be positive");
    switch (kind) {
        case ScheduleKind::Constant:
            return [eta0](int) { return eta0; };
        case ScheduleKind::InverseSqrt:
            return [eta0](int i) { return eta0 / std::sqrt(static_cast<double>(i)); };
    }
    throw std::invalid_argument("unknown schedule kind");
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::LocalOptimum: return "local-optimum";
        case Termination::BudgetExhausted: return "budget-exhausted";
        case Termination::MaxSteps: return "max-steps";
    }
    return "?";
}

AttackResult attack(const Graph& g, const TargetSet& s, const AttackConfig& cfg) {
    double epsilon = cfg.epsilon;
    if (cfg.gamma >= 0.0) {
        EigenEstimate top = powerIterate(g.matrix(), cfg.powerK, cfg.powerTol, cfg.seed);
        epsilon = cfg.gamma * top.value;
    }
    if (epsilon < 0.0) throw std::invalid_argument("attack budget must be nonnegative");
    if (cfg.steps < 1) throw std::invalid_argument("attack needs steps >= 1");

    const int n = g.n();
    PowerConfig pcfg{cfg.powerK, cfg.powerTol, cfg.seed};

    AttackResult res;
    res.gTilde = g;
    res.delta = Perturbation(SymMat(n));
    SymMat aTilde = g.matrix();
    double budget = 0.0;

    for (int i = 1; i <= cfg.steps; ++i) {
        Graph cur(aTilde, g.weighted());
        ObjectiveReport rep = evaluate(cur, s, cfg.weights, pcfg);
        res.objectiveTrace.push_back(rep.total);
        SymMat& grad = rep.gradient;  // diagonal already zero
        if (grad.max_abs() < 1e-12) {
            res.terminationReason = Termination::LocalOptimum;
            break;
        }
        double eta = cfg.schedule(i);
        double stepNorm = eta * spectralNorm(grad, cfg.powerK, cfg.powerTol, cfg.seed + i);
        if (budget + stepNorm <= epsilon) {
            grad *= eta;
            aTilde += grad;
            res.delta.delta += grad;
            budget += stepNorm;
            res.iterations = i;
            if (i == cfg.steps) res.terminationReason = Termination::MaxSteps;
        } else {
            res.terminationReason = Termination::BudgetExhausted;
            break;
        }
    }

    res.budgetUsed = budget;
    res.gTilde = Graph(aTilde, g.weighted());
    res.delta.specNorm.reset();
    return res;
}

}  // namespace tdiff
