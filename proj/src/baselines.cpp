#include "tdiff/baselines.hpp"

#include <cmath>

namespace tdiff {

namespace {

struct Pick {
    bool found = false;
    int i = 0, j = 0;
};

template <typename Score, typename Admit>
Pick bestPair(const std::vector<int>& nodes, Score score, Admit admit) {
    Pick p;
    double best = 0.0;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            int i = nodes[a], j = nodes[b];
            if (!admit(i, j)) continue;
            double sc = score(i, j);
            if (!p.found || sc > best) {  // lexicographic tie-break via scan order
                p.found = true;
                best = sc;
                p.i = i;
                p.j = j;
            }
        }
    return p;
}

}  // namespace

AttackResult baselineAttack(const Graph& g, const TargetSet& s, BaselineKind kind,
                            const BaselineConfig& cfg) {
    if (cfg.epsilon <= 0.0) throw std::invalid_argument("baseline attack needs epsilon > 0");
    const int n = g.n();
    const bool weighted = g.weighted();

    double step = cfg.weightedStep;
    if (weighted && step < 0.0) {
        double total = 0.0;
        int cnt = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.weight(i, j) > 0.0) {
                    total += g.weight(i, j);
                    ++cnt;
                }
        step = cnt > 0 ? total / cnt : 1.0;
    }

    SymMat aTilde = g.matrix();
    SymMat delta(n);
    AttackResult res;
    res.gTilde = g;
    res.delta = Perturbation(SymMat(n));
    res.terminationReason = Termination::BudgetExhausted;

    auto degrees = [&]() {
        std::vector<double> d(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i] += aTilde(i, j);
        return d;
    };

    bool sSide = true;  // start by densifying the target side
    int skipped = 0;
    int accepted = 0;
    for (int move = 1; move <= cfg.maxMoves; ++move) {
        std::vector<double> score(n, 0.0);
        if (kind == BaselineKind::Deg) {
            score = degrees();
        } else {
            EigenEstimate est = powerIterate(aTilde, cfg.powerK, cfg.powerTol, cfg.seed + move);
            double sum = 0.0;
            for (double v : est.vector) sum += v;
            double sign = sum < 0.0 ? -1.0 : 1.0;
            for (int i = 0; i < n; ++i) score[i] = sign * est.vector[i];
        }
        auto pairScore = [&](int i, int j) {
            return kind == BaselineKind::Deg ? score[i] + score[j] : score[i] * score[j];
        };

        Pick p;
        double change = 0.0;
        if (sSide) {
            // densify within S: add an absent edge / bump an existing weight
            p = bestPair(s.members(), pairScore, [&](int i, int j) {
                return weighted ? aTilde(i, j) > 0.0 : aTilde(i, j) == 0.0;
            });
            if (p.found) change = weighted ? step : 1.0;
        } else {
            // sparsify within S': remove / shrink an existing edge
            p = bestPair(s.complement(), pairScore,
                         [&](int i, int j) { return aTilde(i, j) > 0.0; });
            if (p.found)
                change = weighted ? -std::min(step, aTilde(p.i, p.j)) : -aTilde(p.i, p.j);
        }

        if (!p.found) {
            if (++skipped >= 2) break;  // neither side has candidates
            sSide = !sSide;
            continue;
        }
        skipped = 0;

        aTilde.set_sym(p.i, p.j, aTilde(p.i, p.j) + change);
        delta.set_sym(p.i, p.j, delta(p.i, p.j) + change);
        double nrm = spectralNorm(delta, cfg.powerK, cfg.powerTol, cfg.seed + move);
        if (nrm > cfg.epsilon) {
            aTilde.set_sym(p.i, p.j, aTilde(p.i, p.j) - change);
            delta.set_sym(p.i, p.j, delta(p.i, p.j) - change);
            break;
        }
        res.budgetUsed = nrm;
        res.iterations = ++accepted;
        sSide = !sSide;
    }

    res.gTilde = Graph(std::move(aTilde), weighted);
    res.delta = Perturbation(std::move(delta));
    return res;
}

}  // namespace tdiff
