#include "tdiff/diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include "tdiff/rng.hpp"

namespace tdiff {

namespace {

using AdjLists = std::vector<std::vector<std::pair<int, double>>>;

std::pair<int, int> runTrial(const AdjLists& adj, const std::vector<char>& inS,
                             const SISParams& p, std::optional<int> initial,
                             std::uint64_t trial) {
    const int n = static_cast<int>(adj.size());
    std::mt19937_64 rng = makeStream(p.seed, trial);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::vector<char> infected(n, 0), next(n, 0);
    infected[initial ? *initial : pick(rng)] = 1;

    for (int step = 0; step < p.steps; ++step) {
        for (int i = 0; i < n; ++i) {
            if (infected[i]) {
                next[i] = u(rng) >= p.delta;  // recovery
            } else {
                double escape = 1.0;
                for (auto [j, w] : adj[i])
                    if (infected[j]) escape *= 1.0 - std::min(1.0, p.beta * w);
                next[i] = u(rng) < 1.0 - escape;
            }
        }
        std::swap(infected, next);
    }

    int cntS = 0, cntC = 0;
    for (int i = 0; i < n; ++i)
        if (infected[i]) (inS[i] ? cntS : cntC)++;
    return {cntS, cntC};
}

SimulationResult aggregate(std::vector<std::pair<int, int>> perTrial, int n, int sizeS) {
    SimulationResult res;
    const int trials = static_cast<int>(perTrial.size());
    const int sizeC = n - sizeS;
    double sumS = 0.0, sumC = 0.0, sqS = 0.0, sqC = 0.0;
    for (auto [cs, cc] : perTrial) {
        double fs = static_cast<double>(cs) / sizeS;
        double fc = sizeC > 0 ? static_cast<double>(cc) / sizeC : 0.0;
        sumS += fs;
        sumC += fc;
        sqS += fs * fs;
        sqC += fc * fc;
    }
    res.fracS = sumS / trials;
    res.fracSPrime = sumC / trials;
    res.fracAll = (sizeS * res.fracS + sizeC * res.fracSPrime) / n;
    if (trials > 1) {
        double varS = (sqS - sumS * sumS / trials) / (trials - 1);
        double varC = (sqC - sumC * sumC / trials) / (trials - 1);
        res.stderrS = std::sqrt(std::max(0.0, varS) / trials);
        res.stderrSPrime = std::sqrt(std::max(0.0, varC) / trials);
    }
    res.perTrial = std::move(perTrial);
    return res;
}

}  // namespace

SimulationResult simulateSIS(const Graph& g, const TargetSet& s, const SISParams& p,
                             std::optional<int> initial) {
    AdjLists adj = g.adjacencyLists();
    std::vector<std::pair<int, int>> perTrial(p.trials);
#pragma omp parallel for schedule(dynamic, 16)
    for (int t = 0; t < p.trials; ++t)
        perTrial[t] = runTrial(adj, s.mask(), p, initial, static_cast<std::uint64_t>(t));
    return aggregate(std::move(perTrial), g.n(), s.size());
}

SimulationResult simulateSISSerial(const Graph& g, const TargetSet& s, const SISParams& p,
                                   std::optional<int> initial) {
    AdjLists adj = g.adjacencyLists();
    std::vector<std::pair<int, int>> perTrial(p.trials);
    for (int t = 0; t < p.trials; ++t)
        perTrial[t] = runTrial(adj, s.mask(), p, initial, static_cast<std::uint64_t>(t));
    return aggregate(std::move(perTrial), g.n(), s.size());
}

namespace {

WalkResult iterateWalk(const Graph& g, const TargetSet& s, double c,
                       const std::vector<double>& restart, double tol) {
    const int n = g.n();
    auto d = degreeVector(g);
    AdjLists adj = g.adjacencyLists();

    std::vector<double> r(n, 1.0 / n), next(n);
    const int maxIter = 1000000;
    for (int it = 0; it < maxIter; ++it) {
        // P^T r with P the row-stochastic walk matrix
        std::fill(next.begin(), next.end(), 0.0);
        for (int i = 0; i < n; ++i) {
            if (d[i] == 0.0) continue;
            double ri = r[i] / d[i];
            for (auto [j, w] : adj[i]) next[j] += ri * w;
        }
        double change = 0.0;
        for (int i = 0; i < n; ++i) {
            double updated = (1.0 - c) * next[i] + c * restart[i];
            // lazy half-step keeps periodic chains convergent
            updated = 0.5 * (r[i] + updated);
            change += std::abs(updated - r[i]);
            next[i] = updated;
        }
        std::swap(r, next);
        if (change < tol) break;
    }

    WalkResult res;
    res.rank = std::move(r);
    for (int i : s.members()) res.massS += res.rank[i];
    for (int i : s.complement()) res.massSPrime += res.rank[i];
    return res;
}

}  // namespace

WalkResult randomWalkRestart(const Graph& g, const TargetSet& s, double c, int start,
                             double tol) {
    if (start < 0 || start >= g.n()) throw std::invalid_argument("start node out of range");
    auto d = degreeVector(g);
    if (d[start] == 0.0) throw std::invalid_argument("start node is isolated");
    std::vector<double> restart(g.n(), 0.0);
    restart[start] = 1.0;
    return iterateWalk(g, s, c, restart, tol);
}

WalkResult pageRank(const Graph& g, const TargetSet& s, double c, double tol) {
    std::vector<double> restart(g.n(), 1.0 / g.n());
    return iterateWalk(g, s, c, restart, tol);
}

}  // namespace tdiff
