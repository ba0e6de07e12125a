#include "tdiff/discretize.hpp"

#include <algorithm>
#include <cmath>

namespace tdiff {

Graph roundUnweighted(const Graph& g, const AttackResult& result, double epsilon,
                      const PowerConfig& cfg) {
    if (g.weighted()) throw std::invalid_argument("roundUnweighted needs an unweighted graph");
    const int n = g.n();
    const SymMat& a = g.matrix();
    const SymMat& at = result.gTilde.matrix();

    struct Cand {
        double score;
        int i, j;
        bool add;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double diff = at(i, j) - a(i, j);
            if (std::abs(diff) > 1e-9) cands.push_back({std::abs(diff), i, j, diff > 0.0});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.score != y.score) return x.score > y.score;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    });

    SymMat out = a;
    SymMat deltaBin(n);
    std::uint64_t toggle = 0;
    for (const Cand& c : cands) {
        double cur = out(c.i, c.j);
        double next = c.add ? 1.0 : 0.0;
        if (cur == next) continue;  // toggle direction already satisfied
        out.set_sym(c.i, c.j, next);
        deltaBin.set_sym(c.i, c.j, next - a(c.i, c.j));
        ++toggle;
        double nrm = spectralNorm(deltaBin, cfg.k, cfg.tol, cfg.seed + toggle);
        if (nrm > epsilon) {
            out.set_sym(c.i, c.j, cur);
            deltaBin.set_sym(c.i, c.j, cur - a(c.i, c.j));
            break;
        }
    }
    return Graph(std::move(out), false);
}

Graph rescaleWeighted(const Graph& g, const AttackResult& result, bool integerWeights) {
    if (!g.weighted()) throw std::invalid_argument("rescaleWeighted needs a weighted graph");
    const int n = g.n();
    double scale = g.maxWeight();
    if (scale == 0.0) scale = 1.0;
    // C*A~ = C*(A/C + delta) is computed as A + C*delta so a zero
    // perturbation reproduces g bit-for-bit.
    const SymMat& d = result.delta.delta;
    const SymMat& a = g.matrix();
    SymMat out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double w = a(i, j) + scale * d(i, j);
            if (w < 0.0) w = 0.0;
            if (integerWeights) w = std::round(w);
            out.set_sym(i, j, w);
        }
    return Graph(std::move(out), true);
}

}  // namespace tdiff
