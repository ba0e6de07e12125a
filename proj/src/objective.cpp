#include "tdiff/objective.hpp"

#include <cmath>

#include "tdiff/rng.hpp"

namespace tdiff {

namespace {

void zeroDiagonal(SymMat& m) {
    for (int i = 0; i < m.n; ++i) m(i, i) = 0.0;
}

void symmetrize(SymMat& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            double avg = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = avg;
            m(j, i) = avg;
        }
}

}  // namespace

TermResult gradLambda1S(const Graph& gTilde, const TargetSet& s, const PowerConfig& cfg) {
    TermResult r;
    r.gradient = SymMat(gTilde.n());
    Graph sub = inducedSubgraphMatrix(gTilde, s);
    if (sub.matrix().max_abs() == 0.0) {
        r.degenerate = true;
        return r;
    }
    // Shift the diagonal so the Perron value is strictly dominant (bipartite
    // subgraphs otherwise leave the eigenvector ambiguous under +-lambda ties).
    const double shift = sub.maxWeight();
    SymMat m = sub.matrix();
    for (int i = 0; i < m.n; ++i) m(i, i) += shift;
    EigenEstimate est = powerIterate(m, cfg.k, cfg.tol, cfg.seed);
    r.value = est.value - shift;
    const auto& mem = s.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = 0; j < mem.size(); ++j)
            if (i != j) r.gradient(mem[i], mem[j]) = est.vector[i] * est.vector[j];
    return r;
}

TermResult gradSigmaS(const Graph& gTilde, const TargetSet& s, const PowerConfig& cfg) {
    const int n = gTilde.n();
    const SymMat& a = gTilde.matrix();
    TermResult r;
    r.gradient = SymMat(n);
    r.degenerate = !gTilde.connected();

    // Forward pass through the power iteration on A + shift*I, keeping every
    // iterate. The shift leaves eigenvectors unchanged but makes the Perron
    // value strictly dominant, so bipartite +-lambda ties still converge; it
    // contributes nothing to the off-diagonal gradient.
    const double shift = gTilde.maxWeight();
    std::mt19937_64 rng = makeStream(cfg.seed, 0x51);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::vector<double>> xs, ys;
    std::vector<double> ynorms;
    std::vector<double> x(n);
    double nrm = 0.0;
    do {
        for (double& xi : x) xi = u(rng);
        nrm = norm2(x);
    } while (nrm == 0.0);
    for (double& xi : x) xi /= nrm;

    xs.push_back(x);
    std::vector<double> y(n);
    int steps = 0;
    for (int t = 0; t < cfg.k; ++t) {
        matvec(a, xs.back(), y);
        for (int i = 0; i < n; ++i) y[i] += shift * xs.back()[i];
        double ny = norm2(y);
        if (ny == 0.0) break;
        ys.push_back(y);
        ynorms.push_back(ny);
        std::vector<double> xn(n);
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            xn[i] = y[i] / ny;
            double d = xn[i] - xs.back()[i];
            diff += d * d;
        }
        xs.push_back(std::move(xn));
        ++steps;
        if (std::sqrt(diff) < cfg.tol) break;
    }

    // Perron direction: the whole trajectory is sign-flipped together so the
    // adjoint sweep stays consistent.
    double sum = 0.0;
    for (double xi : xs.back()) sum += xi;
    if (sum < 0.0) {
        for (auto& xv : xs)
            for (double& xi : xv) xi = -xi;
        for (auto& yv : ys)
            for (double& yi : yv) yi = -yi;
    }

    double value = 0.0;
    for (int i : s.members()) value += xs.back()[i];
    r.value = value;

    // Reverse accumulation: xbar^K = x_S indicator.
    std::vector<double> xbar(n, 0.0);
    for (int i : s.members()) xbar[i] = 1.0;

    SymMat abar(n);
    std::vector<double> ybar(n);
    for (int t = steps - 1; t >= 0; --t) {
        const auto& xnext = xs[t + 1];
        double proj = dot(xnext, xbar);
        for (int i = 0; i < n; ++i) ybar[i] = (xbar[i] - xnext[i] * proj) / ynorms[t];
        const auto& xt = xs[t];
        for (int i = 0; i < n; ++i) {
            if (ybar[i] == 0.0) continue;
            double* row = &abar.v[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) row[j] += ybar[i] * xt[j];
        }
        matvec(a, ybar, xbar);
        for (int i = 0; i < n; ++i) xbar[i] += shift * ybar[i];
    }
    symmetrize(abar);
    zeroDiagonal(abar);
    r.gradient = std::move(abar);
    return r;
}

TermResult gradPhiS(const Graph& gTilde, const TargetSet& s) {
    const int n = gTilde.n();
    const SymMat& a = gTilde.matrix();
    auto d = degreeVector(gTilde);
    double volS = 0.0, volC = 0.0, cut = 0.0;
    for (int i : s.members()) volS += d[i];
    for (int i : s.complement()) volC += d[i];
    if (volS <= 0.0 || volC <= 0.0)
        throw DegeneratePartition("normalized-cut gradient needs positive volumes");
    for (int i : s.members())
        for (int j : s.complement()) cut += a(i, j);

    TermResult r;
    r.value = cut * (1.0 / volS + 1.0 / volC);
    SymMat g(n);
    const auto& inS = s.mask();
    const double cross = 1.0 / volS + 1.0 / volC;
    const double volS2 = cut / (volS * volS);
    const double volC2 = cut / (volC * volC);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double gij = 0.0;
            if (inS[i] && !inS[j]) gij += cross;
            gij -= inS[i] ? volS2 : volC2;
            g(i, j) = gij;
        }
    symmetrize(g);
    zeroDiagonal(g);
    r.gradient = std::move(g);
    return r;
}

ObjectiveReport evaluate(const Graph& gTilde, const TargetSet& s, const ObjectiveWeights& w,
                         const PowerConfig& cfg) {
    if (w.a1 < 0 || w.a2 < 0 || w.a3 < 0 || (w.a1 == 0 && w.a2 == 0 && w.a3 == 0))
        throw std::invalid_argument("objective weights must be nonnegative, not all zero");
    const int n = gTilde.n();
    ObjectiveReport rep;
    rep.gradient = SymMat(n);
    if (w.a1 > 0) {
        TermResult t = gradLambda1S(gTilde, s, cfg);
        rep.lambda1S = t.value;
        for (std::size_t i = 0; i < t.gradient.v.size(); ++i)
            rep.gradient.v[i] += w.a1 * t.gradient.v[i];
    }
    if (w.a2 > 0) {
        TermResult t = gradSigmaS(gTilde, s, cfg);
        rep.sigmaS = t.value;
        for (std::size_t i = 0; i < t.gradient.v.size(); ++i)
            rep.gradient.v[i] += w.a2 * t.gradient.v[i];
    }
    if (w.a3 > 0) {
        TermResult t = gradPhiS(gTilde, s);
        rep.phiS = t.value;
        for (std::size_t i = 0; i < t.gradient.v.size(); ++i)
            rep.gradient.v[i] += w.a3 * t.gradient.v[i];
    }
    rep.total = w.a1 * rep.lambda1S + w.a2 * rep.sigmaS + w.a3 * rep.phiS;
    return rep;
}

}  // namespace tdiff
