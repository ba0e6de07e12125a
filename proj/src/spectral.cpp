#include "tdiff/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

#include "tdiff/rng.hpp"

namespace tdiff {

namespace {

std::vector<double> randomUnitVector(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> x(n);
    double nrm = 0.0;
    do {
        for (double& xi : x) xi = u(rng);
        nrm = norm2(x);
    } while (nrm == 0.0);
    for (double& xi : x) xi /= nrm;
    return x;
}

struct IterOutcome {
    std::vector<double> vec;
    int iterations = 0;
    bool converged = false;
};

// Core loop; returns the final unit iterate. Throws after 3 restarts hit a
// zero image.
IterOutcome iterate(const SymMat& m, int k, double tol, std::mt19937_64& rng) {
    const int n = m.n;
    std::vector<double> x, y(n);
    for (int restart = 0; restart <= 3; ++restart) {
        x = randomUnitVector(n, rng);
        bool dead = false;
        for (int t = 1; t <= k; ++t) {
            matvec(m, x, y);
            double ny = norm2(y);
            if (ny == 0.0) {
                dead = true;
                break;
            }
            // sign-align before the convergence test
            double s = dot(x, y) < 0.0 ? -1.0 : 1.0;
            double diff = 0.0;
            for (int i = 0; i < n; ++i) {
                double yi = s * y[i] / ny;
                double d = yi - x[i];
                diff += d * d;
                x[i] = yi;
            }
            if (std::sqrt(diff) < tol) return {std::move(x), t, true};
        }
        if (!dead) return {std::move(x), k, false};
    }
    throw SpectralError("power iteration: zero image after 3 restarts");
}

}  // namespace

EigenEstimate powerIterate(const SymMat& m, int k, double tol, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("power iteration needs k >= 1");
    const int n = m.n;
    std::mt19937_64 rng = makeStream(seed, 0x9e1);

    IterOutcome out = iterate(m, k, tol, rng);
    bool squared = false;

    if (!out.converged) {
        squared = true;
        // |lambda_1| ~ |lambda_n| tie: iterate on M^2, whose dominant
        // eigenvalue lambda^2 is unambiguous.
        SymMat m2(n);
        std::vector<double> col(n), mcol(n);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) col[i] = m(i, j);
            matvec(m, col, mcol);
            for (int i = 0; i < n; ++i) m2(i, j) = mcol[i];
        }
        IterOutcome sq = iterate(m2, k, tol, rng);
        out.vec = std::move(sq.vec);
        out.iterations = k + sq.iterations;
        out.converged = sq.converged;
    }

    EigenEstimate est;
    std::vector<double> mv(n);
    matvec(m, out.vec, mv);
    est.value = dot(out.vec, mv);
    // In the M^2 fallback the final vector lives in an eigenspace of M^2;
    // the magnitude then comes from sqrt(v' M^2 v) = ||Mv||.
    if (squared) {
        double mag = std::sqrt(std::max(0.0, dot(mv, mv)));
        est.value = est.value < 0.0 ? -mag : mag;
    }
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = mv[i] - est.value * out.vec[i];
        resid += r * r;
    }
    est.residual = std::sqrt(resid);
    est.vector = std::move(out.vec);
    est.iterations = out.iterations;
    est.converged = out.converged;
    return est;
}

double spectralNorm(const SymMat& delta, int k, double tol, std::uint64_t seed) {
    if (delta.max_abs() == 0.0) return 0.0;
    EigenEstimate pos = powerIterate(delta, k, tol, seed);
    SymMat neg = delta;
    neg *= -1.0;
    EigenEstimate flip = powerIterate(neg, k, tol, seed + 1);
    return std::max(std::abs(pos.value), std::abs(flip.value));
}

double spectralNorm(Perturbation& p, int k, double tol, std::uint64_t seed) {
    double nrm = spectralNorm(p.delta, k, tol, seed);
    p.specNorm = nrm;
    return nrm;
}

std::vector<double> fullSpectrum(const SymMat& m, int cap) {
    if (m.n > cap)
        throw SpectralError("fullSpectrum: dimension " + std::to_string(m.n) +
                            " exceeds cap " + std::to_string(cap));
    std::vector<double> a = m.v;
    std::vector<double> w(m.n);
    int info = LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'N', 'U', m.n, a.data(), m.n, w.data());
    if (info != 0) throw SpectralError("dsyev failed, info=" + std::to_string(info));
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace tdiff
