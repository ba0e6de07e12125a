#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tdiff/dense.hpp"

namespace tdiff {

struct SpectralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenEstimate {
    double value = 0.0;           // Rayleigh quotient at the final iterate
    std::vector<double> vector;   // unit vector
    int iterations = 0;
    double residual = 0.0;        // ||Mv - value*v||_2
    bool converged = false;
};

/// Symmetric perturbation delta = A~ - A with a cached spectral-norm estimate.
struct Perturbation {
    SymMat delta;
    std::optional<double> specNorm;

    Perturbation() = default;
    explicit Perturbation(SymMat d) : delta(std::move(d)) {}
};

constexpr int kDefaultPowerK = 50;
constexpr double kDefaultPowerTol = 1e-10;

struct PowerConfig {
    int k = kDefaultPowerK;
    double tol = kDefaultPowerTol;
    std::uint64_t seed = 1;
};

/// Power iteration for the dominant (largest-magnitude) eigenpair of a
/// symmetric matrix. Starts from a seeded random unit vector; stops early
/// when successive sign-aligned iterates differ by < tol in l2. If the
/// iteration has not settled after k steps (|lambda_1| ~ |lambda_n| ties
/// make it oscillate), falls back to iterating on M^2.
EigenEstimate powerIterate(const SymMat& m, int k, double tol, std::uint64_t seed);

inline EigenEstimate powerIterate(const SymMat& m, std::uint64_t seed) {
    return powerIterate(m, kDefaultPowerK, kDefaultPowerTol, seed);
}

double spectralNorm(Perturbation& p, int k, double tol, std::uint64_t seed);
double spectralNorm(const SymMat& delta, int k, double tol, std::uint64_t seed);

constexpr int kFullSpectrumCap = 2000;

/// All eigenvalues in descending order, dense symmetric eigensolver.
/// Test / `verify` oracle only; refuses dimensions above the cap.
std::vector<double> fullSpectrum(const SymMat& m, int cap = kFullSpectrumCap);

}  // namespace tdiff
