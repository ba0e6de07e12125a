#include "tdiff/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tdiff {

double impactEstimator(const Graph& g, const TargetSet& s, double beta, double delta) {
    auto d = degreeVector(g);
    double total = 0.0;
    for (int i : s.members()) {
        if (d[i] == 0.0) throw std::domain_error("impact estimator undefined for degree-0 node");
        total += 1.0 - delta / (beta * d[i]);
    }
    return total;
}

CertBound certifyBudget(const Graph& g, const TargetSet& s, double beta, double delta,
                        double tau) {
    auto d = degreeVector(g);
    double sum = 0.0, sumsq = 0.0;
    for (int i : s.members()) {
        sum += d[i];
        sumsq += d[i] * d[i];
    }
    const double k = static_cast<double>(s.size());
    double var = sumsq / k - (sum / k) * (sum / k);

    CertBound b;
    b.epsilonMin = std::sqrt(k / g.n()) * std::sqrt(std::max(0.0, var));
    b.tau = tau;
    b.weightedDegrees = g.weighted();
    if (beta > 0.0) {
        double dmin = *std::min_element(d.begin(), d.end());
        b.applicable = delta / beta <= dmin;
    }
    return b;
}

}  // namespace tdiff
