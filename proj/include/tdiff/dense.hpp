#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace tdiff {

// Dense symmetric matrix with zero diagonal enforced by the graph layer.
// Row-major; both triangles stored so matvec needs no branching.
struct SymMat {
    int n = 0;
    std::vector<double> v;

    SymMat() = default;
    explicit SymMat(int n_) : n(n_), v(static_cast<std::size_t>(n_) * n_, 0.0) {}

    double operator()(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
    double& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; }

    void set_sym(int i, int j, double w) {
        (*this)(i, j) = w;
        (*this)(j, i) = w;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }

    SymMat& operator+=(const SymMat& o) {
        assert(n == o.n);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }

    SymMat& operator*=(double s) {
        for (double& x : v) x *= s;
        return *this;
    }

    friend SymMat operator-(const SymMat& a, const SymMat& b) {
        assert(a.n == b.n);
        SymMat r(a.n);
        for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] - b.v[i];
        return r;
    }
};

// y = m * x. The parallel kernel splits rows across threads; each row is a
// sequential sum, so results are bitwise identical for any thread count.
void matvec(const SymMat& m, const std::vector<double>& x, std::vector<double>& y);
void matvec_serial(const SymMat& m, const std::vector<double>& x, std::vector<double>& y);

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace tdiff
