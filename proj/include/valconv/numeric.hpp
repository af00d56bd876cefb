#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace valconv {

// compensated accumulator; keeps long sums accurate to ~2 ulp of the total
struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

// Gauss-Legendre rule of given order (cached, thread-safe)
const GaussRule& gauss_legendre(int n);

// derivative of a periodic sequence sampled uniformly, 4th-order central stencil
std::vector<double> periodic_derivative4(const std::vector<double>& f, double dx);

// least squares fit y ~ c0 + c1 t + c2 t^2; needs >= 3 distinct abscissae
std::array<double, 3> fit_quadratic(const std::vector<double>& t, const std::vector<double>& y);

} // namespace valconv
