#pragma once

#include "valconv/measure.hpp"
#include "valconv/valuation.hpp"

#include <vector>

namespace valconv {

// one dimensional valuation stored as phi([a,b]) = g(b) - f(a) on a uniform
// grid; f and g are 0 left of the grid and right_constant right of it
struct Pair1D {
    double origin = 0.0;
    double spacing = 0.0;
    std::vector<double> f;
    std::vector<double> g;
    double right_constant = 0.0;
};

Pair1D make_pair1d(double origin, double spacing, std::vector<double> f, std::vector<double> g,
                   double right_constant);

double evaluate(const Pair1D& p, double a, double b);

// exact tabulation of K -> mu(K + [p, q]): f(x) = F(x + p), g(x) = F(x + q)
// with F the cumulative function of mu
Pair1D from_term(const Measure& mu, const ConvexBody& segment, double spacing = 1e-3);

Pair1D convolve(const Pair1D& p1, const Pair1D& p2);

Pair1D pair_add(const Pair1D& p1, const Pair1D& p2);
Pair1D pair_scale(Pair1D p, double c);

// sum of from_term over the terms of a one dimensional valuation
Pair1D pair_from_valuation(const SmoothValuation& psi, double spacing = 1e-3);

} // namespace valconv
